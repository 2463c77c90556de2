#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hlc {

/// Ordered set of variable names.  Names are opaque tokens; the index in
/// the table is the identity used by exponent vectors.
class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names);

    int add(const std::string& name);
    int index_of(const std::string& name) const;  // -1 if absent
    const std::string& name(int idx) const { return names_.at(idx); }
    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Sparse exponent vector: (variable index, nonzero exponent), sorted by index.
using ExpVec = std::vector<std::pair<int32_t, int64_t>>;

ExpVec ev_mul(const ExpVec& a, const ExpVec& b);
ExpVec ev_neg(const ExpVec& a);
int64_t ev_get(const ExpVec& a, int32_t var);

/// Lexicographic order on the dense exponent vectors behind the sparse
/// representation.  Translation-invariant, so leading-term elimination
/// against it is sound for exact Laurent division.
struct ExpLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            int32_t va = i < a.size() ? a[i].first : INT32_MAX;
            int32_t vb = j < b.size() ? b[j].first : INT32_MAX;
            int32_t v = va < vb ? va : vb;
            int64_t ea = (va == v) ? a[i].second : 0;
            int64_t eb = (vb == v) ? b[j].second : 0;
            if (ea != eb) return ea < eb;
            if (va == v) ++i;
            if (vb == v) ++j;
        }
        return false;
    }
};

/// Sparse multivariate Laurent polynomial with exact integer coefficients.
/// Terms are kept in a canonical order keyed by exponent vector; zero
/// coefficients are never stored.  Values are immutable in spirit: all
/// operations return new polynomials.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static LaurentPoly zero(VarTablePtr vars) { return LaurentPoly(std::move(vars)); }
    static LaurentPoly constant(VarTablePtr vars, const mpz_class& c);
    static LaurentPoly monomial(VarTablePtr vars, const ExpVec& e, const mpz_class& c = 1);
    static LaurentPoly variable(VarTablePtr vars, int idx, int64_t power = 1);

    const VarTablePtr& vars() const { return vars_; }
    const std::map<ExpVec, mpz_class, ExpLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int64_t num_terms() const { return static_cast<int64_t>(terms_.size()); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(int64_t e) const;

    /// Exact division; throws std::domain_error if the division is not exact.
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    /// Substitute every variable by its image.  Variables raised to a
    /// negative power must map to (invertible) monomials.
    LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;

    /// Evaluate each variable at 1.
    LaurentPoly set_all_one(const std::vector<bool>& which) const;

    /// min over terms, componentwise, of the exponent of `var`.
    int64_t min_exponent(int32_t var) const;
    /// max over terms of the exponent of `var`.
    int64_t max_exponent(int32_t var) const;

    /// Canonical text: sorted terms, names with ^e suffix, * separators.
    std::string str() const;

    void add_term(const ExpVec& e, const mpz_class& c);

private:
    void check_same_table(const LaurentPoly& o) const;

    VarTablePtr vars_;
    std::map<ExpVec, mpz_class, ExpLexLess> terms_;
};

/// Monomial in the tropical semifield generated by a VarTable: addition is
/// componentwise minimum of generator exponents, multiplication adds them.
struct TropMonomial {
    VarTablePtr vars;
    std::vector<int64_t> exps;  // dense over the generator table

    static TropMonomial one(VarTablePtr vars);
    TropMonomial operator*(const TropMonomial& o) const;
    TropMonomial operator/(const TropMonomial& o) const;
    /// Tropical addition (componentwise min).
    TropMonomial oplus(const TropMonomial& o) const;
    bool operator==(const TropMonomial& o) const { return exps == o.exps; }
    std::string str() const;
};

/// Image of `poly` under the semifield homomorphism sending variable v to
/// `images[v]`; integer coefficients are forgotten (they map to the
/// tropical unit).  Throws on the zero polynomial.
TropMonomial tropical_eval(const LaurentPoly& poly, const std::vector<TropMonomial>& images);

}  // namespace hlc
