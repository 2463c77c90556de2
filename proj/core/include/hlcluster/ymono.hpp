#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hlcluster/grid.hpp"
#include "hlcluster/laurent.hpp"

namespace hlc {

/// Laurent monomial in the variables Y_{i,p}.  Keys are kept in canonical
/// order (i ascending, then p descending); zero exponents are not stored.
class YMonomial {
public:
    struct KeyLess {
        bool operator()(const std::pair<int, long>& a, const std::pair<int, long>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return a.second > b.second;
        }
    };
    using Exps = std::map<std::pair<int, long>, long, KeyLess>;

    YMonomial() = default;

    static YMonomial unit() { return YMonomial(); }
    static YMonomial var(int i, long p, long e = 1);

    const Exps& exps() const { return e_; }
    long exp(int i, long p) const;
    bool is_unit() const { return e_.empty(); }
    bool dominant() const;

    YMonomial operator*(const YMonomial& o) const;
    YMonomial operator/(const YMonomial& o) const;
    YMonomial pow(long k) const;
    bool operator==(const YMonomial& o) const { return e_ == o.e_; }
    bool operator!=(const YMonomial& o) const { return !(*this == o); }
    bool operator<(const YMonomial& o) const;

    /// Token format `i_p` with optional `^e`, space separated, canonical order.
    std::string str() const;
    static YMonomial parse(const std::string& text);

private:
    Exps e_;
};

/// f_i = Y_{i,xi(i)-2} Y_{i,xi(i)}.
YMonomial f_mon(const HeightFunction& xi, int i);
/// z_i = Y_{i,xi(i)}.
YMonomial z_mon(const HeightFunction& xi, int i);
/// A_{i,r}^{-1} = Y_{i,r-1}^{-1} Y_{i,r+1}^{-1} prod_{j ~ i} Y_{j,r}.
YMonomial ainv_mon(const DynkinDiagram& d, int i, long r);
/// Kirillov-Reshetikhin monomial prod_{k >= 0, r+2k <= xi(i)} Y_{i,r+2k}.
YMonomial kr_mon(const HeightFunction& xi, int i, long r);

/// Fixed table of Y_{i,p} variables, for converting Y-monomials to Laurent
/// polynomials (truncated q-characters, exchange identities).
class YRing {
public:
    explicit YRing(const std::vector<std::pair<int, long>>& keys);
    /// All Y_{i,p} that can appear in level-l truncated q-characters over xi.
    static YRing window(const HeightFunction& xi, int level);

    const VarTablePtr& vars() const { return vars_; }
    int index(int i, long p) const;  // throws if absent

    LaurentPoly poly(const YMonomial& m) const;

private:
    VarTablePtr vars_;
    std::map<std::pair<int, long>, int> index_;
};

}  // namespace hlc
