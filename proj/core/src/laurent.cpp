#include "hlcluster/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hlc {

VarTable::VarTable(std::vector<std::string> names) {
    for (auto& n : names) add(n);
}

int VarTable::add(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) throw std::invalid_argument("duplicate variable name: " + name);
    int idx = static_cast<int>(names_.size());
    names_.push_back(name);
    index_[name] = idx;
    return idx;
}

int VarTable::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

ExpVec ev_mul(const ExpVec& a, const ExpVec& b) {
    ExpVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) out.push_back(a[i++]);
        else if (a[i].first > b[j].first) out.push_back(b[j++]);
        else {
            int64_t e = a[i].second + b[j].second;
            if (e != 0) out.emplace_back(a[i].first, e);
            ++i; ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

ExpVec ev_neg(const ExpVec& a) {
    ExpVec out(a);
    for (auto& [v, e] : out) e = -e;
    return out;
}

int64_t ev_get(const ExpVec& a, int32_t var) {
    auto it = std::lower_bound(a.begin(), a.end(), var,
                               [](const auto& p, int32_t v) { return p.first < v; });
    return (it != a.end() && it->first == var) ? it->second : 0;
}

LaurentPoly LaurentPoly::constant(VarTablePtr vars, const mpz_class& c) {
    LaurentPoly p(std::move(vars));
    if (c != 0) p.terms_[{}] = c;
    return p;
}

LaurentPoly LaurentPoly::monomial(VarTablePtr vars, const ExpVec& e, const mpz_class& c) {
    LaurentPoly p(std::move(vars));
    if (c != 0) p.terms_[e] = c;
    return p;
}

LaurentPoly LaurentPoly::variable(VarTablePtr vars, int idx, int64_t power) {
    if (idx < 0 || idx >= vars->size()) throw std::out_of_range("variable index");
    ExpVec e;
    if (power != 0) e.emplace_back(idx, power);
    return monomial(std::move(vars), e);
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

void LaurentPoly::check_same_table(const LaurentPoly& o) const {
    if (vars_ == o.vars_) return;
    if (vars_ && o.vars_ && vars_->names() == o.vars_->names()) return;
    throw std::invalid_argument("variable-table mismatch");
}

void LaurentPoly::add_term(const ExpVec& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_table(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    r -= o;
    return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same_table(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_table(o);
    LaurentPoly r(vars_);
    if (is_zero() || o.is_zero()) return r;
    // multiply with the smaller operand outermost
    const LaurentPoly& a = terms_.size() <= o.terms_.size() ? *this : o;
    const LaurentPoly& b = terms_.size() <= o.terms_.size() ? o : *this;
    mpz_class prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ev_mul(ea, eb), prod);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::pow(int64_t e) const {
    if (e < 0) {
        if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
        const auto& [ev, c] = *terms_.begin();
        if (c != 1 && c != -1) throw std::domain_error("negative power of a non-unit monomial");
        LaurentPoly inv = monomial(vars_, ev_neg(ev), c);
        return inv.pow(-e);
    }
    LaurentPoly r = constant(vars_, 1);
    LaurentPoly base(*this);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    check_same_table(d);
    if (d.is_zero()) throw std::domain_error("division by zero");
    if (is_zero()) return zero(vars_);
    LaurentPoly rem(*this);
    LaurentPoly quot(vars_);
    // Cancel the lex-leading term of the remainder against the lex-leading
    // term of d.  For an exact division this takes exactly |quotient| steps;
    // the iteration cap catches the non-exact case.
    const auto dlead = std::prev(d.terms_.end());
    const ExpVec& dle = dlead->first;
    const mpz_class& dlc = dlead->second;
    mpz_class q, r;
    int64_t steps = 0;
    const int64_t cap = 1000000 + 10 * (num_terms() + d.num_terms());
    while (!rem.terms_.empty()) {
        if (++steps > cap) throw std::domain_error("non-exact division");
        const auto rlead = std::prev(rem.terms_.end());
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rlead->second.get_mpz_t(), dlc.get_mpz_t());
        if (r != 0) throw std::domain_error("non-exact division (coefficient)");
        ExpVec shift = ev_mul(rlead->first, ev_neg(dle));
        LaurentPoly t = monomial(vars_, shift, q);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
    if (static_cast<int>(images.size()) != vars_->size())
        throw std::invalid_argument("substitute: need one image per variable");
    VarTablePtr target = images.empty() ? vars_ : images.front().vars();
    LaurentPoly r(target);
    for (const auto& [e, c] : terms_) {
        LaurentPoly t = constant(target, c);
        for (const auto& [v, ex] : e) t = t * images[v].pow(ex);
        r += t;
    }
    return r;
}

LaurentPoly LaurentPoly::set_all_one(const std::vector<bool>& which) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec kept;
        for (const auto& [v, ex] : e)
            if (!(v < static_cast<int32_t>(which.size()) && which[v])) kept.emplace_back(v, ex);
        r.add_term(kept, c);
    }
    return r;
}

int64_t LaurentPoly::min_exponent(int32_t var) const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
    int64_t m = INT64_MAX;
    for (const auto& [e, c] : terms_) m = std::min(m, ev_get(e, var));
    return m;
}

int64_t LaurentPoly::max_exponent(int32_t var) const {
    if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
    int64_t m = INT64_MIN;
    for (const auto& [e, c] : terms_) m = std::max(m, ev_get(e, var));
    return m;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = c < 0 ? mpz_class(-c) : c;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        std::vector<std::string> parts;
        if (a != 1 || e.empty()) parts.push_back(a.get_str());
        for (const auto& [v, ex] : e) {
            std::string p = vars_->name(v);
            if (ex != 1) p += "^" + std::to_string(ex);
            parts.push_back(std::move(p));
        }
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << "*";
            os << parts[i];
        }
    }
    return os.str();
}

TropMonomial TropMonomial::one(VarTablePtr vars) {
    TropMonomial t;
    t.exps.assign(vars->size(), 0);
    t.vars = std::move(vars);
    return t;
}

TropMonomial TropMonomial::operator*(const TropMonomial& o) const {
    TropMonomial t(*this);
    for (size_t i = 0; i < exps.size(); ++i) t.exps[i] += o.exps[i];
    return t;
}

TropMonomial TropMonomial::operator/(const TropMonomial& o) const {
    TropMonomial t(*this);
    for (size_t i = 0; i < exps.size(); ++i) t.exps[i] -= o.exps[i];
    return t;
}

TropMonomial TropMonomial::oplus(const TropMonomial& o) const {
    TropMonomial t(*this);
    for (size_t i = 0; i < exps.size(); ++i) t.exps[i] = std::min(t.exps[i], o.exps[i]);
    return t;
}

std::string TropMonomial::str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (any) os << "*";
        any = true;
        os << vars->name(static_cast<int>(i));
        if (exps[i] != 1) os << "^" << exps[i];
    }
    return any ? os.str() : "1";
}

TropMonomial tropical_eval(const LaurentPoly& poly, const std::vector<TropMonomial>& images) {
    if (poly.is_zero()) throw std::domain_error("tropical_eval of zero polynomial");
    if (static_cast<int>(images.size()) != poly.vars()->size())
        throw std::invalid_argument("tropical_eval: need one image per variable");
    bool first = true;
    TropMonomial acc;
    for (const auto& [e, c] : poly.terms()) {
        TropMonomial term = TropMonomial::one(images.empty() ? poly.vars() : images.front().vars);
        for (const auto& [v, ex] : e) {
            for (size_t i = 0; i < term.exps.size(); ++i) term.exps[i] += ex * images[v].exps[i];
        }
        acc = first ? term : acc.oplus(term);
        first = false;
    }
    return acc;
}

}  // namespace hlc
