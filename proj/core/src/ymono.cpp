#include "hlcluster/ymono.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hlc {

YMonomial YMonomial::var(int i, long p, long e) {
    YMonomial m;
    if (e != 0) m.e_[{i, p}] = e;
    return m;
}

long YMonomial::exp(int i, long p) const {
    auto it = e_.find({i, p});
    return it == e_.end() ? 0 : it->second;
}

bool YMonomial::dominant() const {
    for (const auto& [k, e] : e_)
        if (e < 0) return false;
    return true;
}

YMonomial YMonomial::operator*(const YMonomial& o) const {
    YMonomial r(*this);
    for (const auto& [k, e] : o.e_) {
        auto [it, inserted] = r.e_.emplace(k, e);
        if (!inserted) {
            it->second += e;
            if (it->second == 0) r.e_.erase(it);
        }
    }
    return r;
}

YMonomial YMonomial::operator/(const YMonomial& o) const { return *this * o.pow(-1); }

YMonomial YMonomial::pow(long k) const {
    YMonomial r;
    if (k == 0) return r;
    r = *this;
    for (auto& [key, e] : r.e_) e *= k;
    return r;
}

bool YMonomial::operator<(const YMonomial& o) const {
    return std::lexicographical_compare(
        e_.begin(), e_.end(), o.e_.begin(), o.e_.end(), [](const auto& a, const auto& b) {
            KeyLess less;
            if (less(a.first, b.first)) return true;
            if (less(b.first, a.first)) return false;
            return a.second < b.second;
        });
}

std::string YMonomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, e] : e_) {
        if (!first) os << " ";
        first = false;
        os << k.first << "_" << k.second;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

YMonomial YMonomial::parse(const std::string& text) {
    YMonomial m;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1" && m.e_.empty() && is.peek() == EOF) return m;
        auto us = tok.find('_');
        if (us == std::string::npos) throw std::invalid_argument("bad Y-monomial token: " + tok);
        int i = std::stoi(tok.substr(0, us));
        std::string rest = tok.substr(us + 1);
        long e = 1;
        auto caret = rest.find('^');
        if (caret != std::string::npos) {
            e = std::stol(rest.substr(caret + 1));
            rest = rest.substr(0, caret);
        }
        long p = std::stol(rest);
        if (e != 0) {
            auto [it, inserted] = m.e_.emplace(std::make_pair(i, p), e);
            if (!inserted) it->second += e;
        }
    }
    return m;
}

YMonomial f_mon(const HeightFunction& xi, int i) {
    return YMonomial::var(i, xi(i) - 2) * YMonomial::var(i, xi(i));
}

YMonomial z_mon(const HeightFunction& xi, int i) { return YMonomial::var(i, xi(i)); }

YMonomial ainv_mon(const DynkinDiagram& d, int i, long r) {
    YMonomial m = YMonomial::var(i, r - 1, -1) * YMonomial::var(i, r + 1, -1);
    for (int j : d.neighbors(i)) m = m * YMonomial::var(j, r);
    return m;
}

YMonomial kr_mon(const HeightFunction& xi, int i, long r) {
    YMonomial m;
    for (long p = r; p <= xi(i); p += 2) m = m * YMonomial::var(i, p);
    return m;
}

YRing::YRing(const std::vector<std::pair<int, long>>& keys) {
    auto vt = std::make_shared<VarTable>();
    for (auto [i, p] : keys) {
        std::string name = "Y[" + std::to_string(i) + "," + std::to_string(p) + "]";
        index_[{i, p}] = vt->add(name);
    }
    vars_ = vt;
}

YRing YRing::window(const HeightFunction& xi, int level) {
    std::vector<std::pair<int, long>> keys;
    for (int i = 1; i <= xi.diagram().rank(); ++i)
        for (int k = 0; k <= level; ++k) keys.emplace_back(i, xi(i) - 2 * k);
    return YRing(keys);
}

int YRing::index(int i, long p) const {
    auto it = index_.find({i, p});
    if (it == index_.end())
        throw std::out_of_range("Y[" + std::to_string(i) + "," + std::to_string(p) +
                                "] outside the ring window");
    return it->second;
}

LaurentPoly YRing::poly(const YMonomial& m) const {
    ExpVec e;
    for (const auto& [k, exp] : m.exps()) e.emplace_back(index(k.first, k.second), exp);
    std::sort(e.begin(), e.end());
    return LaurentPoly::monomial(vars_, e);
}

}  // namespace hlc
