#include "hlcluster/closed_forms.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hlc {

namespace {

// xi extended by the virtual vertex 0 with xi(0) = xi(1) - 1.
long xiv(const HeightFunction& xi, int k) {
    if (k == 0) return xi(1) - 1;
    return xi(k);
}

// Turning-point test at k: xi(k-1) = xi(k+1), with label arithmetic (the
// relevant neighbors of n-2 in type D are n-3 and n-1).
bool turning(const HeightFunction& xi, int k) {
    int n = xi.diagram().rank();
    if (xi.diagram().family() == Family::A)
        return k >= 1 && k <= n - 1 && xiv(xi, k - 1) == xiv(xi, k + 1);
    if (k < 1 || k > n - 2) return false;
    if (k == n - 2)  // fork vertex: either leg may close the turn
        return xiv(xi, n - 3) == xi(n - 1) || xiv(xi, n - 3) == xi(n);
    return xiv(xi, k - 1) == xiv(xi, k + 1);
}

int j_diamond(const HeightFunction& xi, int j) {
    int n = xi.diagram().rank();
    for (int k = j; k <= n; ++k)
        if (turning(xi, k)) return k;
    return n;
}

long dj(const HeightFunction& xi, int j) { return j == j_diamond(xi, j) ? 1 : 0; }

// Y_{v,p}^e with the convention Y_{v,p} = 1 for v outside the diagram.
YMonomial yf(const HeightFunction& xi, int v, long p, long e = 1) {
    if (v < 1 || v > xi.diagram().rank() || e == 0) return YMonomial::unit();
    return YMonomial::var(v, p, e);
}

// Interval factor: product over the vertices p of [lo, hi] (bounds included
// per flags) that are sources or sinks, contributing Y_{p,xi(p)} at a source
// and Y_{p,xi(p)-2} at a sink.
YMonomial interval_y(const HeightFunction& xi, int lo, bool lo_incl, int hi, bool hi_incl) {
    YMonomial m;
    int n = xi.diagram().rank();
    int a = lo + (lo_incl ? 0 : 1);
    int b = hi - (hi_incl ? 0 : 1);
    for (int p = std::max(1, a); p <= std::min(n, b); ++p) {
        if (xi.is_source(p)) m = m * YMonomial::var(p, xi(p));
        else if (xi.is_sink(p)) m = m * YMonomial::var(p, xi(p) - 2);
    }
    return m;
}

// Open-interval product Y(i, j).
YMonomial open_y(const HeightFunction& xi, int i, int j) {
    return interval_y(xi, i, false, j, false);
}

// Left factor common to all segment tables: indexes the case on
// xi(i) vs xi(i+1).
YMonomial left_factor(const HeightFunction& xi, int i, bool left_desc) {
    if (left_desc) return yf(xi, i - 1, xiv(xi, i - 1), 1 - dj(xi, i));
    return yf(xi, i - 1, xiv(xi, i - 1), dj(xi, i)) * yf(xi, i, xi(i) - 2);
}

// Tail configuration of a type-D height function.
enum class DTail { T1, T2, T3, T4, T5, T6 };

DTail d_tail(const HeightFunction& xi) {
    int n = xi.diagram().rank();
    long x2 = xi(n - 2), x1 = xi(n - 1), x0 = xi(n), x3 = xi(n - 3);
    if (x1 == x0) return x2 > x1 ? DTail::T1 : DTail::T2;
    if (x0 > x2 && x2 > x1) return x3 == x0 ? DTail::T3 : DTail::T4;
    return x3 == x1 ? DTail::T5 : DTail::T6;
}

// Highest weight of the thin indecomposable supported on the connected set
// T: z-exponents from the injective copresentation, an f per sink of T.
YMonomial thin_support_hw(const HeightFunction& xi, const std::vector<int>& support) {
    const auto& d = xi.diagram();
    std::vector<bool> in(d.rank() + 1, false);
    for (int v : support) in[v] = true;
    YMonomial m;
    for (int v = 1; v <= d.rank(); ++v) {
        long g = in[v] ? -1 : 0;
        bool sink_in_t = in[v];
        for (int w : d.neighbors(v)) {
            if (!in[w] || !xi.arrow(v, w)) continue;
            if (in[v]) sink_in_t = false;
            ++g;
        }
        if (g != 0) m = m * YMonomial::var(v, xi(v), g);
        if (in[v] && sink_in_t) m = m * f_mon(xi, v);
    }
    return m;
}

}  // namespace

YMonomial phi_neg_simple(const HeightFunction& xi, int j) { return YMonomial::var(j, xi(j)); }

YMonomial phi_closed_type_a(const HeightFunction& xi, int i, int j) {
    const int n = xi.diagram().rank();
    if (i < 1 || j > n || i > j) throw std::invalid_argument("phi_closed_type_a: bad segment");
    if (i == j) {
        if (xiv(xi, j - 1) > xi(j))
            return yf(xi, j - 1, xiv(xi, j - 1)) * yf(xi, j, xi(j) - 2) *
                   yf(xi, j + 1, j + 1 <= n ? xi(j + 1) : 0, dj(xi, j));
        return yf(xi, j + 1, j + 1 <= n ? xi(j + 1) : 0, 1 - dj(xi, j)) * yf(xi, j, xi(j) - 2);
    }
    YMonomial left = left_factor(xi, i, xi(i) > xi(i + 1));
    YMonomial right;
    if (xiv(xi, j - 1) > xi(j))
        right = yf(xi, j, xi(j) - 2) * yf(xi, j + 1, j + 1 <= n ? xi(j + 1) : 0, dj(xi, j));
    else
        right = yf(xi, j + 1, j + 1 <= n ? xi(j + 1) : 0, 1 - dj(xi, j));
    return left * open_y(xi, i, j) * right;
}

bool is_hl_type_a(const YMonomial& m, int n) {
    if (m.is_unit()) return false;
    std::vector<std::pair<int, long>> entries;
    for (const auto& [key, e] : m.exps()) {
        if (e != 1) return false;
        if (key.first < 1 || key.first > n) return false;
        if (!entries.empty() && entries.back().first == key.first) return false;
        entries.push_back(key);
    }
    for (size_t t = 1; t < entries.size(); ++t) {
        if (entries[t].first <= entries[t - 1].first) return false;
        long da = std::labs(entries[t].second - entries[t - 1].second);
        if (da != entries[t].first - entries[t - 1].first + 2) return false;
    }
    for (size_t t = 1; t + 1 < entries.size(); ++t) {
        long d1 = entries[t].second - entries[t - 1].second;
        long d2 = entries[t + 1].second - entries[t].second;
        if (d1 * d2 >= 0) return false;
    }
    return true;
}

std::optional<DRoot> d_root_label(const DimVector& dims) {
    const int n = static_cast<int>(dims.size());
    if (n < 4) return std::nullopt;
    long cn1 = dims[n - 2], cn = dims[n - 1];
    int first = 0;
    for (int t = 1; t <= n - 2; ++t)
        if (dims[t - 1] > 0) { first = t; break; }
    if (cn1 == 0 && cn == 0) {
        if (first == 0) return std::nullopt;
        int last = first;
        while (last + 1 <= n - 2 && dims[last] == 1) ++last;
        return DRoot{first, last + 1, true};
    }
    if (cn1 == 1 && cn == 0) return DRoot{first == 0 ? n - 1 : first, n, true};
    if (cn1 == 0 && cn == 1) return DRoot{first == 0 ? n - 1 : first, n, false};
    if (cn1 == 1 && cn == 1) {
        int j = n - 1;
        for (int t = 1; t <= n - 2; ++t)
            if (dims[t - 1] == 2) { j = t; break; }
        return DRoot{first, j, false};
    }
    return std::nullopt;
}

YMonomial phi_closed_type_d(const HeightFunction& xi, const DRoot& root) {
    const int n = xi.diagram().rank();
    const int i = root.i, j = root.j;

    if (root.minus) {
        if (i == n - 1 && j == n)  // alpha_{n-1}
            return yf(xi, n - 2, xi(n - 2), xi(n - 2) == xi(n - 1) + 1 ? 1 : 0) *
                   yf(xi, n - 1, xi(n - 1) - 2);
        if (i == n - 2 && j == n - 1)  // alpha_{n-2}
            return yf(xi, n - 3, xi(n - 3), xi(n - 3) == xi(n - 2) + 1 ? 1 : 0) *
                   yf(xi, n - 2, xi(n - 2) - 2) *
                   yf(xi, n - 1, xi(n - 1), xi(n - 1) == xi(n - 2) + 1 ? 1 : 0) *
                   yf(xi, n, xi(n), xi(n) == xi(n - 2) + 1 ? 1 : 0);
        if (j <= n - 2 && i == j - 1) {  // alpha_j for j <= n-3
            int jj = i;
            if (xiv(xi, jj - 1) > xi(jj))
                return yf(xi, jj - 1, xiv(xi, jj - 1)) * yf(xi, jj, xi(jj) - 2) *
                       yf(xi, jj + 1, xi(jj + 1), dj(xi, jj));
            return yf(xi, jj + 1, xi(jj + 1), 1 - dj(xi, jj)) * yf(xi, jj, xi(jj) - 2);
        }
        if (j <= n - 2) {
            // {i, -j}, i < j - 1 <= n - 3: the type-A segment table
            return phi_closed_type_a(xi, i, j - 1);
        }
        bool left_desc = xi(i) > xi(i + 1);
        YMonomial left = left_factor(xi, i, left_desc);
        if (j == n - 1 && i <= n - 3) {  // {i, -(n-1)}
            switch (d_tail(xi)) {
                case DTail::T1:
                    return left * open_y(xi, i, n - 2) *
                           yf(xi, n - 2, xi(n - 2) - 2, 1 - dj(xi, n - 2));
                case DTail::T2:
                    return left * open_y(xi, i, n) * yf(xi, n, xi(n));
                case DTail::T3:
                    return left * open_y(xi, i, n - 2) * yf(xi, n - 2, xi(n - 2) - 2) *
                           yf(xi, n, xi(n));
                case DTail::T4:
                    return left * open_y(xi, i, n - 1) * yf(xi, n, xi(n));
                case DTail::T5:
                    return left * open_y(xi, i, n - 2) * yf(xi, n - 2, xi(n - 2) - 2) *
                           yf(xi, n - 1, xi(n - 1));
                case DTail::T6:
                    return left * open_y(xi, i, n - 2) * yf(xi, n - 1, xi(n - 1));
            }
        }
        if (j == n && i == n - 2)  // {n-2, -n}: thin support {n-2, n-1}
            return thin_support_hw(xi, {n - 2, n - 1});
        if (j == n && i <= n - 3) {  // {i, -n}
            switch (d_tail(xi)) {
                case DTail::T1:
                    return left * open_y(xi, i, n - 1) * yf(xi, n - 1, xi(n - 1) - 2);
                case DTail::T2:
                    return left * open_y(xi, i, n - 1) * yf(xi, n, xi(n));
                case DTail::T3:
                    return left * open_y(xi, i, n - 1) * yf(xi, n - 1, xi(n - 1) - 2) *
                           yf(xi, n, xi(n));
                case DTail::T4:
                    return left * open_y(xi, i, n - 2) * yf(xi, n - 2, xi(n - 2)) *
                           yf(xi, n - 1, xi(n - 1) - 2) * yf(xi, n, xi(n));
                case DTail::T5:
                    return left * open_y(xi, i, n - 2) * yf(xi, n - 2, xi(n - 2) - 2);
                case DTail::T6:
                    return left * open_y(xi, i, n - 2);
            }
        }
        throw std::domain_error("phi_closed_type_d: unmatched minus-root case");
    }

    // plus roots
    if (i == n - 1 && j == n)  // alpha_n
        return yf(xi, n - 2, xi(n - 2), xi(n - 2) == xi(n) + 1 ? 1 : 0) * yf(xi, n, xi(n) - 2);
    bool left_desc = xi(i) > xi(i + 1);
    YMonomial left = left_factor(xi, i, left_desc);
    if (j == n && i == n - 2)  // {n-2, n}: thin support {n-2, n}
        return thin_support_hw(xi, {n - 2, n});
    if (j == n && i <= n - 3) {  // {i, n}
        switch (d_tail(xi)) {
            case DTail::T1:
                return left * open_y(xi, i, n - 1) * yf(xi, n, xi(n) - 2);
            case DTail::T2:
                return left * open_y(xi, i, n - 1) * yf(xi, n - 1, xi(n - 1));
            case DTail::T3:
                return left * open_y(xi, i, n - 2) * yf(xi, n - 2, xi(n - 2) - 2);
            case DTail::T4:
                return left * open_y(xi, i, n - 2);
            case DTail::T5:
                return left * open_y(xi, i, n - 2) * yf(xi, n - 1, xi(n - 1)) *
                       yf(xi, n, xi(n) - 2);
            case DTail::T6:
                return left * open_y(xi, i, n - 2) * yf(xi, n - 2, xi(n - 2)) *
                       yf(xi, n - 1, xi(n - 1)) * yf(xi, n, xi(n) - 2);
        }
    }
    if (j == n - 1 && i == n - 2)  // {n-2, n-1}: thin support {n-2, n-1, n}
        return thin_support_hw(xi, {n - 2, n - 1, n});
    if (j == n - 1 && i <= n - 3) {  // {i, n-1}
        switch (d_tail(xi)) {
            case DTail::T1:
                return left * interval_y(xi, i, false, n - 1, true) * yf(xi, n - 2, xi(n - 2)) *
                       yf(xi, n, xi(n) - 2);
            case DTail::T2:
                return left * open_y(xi, i, n - 2) *
                       yf(xi, n - 2, xi(n - 2) - 2, dj(xi, n - 2));
            case DTail::T3:
                return left * open_y(xi, i, n - 2) * yf(xi, n - 1, xi(n - 1) - 2);
            case DTail::T4:
                return left * open_y(xi, i, n - 2) * yf(xi, n - 2, xi(n - 2)) *
                       yf(xi, n - 1, xi(n - 1) - 2);
            case DTail::T5:
                return left * open_y(xi, i, n - 2) * yf(xi, n, xi(n) - 2);
            case DTail::T6:
                return left * open_y(xi, i, n - 2) * yf(xi, n - 2, xi(n - 2)) *
                       yf(xi, n, xi(n) - 2);
        }
    }
    if (j <= n - 2 && i < j) {  // {i, j}
        bool jdesc = xi(j - 1) > xi(j);
        YMonomial tail = interval_y(xi, i, false, n, true);  // Y(i, n]
        if (xi(n - 1) == xi(n)) {
            YMonomial jpart = jdesc ? interval_y(xi, j, true, n - 2, true) *
                                          yf(xi, j - 1, xiv(xi, j - 1))
                                    : interval_y(xi, j, false, n - 2, true) *
                                          yf(xi, j, xi(j) - 2, 1 - dj(xi, j));
            return left * tail * jpart;
        }
        YMonomial mid = xi(n - 3) > xi(n - 2) ? yf(xi, n - 2, xi(n - 2) - 2)
                                              : yf(xi, n - 2, xi(n - 2), j == n - 2 ? 0 : 1);
        YMonomial jpart = jdesc ? interval_y(xi, j, true, n - 2, false) *
                                      yf(xi, j - 1, xiv(xi, j - 1))
                                : interval_y(xi, j, false, n - 2, false) *
                                      yf(xi, j, xi(j) - 2, 1 - dj(xi, j));
        return left * tail * mid * jpart;
    }
    throw std::domain_error("phi_closed_type_d: unmatched plus-root case");
}

namespace {

struct DEntry {
    int i;
    long a;
    long e;
};

// Checks the chain/tail conditions for a candidate split of the monomial:
// chain = the i_1..i_k (with exponent pattern 1..1 2..2), extra = optional
// interleaved vertex, tail_a = spectral value of the (n-1, n)/(n-2,..) tail,
// tail_gap = required |a_{k+1} - a_k| (0 = no tail).
bool d_chain_ok(const std::vector<DEntry>& chain, std::optional<DEntry> extra,
                std::optional<long> tail_a, long tail_gap, int tail_col) {
    const int k = static_cast<int>(chain.size());
    if (k == 0) return !extra.has_value();  // bare tails
    // squared entries must form a suffix
    bool seen_sq = false;
    for (const auto& en : chain) {
        if (en.e == 2) seen_sq = true;
        else if (seen_sq) return false;
        if (en.e != 1 && en.e != 2) return false;
    }
    // spacing and zigzag over the chain followed by the tail value
    std::vector<long> a;
    std::vector<int> idx;
    for (const auto& en : chain) {
        a.push_back(en.a);
        idx.push_back(en.i);
    }
    if (tail_a) {
        a.push_back(*tail_a);
        idx.push_back(tail_col);
    }
    for (size_t t = 1; t < a.size(); ++t) {
        long want = (t == static_cast<size_t>(k) && tail_a) ? tail_gap
                                                            : idx[t] - idx[t - 1] + 2;
        if (std::labs(a[t] - a[t - 1]) != want) return false;
    }
    for (size_t t = 1; t + 1 < a.size(); ++t)
        if ((a[t] - a[t - 1]) * (a[t + 1] - a[t]) >= 0) return false;
    // squared run requires a tail
    if (seen_sq && !tail_a) return false;
    if (extra) {
        // find l with i_l < extra->i < i_{l+1}; the convention places
        // i_{k+1} at the tail column
        for (int l = 1; l <= k; ++l) {
            long il = chain[l - 1].i, al = chain[l - 1].a;
            long inext = l < k ? chain[l].i : tail_col;
            std::optional<long> anext = l < k ? std::optional<long>(chain[l].a) : tail_a;
            if (!(il < extra->i && extra->i < inext)) continue;
            if (std::labs(extra->a - al) != extra->i - il) continue;
            if (!anext) continue;
            if (std::labs(*anext - extra->a) != inext - extra->i + 2) continue;
            return true;
        }
        return false;
    }
    return true;
}

}  // namespace

bool is_hl_type_d(const YMonomial& m, int n) {
    if (m.is_unit()) return false;
    std::vector<DEntry> spine;
    std::vector<std::pair<long, long>> fork1, forkn;  // (a, e) at n-1 and n
    for (const auto& [key, e] : m.exps()) {
        if (e < 1) return false;
        if (key.first < 1 || key.first > n) return false;
        if (key.first == n - 1) fork1.emplace_back(key.second, e);
        else if (key.first == n) forkn.emplace_back(key.second, e);
        else {
            if (!spine.empty() && spine.back().i == key.first) return false;
            spine.push_back({key.first, key.second, e});
        }
    }
    if (fork1.size() > 1 || forkn.size() > 1) return false;
    if (!fork1.empty() && fork1[0].second != 1) return false;
    if (!forkn.empty() && forkn[0].second != 1) return false;

    auto try_forms = [&](std::vector<DEntry> chain, std::optional<DEntry> extra) {
        // strictly increasing columns
        for (size_t t = 1; t < chain.size(); ++t)
            if (chain[t].i <= chain[t - 1].i) return false;
        bool has_sq = std::any_of(chain.begin(), chain.end(),
                                  [](const DEntry& en) { return en.e == 2; });
        if (fork1.empty() && forkn.empty()) {
            // plain string, possibly ending at n-2
            if (has_sq || extra) return false;
            return d_chain_ok(chain, extra, std::nullopt, 0, 0);
        }
        if (!fork1.empty() && !forkn.empty()) {
            long b = fork1[0].first, c = forkn[0].first;
            if (b == c) {
                // (n-1, n) tail at the same parameter
                if (!chain.empty() && chain.back().i > n - 2) return false;
                return d_chain_ok(chain, extra, b, chain.empty() ? 0 : n - chain.back().i + 1,
                                  n - 1);
            }
            // shifted tail: legs at (a+3, a-1), (a-3, a+1), (a-1, a+3) or
            // (a+1, a-3) around an anchor value a at column n-2; the anchor
            // factor Y_{n-2,a} itself may or may not appear
            std::vector<long> anchors;
            if (b - c == 4) anchors = {b - 3, b - 1};
            else if (c - b == 4) anchors = {b + 3, b + 1};
            else return false;
            for (long a : anchors) {
                std::vector<DEntry> body = chain;
                if (!body.empty() && body.back().i == n - 2) {
                    if (body.back().e != 1 || body.back().a != a) continue;
                    body.pop_back();
                }
                bool clean = true;
                for (const auto& en : body)
                    if (en.i >= n - 2) clean = false;
                if (!clean) continue;
                if (body.empty()) {
                    if (!extra.has_value()) return true;
                    continue;
                }
                if (d_chain_ok(body, extra, a, n - body.back().i, n - 2)) return true;
            }
            return false;
        }
        // single fork factor
        if (has_sq || extra) return false;
        long a = fork1.empty() ? forkn[0].first : fork1[0].first;
        if (chain.empty()) return true;  // a bare fundamental at the fork
        return d_chain_ok(chain, extra, a, n - chain.back().i + 1, n - 1);
    };

    // choose at most one exponent-1 spine entry as the interleaved extra
    if (try_forms(spine, std::nullopt)) return true;
    for (size_t t = 0; t < spine.size(); ++t) {
        if (spine[t].e != 1) continue;
        std::vector<DEntry> chain;
        for (size_t s = 0; s < spine.size(); ++s)
            if (s != t) chain.push_back(spine[s]);
        if (try_forms(chain, spine[t])) return true;
    }
    return false;
}

YMonomial sink_source_phi(const HeightFunction& xi, const DimVector& root) {
    if (!xi.is_sink_source())
        throw std::invalid_argument("sink_source_phi: height function is not sink-source");
    YMonomial m;
    for (int i = 1; i <= xi.diagram().rank(); ++i) {
        if (root[i - 1] == 0) continue;
        if (xi.is_source(i)) m = m * YMonomial::var(i, xi(i), root[i - 1]);
        else m = m * YMonomial::var(i, xi(i) - 2, root[i - 1]);
    }
    return m;
}

}  // namespace hlc
