#include "hlcluster/seed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace hlc {

namespace {

uint64_t fnv1a(const std::string& s, uint64_t h) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

Seed Seed::principal(const HeightFunction& xi) {
    const auto& d = xi.diagram();
    const int n = d.rank();
    Seed s;
    auto vt = std::make_shared<VarTable>();
    for (int i = 1; i <= n; ++i) vt->add("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) vt->add("y" + std::to_string(i));
    s.vars_ = vt;
    s.B_ = IntMat(2 * n, n);
    for (auto [a, b] : d.edges()) {
        int u = xi.arrow(a, b) ? a : b;
        int v = xi.arrow(a, b) ? b : a;
        // arrow u -> v contributes +1 to b_{v,u} and -1 to b_{u,v}
        s.B_(v - 1, u - 1) += 1;
        s.B_(u - 1, v - 1) -= 1;
    }
    for (int i = 0; i < n; ++i) s.B_(n + i, i) = 1;
    s.mutable_rows_.resize(n);
    for (int i = 0; i < n; ++i) s.mutable_rows_[i] = i;
    for (int v = 0; v < 2 * n; ++v) s.x_.push_back(LaurentPoly::variable(vt, v));
    s.num_x_rows_ = n;
    for (int i = 0; i < n; ++i) s.x_var_idx_.push_back(i);
    for (int i = 0; i < n; ++i) s.y_var_idx_.push_back(n + i);
    return s;
}

Seed Seed::grid_principal(const GridQuiver& grid) {
    Seed s;
    const int m = grid.num_vertices();
    const int n = grid.num_mutable();
    auto vt = std::make_shared<VarTable>();
    auto vname = [&](GridVertex v) {
        return "[" + std::to_string(v.i) + "," + std::to_string(v.p) + "]";
    };
    for (int v = 0; v < m; ++v) vt->add("z" + vname(grid.vertices()[v]));
    for (int k = 0; k < n; ++k)
        vt->add("y" + vname(grid.vertices()[grid.mutable_indices()[k]]));
    s.vars_ = vt;
    s.B_ = IntMat(m + n, n);
    IntMat gridB = b_matrix(grid);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) s.B_(r, c) = gridB(r, c);
    for (int k = 0; k < n; ++k) s.B_(m + k, k) = 1;
    s.mutable_rows_ = grid.mutable_indices();
    for (int v = 0; v < m + n; ++v) s.x_.push_back(LaurentPoly::variable(vt, v));
    s.num_x_rows_ = m;
    for (int k = 0; k < n; ++k) s.x_var_idx_.push_back(grid.mutable_indices()[k]);
    for (int k = 0; k < n; ++k) s.y_var_idx_.push_back(m + k);
    for (int v = 0; v < m; ++v)
        if (grid.frozen(v)) s.frozen_var_idx_.push_back(v);
    return s;
}

Seed Seed::mutated(int k) const {
    if (k < 0 || k >= num_mutable()) throw std::out_of_range("mutated: column out of range");
    const int rk = mutable_rows_[k];
    LaurentPoly plus = LaurentPoly::constant(vars_, 1);
    LaurentPoly minus = LaurentPoly::constant(vars_, 1);
    for (int r = 0; r < B_.rows; ++r) {
        long b = B_(r, k);
        if (b > 0) plus = plus * x_[r].pow(b);
        else if (b < 0) minus = minus * x_[r].pow(-b);
    }
    Seed out(*this);
    out.x_[rk] = (plus + minus).divide_exact(x_[rk]);
    out.B_ = mutate_b(B_, mutable_rows_, k);
    out.path_.push_back(k);
    // Laurent phenomenon: coefficients must stay polynomial in the frozen
    // variables (principal y's and any grid coefficients)
    for (int y : y_var_idx_)
        if (out.x_[rk].min_exponent(y) < 0)
            throw std::domain_error("Laurent phenomenon violated in a principal variable");
    for (int f : frozen_var_idx_)
        if (out.x_[rk].min_exponent(f) < 0)
            throw std::domain_error("Laurent phenomenon violated in a frozen coefficient");
    return out;
}

LaurentPoly Seed::y_hat(int k) const {
    LaurentPoly y = LaurentPoly::variable(vars_, y_var_idx_[k]);
    for (int j = 0; j < num_mutable(); ++j) {
        long b = B_(mutable_rows_[j], k);
        if (b != 0) y = y * LaurentPoly::variable(vars_, x_var_idx_[j], b);
    }
    return y;
}

std::array<uint64_t, 2> Seed::fingerprint() const {
    std::vector<std::string> rendered;
    rendered.reserve(mutable_rows_.size());
    for (int r : mutable_rows_) rendered.push_back(x_[r].str());
    std::sort(rendered.begin(), rendered.end());
    uint64_t h1 = 1469598103934665603ULL, h2 = 1099511628211ULL * 7 + 5;
    for (const auto& s : rendered) {
        h1 = fnv1a(s, h1);
        h2 = fnv1a(s, h2 ^ 0x9e3779b97f4a7c15ULL);
    }
    return {h1, h2};
}

ClusterVarData Seed::extract(const LaurentPoly& var) const {
    ClusterVarData out;
    out.laurent = var;
    const int n = num_mutable();
    std::vector<bool> is_x(vars_->size(), false);
    for (int i : x_var_idx_) is_x[i] = true;
    out.F = var.set_all_one(is_x);

    // the unique term free of every principal y gives x^g
    out.g.assign(n, 0);
    bool found = false;
    for (const auto& [e, c] : var.terms()) {
        bool yfree = true;
        for (int y : y_var_idx_)
            if (ev_get(e, y) != 0) { yfree = false; break; }
        if (!yfree) continue;
        if (found) throw std::domain_error("extract: multiple coefficient-free terms");
        found = true;
        for (int k = 0; k < n; ++k) out.g[k] = ev_get(e, x_var_idx_[k]);
    }
    if (!found) throw std::domain_error("extract: no coefficient-free term");

    out.denom.assign(n, 0);
    for (int k = 0; k < n; ++k) out.denom[k] = -var.min_exponent(x_var_idx_[k]);
    return out;
}

std::vector<std::pair<int, ClusterVarData>> source_sweep(const ARQuiver& ar) {
    const auto& xi = ar.xi();
    const int n = ar.rank();
    const long h = ar.diagram().coxeter_number();
    Seed seed = Seed::principal(xi);
    const Seed initial = seed;

    std::map<std::string, LaurentPoly> seen;  // non-initial variables by rendering
    std::map<DimVector, ClusterVarData> by_denom;
    long mutations = 0;
    while (static_cast<long>(by_denom.size()) < ar.nu()) {
        for (int v : ar.source_order()) {
            seed = seed.mutated(v - 1);
            ++mutations;
            const LaurentPoly& nv = seed.x_at(v - 1);
            std::string key = nv.str();
            if (!seen.count(key)) {
                seen.emplace(key, nv);
                auto data = initial.extract(nv);
                if (!std::all_of(data.denom.begin(), data.denom.end(),
                                 [](long x) { return x <= 0; }))
                    by_denom.emplace(data.denom, std::move(data));
            }
            if (mutations > static_cast<long>(n) * (h + 2))
                throw std::runtime_error("source sweep failed to stabilize");
        }
    }

    std::vector<std::pair<int, ClusterVarData>> out;
    for (int node = 0; node < ar.nu(); ++node) {
        auto it = by_denom.find(ar.dims(node));
        if (it == by_denom.end()) throw std::runtime_error("source sweep missed a root");
        out.emplace_back(node, it->second);
    }
    for (int i = 1; i <= n; ++i) {
        auto data = initial.extract(initial.x_at(i - 1));
        out.emplace_back(ar.marker_node(i), std::move(data));
    }
    return out;
}

BfsResult enumerate_bfs(const Seed& start, int64_t seed_cap) {
    BfsResult res;
    std::set<std::array<uint64_t, 2>> visited;
    std::map<std::string, LaurentPoly> variables;
    std::deque<Seed> frontier;
    frontier.push_back(start);
    visited.insert(start.fingerprint());
    for (int r : start.mutable_rows()) variables.emplace(start.x_at(r).str(), start.x_at(r));

    while (!frontier.empty()) {
        Seed cur = std::move(frontier.front());
        frontier.pop_front();
        ++res.seeds_visited;
        for (int k = 0; k < cur.num_mutable(); ++k) {
            Seed next = cur.mutated(k);
            auto fp = next.fingerprint();
            if (visited.count(fp)) continue;
            if (static_cast<int64_t>(visited.size()) >= seed_cap) {
                res.capped = true;
                continue;
            }
            visited.insert(fp);
            const LaurentPoly& nv = next.x_at(next.mutable_rows()[k]);
            variables.emplace(nv.str(), nv);
            frontier.push_back(std::move(next));
        }
    }
    for (const auto& [key, poly] : variables) res.variables.push_back(start.extract(poly));
    return res;
}

}  // namespace hlc
