#include "hlcluster/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hlc {

HeightFunction::HeightFunction(const DynkinDiagram& diagram, std::vector<long> values)
    : diagram_(diagram), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != diagram_.rank())
        throw std::invalid_argument("height function needs one value per vertex");
    for (auto [a, b] : diagram_.edges())
        if (std::labs(values_[a - 1] - values_[b - 1]) != 1)
            throw std::invalid_argument("height function must differ by 1 across edge " +
                                        std::to_string(a) + "-" + std::to_string(b));
}

bool HeightFunction::is_source(int i) const {
    for (int j : diagram_.neighbors(i))
        if (values_[i - 1] < values_[j - 1]) return false;
    return true;
}

bool HeightFunction::is_sink(int i) const {
    for (int j : diagram_.neighbors(i))
        if (values_[i - 1] > values_[j - 1]) return false;
    return true;
}

bool HeightFunction::is_sink_source() const {
    for (int i = 1; i <= diagram_.rank(); ++i)
        if (!is_source(i) && !is_sink(i)) return false;
    return true;
}

GridQuiver::GridQuiver(const HeightFunction& xi, int level) : xi_(xi), level_(level) {
    if (level < 1) throw std::invalid_argument("grid level must be >= 1");
    const auto& d = xi.diagram();
    for (int i = 1; i <= d.rank(); ++i)
        for (int k = 0; k <= level; ++k)
            vertices_.push_back({i, xi(i) - 2 * k});
    // (i ascending, p descending) is already the construction order
    frozen_.assign(vertices_.size(), false);
    for (size_t idx = 0; idx < vertices_.size(); ++idx) {
        frozen_[idx] = vertices_[idx].p == xi(vertices_[idx].i) - 2 * level;
        if (!frozen_[idx]) mutable_.push_back(static_cast<int>(idx));
    }
    num_mutable_ = static_cast<int>(mutable_.size());
    for (size_t a = 0; a < vertices_.size(); ++a) {
        auto [i, r] = vertices_[a];
        for (int j = 1; j <= d.rank(); ++j) {
            int cij = d.cartan(i, j);
            if (cij == 0) continue;
            int b = vertex_index({j, r + cij});
            if (b >= 0) arrows_.emplace_back(static_cast<int>(a), b);
        }
    }
}

int GridQuiver::vertex_index(GridVertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                               [](const GridVertex& a, const GridVertex& b) {
                                   return a.i != b.i ? a.i < b.i : a.p > b.p;
                               });
    if (it != vertices_.end() && *it == v) return static_cast<int>(it - vertices_.begin());
    return -1;
}

std::vector<std::array<int, 3>> GridQuiver::potential_cycles() const {
    std::vector<std::array<int, 3>> cycles;
    const auto& d = diagram();
    for (size_t a = 0; a < vertices_.size(); ++a) {
        if (frozen_[a]) continue;
        auto [i, r] = vertices_[a];
        for (int j : d.neighbors(i)) {
            int b = vertex_index({j, r - 1});
            int c = vertex_index({i, r - 2});
            if (b < 0 || c < 0 || frozen_[b] || frozen_[c]) continue;
            cycles.push_back({static_cast<int>(a), b, c});
        }
    }
    return cycles;
}

IntMat IntMat::transpose() const {
    IntMat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix dimension mismatch");
    IntMat p(rows, o.cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k) {
            long v = (*this)(r, k);
            if (v == 0) continue;
            for (int c = 0; c < o.cols; ++c) p(r, c) += v * o(k, c);
        }
    return p;
}

bool IntMat::is_skew_symmetric() const {
    if (rows != cols) return false;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c <= r; ++c)
            if ((*this)(r, c) != -(*this)(c, r)) return false;
    return true;
}

IntMat b_matrix(const GridQuiver& grid) {
    IntMat B(grid.num_vertices(), grid.num_mutable());
    std::vector<int> col(grid.num_vertices(), -1);
    for (int k = 0; k < grid.num_mutable(); ++k) col[grid.mutable_indices()[k]] = k;
    for (auto [from, to] : grid.arrows()) {
        if (col[from] >= 0) B(to, col[from]) += 1;   // arrow w -> v adds to b_vw
        if (col[to] >= 0) B(from, col[to]) -= 1;
    }
    return B;
}

IntMat l_matrix(const GridQuiver& grid, const QCartanTable& qct) {
    const auto& xi = grid.xi();
    const int m = grid.num_vertices();
    IntMat L(m, m);
    for (int a = 0; a < m; ++a) {
        auto [i, r] = grid.vertices()[a];
        for (int b = 0; b < m; ++b) {
            auto [j, s] = grid.vertices()[b];
            long sum = 0;
            for (long k = 0; r + 2 * k <= xi(i); ++k)
                for (long l = 0; s + 2 * l <= xi(j); ++l)
                    sum += qct.n_func(i, j, s + 2 * l - r - 2 * k);
            L(a, b) = sum;
        }
    }
    return L;
}

SeedMatrices seed_matrices(const GridQuiver& grid, const QCartanTable& qct) {
    SeedMatrices s;
    s.order = grid.vertices();
    s.mutable_rows = grid.mutable_indices();
    s.B = b_matrix(grid);
    s.L = l_matrix(grid, qct);
    return s;
}

CompatReport check_compatible(const IntMat& B, const IntMat& L,
                              const std::vector<int>& mutable_rows) {
    if (B.rows != L.rows || L.rows != L.cols)
        throw std::invalid_argument("check_compatible: dimension mismatch");
    if (static_cast<int>(mutable_rows.size()) != B.cols)
        throw std::invalid_argument("check_compatible: need one row position per column");
    CompatReport rep;
    rep.product = B.transpose() * L;
    rep.ok = true;
    rep.diag.assign(B.cols, 0);
    for (int k = 0; k < B.cols; ++k) {
        rep.diag[k] = rep.product(k, mutable_rows[k]);
        for (int c = 0; c < L.cols; ++c) {
            long want = (c == mutable_rows[k]) ? 2 : 0;
            if (rep.product(k, c) != want) rep.ok = false;
        }
    }
    return rep;
}

CompatReport check_compatible(const SeedMatrices& s) {
    return check_compatible(s.B, s.L, s.mutable_rows);
}

namespace {

IntMat make_e(const IntMat& B, const std::vector<int>& mutable_rows, int k, int eps) {
    const int m = B.rows;
    const int rk = mutable_rows.at(k);
    IntMat E(m, m);
    for (int i = 0; i < m; ++i) E(i, i) = 1;
    for (int i = 0; i < m; ++i)
        E(i, rk) = (i == rk) ? -1 : std::max(static_cast<long>(eps) * B(i, k), 0L);
    return E;
}

IntMat make_f(const IntMat& B, const std::vector<int>& mutable_rows, int k, int eps) {
    const int n = B.cols;
    const int rk = mutable_rows.at(k);
    IntMat F(n, n);
    for (int j = 0; j < n; ++j) F(j, j) = 1;
    for (int j = 0; j < n; ++j)
        F(k, j) = (j == k) ? -1 : std::max(-static_cast<long>(eps) * B(rk, j), 0L);
    return F;
}

}  // namespace

IntMat mutate_b(const IntMat& B, const std::vector<int>& mutable_rows, int k, int eps) {
    return make_e(B, mutable_rows, k, eps) * B * make_f(B, mutable_rows, k, eps);
}

IntMat mutate_lambda(const IntMat& B, const IntMat& L, const std::vector<int>& mutable_rows,
                     int k, int eps) {
    IntMat E = make_e(B, mutable_rows, k, eps);
    return E.transpose() * L * E;
}

SeedMatrices mutate(const SeedMatrices& s, int k, int eps) {
    SeedMatrices out;
    out.order = s.order;
    out.mutable_rows = s.mutable_rows;
    out.B = mutate_b(s.B, s.mutable_rows, k, eps);
    out.L = mutate_lambda(s.B, s.L, s.mutable_rows, k, eps);
    return out;
}

}  // namespace hlc
