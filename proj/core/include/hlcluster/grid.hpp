#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hlcluster/dynkin.hpp"
#include "hlcluster/qcartan.hpp"

namespace hlc {

/// Integer labeling of Dynkin vertices; adjacent values differ by exactly 1.
/// Induces the orientation i -> j iff xi(i) = xi(j) + 1.
class HeightFunction {
public:
    HeightFunction(const DynkinDiagram& diagram, std::vector<long> values);

    const DynkinDiagram& diagram() const { return diagram_; }
    long operator()(int i) const { return values_.at(i - 1); }
    const std::vector<long>& values() const { return values_; }

    bool arrow(int i, int j) const {  // i -> j in the induced Dynkin quiver
        return diagram_.adjacent(i, j) && values_[i - 1] == values_[j - 1] + 1;
    }
    bool is_source(int i) const;
    bool is_sink(int i) const;
    bool is_sink_source() const;  // every vertex a local max or min

private:
    DynkinDiagram diagram_;
    std::vector<long> values_;
};

struct GridVertex {
    int i;    // Dynkin vertex
    long p;   // spectral parameter
    auto operator<=>(const GridVertex&) const = default;
};

/// The finite grid quiver with vertex set {(i, xi(i) - 2k) : 0 <= k <= l},
/// arrows (i,r) -> (j,s) iff C_ij != 0 and s = r + C_ij (full subquiver,
/// arrows between frozen vertices retained for display), and the bottom row
/// {(i, xi(i) - 2l)} frozen.  Vertices are kept in the canonical order
/// (i ascending, then p descending).
class GridQuiver {
public:
    GridQuiver(const HeightFunction& xi, int level);

    const HeightFunction& xi() const { return xi_; }
    const DynkinDiagram& diagram() const { return xi_.diagram(); }
    int level() const { return level_; }

    const std::vector<GridVertex>& vertices() const { return vertices_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int vertex_index(GridVertex v) const;  // -1 if absent
    bool frozen(int idx) const { return frozen_[idx]; }
    int num_mutable() const { return num_mutable_; }
    /// Indices of mutable vertices, in canonical order.
    const std::vector<int>& mutable_indices() const { return mutable_; }

    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

    /// 3-cycles (i,r) -> (j,r-1) -> (i,r-2) -> (i,r) of the principal quiver,
    /// as vertex index triples.
    std::vector<std::array<int, 3>> potential_cycles() const;

private:
    HeightFunction xi_;
    int level_;
    std::vector<GridVertex> vertices_;
    std::vector<bool> frozen_;
    std::vector<int> mutable_;
    int num_mutable_ = 0;
    std::vector<std::pair<int, int>> arrows_;  // by vertex index
};

/// Dense integer matrix, row-major.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    long& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const IntMat& o) const = default;

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    bool is_skew_symmetric() const;
};

/// Exchange matrix B (rows = all vertices, columns = mutable vertices) and
/// skew-symmetric matrix L over all vertices, in the grid's vertex order.
/// mutable_rows[k] is the row position of the k-th mutable vertex.
struct SeedMatrices {
    std::vector<GridVertex> order;
    std::vector<int> mutable_rows;
    IntMat B;
    IntMat L;
};

/// b_vw = #(arrows w -> v) - #(arrows v -> w), columns over mutable vertices.
IntMat b_matrix(const GridQuiver& grid);

/// L((i,r),(j,s)) = sum_{k,l >= 0, r+2k <= xi(i), s+2l <= xi(j)} N_ij(s+2l-r-2k).
IntMat l_matrix(const GridQuiver& grid, const QCartanTable& qct);

SeedMatrices seed_matrices(const GridQuiver& grid, const QCartanTable& qct);

struct CompatReport {
    bool ok = false;
    IntMat product;           // B^T L, mutable x all
    std::vector<long> diag;   // diagonal of the mutable block
};

/// Checks B^T L = (2 I | 0): 2 at (k, mutable_rows[k]), 0 elsewhere.
CompatReport check_compatible(const IntMat& B, const IntMat& L,
                              const std::vector<int>& mutable_rows);
CompatReport check_compatible(const SeedMatrices& s);

/// Matrix mutation at mutable column k (0-based among columns), via
/// B' = E_eps B F_eps.  Result is independent of eps.
IntMat mutate_b(const IntMat& B, const std::vector<int>& mutable_rows, int k, int eps = +1);

/// Lambda' = E_eps^T L E_eps for the same E as mutate_b.
IntMat mutate_lambda(const IntMat& B, const IntMat& L, const std::vector<int>& mutable_rows,
                     int k, int eps = +1);

/// Mutates (B, L) together at mutable column k.
SeedMatrices mutate(const SeedMatrices& s, int k, int eps = +1);

}  // namespace hlc
