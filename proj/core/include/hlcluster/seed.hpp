#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hlcluster/arquiver.hpp"
#include "hlcluster/grid.hpp"
#include "hlcluster/laurent.hpp"

namespace hlc {

/// Laurent-polynomial cluster variable with its principal-coefficient data:
/// g-vector, F-polynomial (in the y variables only) and denominator vector
/// over the initial mutable variables.
struct ClusterVarData {
    LaurentPoly laurent;
    DimVector g;
    LaurentPoly F;
    DimVector denom;
};

/// A seed of Laurent-polynomial cluster variables over a fixed initial
/// variable table.  Rows of B correspond to entries of x; columns to the
/// mutable rows.  Frozen entries of x never change under mutation.
class Seed {
public:
    /// Principal-coefficient seed of the Dynkin quiver induced by xi:
    /// variables x1..xn (mutable) and y1..yn (frozen), B = (B(Q) over Id).
    static Seed principal(const HeightFunction& xi);

    /// Grid seed with principal tracking: variables z[i,p] for every grid
    /// vertex (bottom row frozen) plus one principal coefficient y[i,p] per
    /// mutable vertex.
    static Seed grid_principal(const GridQuiver& grid);

    const VarTablePtr& vars() const { return vars_; }
    const IntMat& b() const { return B_; }
    const std::vector<int>& mutable_rows() const { return mutable_rows_; }
    int num_mutable() const { return static_cast<int>(mutable_rows_.size()); }
    const std::vector<LaurentPoly>& x() const { return x_; }
    const LaurentPoly& x_at(int row) const { return x_[row]; }
    const std::vector<int>& path() const { return path_; }

    /// Number of x rows that are mutable cluster variables or frozen
    /// coefficients of the underlying quiver (excludes principal y rows).
    int num_x_rows() const { return num_x_rows_; }

    /// Fomin-Zelevinsky exchange at mutable column k; divisions are exact or
    /// the Laurent phenomenon is violated (std::domain_error).
    Seed mutated(int k) const;

    /// y_j * prod_i x_i^{b_ij} over the mutable block of the initial seed.
    LaurentPoly y_hat(int k) const;

    /// Canonical fingerprint of the cluster up to permutation.
    std::array<uint64_t, 2> fingerprint() const;

    /// Indices (within the variable table) of initial mutable variables and
    /// principal coefficient variables.
    const std::vector<int>& x_var_indices() const { return x_var_idx_; }
    const std::vector<int>& y_var_indices() const { return y_var_idx_; }

    /// g / F / denominator extraction for a variable of this seed's algebra.
    ClusterVarData extract(const LaurentPoly& var) const;

private:
    VarTablePtr vars_;
    IntMat B_;
    std::vector<int> mutable_rows_;
    std::vector<LaurentPoly> x_;
    std::vector<int> path_;
    int num_x_rows_ = 0;
    std::vector<int> x_var_idx_;  // per mutable column: index of initial x variable
    std::vector<int> y_var_idx_;  // per mutable column: index of principal y variable
    std::vector<int> frozen_var_idx_;  // variable-table indices of non-principal frozen rows
};

/// Repeatedly mutates along the source order of Q until every positive root
/// appears as a denominator vector; returns one record per AR node (markers
/// carry the initial variables).  Throws if the sweep fails to stabilize
/// within n * (h + 2) mutations.
std::vector<std::pair<int, ClusterVarData>> source_sweep(const ARQuiver& ar);

struct BfsResult {
    std::vector<ClusterVarData> variables;  // deterministic order
    int64_t seeds_visited = 0;
    bool capped = false;
};

/// Breadth-first enumeration of all seeds reachable from `start`,
/// deduplicating seeds by cluster fingerprint and variables by canonical
/// rendering.  `seed_cap` bounds the number of distinct seeds visited.
BfsResult enumerate_bfs(const Seed& start, int64_t seed_cap = 30000);

}  // namespace hlc
