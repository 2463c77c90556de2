#pragma once

#include <optional>

#include "hlcluster/arquiver.hpp"
#include "hlcluster/ymono.hpp"

namespace hlc {

/// Type A: image of the initial object [-j].
YMonomial phi_neg_simple(const HeightFunction& xi, int j);

/// Type A: closed form for the segment root [i, j] (alpha_i + ... + alpha_j),
/// 1 <= i <= j <= n.  Boundary convention: a virtual vertex 0 with
/// xi(0) = xi(1) - 1 participates in the turning-point tests.
YMonomial phi_closed_type_a(const HeightFunction& xi, int i, int j);

/// Membership test for the type-A family: strictly increasing columns,
/// alternating spectral steps of size (column gap + 2).
bool is_hl_type_a(const YMonomial& m, int n);

/// Positive roots of D_n written as {i, -j} (eps_i - eps_j, minus = true)
/// or {i, j} (eps_i + eps_j, minus = false).
struct DRoot {
    int i;
    int j;
    bool minus;
};

/// Classifies a positive root of D_n; nullopt if the vector is not one.
std::optional<DRoot> d_root_label(const DimVector& dims);

/// Type D closed form per root family; throws std::domain_error on a label
/// no published case covers.
YMonomial phi_closed_type_d(const HeightFunction& xi, const DRoot& root);

/// Membership test for the type-D family (three shapes: plain strings,
/// strings with a doubled segment and an (n-1, n) tail, and the shifted
/// (n-2, n-1, n) tails).
bool is_hl_type_d(const YMonomial& m, int n);

/// Sink-source correspondence: root coordinates a_i map to
/// prod_{sources} Y_{i,xi(i)}^{a_i} prod_{sinks} Y_{j,xi(j)-2}^{a_j}.
/// Requires a sink-source height function.
YMonomial sink_source_phi(const HeightFunction& xi, const DimVector& root);

}  // namespace hlc
