#pragma once

#include <optional>
#include <vector>

#include "hlcluster/arquiver.hpp"
#include "hlcluster/seed.hpp"
#include "hlcluster/ymono.hpp"

namespace hlc {

/// One row of the highest l-weight table: an AR node (module or P(i)[1])
/// together with its dominant monomial, principal-coefficient data and,
/// when requested, the truncated q-character.
struct HLRecord {
    int node;
    DimVector dims;
    DimVector g;
    DimVector soc;
    YMonomial hw;
    /// In the principal seed's variables with x's already at 1; absent when
    /// the table was built without F-polynomials (default for type E8,
    /// where they run to hundreds of thousands of terms).
    std::optional<LaurentPoly> F;
    std::optional<LaurentPoly> qchar;
};

/// hw = prod_i z_i^{g_i} * prod_i f_i^{soc_i}; markers P(i)[1] give Y_{i,xi(i)}.
/// Throws if the result is not dominant.
YMonomial hw_closed(const ARQuiver& ar, int node);

struct CDVectors {
    DimVector c;
    DimVector d;
};

/// For a mesh 0 -> tau N -> M -> N -> 0:
/// c_i = max(soc(N)_i - soc(M)_i, 0), d = soc(tau N) + soc(N) + g(N).
CDVectors mesh_cd(const ARQuiver& ar, const Mesh& mesh);

struct ExchangeCD {
    DimVector c;
    DimVector d;
    std::vector<std::pair<int, int>> middle;        // first-triangle summands (node, mult)
    std::vector<std::pair<int, int>> mprime;        // second-triangle summands, tau-shifted kernel first
    DimVector alpha;                                // dim Im(h)
    bool hw_identity_ok = false;
};

/// c and d of a general exchange pair (L, N), N a module, via the connecting
/// map h; verifies hw(Phi L) hw(Phi N) = hw(Phi M) f^c.
ExchangeCD exchange_cd(const ARQuiver& ar, int l, int n);

/// The full table: one record per AR node.  hw values are computed twice,
/// by the closed form and by a fixpoint over meshes seeded at P(i)[1] and
/// the injectives; any disagreement throws.  F-polynomials come from the
/// source sweep, matched by denominator vector.
std::vector<HLRecord> hl_table(const ARQuiver& ar, bool with_qchar = false,
                               std::optional<bool> with_F = std::nullopt);

/// hw * F(yhat) with yhat_j = A^{-1}_{j,xi(j)-1}; the expansion lives in the
/// level-1 window ring.
LaurentPoly trunc_qchar(const ARQuiver& ar, const YRing& ring, const HLRecord& rec);

/// Exact identity chi(Phi tau N) chi(Phi N) = chi(Phi M) f^c + f^d for one
/// mesh; records must carry q-characters.
bool verify_mesh_identity(const ARQuiver& ar, const YRing& ring,
                          const std::vector<HLRecord>& records, const Mesh& mesh);

}  // namespace hlc
