#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "hlcluster/grid.hpp"
#include "hlcluster/ratmat.hpp"

namespace hlc {

/// Vertex-indexed integer vector (index 0 = vertex 1): dimension vectors,
/// roots, socles; signed for g-, c-, d-vectors.
using DimVector = std::vector<long>;

DimVector dv_add(const DimVector& a, const DimVector& b);
DimVector dv_sub(const DimVector& a, const DimVector& b);
DimVector dv_neg(const DimVector& a);
DimVector dv_max0(const DimVector& a);  // componentwise max(a, 0)
bool dv_nonneg(const DimVector& a);
bool dv_positive_nonzero(const DimVector& a);  // >= 0 and != 0

/// Explicit representation of a Dynkin quiver: one rational matrix per
/// arrow, of shape dim(target) x dim(source).
struct QuiverRep {
    DimVector dims;
    std::map<std::pair<int, int>, RatMat> maps;  // keyed by oriented edge (from, to)
};

/// A module map between representations of the same quiver: one matrix per
/// vertex, shape dim(to)_v x dim(from)_v, commuting with the arrow maps.
struct RepMap {
    std::vector<RatMat> blocks;  // per vertex
};

struct Mesh {
    int tau_n;                 // node of tau(N)
    std::vector<int> middle;   // nodes of the middle summands (multiplicity one each)
    int n;                     // node of N
};

/// Kernel, image and cokernel data of the connecting map h of an exchange
/// pair, plus decompositions needed downstream.
struct ExchangeH {
    DimVector im, ker, coker;
    QuiverRep im_rep, ker_rep, coker_rep;
    std::vector<std::pair<int, int>> ker_summands;    // (node, multiplicity)
    std::vector<std::pair<int, int>> coker_summands;  // (node, multiplicity)
};

/// The Auslander-Reiten quiver of mod kQ for the Dynkin orientation induced
/// by a height function, extended by the n shifted projectives P(i)[1].
///
/// Nodes 0..nu-1 are the positive roots in adapted-word order; node
/// nu + (i-1) is the marker P(i)[1].  Representations are built by iterated
/// reflection functors along the word and certified indecomposable
/// (dim End = 1) at construction.
class ARQuiver {
public:
    explicit ARQuiver(const HeightFunction& xi);

    const HeightFunction& xi() const { return xi_; }
    const DynkinDiagram& diagram() const { return xi_.diagram(); }
    int rank() const { return diagram().rank(); }

    /// Oriented edges of Q, (from, to), in a fixed order.
    const std::vector<std::pair<int, int>>& q_arrows() const { return q_arrows_; }

    const std::vector<int>& adapted_word() const { return word_; }
    const std::vector<DimVector>& positive_roots() const { return roots_; }
    /// Source order of Q: all vertices sorted by (xi descending, index ascending).
    const std::vector<int>& source_order() const { return source_order_; }

    int nu() const { return nu_; }
    int num_nodes() const { return nu_ + rank(); }
    bool is_marker(int node) const { return node >= nu_; }
    int marker_vertex(int node) const { return node - nu_ + 1; }  // P(i)[1] -> i
    int marker_node(int i) const { return nu_ + i - 1; }

    /// Module dims; for markers the negative simple root -alpha_i.
    const DimVector& dims(int node) const { return node_dims_[node]; }
    const QuiverRep& rep(int node) const;
    int node_of_dims(const DimVector& d) const;  // -1 if absent

    const DimVector& g_vector(int node) const { return g_[node]; }
    const DimVector& socle(int node) const { return soc_[node]; }
    DimVector a_vector(int node) const;  // a(M)_i = sum_{j->i} dims_j - sum_{i->j} dims_j

    bool projective(int node) const { return proj_flag_[node]; }
    bool injective(int node) const { return inj_flag_[node]; }
    int projective_node(int i) const { return proj_node_[i - 1]; }
    int injective_node(int i) const { return inj_node_[i - 1]; }

    /// Coxeter element action (and inverse) on dimension vectors.
    DimVector coxeter(const DimVector& d) const;
    DimVector coxeter_inv(const DimVector& d) const;

    /// tau: non-projective module -> module, projective P(i) -> P(i)[1],
    /// marker P(i)[1] -> I(i).
    int tau(int node) const { return tau_[node]; }
    /// Inverse of tau.
    int tau_inv(int node) const { return tau_inv_[node]; }

    /// AR arrows between module nodes, from the word rule.
    const std::vector<std::pair<int, int>>& arrows() const { return ar_arrows_; }
    const std::vector<Mesh>& meshes() const { return meshes_; }

    long hom_dim(int x, int y) const;  // module nodes
    long ext_dim(int x, int y) const { return hom_dim(x, y) - euler(dims(x), dims(y)); }
    /// dim Ext^1 in the cluster category: ext(x,y) + ext(y,x) for modules;
    /// dim N_i for a marker P(i)[1] against module N.
    long ext_cluster(int x, int y) const;

    long euler(const DimVector& d, const DimVector& e) const;

    long hom_dim_reps(const QuiverRep& x, const QuiverRep& y) const;
    /// Basis of the intertwiner space Hom(x, y).
    std::vector<RepMap> hom_basis(const QuiverRep& x, const QuiverRep& y) const;

    DimVector socle_of(const QuiverRep& m) const;
    DimVector g_of_dims(const DimVector& d) const;

    /// Krull-Schmidt decomposition by multiplicity solve against the
    /// triangular hom matrix; the rep must be a representation of Q.
    std::vector<std::pair<int, int>> decompose(const QuiverRep& m) const;

    /// Connecting-map data for an exchange pair (L, N) with N a module node
    /// and either L = P(i)[1] or ext(N, L) = 1.  Throws if the pair is not
    /// oriented that way or the Hom space is not one-dimensional.
    ExchangeH exchange_pair_h(int l, int n) const;

    /// Middle term M of the non-split extension 0 -> L -> M -> N -> 0
    /// (module-module case, Ext^1(N, L) one-dimensional), decomposed.
    std::vector<std::pair<int, int>> extension_middle(int l, int n) const;

    /// tau-orbits of module nodes (each orbit runs from injective to
    /// projective end), in a deterministic order.
    std::vector<std::vector<int>> tau_orbits() const;

private:
    void build_word_and_roots();
    void build_reps();
    void build_arrows_and_meshes();
    QuiverRep simple_rep(const std::vector<std::pair<int, int>>& arrows, int vertex) const;

    HeightFunction xi_;
    std::vector<std::pair<int, int>> q_arrows_;
    std::vector<int> source_order_;
    std::vector<int> word_;
    std::vector<DimVector> roots_;
    int nu_ = 0;

    std::vector<DimVector> node_dims_;
    std::vector<QuiverRep> reps_;
    std::vector<DimVector> g_, soc_;
    std::vector<bool> proj_flag_, inj_flag_;
    std::vector<int> proj_node_, inj_node_;
    std::vector<int> tau_, tau_inv_;
    std::vector<std::pair<int, int>> ar_arrows_;
    std::vector<Mesh> meshes_;
    mutable std::mutex hom_mu_;
    mutable std::map<std::pair<int, int>, long> hom_cache_;
};

}  // namespace hlc
