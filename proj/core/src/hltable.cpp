#include "hlcluster/hltable.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlc {

YMonomial hw_closed(const ARQuiver& ar, int node) {
    const auto& xi = ar.xi();
    YMonomial m;
    const DimVector& g = ar.g_vector(node);
    const DimVector& soc = ar.socle(node);
    for (int i = 1; i <= ar.rank(); ++i) {
        if (g[i - 1] != 0) m = m * z_mon(xi, i).pow(g[i - 1]);
        if (soc[i - 1] != 0) m = m * f_mon(xi, i).pow(soc[i - 1]);
    }
    if (!m.dominant())
        throw std::logic_error("hw_closed produced a non-dominant monomial at node " +
                               std::to_string(node));
    return m;
}

CDVectors mesh_cd(const ARQuiver& ar, const Mesh& mesh) {
    CDVectors out;
    DimVector soc_m(ar.rank(), 0);
    for (int e : mesh.middle) soc_m = dv_add(soc_m, ar.socle(e));
    out.c = dv_max0(dv_sub(ar.socle(mesh.n), soc_m));
    out.d = dv_add(dv_add(ar.socle(mesh.tau_n), ar.socle(mesh.n)), ar.g_vector(mesh.n));
    if (!dv_nonneg(out.d)) throw std::logic_error("mesh d-vector has a negative component");
    return out;
}

ExchangeCD exchange_cd(const ARQuiver& ar, int l, int n) {
    ExchangeCD out;
    ExchangeH h = ar.exchange_pair_h(l, n);
    out.alpha = h.im;
    out.middle = ar.extension_middle(l, n);

    // soc(N + tau Ker(h)); tau of a projective summand is a marker with
    // zero socle
    DimVector soc_nk = ar.socle(n);
    for (auto [node, mult] : h.ker_summands) {
        const DimVector& s = ar.socle(ar.tau(node));
        for (int t = 0; t < ar.rank(); ++t) soc_nk[t] += mult * s[t];
    }
    DimVector soc_m(ar.rank(), 0);
    for (auto [node, mult] : out.middle)
        for (int t = 0; t < ar.rank(); ++t) soc_m[t] += mult * ar.socle(node)[t];
    out.c = dv_max0(dv_sub(soc_nk, soc_m));

    // d = soc(L) + soc(N) + g(Im h) - soc(M'), M' = tau Ker(h) + Coker(h)
    DimVector d = dv_add(ar.socle(l), ar.socle(n));
    d = dv_add(d, ar.g_of_dims(h.im));
    DimVector soc_mp(ar.rank(), 0);
    for (auto [node, mult] : h.ker_summands) {
        int shifted = ar.tau(node);
        out.mprime.emplace_back(shifted, mult);
        for (int t = 0; t < ar.rank(); ++t) soc_mp[t] += mult * ar.socle(shifted)[t];
    }
    if (dv_positive_nonzero(h.coker)) {
        DimVector cs = ar.socle_of(h.coker_rep);
        soc_mp = dv_add(soc_mp, cs);
        for (auto [node, mult] : h.coker_summands) out.mprime.emplace_back(node, mult);
    }
    out.d = dv_sub(d, soc_mp);
    if (!dv_nonneg(out.c) || !dv_nonneg(out.d))
        throw std::logic_error("exchange c/d vector has a negative component");

    // hw(Phi L) hw(Phi N) = hw(Phi M) prod f^c
    YMonomial lhs = hw_closed(ar, l) * hw_closed(ar, n);
    YMonomial rhs;
    for (auto [node, mult] : out.middle) rhs = rhs * hw_closed(ar, node).pow(mult);
    for (int i = 1; i <= ar.rank(); ++i)
        if (out.c[i - 1] != 0) rhs = rhs * f_mon(ar.xi(), i).pow(out.c[i - 1]);
    out.hw_identity_ok = lhs == rhs;
    return out;
}

std::vector<HLRecord> hl_table(const ARQuiver& ar, bool with_qchar,
                               std::optional<bool> with_F) {
    const int total = ar.num_nodes();
    const auto& xi = ar.xi();

    // mesh fixpoint, seeded at the markers and the injectives
    std::vector<std::optional<YMonomial>> hw(total);
    for (int i = 1; i <= ar.rank(); ++i) {
        hw[ar.marker_node(i)] = YMonomial::var(i, xi(i));
        hw[ar.injective_node(i)] = YMonomial::var(i, xi(i) - 2);
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& mesh : ar.meshes()) {
            if (hw[mesh.tau_n] || !hw[mesh.n]) continue;
            bool ready = std::all_of(mesh.middle.begin(), mesh.middle.end(),
                                     [&](int e) { return bool(hw[e]); });
            if (!ready) continue;
            auto cd = mesh_cd(ar, mesh);
            YMonomial m;
            for (int e : mesh.middle) m = m * *hw[e];
            for (int i = 1; i <= ar.rank(); ++i)
                if (cd.c[i - 1] != 0) m = m * f_mon(xi, i).pow(cd.c[i - 1]);
            m = m / *hw[mesh.n];
            hw[mesh.tau_n] = m;
            progress = true;
        }
    }
    for (int node = 0; node < total; ++node) {
        if (!hw[node]) throw std::logic_error("mesh recursion stalled before covering all nodes");
        if (*hw[node] != hw_closed(ar, node))
            throw std::logic_error("mesh recursion disagrees with the closed form at node " +
                                   std::to_string(node));
        if (!hw[node]->dominant()) throw std::logic_error("non-dominant highest weight");
    }

    bool want_F = with_F.value_or(
        !(ar.diagram().family() == Family::E && ar.rank() == 8));
    if (with_qchar) want_F = true;

    std::vector<HLRecord> records(total);
    for (int node = 0; node < total; ++node) {
        HLRecord rec;
        rec.node = node;
        rec.dims = ar.dims(node);
        rec.g = ar.g_vector(node);
        rec.soc = ar.socle(node);
        rec.hw = *hw[node];
        records[node] = std::move(rec);
    }
    if (want_F) {
        auto sweep = source_sweep(ar);
        for (auto& [node, data] : sweep) records[node].F = data.F;
    }

    if (with_qchar) {
        YRing ring = YRing::window(xi, 1);
        for (auto& rec : records) rec.qchar = trunc_qchar(ar, ring, rec);
    }
    return records;
}

LaurentPoly trunc_qchar(const ARQuiver& ar, const YRing& ring, const HLRecord& rec) {
    if (!rec.F) throw std::invalid_argument("trunc_qchar: record has no F-polynomial");
    // substitute x -> 1 (already done in rec.F), y_j -> A^{-1}_{j, xi(j)-1}
    const auto& vt = rec.F->vars();
    std::vector<LaurentPoly> images;
    images.reserve(vt->size());
    for (int v = 0; v < vt->size(); ++v) {
        const std::string& name = vt->name(v);
        if (name[0] == 'y') {
            int j = std::stoi(name.substr(1));
            images.push_back(ring.poly(ainv_mon(ar.diagram(), j, ar.xi()(j) - 1)));
        } else {
            images.push_back(LaurentPoly::constant(ring.vars(), 1));
        }
    }
    return ring.poly(rec.hw) * rec.F->substitute(images);
}

bool verify_mesh_identity(const ARQuiver& ar, const YRing& ring,
                          const std::vector<HLRecord>& records, const Mesh& mesh) {
    auto qchar = [&](int node) -> const LaurentPoly& {
        if (!records[node].qchar) throw std::invalid_argument("records lack q-characters");
        return *records[node].qchar;
    };
    auto cd = mesh_cd(ar, mesh);
    LaurentPoly lhs = qchar(mesh.tau_n) * qchar(mesh.n);
    LaurentPoly mid = LaurentPoly::constant(ring.vars(), 1);
    for (int e : mesh.middle) mid = mid * qchar(e);
    YMonomial fc, fd;
    for (int i = 1; i <= ar.rank(); ++i) {
        fc = fc * f_mon(ar.xi(), i).pow(cd.c[i - 1]);
        fd = fd * f_mon(ar.xi(), i).pow(cd.d[i - 1]);
    }
    LaurentPoly rhs = mid * ring.poly(fc) + ring.poly(fd);
    return lhs == rhs;
}

}  // namespace hlc
