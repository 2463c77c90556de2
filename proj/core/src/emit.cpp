#include "hlcluster/emit.hpp"

#include <sstream>

namespace hlc {

std::string grid_dot(const GridQuiver& grid) {
    std::ostringstream os;
    os << "digraph grid {\n  rankdir=BT;\n";
    for (int v = 0; v < grid.num_vertices(); ++v) {
        auto [i, p] = grid.vertices()[v];
        os << "  v" << v << " [label=\"(" << i << "," << p << ")\""
           << (grid.frozen(v) ? ", shape=box" : ", shape=ellipse") << "];\n";
    }
    for (auto [a, b] : grid.arrows()) os << "  v" << a << " -> v" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string stacked_label(const ARQuiver& ar, int node) {
    if (ar.is_marker(node)) return std::to_string(ar.marker_vertex(node)) + "[1]";
    // socle series, printed top layer first, as in the usual module diagrams
    const int n = ar.rank();
    QuiverRep cur = ar.rep(node);
    std::vector<DimVector> layers;
    while (true) {
        bool empty = true;
        for (long x : cur.dims) empty = empty && x == 0;
        if (empty) break;
        // joint-kernel basis at each vertex
        std::vector<RatMat> kb(n), section(n), proj(n);
        DimVector soc(n, 0);
        for (int v = 1; v <= n; ++v) {
            int rows = 0;
            for (auto [a, b] : ar.q_arrows())
                if (a == v) rows += static_cast<int>(cur.dims[b - 1]);
            RatMat stacked(rows, static_cast<int>(cur.dims[v - 1]));
            int r0 = 0;
            for (auto [a, b] : ar.q_arrows()) {
                if (a != v) continue;
                const RatMat& f = cur.maps.at({a, b});
                for (int r = 0; r < f.rows(); ++r)
                    for (int c = 0; c < f.cols(); ++c) stacked(r0 + r, c) = f(r, c);
                r0 += f.rows();
            }
            kb[v - 1] = stacked.kernel_basis();
            soc[v - 1] = kb[v - 1].cols();
        }
        layers.push_back(soc);
        // quotient by the socle
        QuiverRep next;
        next.dims.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            int dim = static_cast<int>(cur.dims[v]);
            int k = kb[v].cols();
            next.dims[v] = dim - k;
            RatMat full = kb[v];
            RatMat sec(dim, dim - k);
            int added = 0;
            for (int e = 0; e < dim && added < dim - k; ++e) {
                RatMat cand(dim, 1);
                cand(e, 0) = 1;
                RatMat trial = RatMat::hstack(full, cand);
                if (trial.rank() == full.cols() + 1) {
                    for (int r = 0; r < dim; ++r) sec(r, added) = cand(r, 0);
                    full = trial;
                    ++added;
                }
            }
            section[v] = sec;
            RatMat inv = full.cols() > 0 ? full.inverse() : RatMat(0, 0);
            RatMat q(dim - k, dim);
            for (int r = 0; r < dim - k; ++r)
                for (int c = 0; c < dim; ++c) q(r, c) = inv(k + r, c);
            proj[v] = q;
        }
        for (auto [u, w] : ar.q_arrows())
            next.maps[{u, w}] = proj[w - 1] * cur.maps.at({u, w}) * section[u - 1];
        cur = std::move(next);
    }
    std::ostringstream os;
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        if (it != layers.rbegin()) os << "/";
        for (int v = 0; v < n; ++v)
            for (long c = 0; c < (*it)[v]; ++c) os << (v + 1);
    }
    return os.str();
}

std::string ar_dot(const ARQuiver& ar) {
    std::ostringstream os;
    os << "digraph ar {\n  rankdir=LR;\n";
    for (int node = 0; node < ar.num_nodes(); ++node) {
        os << "  n" << node << " [label=\"" << stacked_label(ar, node) << "\""
           << (ar.is_marker(node) ? ", shape=box" : "") << "];\n";
    }
    for (auto [a, b] : ar.arrows()) os << "  n" << a << " -> n" << b << ";\n";
    // arrows through the shifted projectives, carried over by tau from the
    // arrows at the injectives
    for (int i = 1; i <= ar.rank(); ++i) {
        int marker = ar.marker_node(i);
        int inj = ar.injective_node(i);
        for (auto [a, b] : ar.arrows()) {
            if (a == inj) os << "  n" << marker << " -> n" << ar.tau_inv(b) << ";\n";
            if (b == inj && !ar.injective(a)) os << "  n" << ar.tau_inv(a) << " -> n" << marker << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

namespace {

nlohmann::json dv_json(const DimVector& d) { return nlohmann::json(d); }

nlohmann::json mat_json(const IntMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

nlohmann::json matrices_json(const SeedMatrices& s) {
    nlohmann::json j;
    nlohmann::json order = nlohmann::json::array();
    for (auto [i, p] : s.order) order.push_back({i, p});
    j["vertices"] = std::move(order);
    j["mutable_rows"] = s.mutable_rows;
    j["B"] = mat_json(s.B);
    j["L"] = mat_json(s.L);
    auto rep = check_compatible(s);
    j["compatible"] = rep.ok;
    j["diagonal"] = rep.diag;
    return j;
}

nlohmann::json ar_json(const ARQuiver& ar) {
    nlohmann::json nodes = nlohmann::json::array();
    for (int node = 0; node < ar.num_nodes(); ++node) {
        nlohmann::json n;
        n["id"] = node;
        n["label"] = stacked_label(ar, node);
        n["root"] = dv_json(ar.dims(node));
        n["g"] = dv_json(ar.g_vector(node));
        n["soc"] = dv_json(ar.socle(node));
        n["projective"] = !ar.is_marker(node) && ar.projective(node);
        n["injective"] = !ar.is_marker(node) && ar.injective(node);
        n["shifted_projective"] = ar.is_marker(node);
        n["tau"] = ar.tau(node);
        nodes.push_back(std::move(n));
    }
    nlohmann::json j;
    j["nodes"] = std::move(nodes);
    nlohmann::json arrows = nlohmann::json::array();
    for (auto [a, b] : ar.arrows()) arrows.push_back({a, b});
    j["arrows"] = std::move(arrows);
    return j;
}

nlohmann::json hl_json(const ARQuiver& ar, const std::vector<HLRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : records) {
        nlohmann::json r;
        r["node"] = stacked_label(ar, rec.node);
        r["dims"] = dv_json(rec.dims);
        r["g"] = dv_json(rec.g);
        r["soc"] = dv_json(rec.soc);
        r["hw"] = rec.hw.str();
        if (rec.F) r["F"] = rec.F->str();
        if (rec.qchar) r["qchar"] = rec.qchar->str();
        arr.push_back(std::move(r));
    }
    return arr;
}

nlohmann::json cluster_var_json(const ClusterVarData& data) {
    nlohmann::json j;
    j["denom"] = dv_json(data.denom);
    j["g"] = dv_json(data.g);
    j["F"] = data.F.str();
    return j;
}

}  // namespace hlc
