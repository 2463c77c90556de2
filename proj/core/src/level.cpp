#include "hlcluster/level.hpp"

#include <stdexcept>

namespace hlc {

YMonomial hw_level_l(const GridQuiver& grid, const Seed& seed, const LaurentPoly& var) {
    const auto& xi = grid.xi();
    const int m = grid.num_vertices();
    const int level = grid.level();

    // route 1: the unique term with no principal-coefficient content
    const ExpVec* free_term = nullptr;
    for (const auto& [e, c] : var.terms()) {
        bool yfree = true;
        for (const auto& [v, ex] : e)
            if (v >= m) { yfree = false; break; }
        if (!yfree) continue;
        if (free_term) throw std::logic_error("hw_level_l: multiple coefficient-free terms");
        free_term = &e;
    }
    if (!free_term) throw std::logic_error("hw_level_l: no coefficient-free term");
    YMonomial hw;
    for (const auto& [v, ex] : *free_term) {
        auto gv = grid.vertices()[v];
        hw = hw * kr_mon(xi, gv.i, gv.p).pow(ex);
    }

    // route 2: z^g / F|_P with the tropical semifield on the frozen row
    auto data = seed.extract(var);
    std::vector<int> frozen;
    for (int v = 0; v < m; ++v)
        if (grid.frozen(v)) frozen.push_back(v);
    auto gen_table = std::make_shared<VarTable>();
    std::vector<int> gen_idx(m, -1);
    for (int v : frozen) {
        auto gv = grid.vertices()[v];
        gen_idx[v] = gen_table->add("f[" + std::to_string(gv.i) + "," + std::to_string(gv.p) + "]");
    }
    // images of the principal y's: neutral on interior rows, the boundary-row
    // exchange monomial one row above the frozen line
    std::vector<TropMonomial> images;
    for (int v = 0; v < var.vars()->size(); ++v) {
        TropMonomial t = TropMonomial::one(gen_table);
        if (v >= m) {
            int k = v - m;  // k-th mutable vertex
            int gvi = grid.mutable_indices()[k];
            auto gv = grid.vertices()[gvi];
            long row = (xi(gv.i) - gv.p) / 2;
            if (row == level - 1) {
                t.exps[gen_idx[grid.vertex_index({gv.i, gv.p - 2})]] -= 1;
                for (int j : grid.diagram().neighbors(gv.i))
                    if (xi.arrow(j, gv.i))
                        t.exps[gen_idx[grid.vertex_index({j, xi(j) - 2 * level})]] += 1;
            }
        }
        images.push_back(std::move(t));
    }
    std::vector<bool> zvars(var.vars()->size(), false);
    for (int v = 0; v < m; ++v) zvars[v] = true;
    LaurentPoly F = var.set_all_one(zvars);
    TropMonomial trop = tropical_eval(F, images);

    YMonomial hw2;
    for (int k = 0; k < seed.num_mutable(); ++k) {
        auto gv = grid.vertices()[grid.mutable_indices()[k]];
        if (data.g[k] != 0) hw2 = hw2 * kr_mon(xi, gv.i, gv.p).pow(data.g[k]);
    }
    for (int v : frozen) {
        long e = trop.exps[gen_idx[v]];
        if (e != 0) {
            auto gv = grid.vertices()[v];
            hw2 = hw2 * kr_mon(xi, gv.i, gv.p).pow(-e);
        }
    }
    if (hw != hw2) throw std::logic_error("hw_level_l: tropical route disagrees");
    if (!hw.dominant()) throw std::domain_error("hw_level_l: non-dominant result");
    return hw;
}

}  // namespace hlc
