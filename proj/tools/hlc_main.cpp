#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hlcluster/closed_forms.hpp"
#include "hlcluster/emit.hpp"
#include "hlcluster/fixtures.hpp"
#include "hlcluster/level.hpp"

using namespace hlc;

namespace {

std::vector<long> parse_xi(const std::string& text, int rank) {
    std::vector<long> xi;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) xi.push_back(std::stol(tok));
    if (static_cast<int>(xi.size()) != rank)
        throw CLI::ValidationError("--xi needs exactly " + std::to_string(rank) +
                                   " comma-separated values");
    return xi;
}

int64_t bfs_budget(int64_t flag_value) {
    if (const char* env = std::getenv("HLC_BUDGET")) return std::stoll(env);
    return flag_value;
}

void print_cartan(const DynkinDiagram& d, long mmax) {
    QCartanTable t(d);
    long period = t.period();
    std::cout << "# " << d.name() << "  h=" << d.coxeter_number() << "  period 2h=" << period
              << "\n";
    std::cout << "# C~_ij(m) for 1 <= m <= " << mmax << "\n";
    for (int i = 1; i <= d.rank(); ++i) {
        for (int j = i; j <= d.rank(); ++j) {
            std::cout << "C~[" << i << "," << j << "]:";
            for (long m = 1; m <= mmax; ++m) std::cout << " " << t.entry(i, j, m);
            if (mmax > period) std::cout << "   (2h-periodic)";
            std::cout << "\n";
        }
    }
    std::cout << "# N_ij(k) for -" << mmax << " <= k <= " << mmax << "\n";
    for (int i = 1; i <= d.rank(); ++i) {
        for (int j = i; j <= d.rank(); ++j) {
            std::cout << "N[" << i << "," << j << "]:";
            for (long k = -mmax; k <= mmax; ++k) std::cout << " " << t.n_func(i, j, k);
            std::cout << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cluster-algebra tables for simply-laced quantum affine algebras"};
    app.require_subcommand(1);

    std::string family_str, xi_str, fixture_path;
    int rank = 0, level = 1;
    long mmax = 0;
    bool as_json = false, as_dot = false, with_qchar = false, verify = false, with_f = false;
    int64_t seed_cap = 30000;

    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("family", family_str, "Dynkin family: A, D or E")->required();
        cmd->add_option("rank", rank, "rank")->required();
    };
    auto add_xi = [&](CLI::App* cmd) {
        cmd->add_option("--xi", xi_str, "height function, comma list in vertex order")
            ->required();
    };

    auto* cartan = app.add_subcommand("cartan", "inverse quantum Cartan table and N values");
    add_type(cartan);
    cartan->add_option("--m", mmax, "largest spectral argument (default 2h)");

    auto* compat = app.add_subcommand("compat", "grid matrices B, L and the compatibility check");
    add_type(compat);
    add_xi(compat);
    compat->add_option("--level", level, "number of non-frozen rows (default 1)");
    compat->add_flag("--json", as_json, "emit JSON");

    auto* grid = app.add_subcommand("grid", "the grid quiver");
    add_type(grid);
    add_xi(grid);
    grid->add_option("--level", level, "number of non-frozen rows (default 1)");
    grid->add_flag("--dot", as_dot, "emit DOT");
    grid->add_flag("--json", as_json, "emit JSON");

    auto* arq = app.add_subcommand("arquiver", "the Auslander-Reiten quiver");
    add_type(arq);
    add_xi(arq);
    arq->add_flag("--dot", as_dot, "emit DOT");
    arq->add_flag("--json", as_json, "emit JSON");

    auto* hl = app.add_subcommand("hl", "highest l-weight monomial table");
    add_type(hl);
    add_xi(hl);
    hl->add_flag("--qchar", with_qchar, "include truncated q-characters");
    hl->add_flag("--with-f", with_f, "force F-polynomials (heavy for E8)");
    hl->add_flag("--verify", verify, "run mesh identities and the dual-path check");
    hl->add_flag("--json", as_json, "emit JSON");

    auto* cv = app.add_subcommand("cluster-vars", "cluster variables of the level-l grid seed");
    add_type(cv);
    add_xi(cv);
    cv->add_option("--level", level, "number of non-frozen rows (default 1)");
    cv->add_option("--budget", seed_cap, "seed cap for the enumeration (default 30000)");
    cv->add_option("--seed-cap", seed_cap, "alias for --budget");
    cv->add_flag("--json", as_json, "emit JSON");

    auto* vf = app.add_subcommand("verify-fixture", "recompute and diff a fixture file");
    vf->add_option("path", fixture_path, "fixture file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cartan->parsed()) {
            auto d = build_diagram(family_str.at(0), rank);
            print_cartan(d, mmax > 0 ? mmax : 2 * d.coxeter_number());
            return 0;
        }

        auto d = !fixture_path.empty() ? build_diagram('A', 1)
                                       : build_diagram(family_str.at(0), rank);

        if (compat->parsed() || grid->parsed()) {
            HeightFunction xi(d, parse_xi(xi_str, rank));
            GridQuiver g(xi, level);
            if (grid->parsed()) {
                if (as_json) {
                    QCartanTable qct(d);
                    std::cout << matrices_json(seed_matrices(g, qct)).dump(2) << "\n";
                } else {
                    std::cout << grid_dot(g);
                }
                return 0;
            }
            QCartanTable qct(d);
            auto s = seed_matrices(g, qct);
            auto rep = check_compatible(s);
            if (as_json) {
                std::cout << matrices_json(s).dump(2) << "\n";
            } else {
                std::cout << "# vertices:";
                for (auto [i, p] : s.order) std::cout << " (" << i << "," << p << ")";
                std::cout << "\nB =\n";
                for (int r = 0; r < s.B.rows; ++r) {
                    for (int c = 0; c < s.B.cols; ++c) std::cout << " " << s.B(r, c);
                    std::cout << "\n";
                }
                std::cout << "L =\n";
                for (int r = 0; r < s.L.rows; ++r) {
                    for (int c = 0; c < s.L.cols; ++c) std::cout << " " << s.L(r, c);
                    std::cout << "\n";
                }
                std::cout << "compatible: " << (rep.ok ? "yes" : "NO") << "  diag:";
                for (long x : rep.diag) std::cout << " " << x;
                std::cout << "\n";
            }
            return rep.ok ? 0 : 1;
        }

        if (arq->parsed()) {
            HeightFunction xi(d, parse_xi(xi_str, rank));
            ARQuiver ar(xi);
            if (as_json) std::cout << ar_json(ar).dump(2) << "\n";
            else std::cout << ar_dot(ar);
            return 0;
        }

        if (hl->parsed()) {
            HeightFunction xi(d, parse_xi(xi_str, rank));
            ARQuiver ar(xi);
            auto records = hl_table(ar, with_qchar, with_f ? std::optional<bool>(true)
                                                           : std::optional<bool>());
            if (verify) {
                YRing ring = YRing::window(xi, 1);
                auto qrecords = with_qchar ? records : hl_table(ar, true);
                for (const auto& mesh : ar.meshes())
                    if (!verify_mesh_identity(ar, ring, qrecords, mesh))
                        throw std::runtime_error("mesh identity failed");
                std::cout << "# verified: " << ar.meshes().size()
                          << " mesh identities, dual-path hw equality\n";
            }
            if (as_json) {
                std::cout << hl_json(ar, records).dump(2) << "\n";
            } else {
                for (const auto& rec : records)
                    std::cout << stacked_label(ar, rec.node) << "\t" << rec.hw.str() << "\n";
            }
            return 0;
        }

        if (cv->parsed()) {
            HeightFunction xi(d, parse_xi(xi_str, rank));
            GridQuiver g(xi, level);
            auto res = enumerate_bfs(Seed::grid_principal(g), bfs_budget(seed_cap));
            if (as_json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& v : res.variables) arr.push_back(cluster_var_json(v));
                nlohmann::json j;
                j["variables"] = std::move(arr);
                j["seeds_visited"] = res.seeds_visited;
                j["capped"] = res.capped;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "# distinct variables: " << res.variables.size()
                          << "  seeds: " << res.seeds_visited
                          << (res.capped ? "  (budget exceeded)" : "") << "\n";
                for (const auto& v : res.variables) {
                    std::cout << "denom:";
                    for (long x : v.denom) std::cout << " " << x;
                    std::cout << "\n";
                }
            }
            return res.capped ? 1 : 0;
        }

        if (vf->parsed()) {
            auto fixture = FixtureFile::load(fixture_path);
            auto diff = verify_fixture(fixture);
            if (diff.ok) {
                std::cout << "fixture ok: " << fixture.monomials.size() << " monomials\n";
                return 0;
            }
            for (const auto& m : diff.missing) std::cout << "missing:    " << m << "\n";
            for (const auto& m : diff.unexpected) std::cout << "unexpected: " << m << "\n";
            return 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
