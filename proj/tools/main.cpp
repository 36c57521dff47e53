// trispace: GF(2) edge-space algebra of graphs and seeded threshold
// experiments. Subcommands: sample, betti, sweep, spotcheck, verify, oracle.
//
// Exit codes: 0 success, 1 suite failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trispace/edge_spaces.hpp"
#include "trispace/extremal.hpp"
#include "trispace/sample.hpp"
#include "trispace/spotcheck.hpp"
#include "trispace/sweep.hpp"
#include "trispace/trial.hpp"
#include "trispace/verify.hpp"

namespace {

trispace::Graph load_graph(const std::string& path) {
    if (path == "-") return trispace::read_graph(std::cin);
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open graph file: " + path);
    return trispace::read_graph(is);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GF(2) edge-space algebra of graphs: cycle/cut/triangle spaces, "
                 "clique-complex betti numbers, and seeded threshold experiments"};
    app.require_subcommand(1);

    // --- sample ---
    auto* sample = app.add_subcommand("sample", "sample G(n,p) and emit a graph file");
    int s_n = 100;
    double s_p = -1.0, s_c = -1.0;
    std::uint64_t s_seed = 1;
    std::string s_out = "-";
    sample->add_option("-n,--vertices", s_n, "vertex count")->required();
    sample->add_option("-p,--prob", s_p, "edge probability");
    sample->add_option("-c,--threshold-c", s_c, "use p = c sqrt(ln n / n)");
    sample->add_option("-s,--seed", s_seed, "RNG seed");
    sample->add_option("-o,--out", s_out, "output path ('-' = stdout)");

    // --- betti ---
    auto* betti = app.add_subcommand("betti", "read a graph file; print dim C, dim T, betti1, Q");
    std::string b_in = "-";
    bool b_witness = false;
    betti->add_option("graph", b_in, "graph file ('-' = stdin)");
    betti->add_flag("--witness", b_witness, "also print a T-perp \\ C-perp witness when betti1 > 0");

    // --- sweep ---
    auto* sweep = app.add_subcommand("sweep", "run a seeded Monte Carlo sweep from a config file");
    std::string sw_config;
    int sw_workers = 8;
    sweep->add_option("config", sw_config, "key=value config file")->required();
    sweep->add_option("-w,--workers", sw_workers, "worker threads")->capture_default_str();

    // --- spotcheck ---
    auto* spot = app.add_subcommand("spotcheck", "concentration spot-checks on a sampled graph");
    int sp_n = 300;
    double sp_p = -1.0, sp_c = -1.0, sp_tol = 0.25;
    int sp_samples = 50;
    std::uint64_t sp_seed = 1;
    spot->add_option("-n,--vertices", sp_n, "vertex count");
    spot->add_option("-p,--prob", sp_p, "edge probability");
    spot->add_option("-c,--threshold-c", sp_c, "use p = c sqrt(ln n / n)");
    spot->add_option("-s,--seed", sp_seed, "RNG seed");
    spot->add_option("--samples", sp_samples, "random set pairs per check")->capture_default_str();
    spot->add_option("--tol", sp_tol, "report tolerance")->capture_default_str();

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    std::string v_suite;
    verify->add_option("suite", v_suite, "one of: spaces, bounds, oracles, sweep-smoke")->required();

    // --- oracle ---
    auto* oracle = app.add_subcommand("oracle", "exact extremal oracles on a graph file");
    std::string o_in = "-";
    double o_delta = 0.0;
    oracle->add_option("graph", o_in, "graph file ('-' = stdin)");
    oracle->add_option("--delta", o_delta, "good-triangle degree threshold (default 1.9 n q^2 with q = density)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sample) {
            if ((s_p < 0) == (s_c < 0))
                throw std::runtime_error("sample: give exactly one of --prob or --threshold-c");
            const double p = s_p >= 0 ? s_p : trispace::threshold_p(s_n, s_c);
            const trispace::Graph g = trispace::sample_gnp(s_n, p, s_seed);
            if (s_out == "-") {
                trispace::write_graph(std::cout, g);
            } else {
                std::ofstream os(s_out);
                if (!os) throw std::runtime_error("cannot write " + s_out);
                trispace::write_graph(os, g);
            }
            return 0;
        }

        if (*betti) {
            const trispace::Graph g = load_graph(b_in);
            const trispace::TrialRecord r = trispace::measure_graph(g, 0.0, 0.0, 0);
            std::cout << "n " << g.vertex_count() << "\nedges " << r.edges << "\ntriangles "
                      << r.triangles << "\ndim_cycle " << r.dim_cycle << "\ndim_triangle "
                      << r.dim_triangle << "\nbetti1 " << r.betti1 << "\nq "
                      << (r.q ? "true" : "false") << "\nms " << r.ms << "\n";
            if (b_witness) {
                if (const auto w = trispace::find_witness(g))
                    std::cout << "witness " << w->to_text() << "\n";
                else
                    std::cout << "witness none\n";
            }
            return 0;
        }

        if (*sweep) {
            std::ifstream is(sw_config);
            if (!is) throw std::runtime_error("cannot open config file: " + sw_config);
            const trispace::SweepConfig cfg = trispace::parse_sweep_config(is);
            std::size_t done = 0;
            const std::size_t total = cfg.n_list.size() * cfg.c_list.size() *
                                      static_cast<std::size_t>(cfg.trials);
            const trispace::SweepResult result = trispace::run_sweep_to_dir(
                cfg, sw_workers, [&](const trispace::TrialRecord& rec) {
                    ++done;
                    if (done % 50 == 0 || done == total)
                        std::cerr << "trial " << done << "/" << total << " (n=" << rec.n
                                  << ", c=" << rec.c << ", " << rec.ms << " ms)\n";
                });
            trispace::write_summary_csv(std::cout, result.cells);
            return 0;
        }

        if (*spot) {
            if ((sp_p < 0) == (sp_c < 0))
                throw std::runtime_error("spotcheck: give exactly one of --prob or --threshold-c");
            const double p = sp_p >= 0 ? sp_p : trispace::threshold_p(sp_n, sp_c);
            const trispace::Graph g = trispace::sample_gnp(sp_n, p, sp_seed);
            const trispace::SpotcheckReport rep =
                trispace::concentration_spotcheck(g, p, sp_samples, sp_seed ^ 0x9e3779b9ULL, sp_tol);
            std::cout << "n " << rep.n << "\np " << rep.p << "\ndegree_dev " << rep.degree_dev
                      << "\ncodegree_excess " << rep.codegree_excess << "\nnabla_dev "
                      << rep.nabla_dev << " (samples " << rep.nabla_samples << ")\nzeta_dev "
                      << rep.zeta_dev << " (samples " << rep.zeta_samples << ")\nworst "
                      << rep.worst() << "\nwithin_tol " << (rep.within(rep.tol) ? "true" : "false")
                      << "\n";
            for (const auto& note : rep.notes) std::cout << "note " << note << "\n";
            return 0;
        }

        if (*verify) {
            const int rc = trispace::run_verify_suite(v_suite, std::cout);
            if (rc == 0) std::cout << "suite '" << v_suite << "' passed\n";
            return rc;
        }

        if (*oracle) {
            const trispace::Graph g = load_graph(o_in);
            if (g.edge_count() > 40)
                throw std::runtime_error("oracle: graph exceeds the 40-edge exact budget");
            const auto tf = trispace::max_triangle_free(g);
            const auto hit = trispace::min_triangle_hitting(g);
            const auto bip = trispace::min_bipartization(
                g, trispace::edge_vector_from_pairs(g, g.edges()).bits);
            double delta = o_delta;
            if (!(delta > 0)) {
                const double nn = g.vertex_count();
                const double q = nn >= 2 ? g.edge_count() / (nn * (nn - 1) / 2.0) : 0.0;
                delta = std::max(1.0, 1.9 * nn * q * q);
            }
            const auto cert = trispace::fractional_certificate(g, delta);
            std::cout << "n " << g.vertex_count() << "\nedges " << g.edge_count() << "\ntriangles "
                      << trispace::triangles(g).count() << "\nmax_triangle_free " << tf.size
                      << "\nmin_triangle_hitting " << hit.size << "\nmin_bipartization "
                      << bip.deleted << "\ngreedy_matching " << trispace::greedy_triangle_matching(g)
                      << "\ncertificate_delta " << cert.delta << "\ncertificate_weight " << cert.total
                      << "\ncertificate_feasible " << (cert.feasible ? "true" : "false") << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
