#include "trispace/verify.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "trispace/bounds.hpp"
#include "trispace/edge_spaces.hpp"
#include "trispace/extremal.hpp"
#include "trispace/rng.hpp"
#include "trispace/sample.hpp"
#include "trispace/sweep.hpp"

namespace trispace {

namespace {

class Checker {
public:
    explicit Checker(std::ostream& log) : log_(log) {}

    void check(const std::string& name, bool ok) {
        log_ << (ok ? "ok   " : "FAIL ") << name << '\n';
        if (!ok) failed_ = true;
    }

    int result() const { return failed_ ? 1 : 0; }

private:
    std::ostream& log_;
    bool failed_ = false;
};

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> queue;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            const BitVec& row = g.adjacency_row(v);
            for (std::size_t w = row.first_set(); w != BitVec::npos; w = row.next_set(w + 1)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[static_cast<std::size_t>(v)];
                    queue.push_back(static_cast<int>(w));
                } else if (color[w] == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int verify_spaces(Checker& c) {
    std::mt19937_64 rng(0x5eed5ace5ULL);
    std::uniform_int_distribution<int> n_dist(10, 40);
    std::uniform_int_distribution<int> p_dist(1, 9);

    bool dims_ok = true, orth_ok = true, tsubc_ok = true, betti_ok = true, witness_ok = true;
    for (int i = 0; i < 200; ++i) {
        const int n = n_dist(rng);
        const double p = p_dist(rng) / 10.0;
        const Graph g = sample_gnp(n, p, rng());
        const int m = g.edge_count();
        const int comps = g.component_count();

        const SpaceBasis cyc = cycle_space(g);
        const SpaceBasis cut = cut_space(g);
        const SpaceBasis tri = triangle_space(g);
        const SpaceBasis tperp = triangle_perp(g);

        dims_ok &= static_cast<int>(cyc.dim()) == m - n + comps;
        dims_ok &= static_cast<int>(cut.dim()) == n - comps;
        dims_ok &= tri.dim() + tperp.dim() == static_cast<std::size_t>(m);

        for (const auto& a : cut.basis.rows())
            for (const auto& b : cyc.basis.rows()) orth_ok &= !odd_overlap(a, b);

        for (const auto& t : triangles(g).triples) {
            BitVec v(static_cast<std::size_t>(m));
            v.set(static_cast<std::size_t>(g.edge_index(t[0], t[1])));
            v.set(static_cast<std::size_t>(g.edge_index(t[0], t[2])));
            v.set(static_cast<std::size_t>(g.edge_index(t[1], t[2])));
            tsubc_ok &= cyc.basis.contains(v);
        }

        const int b1 = betti1(g);
        betti_ok &= b1 == static_cast<int>(tperp.dim()) - static_cast<int>(cut.dim());

        const auto witness = find_witness(g);
        if (b1 > 0) {
            witness_ok &= witness.has_value();
            if (witness) {
                witness_ok &= !cut.basis.contains(witness->bits);
                for (const auto& t : triangles(g).triples) {
                    BitVec v(static_cast<std::size_t>(m));
                    v.set(static_cast<std::size_t>(g.edge_index(t[0], t[1])));
                    v.set(static_cast<std::size_t>(g.edge_index(t[0], t[2])));
                    v.set(static_cast<std::size_t>(g.edge_index(t[1], t[2])));
                    witness_ok &= !odd_overlap(witness->bits, v);
                }
            }
        } else {
            witness_ok &= !witness.has_value();
        }
    }
    c.check("dim C = |E|-n+c, dim C-perp = n-c, dim T + dim T-perp = |E| (200 graphs)", dims_ok);
    c.check("every cut basis vector orthogonal to every cycle basis vector", orth_ok);
    c.check("triangle indicators lie in the cycle space", tsubc_ok);
    c.check("betti1 = dim C - dim T = dim T-perp - dim C-perp", betti_ok);
    c.check("find_witness sound and complete vs betti1", witness_ok);

    // Coset local search vs the exhaustive oracle.
    bool coset_ok = true;
    std::uniform_int_distribution<int> small_n(4, 12);
    for (int i = 0; i < 60; ++i) {
        const int n = small_n(rng);
        const Graph g = sample_gnp(n, 0.5, rng());
        EdgeVector f{&g, BitVec(static_cast<std::size_t>(g.edge_count()))};
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng() & 1) f.bits.set(static_cast<std::size_t>(e));
        const EdgeVector local = coset_minimize(g, f);
        const EdgeVector oracle = coset_min_oracle(g, f);
        coset_ok &= local.size() >= oracle.size();
        coset_ok &= local.size() <= f.size();
        for (int v = 0; v < n; ++v) {
            int df = 0;
            for (const int e : g.incident_edges(v)) df += local.bits.test(static_cast<std::size_t>(e));
            coset_ok &= 2 * df <= g.degree(v);
        }
    }
    c.check("coset_minimize >= oracle minimum, degree condition holds (60 cases)", coset_ok);
    return c.result();
}

int verify_bounds(Checker& c) {
    c.check("phi(0) = 0 and phi(-1) = 1", phi(0.0) == 0.0 && phi(-1.0) == 1.0);

    bool forms_ok = true, monotone_ok = true, clamp_ok = true;
    double prev_upper = 1.0;
    for (int i = 1; i <= 20; ++i) {
        const double mu = 40.0, lambda = i * 2.0;
        const BoundReport up = chernoff_upper(mu, lambda);
        monotone_ok &= up.value <= prev_upper + 1e-15;
        prev_upper = up.value;
        clamp_ok &= up.value >= 0 && up.value <= 1;
        if (lambda <= mu) {
            const BoundReport lo = chernoff_lower(mu, lambda);
            forms_ok &= lo.terms.at("phi_form") <= lo.terms.at("weak_form") + 1e-15;
            clamp_ok &= lo.value >= 0 && lo.value <= 1;
        }
    }
    c.check("chernoff upper bound non-increasing in lambda", monotone_ok);
    c.check("chernoff lower phi form <= lambda^2/(2mu) form", forms_ok);
    c.check("bound values clamp to [0,1]", clamp_ok);

    // Empirical binomial tails against the bounds (3 grid points, 2e4 samples).
    bool tails_ok = true;
    std::mt19937_64 rng(0xb0d5ULL);
    const struct {
        int n;
        double p, lambda;
    } grid[] = {{200, 0.3, 12.0}, {100, 0.5, 10.0}, {400, 0.1, 15.0}};
    for (const auto& pt : grid) {
        const double mu = pt.n * pt.p;
        std::binomial_distribution<int> bin(pt.n, pt.p);
        const int samples = 20000;
        int above = 0, below = 0;
        for (int s = 0; s < samples; ++s) {
            const int x = bin(rng);
            above += x >= mu + pt.lambda;
            below += x <= mu - pt.lambda;
        }
        tails_ok &= static_cast<double>(above) / samples <= chernoff_upper(mu, pt.lambda).value + 0.01;
        tails_ok &= static_cast<double>(below) / samples <= chernoff_lower(mu, pt.lambda).value + 0.01;
    }
    c.check("binomial tail frequencies within the chernoff bounds (+0.01)", tails_ok);

    bool goodman_ok = true;
    for (int n : {10, 20, 40, 60}) {
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<VertexPair> f;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 3 == 0) f.emplace_back(u, v);
            const GoodmanCounts gc = goodman(n, f);
            goodman_ok &= gc.identity_holds && gc.t1t2_bound_holds;
            goodman_ok &= gc.triple_total() ==
                          static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
        }
    }
    c.check("goodman identity |F|(n-2) = t1+2t2+3t3 and t1+t2 < n^3/8", goodman_ok);

    bool janson_ok = true;
    for (long long m : {1LL, 5LL, 20LL, 100LL}) {
        const BoundReport b = janson_triangle_bound(m, 60, 0.4642);
        janson_ok &= b.value >= 0 && b.value <= 1;
    }
    const double p_fix = std::cbrt(0.1);
    const BoundReport fix = janson_triangle_bound(10, 30, p_fix);
    janson_ok &= fix.value >= std::pow(1.0 - 0.1, 10) - 1e-12;
    c.check("janson bound dominates the exact disjoint-triangle probability", janson_ok);
    return c.result();
}

int verify_oracles(Checker& c) {
    bool mantel_ok = true;
    for (int n = 4; n <= 8; ++n)
        mantel_ok &= max_triangle_free(Graph::complete(n)).size == n * n / 4;
    c.check("max_triangle_free(K_n) matches the n^2/4 bound, n <= 8", mantel_ok);

    std::mt19937_64 rng(0x0feedULL);
    bool sum_ok = true, witness_ok = true, duality_ok = true, bipart_ok = true;
    for (int i = 0; i < 100; ++i) {
        const int n = 5 + static_cast<int>(rng() % 4);
        Graph g = sample_gnp(n, 0.55, rng());
        if (g.edge_count() > 40) continue;
        const HittingResult hit = min_triangle_hitting(g);
        const TriangleFreeResult tf = max_triangle_free(g);
        sum_ok &= tf.size + hit.size == g.edge_count();

        std::vector<VertexPair> kept;
        for (int e : tf.edges) kept.push_back(g.edge(e));
        witness_ok &= triangles(Graph::from_edges(n, kept)).count() == 0;

        duality_ok &= greedy_triangle_matching(g) <= hit.size;
        const Certificate cert = fractional_certificate(g, 2.0);
        duality_ok &= cert.feasible;
        if (cert.feasible) duality_ok &= cert.total <= hit.size + 1e-9;

        const BipartizationResult bip = min_bipartization(n, g.edges());
        bipart_ok &= (bip.deleted == 0) == is_bipartite(g);
    }
    c.check("max_triangle_free + min_triangle_hitting = |E| (100 graphs)", sum_ok);
    c.check("max_triangle_free witness is triangle-free", witness_ok);
    c.check("greedy matching <= certificate-compatible hitting number", duality_ok);
    c.check("min_bipartization = 0 iff bipartite", bipart_ok);
    return c.result();
}

int verify_sweep_smoke(Checker& c) {
    SweepConfig cfg;
    cfg.n_list = {30, 40};
    cfg.c_list = {1.0, 1.5};
    cfg.trials = 5;
    cfg.seed = 20260810;

    const SweepResult a = run_sweep(cfg, 2);
    const SweepResult b = run_sweep(cfg, 4);
    std::ostringstream ra, rb, sa, sb;
    write_records_jsonl(ra, a.records);
    write_records_jsonl(rb, b.records);
    write_summary_csv(sa, a.cells);
    write_summary_csv(sb, b.cells);
    c.check("sweep records byte-identical across runs and worker counts", ra.str() == rb.str());
    c.check("sweep summary byte-identical across runs and worker counts", sa.str() == sb.str());

    bool consistent = true;
    for (const auto& r : a.records) {
        consistent &= r.betti1 == r.dim_cycle - r.dim_triangle && r.betti1 >= 0;
        const Graph g = sample_gnp(r.n, r.p, r.seed);
        consistent &= every_edge_in_triangle(g) == r.q;
        consistent &= g.edge_count() == r.edges;
    }
    c.check("records consistent: betti1 = dim C - dim T, Q recomputation matches", consistent);
    return c.result();
}

}  // namespace

int run_verify_suite(const std::string& name, std::ostream& log) {
    Checker c(log);
    if (name == "spaces") return verify_spaces(c);
    if (name == "bounds") return verify_bounds(c);
    if (name == "oracles") return verify_oracles(c);
    if (name == "sweep-smoke") return verify_sweep_smoke(c);
    log << "unknown suite '" << name << "' (choose from: spaces, bounds, oracles, sweep-smoke)\n";
    return 2;
}

}  // namespace trispace
