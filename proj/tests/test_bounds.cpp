#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "trispace/bounds.hpp"
#include "trispace/graph.hpp"
#include "trispace/sample.hpp"
#include "trispace/trial.hpp"

using namespace trispace;

namespace {

/// Edges of g lying in no triangle (the X of the second-moment argument).
int no_triangle_edge_count(const Graph& g) {
    int count = 0;
    for (const auto& [u, v] : g.edges())
        count += and_popcount(g.adjacency_row(u), g.adjacency_row(v)) == 0;
    return count;
}

}  // namespace

TEST_CASE("phi fixtures and domain") {
    CHECK(phi(0.0) == doctest::Approx(0.0));
    CHECK(phi(-1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(phi(-1.01), std::invalid_argument);
}

TEST_CASE("chernoff fixtures") {
    // direct evaluation: exp(-100 / (2*(100 + 10/3))) = exp(-100/206.666...)
    CHECK(chernoff_upper(100, 10).value == doctest::Approx(std::exp(-100.0 / (200.0 + 20.0 / 3.0))));
    CHECK(chernoff_upper(100, 10).value == doctest::Approx(0.616393).epsilon(1e-5));

    // lambda = mu: phi(-1) = 1 so the phi form is e^(-mu)
    const BoundReport lo = chernoff_lower(7.0, 7.0);
    CHECK(lo.terms.at("phi_form") == doctest::Approx(std::exp(-7.0)));

    CHECK_THROWS_AS(chernoff_upper(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(chernoff_lower(5.0, 6.0), std::invalid_argument);
    CHECK_THROWS_AS(chernoff_lower(5.0, -1.0), std::invalid_argument);
}

TEST_CASE("chernoff lower phi form never exceeds the weak form") {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 200; ++rep) {
        const double mu = 0.5 + (rng() % 1000) / 10.0;
        const double lambda = mu * ((rng() % 1000) / 1000.0);
        const BoundReport lo = chernoff_lower(mu, lambda);
        CHECK(lo.terms.at("phi_form") <= lo.terms.at("weak_form") + 1e-12);
    }
}

TEST_CASE("chernoff upper is non-increasing in lambda and clamped") {
    double prev = 1.0;
    for (int i = 0; i <= 40; ++i) {
        const double v = chernoff_upper(25.0, i * 1.5).value;
        CHECK(v <= prev + 1e-15);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("azuma fixtures and domain") {
    CHECK(azuma_bound(10, 0.5, 0.0).value == doctest::Approx(1.0));
    CHECK(azuma_bound(100, 0.5, 10).value == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
    CHECK_THROWS_AS(azuma_bound(100, 0.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(azuma_bound(100, 0.5, 101.0), std::invalid_argument);  // t > 2mp
    CHECK_THROWS_AS(azuma_bound(100, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("azuma bound dominates the empirical binomial tail") {
    // X = B(100, 0.5) is a Lipschitz sum of 100 Bernoullis
    std::mt19937_64 rng(77);
    std::binomial_distribution<int> bin(100, 0.5);
    const int samples = 100000;
    int tail = 0;
    for (int s = 0; s < samples; ++s) tail += bin(rng) - 50 >= 10;
    const double freq = static_cast<double>(tail) / samples;
    CHECK(freq <= azuma_bound(100, 0.5, 10).value + 0.01);
}

TEST_CASE("mu_no_triangle fixtures") {
    CHECK(mu_no_triangle(5, 1.0) == doctest::Approx(0.0));
    CHECK(mu_no_triangle(4, 0.5) == doctest::Approx(6 * 0.5 * 0.75 * 0.75));  // 1.6875

    // landmark: n = 300, c = sqrt(3/2) parameterization
    const double p = 1.2247 * std::sqrt(std::log(300.0) / 300.0);
    CHECK(mu_no_triangle(300, p) == doctest::Approx(1.3647).epsilon(1e-3));
}

TEST_CASE("mu_no_triangle matches the Monte Carlo mean within 10 percent") {
    const double p = 1.2247 * std::sqrt(std::log(300.0) / 300.0);
    const double mu = mu_no_triangle(300, p);
    double total = 0;
    const int seeds = 500;
    for (int s = 0; s < seeds; ++s)
        total += no_triangle_edge_count(sample_gnp(300, p, 31400 + static_cast<std::uint64_t>(s)));
    const double observed = total / seeds;
    CHECK(std::abs(observed - mu) <= 0.1 * mu);
}

TEST_CASE("second moment terms") {
    SUBCASE("disjoint-pair term at n=6, p=0.5") {
        const BoundReport r = second_moment_terms(6, 0.5);
        CHECK(r.terms.at("disjoint_term") == doctest::Approx(0.25 * std::pow(0.75, 4)).epsilon(1e-12));
    }
    SUBCASE("p = 0 is vacuous") {
        const BoundReport r = second_moment_terms(10, 0.0);
        CHECK(r.terms.at("mu") == 0.0);
        CHECK(r.terms.at("disjoint_term") == 0.0);
        CHECK(r.terms.at("shared_term") == 0.0);
        CHECK(std::isinf(r.terms.at("var_ratio")));
    }
    SUBCASE("assembled ratio dominates the Monte Carlo variance ratio at n=50, p=0.2") {
        const BoundReport r = second_moment_terms(50, 0.2);
        const int samples = 2000;
        double sum = 0, sumsq = 0;
        for (int s = 0; s < samples; ++s) {
            const double x = no_triangle_edge_count(sample_gnp(50, 0.2, 600 + static_cast<std::uint64_t>(s)));
            sum += x;
            sumsq += x * x;
        }
        const double mean = sum / samples;
        const double var = sumsq / samples - mean * mean;
        CHECK(var / (mean * mean) <= r.terms.at("var_ratio"));
    }
}

TEST_CASE("goodman fixtures") {
    SUBCASE("F = E(K4) in n = 4") {
        const GoodmanCounts c = goodman(4, Graph::complete(4).edges());
        CHECK(c.t0 == 0);
        CHECK(c.t1 == 0);
        CHECK(c.t2 == 0);
        CHECK(c.t3 == 4);
        CHECK(c.identity_holds);  // 6*2 = 12 = 3*4
        CHECK(c.t1t2_bound_holds);
    }
    SUBCASE("F = C5 in n = 5") {
        const GoodmanCounts c = goodman(5, Graph::cycle(5).edges());
        CHECK(c.t0 == 0);
        CHECK(c.t1 == 5);
        CHECK(c.t2 == 5);
        CHECK(c.t3 == 0);
        CHECK(c.identity_holds);   // 5*3 = 15 = 5 + 10
        CHECK(c.t1t2_bound_holds); // 10 < 15.625
    }
    SUBCASE("empty F") {
        const GoodmanCounts c = goodman(7, {});
        CHECK(c.t0 == 35);
        CHECK(c.t1 + c.t2 + c.t3 == 0);
        CHECK(c.identity_holds);
    }
}

TEST_CASE("goodman identity holds exactly on random edge sets") {
    std::mt19937_64 rng(55);
    for (int n : {10, 20, 40, 60}) {
        for (int rep = 0; rep < 25; ++rep) {
            std::vector<VertexPair> f;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 4 == 0) f.emplace_back(u, v);
            const GoodmanCounts c = goodman(n, f);
            CHECK(c.identity_holds);
            CHECK(c.t1t2_bound_holds);
            CHECK(c.triple_total() == static_cast<long long>(n) * (n - 1) * (n - 2) / 6);
        }
    }
}

TEST_CASE("ml3_check") {
    SUBCASE("balanced complete bipartite F is never far from bipartite") {
        std::vector<VertexPair> f;
        for (int u = 0; u < 6; ++u)
            for (int v = 6; v < 12; ++v) f.emplace_back(u, v);
        const Ml3Report r = ml3_check(12, f, 0.5, 0.05);
        CHECK(r.min_cut_deficiency == 0);
        CHECK_FALSE(r.hypothesis_met);
    }
    SUBCASE("F = E(K12), eta = 0.2") {
        const Ml3Report r = ml3_check(12, Graph::complete(12).edges(), 0.1, 0.2);
        CHECK(r.size_ok);                      // 66 > (1-0.1)*144/4 = 32.4
        CHECK(r.min_cut_deficiency == 30);     // 66 - maxcut(K12) = 66 - 36
        CHECK(r.hypothesis_met);               // 30 > 0.2*144 = 28.8
        CHECK(r.counts.t3 == 220);             // C(12,3)
        CHECK(r.conclusion);                   // 220 > (1/12)(0.2-0.3)*1728 trivially
        CHECK(r.implication_consistent);
    }
    SUBCASE("empty F fails the hypothesis") {
        const Ml3Report r = ml3_check(10, {}, 0.2, 0.1);
        CHECK_FALSE(r.hypothesis_met);
    }
    SUBCASE("n beyond the cut bound needs a supplied deficiency") {
        CHECK_THROWS_AS(ml3_check(30, {}, 0.2, 0.1), std::invalid_argument);
        const Ml3Report r = ml3_check(30, Graph::complete(30).edges(), 0.2, 0.1, 210LL);
        CHECK(r.min_cut_deficiency == 210);
    }
}

TEST_CASE("ml3 chain implication is arithmetic truth on random instances") {
    std::mt19937_64 rng(123);
    int met = 0;
    for (int rep = 0; rep < 120; ++rep) {
        const int n = 8 + static_cast<int>(rng() % 7);  // up to 14
        const double density = 0.5 + (rng() % 50) / 100.0;
        std::vector<VertexPair> f;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((rng() % 100) / 100.0 < density) f.emplace_back(u, v);
        const double delta = (rng() % 30) / 100.0;
        const double eta = 0.05 + (rng() % 20) / 100.0;
        const Ml3Report r = ml3_check(n, f, delta, eta);
        CHECK(r.implication_consistent);
        met += r.hypothesis_met;
        if (r.hypothesis_met) {
            // the paper's route: each chain link then the conclusion
            CHECK(r.chain_t1t3);
            if (r.chain_t1_minus_3t3) CHECK(r.conclusion);
        }
    }
    CHECK(met > 0);  // the sample must actually exercise the met branch
}

TEST_CASE("janson bound") {
    SUBCASE("dominates the exact disjoint-triangle probability") {
        const double p = std::cbrt(0.1);  // p^3 = 0.1
        const BoundReport r = janson_triangle_bound(10, 30, p);
        CHECK(r.value >= std::pow(0.9, 10));
        CHECK(r.value <= 1.0);
    }
    SUBCASE("tends to 1 as p -> 0") {
        CHECK(janson_triangle_bound(100, 50, 1e-4).value == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("monotone: a larger delta-bar weakens the bound") {
        // delta_bar grows with n at fixed m, p
        double prev = 0.0;
        for (int n : {20, 40, 80, 160}) {
            const double v = janson_triangle_bound(50, n, 0.4).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
    SUBCASE("empirical triangle-free frequency of G ∩ B stays below the bound") {
        // B = K13 embedded in n = 40; tau(B) = 286 >= ceil(0.004 * 40^3)
        const Graph b = Graph::complete(13);
        const long long m = static_cast<long long>(triangles(b).count());
        CHECK(m == 286);
        const double p = 0.3;
        const BoundReport bound = janson_triangle_bound(m, 40, p);
        int free_count = 0;
        const int samples = 10000;
        for (int s = 0; s < samples; ++s) {
            const Graph gb = sample_gnp(13, p, 4200 + static_cast<std::uint64_t>(s));
            free_count += triangles(gb).count() == 0;
        }
        CHECK(static_cast<double>(free_count) / samples <= bound.value);
    }
}
