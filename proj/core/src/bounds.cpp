#include "trispace/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trispace/extremal.hpp"

namespace trispace {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double choose2(double n) { return n * (n - 1) / 2.0; }

}  // namespace

double phi(double x) {
    if (x < -1.0) throw std::invalid_argument("phi: domain is x >= -1");
    if (x == -1.0) return 1.0;  // (1+x)log(1+x) -> 0
    return (1.0 + x) * std::log1p(x) - x;
}

BoundReport chernoff_upper(double mu, double lambda) {
    if (!(mu > 0)) throw std::invalid_argument("chernoff_upper: mu must be > 0");
    if (!(lambda >= 0)) throw std::invalid_argument("chernoff_upper: lambda must be >= 0");
    const double exponent = lambda * lambda / (2.0 * (mu + lambda / 3.0));
    BoundReport r;
    r.terms["mu"] = mu;
    r.terms["lambda"] = lambda;
    r.terms["exponent"] = exponent;
    r.value = clamp01(std::exp(-exponent));
    return r;
}

BoundReport chernoff_lower(double mu, double lambda) {
    if (!(mu > 0)) throw std::invalid_argument("chernoff_lower: mu must be > 0");
    if (!(lambda >= 0)) throw std::invalid_argument("chernoff_lower: lambda must be >= 0");
    if (lambda > mu) throw std::invalid_argument("chernoff_lower: requires lambda <= mu");
    const double phi_form = std::exp(-mu * phi(-lambda / mu));
    const double weak_form = std::exp(-lambda * lambda / (2.0 * mu));
    BoundReport r;
    r.terms["mu"] = mu;
    r.terms["lambda"] = lambda;
    r.terms["phi_value"] = phi(-lambda / mu);
    r.terms["phi_form"] = phi_form;
    r.terms["weak_form"] = weak_form;
    r.value = clamp01(phi_form);
    return r;
}

BoundReport azuma_bound(double m, double p, double t) {
    if (!(m >= 1)) throw std::invalid_argument("azuma_bound: m must be >= 1");
    if (!(p > 0 && p <= 1)) throw std::invalid_argument("azuma_bound: p must lie in (0,1]");
    if (!(t >= 0 && t <= 2 * m * p))
        throw std::invalid_argument("azuma_bound: t must lie in [0, 2mp]");
    BoundReport r;
    r.terms["m"] = m;
    r.terms["p"] = p;
    r.terms["t"] = t;
    r.value = clamp01(std::exp(-t * t / (4.0 * m * p)));
    return r;
}

double mu_no_triangle(int n, double p) {
    if (n < 2) throw std::invalid_argument("mu_no_triangle: n must be >= 2");
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("mu_no_triangle: p must lie in [0,1]");
    return choose2(n) * p * std::pow(1.0 - p * p, n - 2);
}

BoundReport second_moment_terms(int n, double p) {
    if (n < 5) throw std::invalid_argument("second_moment_terms: n must be >= 5");
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("second_moment_terms: p must lie in [0,1]");

    const double per_edge = p * std::pow(1.0 - p * p, n - 2);  // E A_xy
    const double mu = choose2(n) * per_edge;

    // E A_xy A_zw (disjoint pairs) < p^2 (1-p^2)^{2(n-4)}
    const double disjoint_term = p * p * std::pow(1.0 - p * p, 2 * (n - 4));
    // E A_xy A_xz (shared vertex) < p^2 (1 - 2p^2 + p^3)^{n-3}
    const double shared_term = p * p * std::pow(1.0 - 2 * p * p + p * p * p, n - 3);

    const double pairs = choose2(n);
    const double shared_count = pairs * 2.0 * (n - 2);         // ordered, |e ∩ f| = 1
    const double disjoint_count = pairs * choose2(n - 2);      // ordered, disjoint

    // Var X <= mu + N_sh * B_sh + N_disj * (B_disj - (E A)^2).
    const double disjoint_excess = std::max(0.0, disjoint_term - per_edge * per_edge);
    const double var_bound = mu + shared_count * shared_term + disjoint_count * disjoint_excess;
    const double ratio = mu > 0 ? var_bound / (mu * mu) : std::numeric_limits<double>::infinity();

    BoundReport r;
    r.terms["mu"] = mu;
    r.terms["per_edge"] = per_edge;
    r.terms["disjoint_term"] = disjoint_term;
    r.terms["shared_term"] = shared_term;
    r.terms["disjoint_count"] = disjoint_count;
    r.terms["shared_count"] = shared_count;
    r.terms["var_bound"] = var_bound;
    r.terms["var_ratio"] = ratio;
    // Chebyshev-style reading: P(X = 0) <= Var X / (EX)^2.
    r.value = mu > 0 ? clamp01(ratio) : 1.0;
    return r;
}

GoodmanCounts goodman(int n, const std::vector<VertexPair>& f) {
    if (n < 3) throw std::invalid_argument("goodman: n must be >= 3");
    std::vector<BitVec> adj(static_cast<std::size_t>(n), BitVec(static_cast<std::size_t>(n)));
    for (auto [u, v] : f) {
        if (u > v) std::swap(u, v);
        if (u == v || u < 0 || v >= n) throw std::invalid_argument("goodman: invalid pair");
        if (adj[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)))
            throw std::invalid_argument("goodman: duplicate pair");
        adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }

    GoodmanCounts c;
    c.n = n;
    c.f = static_cast<long long>(f.size());
    long long t[4] = {0, 0, 0, 0};
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const bool xy = adj[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y));
            for (int z = y + 1; z < n; ++z) {
                const int i = static_cast<int>(xy) +
                              static_cast<int>(adj[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(z))) +
                              static_cast<int>(adj[static_cast<std::size_t>(y)].test(static_cast<std::size_t>(z)));
                ++t[i];
            }
        }
    c.t0 = t[0];
    c.t1 = t[1];
    c.t2 = t[2];
    c.t3 = t[3];
    c.identity_holds = c.f * (n - 2) == c.t1 + 2 * c.t2 + 3 * c.t3;
    c.t1t2_bound_holds = 8 * (c.t1 + c.t2) < static_cast<long long>(n) * n * n;
    return c;
}

Ml3Report ml3_check(int n, const std::vector<VertexPair>& f, double delta, double eta,
                    std::optional<long long> supplied_deficiency, double slack) {
    Ml3Report r;
    r.eta = eta;
    r.delta = delta;
    r.slack = slack;
    r.counts = goodman(n, f);

    if (supplied_deficiency.has_value()) {
        r.min_cut_deficiency = *supplied_deficiency;
    } else {
        if (n > 24)
            throw std::invalid_argument(
                "ml3_check: n beyond the exhaustive cut bound; supply the min-cut deficiency");
        r.min_cut_deficiency = min_bipartization(n, f).deleted;
    }

    const double n2 = static_cast<double>(n) * n;
    const double n3 = n2 * n;
    r.size_ok = static_cast<double>(r.counts.f) > (1.0 - delta) * n2 / 4.0;
    r.hypothesis_met = r.size_ok && static_cast<double>(r.min_cut_deficiency) > eta * n2;

    const double t1 = static_cast<double>(r.counts.t1);
    const double t3 = static_cast<double>(r.counts.t3);
    r.chain_t1t3 = t1 + t3 >= eta * n3 / 3.0;
    r.chain_t1_minus_3t3 = t1 - 3.0 * t3 < (delta + slack) * n3;
    r.conclusion = t3 > (eta - 3.0 * delta - slack) * n3 / 12.0;
    r.implication_consistent = !(r.chain_t1t3 && r.chain_t1_minus_3t3) || r.conclusion;
    return r;
}

BoundReport janson_triangle_bound(long long m, int n, double p) {
    if (m < 1) throw std::invalid_argument("janson_triangle_bound: m must be >= 1");
    if (!(p > 0 && p <= 1)) throw std::invalid_argument("janson_triangle_bound: p must lie in (0,1]");
    const double md = static_cast<double>(m);
    const double mu = md * p * p * p;
    const double delta_bar = 3.0 * md * n * std::pow(p, 5) + mu;
    BoundReport r;
    r.terms["mu"] = mu;
    r.terms["delta_bar"] = delta_bar;
    r.value = clamp01(std::exp(-mu * mu / (2.0 * delta_bar)));
    return r;
}

}  // namespace trispace
