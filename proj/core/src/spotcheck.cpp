#include "trispace/spotcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace trispace {

double SpotcheckReport::worst() const {
    return std::max(std::max(degree_dev, codegree_excess), std::max(nabla_dev, zeta_dev));
}

namespace {

BitVec mask_of(const std::vector<int>& vertices, std::size_t n, std::size_t count) {
    BitVec m(n);
    for (std::size_t i = 0; i < count; ++i) m.set(static_cast<std::size_t>(vertices[i]));
    return m;
}

}  // namespace

SpotcheckReport concentration_spotcheck(const Graph& g, double p, int samples,
                                        std::uint64_t seed, double tol) {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("spotcheck: p must lie in [0,1]");
    if (samples < 1) throw std::invalid_argument("spotcheck: samples must be >= 1");

    const int n = g.vertex_count();
    SpotcheckReport rep;
    rep.n = n;
    rep.p = p;
    rep.tol = tol;

    // Degrees against the exact mean (n-1)p.
    const double mean_deg = (n - 1) * p;
    if (mean_deg > 0) {
        for (int v = 0; v < n; ++v)
            rep.degree_dev = std::max(rep.degree_dev, std::abs(g.degree(v) / mean_deg - 1.0));
    } else {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > 0) rep.degree_dev = std::numeric_limits<double>::infinity();
        rep.notes.push_back("degree mean is 0 at p=0; deviation is 0 iff the graph is empty");
    }

    // Codegrees against the 4 n p^2 ceiling; only the excess is reported.
    const double codeg_cap = 4.0 * n * p * p;
    long long max_codeg = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            max_codeg = std::max(
                max_codeg,
                static_cast<long long>(and_popcount(g.adjacency_row(x), g.adjacency_row(y))));
    if (codeg_cap > 0)
        rep.codegree_excess = std::max(0.0, static_cast<double>(max_codeg) / codeg_cap - 1.0);
    else if (max_codeg > 0)
        rep.codegree_excess = std::numeric_limits<double>::infinity();

    std::mt19937_64 rng(seed);
    std::vector<int> vertices(static_cast<std::size_t>(n));
    std::iota(vertices.begin(), vertices.end(), 0);

    // |∇(S,T)| for random disjoint S,T with sizes >= ~2 log(n)/p.
    if (p > 0) {
        const int min_st = std::max<int>(2, static_cast<int>(std::ceil(2.0 * std::log(n) / p)));
        const int max_st = n / 2;
        if (min_st > max_st) {
            rep.notes.push_back("nabla check skipped: no qualifying |S|,|T| at this (n,p)");
        } else {
            std::uniform_int_distribution<int> size_dist(min_st, max_st);
            for (int s = 0; s < samples; ++s) {
                const int ssz = size_dist(rng), tsz = size_dist(rng);
                std::shuffle(vertices.begin(), vertices.end(), rng);
                if (ssz == 0 || tsz == 0) {
                    rep.notes.push_back("degenerate empty set skipped");
                    continue;
                }
                BitVec smask = mask_of(vertices, static_cast<std::size_t>(n), static_cast<std::size_t>(ssz));
                std::vector<int> rest(vertices.begin() + ssz, vertices.end());
                BitVec tmask = mask_of(rest, static_cast<std::size_t>(n), static_cast<std::size_t>(tsz));
                const double mean = static_cast<double>(ssz) * tsz * p;
                const double observed = static_cast<double>(zeta(g, smask, tmask));
                rep.nabla_dev = std::max(rep.nabla_dev, std::abs(observed / mean - 1.0));
                ++rep.nabla_samples;
            }
        }
    } else {
        rep.notes.push_back("nabla check skipped at p=0");
    }

    // ζ(Y,Z) for random (possibly overlapping) Y,Z with |Y||Z| > 8 tol^-2 n/p.
    if (p > 0) {
        const double product_floor = 8.0 / (tol * tol) * static_cast<double>(n) / p;
        const int min_yz = static_cast<int>(std::ceil(std::sqrt(product_floor))) + 1;
        if (min_yz > n) {
            rep.notes.push_back("zeta check skipped: no qualifying |Y||Z| at this (n,p,tol)");
        } else {
            std::uniform_int_distribution<int> size_dist(min_yz, n);
            for (int s = 0; s < samples; ++s) {
                const int ysz = size_dist(rng), zsz = size_dist(rng);
                std::shuffle(vertices.begin(), vertices.end(), rng);
                BitVec ymask = mask_of(vertices, static_cast<std::size_t>(n), static_cast<std::size_t>(ysz));
                std::shuffle(vertices.begin(), vertices.end(), rng);
                BitVec zmask = mask_of(vertices, static_cast<std::size_t>(n), static_cast<std::size_t>(zsz));
                const double overlap = static_cast<double>(and_popcount(ymask, zmask));
                const double mean = (static_cast<double>(ysz) * zsz - overlap) * p;
                if (mean <= 0) {
                    rep.notes.push_back("degenerate zeta mean skipped");
                    continue;
                }
                const double observed = static_cast<double>(zeta(g, ymask, zmask));
                rep.zeta_dev = std::max(rep.zeta_dev, std::abs(observed / mean - 1.0));
                ++rep.zeta_samples;
            }
        }
    } else {
        rep.notes.push_back("zeta check skipped at p=0");
    }

    return rep;
}

}  // namespace trispace
