#include "trispace/sample.hpp"

#include <algorithm>
#include <stdexcept>

#include "trispace/rng.hpp"

namespace trispace {

namespace {

void check_np(int n, double p) {
    if (n < 1) throw std::invalid_argument("sample: vertex count must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample: p must lie in [0,1]");
}

}  // namespace

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    check_np(n, p);
    UniformStream stream(seed);
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (stream.next_unit() < p) edges.emplace_back(u, v);
    return make_graph_unchecked(n, std::move(edges));
}

TwoRound sample_two_round(int n, double p, double theta, std::uint64_t seed) {
    check_np(n, p);
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("sample_two_round: theta must lie in (0,1)");

    const double t0 = theta * p;
    UniformStream stream(seed);
    std::vector<VertexPair> e0, e1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double u01 = stream.next_unit();
            if (u01 < t0)
                e0.emplace_back(u, v);
            else if (u01 < p)
                e1.emplace_back(u, v);
        }
    }
    return {make_graph_unchecked(n, std::move(e0)), make_graph_unchecked(n, std::move(e1))};
}

Graph graph_union(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("graph_union: vertex count mismatch");
    std::vector<VertexPair> edges = a.edges();
    const auto& eb = b.edges();
    edges.insert(edges.end(), eb.begin(), eb.end());
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph_union: graphs share an edge");
    return make_graph_unchecked(a.vertex_count(), std::move(edges));
}

}  // namespace trispace
