#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "trispace/graph.hpp"

namespace trispace {

void write_graph(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& is) {
    long long n = 0, m = 0;
    if (!(is >> n >> m)) throw std::runtime_error("graph read: bad header, expected 'n m'");
    if (n < 1) throw std::runtime_error("graph read: vertex count must be >= 1");
    if (m < 0) throw std::runtime_error("graph read: negative edge count");

    std::vector<VertexPair> edges;
    edges.reserve(static_cast<std::size_t>(m));
    VertexPair prev{-1, -1};
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(is >> u >> v))
            throw std::runtime_error("graph read: expected " + std::to_string(m) + " edges, got " +
                                     std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::runtime_error("graph read: endpoint out of range on edge " + std::to_string(i));
        if (u >= v) throw std::runtime_error("graph read: edge must satisfy u < v on line " + std::to_string(i));
        const VertexPair cur{static_cast<int>(u), static_cast<int>(v)};
        if (!(prev < cur))
            throw std::runtime_error("graph read: edges must be strictly lexicographically increasing");
        prev = cur;
        edges.push_back(cur);
    }
    return make_graph_unchecked(static_cast<int>(n), std::move(edges));
}

}  // namespace trispace
