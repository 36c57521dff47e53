#include "trispace/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trispace {

Graph make_graph_unchecked(int n, std::vector<VertexPair> edges) {
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);

    g.row_start_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : g.edges_) {
        (void)v;
        ++g.row_start_[static_cast<std::size_t>(u) + 1];
    }
    for (int u = 0; u < n; ++u) g.row_start_[static_cast<std::size_t>(u) + 1] += g.row_start_[static_cast<std::size_t>(u)];

    g.adj_.assign(static_cast<std::size_t>(n), BitVec(static_cast<std::size_t>(n)));
    for (const auto& [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        g.adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }
    return g;
}

Graph Graph::from_edges(int n, std::vector<VertexPair> edges) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        if (u < 0 || v >= n) throw std::invalid_argument("Graph: endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge rejected");
    return make_graph_unchecked(n, std::move(edges));
}

Graph Graph::complete(int n) {
    std::vector<VertexPair> e;
    e.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make_graph_unchecked(n, std::move(e));
}

Graph Graph::cycle(int k) {
    if (k < 3) throw std::invalid_argument("Graph::cycle: need k >= 3");
    std::vector<VertexPair> e;
    for (int i = 0; i < k; ++i) {
        int u = i, v = (i + 1) % k;
        if (u > v) std::swap(u, v);
        e.emplace_back(u, v);
    }
    return from_edges(k, std::move(e));
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    std::vector<VertexPair> e = a.edges();
    for (const auto& [u, v] : b.edges()) e.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return from_edges(a.vertex_count() + b.vertex_count(), std::move(e));
}

bool Graph::has_edge(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (!has_edge(u, v)) return -1;
    const auto first = edges_.begin() + row_start_[static_cast<std::size_t>(u)];
    const auto last = edges_.begin() + row_start_[static_cast<std::size_t>(u) + 1];
    const auto it = std::lower_bound(first, last, VertexPair{u, v});
    return static_cast<int>(it - edges_.begin());
}

int Graph::component_count() const {
    std::vector<int> stack;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    int comps = 0;
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++comps;
        seen[static_cast<std::size_t>(s)] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            const BitVec& row = adj_[static_cast<std::size_t>(v)];
            for (std::size_t w = row.first_set(); w != BitVec::npos; w = row.next_set(w + 1)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(static_cast<int>(w));
                }
            }
        }
    }
    return comps;
}

std::vector<int> Graph::incident_edges(int v) const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i) {
        const auto& [a, b] = edges_[static_cast<std::size_t>(i)];
        if (a == v || b == v) out.push_back(i);
    }
    return out;
}

TriangleSet triangles(const Graph& g) {
    TriangleSet t;
    t.per_edge.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edge(e);
        const BitVec& ru = g.adjacency_row(u);
        const BitVec& rv = g.adjacency_row(v);
        t.per_edge[static_cast<std::size_t>(e)] = static_cast<int>(and_popcount(ru, rv));
        // Emit each triangle once, at its lexicographically smallest edge.
        BitVec common = ru & rv;
        for (std::size_t w = common.next_set(static_cast<std::size_t>(v) + 1); w != BitVec::npos;
             w = common.next_set(w + 1)) {
            t.triples.push_back({u, v, static_cast<int>(w)});
        }
    }
    return t;
}

bool every_edge_in_triangle(const Graph& g) {
    for (const auto& [u, v] : g.edges())
        if (and_popcount(g.adjacency_row(u), g.adjacency_row(v)) == 0) return false;
    return true;
}

int codegree(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("codegree: x == y");
    if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count())
        throw std::invalid_argument("codegree: vertex out of range");
    return static_cast<int>(and_popcount(g.adjacency_row(x), g.adjacency_row(y)));
}

long long zeta(const Graph& g, const BitVec& y, const BitVec& z) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    if (y.size() != n || z.size() != n) throw std::invalid_argument("zeta: mask length mismatch");
    long long total = 0;
    for (std::size_t x = y.first_set(); x != BitVec::npos; x = y.next_set(x + 1))
        total += static_cast<long long>(and_popcount(g.adjacency_row(static_cast<int>(x)), z));
    return total;
}

std::vector<int> cut_edges(const Graph& g, const CutSpec& spec) {
    if (spec.side.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("cut_edges: side mask length mismatch");
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edge(e);
        if (spec.side.test(static_cast<std::size_t>(u)) != spec.side.test(static_cast<std::size_t>(v)))
            out.push_back(e);
    }
    return out;
}

}  // namespace trispace
