#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "trispace/bitvec.hpp"

namespace trispace {

using VertexPair = std::pair<int, int>;

/// Simple graph on vertex set {0..n-1}.
///
/// Edges are stored as (u,v) with u<v in lexicographic order; the position
/// in that list is the edge's dense index, which every edge-space bit
/// position in the library refers to. Adjacency is one packed bit row per
/// vertex. Immutable after construction; safe to share across threads.
class Graph {
public:
    /// Validating constructor: rejects loops, duplicates, out-of-range
    /// endpoints. Pairs may be given in any order/orientation.
    static Graph from_edges(int n, std::vector<VertexPair> edges);

    static Graph complete(int n);
    static Graph cycle(int k);
    static Graph disjoint_union(const Graph& a, const Graph& b);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    VertexPair edge(int idx) const { return edges_[static_cast<std::size_t>(idx)]; }

    bool has_edge(int u, int v) const;
    /// Dense index of edge {u,v}, or -1 if absent.
    int edge_index(int u, int v) const;

    const BitVec& adjacency_row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].popcount()); }

    int component_count() const;

    /// Indices of edges incident to v, ascending.
    std::vector<int> incident_edges(int v) const;

private:
    friend Graph make_graph_unchecked(int n, std::vector<VertexPair> edges);
    Graph() = default;

    int n_ = 0;
    std::vector<VertexPair> edges_;      // lexicographically sorted, u<v
    std::vector<int> row_start_;         // edges_[row_start_[u]..row_start_[u+1]) have first == u
    std::vector<BitVec> adj_;
};

/// Trusted fast path for samplers: edges must already be valid and sorted.
Graph make_graph_unchecked(int n, std::vector<VertexPair> edges);

/// All triangles of a host graph, plus the number of triangles through each
/// edge (the codegree of its endpoints).
struct TriangleSet {
    std::vector<std::array<int, 3>> triples;  // x<y<z, all three edges present
    std::vector<int> per_edge;                // indexed by host edge index

    std::size_t count() const { return triples.size(); }
};

TriangleSet triangles(const Graph& g);

/// True iff every edge lies in at least one triangle (vacuously true when
/// there are no edges).
bool every_edge_in_triangle(const Graph& g);

/// |N(x) ∩ N(y)|; rejects x == y.
int codegree(const Graph& g, int x, int y);

/// Ordered-pair edge count between vertex sets: |{(x,y) in Y×Z : xy in G}|.
/// Sets are bit masks over the vertex set; zeta(Y,Y) = 2|G[Y]|.
long long zeta(const Graph& g, const BitVec& y, const BitVec& z);

/// One side of a vertex bipartition (W, V∖W).
struct CutSpec {
    BitVec side;  // bit set <=> vertex in W
};

/// Indices of edges with endpoints on opposite sides of the cut.
std::vector<int> cut_edges(const Graph& g, const CutSpec& spec);

// Plain text graph serialization: "n m" header then m lines "u v"
// (0-based, u<v, lexicographic order). The reader rejects violations.
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

}  // namespace trispace
