#pragma once

#include <array>
#include <vector>

#include "trispace/graph.hpp"

namespace trispace {

/// Hypergraph whose vertices are the edges of a host graph and whose
/// hyperedges are its triangles (as edge-index triples).
struct TriangleHypergraph {
    int host_edge_count = 0;
    std::vector<std::array<int, 3>> triangles;  // edge indices, ascending
    std::vector<int> edge_degree;               // triangles through each host edge

    static TriangleHypergraph build(const Graph& g);
};

struct HittingResult {
    int size = 0;
    std::vector<int> edges;  // a minimum edge set meeting every triangle
};

/// Exact minimum set of edges meeting all triangles, by branch and bound on
/// the highest-degree triangle edge with a greedy-matching lower bound.
/// Rejects hosts with more than 40 edges.
HittingResult min_triangle_hitting(const Graph& g);

struct TriangleFreeResult {
    int size = 0;
    std::vector<int> edges;  // a maximum triangle-free subgraph
};

/// Exact maximum triangle-free subgraph, via complementation of
/// min_triangle_hitting. Rejects hosts with more than 40 edges.
TriangleFreeResult max_triangle_free(const Graph& g);

struct BipartizationResult {
    long long deleted = 0;  // min over cuts Π of |F \ Π|
    CutSpec cut;            // an optimal bipartition
};

/// Minimum number of edges of F (a subset of K_n's pairs) that must be
/// deleted to make it bipartite, exhaustive over all cuts with vertex 0's
/// side fixed. Rejects n > 24. Zero iff F is bipartite.
BipartizationResult min_bipartization(int n, const std::vector<VertexPair>& f);

/// Same, with F given as edge indices of a host graph.
BipartizationResult min_bipartization(const Graph& host, const BitVec& f_edges);

/// Number of edge-disjoint triangles picked greedily in enumeration order;
/// lower-bounds min_triangle_hitting.
int greedy_triangle_matching(const Graph& g);

/// Uniform-weight fractional matching on the good triangles of a host graph.
struct Certificate {
    double delta = 0;        // degree threshold
    double weight_each = 0;  // 1/delta on every good triangle
    double total = 0;        // good_count / delta; <= nu*(H) when feasible
    long long good_count = 0;
    bool feasible = false;   // every edge's incident good-triangle weight <= 1
    double max_edge_load = 0;
};

/// Marks a triangle good iff each of its edges lies in at most `delta`
/// triangles of g, weights good triangles 1/delta, and verifies the
/// fractional matching constraint. Rejects delta <= 0.
Certificate fractional_certificate(const Graph& g, double delta);

}  // namespace trispace
