#pragma once

#include <cstdint>

#include "trispace/graph.hpp"

namespace trispace {

/// G(n,p): each of the C(n,2) vertex pairs, visited in lexicographic order,
/// is included iff the next uniform draw from the seeded stream is < p.
/// Exactly one draw is consumed per pair, so a fixed (seed, n) couples the
/// family monotonely across p: the graph at p1 <= p2 is a subgraph of the
/// graph at p2 under the same seed.
Graph sample_gnp(int n, double p, std::uint64_t seed);

struct TwoRound {
    Graph g0;  // ~ G(n, theta*p)
    Graph g1;  // on the complement of g0, per-pair probability (1-theta)p/(1-theta*p)
};

/// Two-round exposure of G(n,p). Each pair consumes one uniform draw u:
/// u < theta*p puts it in g0, theta*p <= u < p puts it in g1 (the algebra
/// theta*p + (1-theta*p)*q = p makes the second rule exactly the q-rule on
/// the complement). g0 and g1 are edge-disjoint and their union coincides
/// with sample_gnp(n, p, seed).
TwoRound sample_two_round(int n, double p, double theta, std::uint64_t seed);

/// Union of two edge-disjoint graphs on the same vertex set.
Graph graph_union(const Graph& a, const Graph& b);

}  // namespace trispace
