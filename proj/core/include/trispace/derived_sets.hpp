#pragma once

#include <vector>

#include "trispace/graph.hpp"

namespace trispace {

// Edge sets derived from a host graph. These live in the complete graph on
// the host's vertex set, not in the host's edge index space, so they are
// returned as lexicographically sorted vertex-pair lists.

/// B(K,H) = { e in K_n \ H : no triangle {e,f,g} with f,g in K }.
/// Requires K ⊆ E(H).
std::vector<VertexPair> b_set(const std::vector<VertexPair>& k, const Graph& h);

/// J(F,G) = { xy in E(K_n) : x and y have a common F-neighbor }, pairs in F
/// or G included. Requires F ⊆ E(G).
std::vector<VertexPair> j_set(const std::vector<VertexPair>& f, const Graph& g);

/// A(G0) = { xy in K_n \ G0 : x and y have a common G0-neighbor }.
std::vector<VertexPair> a_set(const Graph& g0);

/// { xy in A(G0) : every common G0-neighbor z has exactly one of xz, yz in F0 }.
/// Requires F0 ⊆ E(G0).
std::vector<VertexPair> coda_b_set(const std::vector<VertexPair>& f0, const Graph& g0);

}  // namespace trispace
