#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trispace/gf2_basis.hpp"
#include "trispace/graph.hpp"

namespace trispace {

/// Element of the edge space (Z/2)^{E(host)}; addition is symmetric
/// difference of edge sets. Bit positions follow the host's edge indexing.
struct EdgeVector {
    const Graph* host = nullptr;
    BitVec bits;

    std::size_t size() const { return bits.popcount(); }
    std::vector<VertexPair> to_pairs() const;
    /// Text form: sorted list of edge pairs, e.g. "(0,1) (2,3)".
    std::string to_text() const;
};

EdgeVector edge_vector_from_pairs(const Graph& host, const std::vector<VertexPair>& pairs);

/// Indicator of the edges of host at v (the star of v).
BitVec star_vector(const Graph& host, int v);

/// Indicator of the induced cut (xor of the stars of one side).
BitVec cut_vector(const Graph& host, const CutSpec& spec);

enum class SpaceKind { cycle, cut, triangle, triangle_perp };

/// A subspace of a host's edge space: the generating vectors that define it
/// (fundamental cycles, vertex stars, independent triangle indicators, or
/// kernel rows) together with the canonical reduced basis of their span.
struct SpaceBasis {
    const Graph* host = nullptr;
    SpaceKind kind{};
    std::vector<BitVec> generators;
    Gf2Basis basis;

    std::size_t dim() const { return basis.rank(); }
};

/// Fundamental cycles w.r.t. a spanning forest; dim = |E| - n + components.
/// Every generator is the indicator of a single cycle.
SpaceBasis cycle_space(const Graph& g);

/// Span of the vertex stars, one vertex omitted per component; dim = n - c.
/// Every member of the span is a cut.
SpaceBasis cut_space(const Graph& g);

/// Span of the triangle indicator vectors, inserted in enumeration order
/// with an early stop once the rank reaches dim cycle_space.
SpaceBasis triangle_space(const Graph& g);

/// Null space of the triangle-edge incidence matrix; dim = |E| - dim T.
SpaceBasis triangle_perp(const Graph& g);

/// dim C - dim T = dim H_1 of the clique complex over Z/2.
int betti1(const Graph& g);
int betti1(const Graph& g, const TriangleSet& tri);

/// |E| - n + components, without building a basis.
int cycle_space_dim(const Graph& g);

/// Rank of the triangle indicators, stopping early once `stop_at` is hit.
int triangle_space_dim(const Graph& g, const TriangleSet& tri, int stop_at);

/// Some F in T^perp(G) \ C^perp(G) (even intersection with every triangle,
/// not a cut) iff betti1(G) > 0; nullopt otherwise.
std::optional<EdgeVector> find_witness(const Graph& g);

/// Local search over the coset F + C^perp(G): repeatedly add the star of any
/// vertex v with d_F(v) > d_{G\F}(v), scanning vertices in ascending order
/// and restarting after each flip. The result satisfies
/// d_F'(v) <= d_{G\F'}(v) everywhere and is no larger than the input; it is
/// not claimed to be the true coset minimum.
EdgeVector coset_minimize(const Graph& g, EdgeVector f);

/// True minimum-size member of F + C^perp(G), by exhaustion over all cuts
/// with vertex 0's side fixed. Rejects hosts with more than 24 vertices.
EdgeVector coset_min_oracle(const Graph& g, const EdgeVector& f);

}  // namespace trispace
