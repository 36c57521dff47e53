#include "trispace/derived_sets.hpp"

#include <stdexcept>

namespace trispace {

namespace {

/// Adjacency rows of a pair list, validated to be a subset of host's edges.
std::vector<BitVec> subset_adjacency(const std::vector<VertexPair>& pairs, const Graph& host,
                                     const char* what) {
    const std::size_t n = static_cast<std::size_t>(host.vertex_count());
    std::vector<BitVec> rows(n, BitVec(n));
    for (auto [u, v] : pairs) {
        if (u > v) std::swap(u, v);
        if (!host.has_edge(u, v))
            throw std::invalid_argument(std::string(what) + ": pair list is not a subset of the host edges");
        rows[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        rows[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }
    return rows;
}

bool words_any_and_not(const BitVec& a, const BitVec& b) {
    // any bit of a & ~b
    const std::uint64_t* wa = a.words();
    const std::uint64_t* wb = b.words();
    for (std::size_t k = 0; k < a.word_count(); ++k)
        if (wa[k] & ~wb[k]) return true;
    return false;
}

}  // namespace

std::vector<VertexPair> b_set(const std::vector<VertexPair>& k, const Graph& h) {
    const auto kadj = subset_adjacency(k, h, "b_set");
    const int n = h.vertex_count();
    std::vector<VertexPair> out;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (h.has_edge(x, y)) continue;
            if (and_popcount(kadj[static_cast<std::size_t>(x)], kadj[static_cast<std::size_t>(y)]) == 0)
                out.emplace_back(x, y);
        }
    return out;
}

std::vector<VertexPair> j_set(const std::vector<VertexPair>& f, const Graph& g) {
    const auto fadj = subset_adjacency(f, g, "j_set");
    const int n = g.vertex_count();
    std::vector<VertexPair> out;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (and_popcount(fadj[static_cast<std::size_t>(x)], fadj[static_cast<std::size_t>(y)]) > 0)
                out.emplace_back(x, y);
    return out;
}

std::vector<VertexPair> a_set(const Graph& g0) {
    const int n = g0.vertex_count();
    std::vector<VertexPair> out;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g0.has_edge(x, y)) continue;
            if (and_popcount(g0.adjacency_row(x), g0.adjacency_row(y)) > 0) out.emplace_back(x, y);
        }
    return out;
}

std::vector<VertexPair> coda_b_set(const std::vector<VertexPair>& f0, const Graph& g0) {
    const auto fadj = subset_adjacency(f0, g0, "coda_b_set");
    const int n = g0.vertex_count();
    std::vector<VertexPair> out;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (g0.has_edge(x, y)) continue;
            BitVec common = g0.adjacency_row(x) & g0.adjacency_row(y);
            if (!common.any()) continue;  // not in A(G0)
            // need: for every z in common, exactly one of xz, yz in F0,
            // i.e. common ⊆ (F0-row(x) XOR F0-row(y))
            const BitVec ones = fadj[static_cast<std::size_t>(x)] ^ fadj[static_cast<std::size_t>(y)];
            if (!words_any_and_not(common, ones)) out.emplace_back(x, y);
        }
    }
    return out;
}

}  // namespace trispace
