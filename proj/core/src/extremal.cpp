#include "trispace/extremal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace trispace {

TriangleHypergraph TriangleHypergraph::build(const Graph& g) {
    TriangleHypergraph h;
    h.host_edge_count = g.edge_count();
    h.edge_degree.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& [x, y, z] : trispace::triangles(g).triples) {
        std::array<int, 3> t = {g.edge_index(x, y), g.edge_index(x, z), g.edge_index(y, z)};
        std::sort(t.begin(), t.end());
        for (int e : t) ++h.edge_degree[static_cast<std::size_t>(e)];
        h.triangles.push_back(t);
    }
    return h;
}

namespace {

constexpr int kEdgeBudget = 40;

struct HittingSearch {
    std::vector<std::uint64_t> tri_masks;  // one bit per host edge
    std::vector<std::array<int, 3>> tris;
    int edge_count = 0;
    int best = 0;
    std::uint64_t best_set = 0;

    // Pairwise edge-disjoint unhit triangles each need a distinct edge.
    int matching_lower_bound(std::uint64_t removed) const {
        std::uint64_t used = removed;
        int count = 0;
        for (const auto m : tri_masks) {
            if (m & used) continue;
            used |= m;
            ++count;
        }
        return count;
    }

    void recurse(std::uint64_t removed, int chosen) {
        int first_unhit = -1;
        std::vector<int> degree(static_cast<std::size_t>(edge_count), 0);
        for (std::size_t i = 0; i < tri_masks.size(); ++i) {
            if (tri_masks[i] & removed) continue;
            if (first_unhit < 0) first_unhit = static_cast<int>(i);
            for (int e : tris[i]) ++degree[static_cast<std::size_t>(e)];
        }
        if (first_unhit < 0) {
            if (chosen < best) {
                best = chosen;
                best_set = removed;
            }
            return;
        }
        if (chosen + matching_lower_bound(removed) >= best) return;

        // Branch on the unhit triangle containing the highest-degree edge.
        int hot_edge = -1;
        for (int e = 0; e < edge_count; ++e)
            if (hot_edge < 0 || degree[static_cast<std::size_t>(e)] > degree[static_cast<std::size_t>(hot_edge)])
                hot_edge = e;
        int branch_tri = first_unhit;
        for (std::size_t i = 0; i < tri_masks.size(); ++i) {
            if (tri_masks[i] & removed) continue;
            if (tri_masks[i] & (std::uint64_t{1} << hot_edge)) {
                branch_tri = static_cast<int>(i);
                break;
            }
        }
        std::array<int, 3> order = tris[static_cast<std::size_t>(branch_tri)];
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
        });
        for (int e : order) recurse(removed | (std::uint64_t{1} << e), chosen + 1);
    }
};

}  // namespace

HittingResult min_triangle_hitting(const Graph& g) {
    if (g.edge_count() > kEdgeBudget)
        throw std::invalid_argument("min_triangle_hitting: edge budget is 40");

    const TriangleHypergraph h = TriangleHypergraph::build(g);
    HittingSearch search;
    search.edge_count = g.edge_count();
    search.tris = h.triangles;
    for (const auto& t : h.triangles)
        search.tri_masks.push_back((std::uint64_t{1} << t[0]) | (std::uint64_t{1} << t[1]) |
                                   (std::uint64_t{1} << t[2]));

    // Greedy start: hit the highest-degree edge until triangle-free.
    std::uint64_t greedy = 0;
    int greedy_size = 0;
    while (true) {
        std::vector<int> degree(static_cast<std::size_t>(g.edge_count()), 0);
        bool unhit = false;
        for (std::size_t i = 0; i < search.tri_masks.size(); ++i) {
            if (search.tri_masks[i] & greedy) continue;
            unhit = true;
            for (int e : search.tris[i]) ++degree[static_cast<std::size_t>(e)];
        }
        if (!unhit) break;
        const int hot =
            static_cast<int>(std::max_element(degree.begin(), degree.end()) - degree.begin());
        greedy |= std::uint64_t{1} << hot;
        ++greedy_size;
    }
    search.best = greedy_size;
    search.best_set = greedy;
    search.recurse(0, 0);

    HittingResult result;
    result.size = search.best;
    for (int e = 0; e < g.edge_count(); ++e)
        if (search.best_set & (std::uint64_t{1} << e)) result.edges.push_back(e);
    return result;
}

TriangleFreeResult max_triangle_free(const Graph& g) {
    const HittingResult hit = min_triangle_hitting(g);
    TriangleFreeResult r;
    r.size = g.edge_count() - hit.size;
    std::vector<bool> removed(static_cast<std::size_t>(g.edge_count()), false);
    for (int e : hit.edges) removed[static_cast<std::size_t>(e)] = true;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!removed[static_cast<std::size_t>(e)]) r.edges.push_back(e);
    return r;
}

BipartizationResult min_bipartization(int n, const std::vector<VertexPair>& f) {
    if (n < 1) throw std::invalid_argument("min_bipartization: n must be >= 1");
    if (n > 24) throw std::invalid_argument("min_bipartization: exhaustive bound is 24 vertices");
    for (const auto& [u, v] : f)
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("min_bipartization: invalid pair");

    const std::size_t fsize = f.size();
    std::vector<BitVec> star_f(static_cast<std::size_t>(n), BitVec(fsize));
    for (std::size_t i = 0; i < fsize; ++i) {
        star_f[static_cast<std::size_t>(f[i].first)].set(i);
        star_f[static_cast<std::size_t>(f[i].second)].set(i);
    }

    // |F \ Π(W)| = |F| - |F ∩ ∇(W)|; walk the W's in Gray-code order,
    // each step xoring one vertex's F-star into the running cut indicator.
    BitVec cut(fsize);
    long long best = static_cast<long long>(fsize);  // W = {} keeps every edge
    std::uint32_t best_w = 0, w_mask = 0;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < total; ++i) {
        const int v = std::countr_zero(i) + 1;
        cut ^= star_f[static_cast<std::size_t>(v)];
        w_mask ^= std::uint32_t{1} << v;
        const long long kept = static_cast<long long>(fsize - cut.popcount());
        if (kept < best) {
            best = kept;
            best_w = w_mask;
        }
    }

    BipartizationResult r;
    r.deleted = best;
    r.cut.side = BitVec(static_cast<std::size_t>(n));
    for (int v = 1; v < n; ++v)
        if (best_w & (std::uint32_t{1} << v)) r.cut.side.set(static_cast<std::size_t>(v));
    return r;
}

BipartizationResult min_bipartization(const Graph& host, const BitVec& f_edges) {
    if (f_edges.size() != static_cast<std::size_t>(host.edge_count()))
        throw std::invalid_argument("min_bipartization: edge indicator length mismatch");
    std::vector<VertexPair> f;
    for (std::size_t e = f_edges.first_set(); e != BitVec::npos; e = f_edges.next_set(e + 1))
        f.push_back(host.edge(static_cast<int>(e)));
    return min_bipartization(host.vertex_count(), f);
}

int greedy_triangle_matching(const Graph& g) {
    std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
    int count = 0;
    for (const auto& [x, y, z] : triangles(g).triples) {
        const int a = g.edge_index(x, y), b = g.edge_index(x, z), c = g.edge_index(y, z);
        if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)] ||
            used[static_cast<std::size_t>(c)])
            continue;
        used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] =
            used[static_cast<std::size_t>(c)] = true;
        ++count;
    }
    return count;
}

Certificate fractional_certificate(const Graph& g, double delta) {
    if (!(delta > 0)) throw std::invalid_argument("fractional_certificate: delta must be > 0");
    const TriangleHypergraph h = TriangleHypergraph::build(g);

    Certificate c;
    c.delta = delta;
    c.weight_each = 1.0 / delta;
    std::vector<long long> good_through(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& t : h.triangles) {
        const bool good = h.edge_degree[static_cast<std::size_t>(t[0])] <= delta &&
                          h.edge_degree[static_cast<std::size_t>(t[1])] <= delta &&
                          h.edge_degree[static_cast<std::size_t>(t[2])] <= delta;
        if (!good) continue;
        ++c.good_count;
        for (int e : t) ++good_through[static_cast<std::size_t>(e)];
    }
    c.total = static_cast<double>(c.good_count) / delta;
    c.max_edge_load = 0;
    for (long long cnt : good_through)
        c.max_edge_load = std::max(c.max_edge_load, static_cast<double>(cnt) / delta);
    c.feasible = c.max_edge_load <= 1.0 + 1e-9;
    return c;
}

}  // namespace trispace
