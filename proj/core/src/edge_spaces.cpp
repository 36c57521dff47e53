#include "trispace/edge_spaces.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trispace {

std::vector<VertexPair> EdgeVector::to_pairs() const {
    std::vector<VertexPair> out;
    for (std::size_t e = bits.first_set(); e != BitVec::npos; e = bits.next_set(e + 1))
        out.push_back(host->edge(static_cast<int>(e)));
    return out;
}

std::string EdgeVector::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [u, v] : to_pairs()) {
        if (!first) os << ' ';
        os << '(' << u << ',' << v << ')';
        first = false;
    }
    return os.str();
}

EdgeVector edge_vector_from_pairs(const Graph& host, const std::vector<VertexPair>& pairs) {
    EdgeVector f{&host, BitVec(static_cast<std::size_t>(host.edge_count()))};
    for (const auto& [u, v] : pairs) {
        const int e = host.edge_index(u, v);
        if (e < 0) throw std::invalid_argument("edge_vector_from_pairs: pair is not a host edge");
        f.bits.set(static_cast<std::size_t>(e));
    }
    return f;
}

BitVec star_vector(const Graph& host, int v) {
    BitVec s(static_cast<std::size_t>(host.edge_count()));
    for (int e = 0; e < host.edge_count(); ++e) {
        const auto& [a, b] = host.edge(e);
        if (a == v || b == v) s.set(static_cast<std::size_t>(e));
    }
    return s;
}

BitVec cut_vector(const Graph& host, const CutSpec& spec) {
    BitVec c(static_cast<std::size_t>(host.edge_count()));
    for (const int e : cut_edges(host, spec)) c.set(static_cast<std::size_t>(e));
    return c;
}

int cycle_space_dim(const Graph& g) {
    return g.edge_count() - g.vertex_count() + g.component_count();
}

SpaceBasis cycle_space(const Graph& g) {
    const std::size_t m = static_cast<std::size_t>(g.edge_count());
    const int n = g.vertex_count();

    // BFS forest; parent_edge[v] = index of the tree edge to the parent.
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<bool> is_tree_edge(m, false);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (visited[static_cast<std::size_t>(s)]) continue;
        visited[static_cast<std::size_t>(s)] = true;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            const BitVec& row = g.adjacency_row(v);
            for (std::size_t w = row.first_set(); w != BitVec::npos; w = row.next_set(w + 1)) {
                if (visited[w]) continue;
                visited[w] = true;
                parent[w] = v;
                const int e = g.edge_index(v, static_cast<int>(w));
                parent_edge[w] = e;
                is_tree_edge[static_cast<std::size_t>(e)] = true;
                queue.push_back(static_cast<int>(w));
            }
        }
    }

    SpaceBasis sb{&g, SpaceKind::cycle, {}, Gf2Basis(m)};
    for (int e = 0; e < g.edge_count(); ++e) {
        if (is_tree_edge[static_cast<std::size_t>(e)]) continue;
        // Fundamental cycle: the edge plus the tree paths to the root; the
        // shared segment above the meeting point cancels under xor.
        BitVec cyc(m);
        cyc.set(static_cast<std::size_t>(e));
        const auto& [u, v] = g.edge(e);
        for (int x = u; parent[static_cast<std::size_t>(x)] >= 0; x = parent[static_cast<std::size_t>(x)])
            cyc.flip(static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(x)]));
        for (int x = v; parent[static_cast<std::size_t>(x)] >= 0; x = parent[static_cast<std::size_t>(x)])
            cyc.flip(static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(x)]));
        sb.generators.push_back(cyc);
        sb.basis.insert(cyc);
    }
    return sb;
}

SpaceBasis cut_space(const Graph& g) {
    const std::size_t m = static_cast<std::size_t>(g.edge_count());
    const int n = g.vertex_count();

    // Mark one root per component; its star is omitted.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int comps = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int root = s;
        comp[static_cast<std::size_t>(s)] = root;
        ++comps;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            const BitVec& row = g.adjacency_row(v);
            for (std::size_t w = row.first_set(); w != BitVec::npos; w = row.next_set(w + 1)) {
                if (comp[w] < 0) {
                    comp[w] = root;
                    stack.push_back(static_cast<int>(w));
                }
            }
        }
    }
    (void)comps;

    SpaceBasis sb{&g, SpaceKind::cut, {}, Gf2Basis(m)};
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] == v) continue;  // component root omitted
        BitVec star = star_vector(g, v);
        sb.generators.push_back(star);
        sb.basis.insert(star);
    }
    return sb;
}

namespace {

BitVec triangle_indicator(const Graph& g, const std::array<int, 3>& t) {
    BitVec v(static_cast<std::size_t>(g.edge_count()));
    v.set(static_cast<std::size_t>(g.edge_index(t[0], t[1])));
    v.set(static_cast<std::size_t>(g.edge_index(t[0], t[2])));
    v.set(static_cast<std::size_t>(g.edge_index(t[1], t[2])));
    return v;
}

}  // namespace

SpaceBasis triangle_space(const Graph& g) {
    const TriangleSet tri = triangles(g);
    const int stop_at = cycle_space_dim(g);
    SpaceBasis sb{&g, SpaceKind::triangle, {}, Gf2Basis(static_cast<std::size_t>(g.edge_count()))};
    for (const auto& t : tri.triples) {
        if (static_cast<int>(sb.basis.rank()) >= stop_at) break;
        BitVec v = triangle_indicator(g, t);
        if (sb.basis.insert(v).added) sb.generators.push_back(std::move(v));
    }
    return sb;
}

int triangle_space_dim(const Graph& g, const TriangleSet& tri, int stop_at) {
    Gf2Basis basis(static_cast<std::size_t>(g.edge_count()));
    for (const auto& t : tri.triples) {
        if (static_cast<int>(basis.rank()) >= stop_at) break;
        basis.insert(triangle_indicator(g, t));
    }
    return static_cast<int>(basis.rank());
}

SpaceBasis triangle_perp(const Graph& g) {
    const TriangleSet tri = triangles(g);
    std::vector<BitVec> rows;
    rows.reserve(tri.triples.size());
    for (const auto& t : tri.triples) rows.push_back(triangle_indicator(g, t));
    Gf2Basis kernel = orthogonal_complement(rows, static_cast<std::size_t>(g.edge_count()));
    SpaceBasis sb{&g, SpaceKind::triangle_perp, kernel.rows(), std::move(kernel)};
    return sb;
}

int betti1(const Graph& g) { return betti1(g, triangles(g)); }

int betti1(const Graph& g, const TriangleSet& tri) {
    const int dim_c = cycle_space_dim(g);
    return dim_c - triangle_space_dim(g, tri, dim_c);
}

std::optional<EdgeVector> find_witness(const Graph& g) {
    const SpaceBasis tperp = triangle_perp(g);
    const SpaceBasis cuts = cut_space(g);
    for (const auto& row : tperp.basis.rows())
        if (!cuts.basis.contains(row)) return EdgeVector{&g, row};
    return std::nullopt;
}

EdgeVector coset_minimize(const Graph& g, EdgeVector f) {
    const int n = g.vertex_count();
    if (f.host != &g || f.bits.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("coset_minimize: vector does not belong to the host graph");

    std::vector<int> df(static_cast<std::size_t>(n), 0);
    for (std::size_t e = f.bits.first_set(); e != BitVec::npos; e = f.bits.next_set(e + 1)) {
        const auto& [u, v] = g.edge(static_cast<int>(e));
        ++df[static_cast<std::size_t>(u)];
        ++df[static_cast<std::size_t>(v)];
    }

    bool flipped = true;
    while (flipped) {
        flipped = false;
        for (int v = 0; v < n && !flipped; ++v) {
            const int dg = g.degree(v);
            if (2 * df[static_cast<std::size_t>(v)] <= dg) continue;  // d_F(v) <= d_{G\F}(v)
            // Flip F <- F + star(v): strictly decreases |F|.
            for (const int e : g.incident_edges(v)) {
                const auto& [a, b] = g.edge(e);
                const int other = (a == v) ? b : a;
                if (f.bits.test(static_cast<std::size_t>(e))) {
                    f.bits.set(static_cast<std::size_t>(e), false);
                    --df[static_cast<std::size_t>(other)];
                } else {
                    f.bits.set(static_cast<std::size_t>(e), true);
                    ++df[static_cast<std::size_t>(other)];
                }
            }
            df[static_cast<std::size_t>(v)] = dg - df[static_cast<std::size_t>(v)];
            flipped = true;
        }
    }
    return f;
}

EdgeVector coset_min_oracle(const Graph& g, const EdgeVector& f) {
    const int n = g.vertex_count();
    if (n > 24)
        throw std::invalid_argument("coset_min_oracle: exhaustive bound is 24 vertices");
    if (f.host != &g || f.bits.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("coset_min_oracle: vector does not belong to the host graph");

    std::vector<BitVec> stars;
    stars.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) stars.push_back(star_vector(g, v));

    // Gray-code walk over all W ⊆ {1..n-1} (vertex 0 fixed); each step
    // toggles one vertex, i.e. xors one star into the current coset member.
    BitVec cur = f.bits;
    std::size_t best_size = cur.popcount();
    std::uint32_t best_w = 0, w_mask = 0;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < total; ++i) {
        const int v = std::countr_zero(i) + 1;
        cur ^= stars[static_cast<std::size_t>(v)];
        w_mask ^= std::uint32_t{1} << v;
        const std::size_t sz = cur.popcount();
        if (sz < best_size) {
            best_size = sz;
            best_w = w_mask;
        }
    }

    BitVec best = f.bits;
    for (int v = 1; v < n; ++v)
        if (best_w & (std::uint32_t{1} << v)) best ^= stars[static_cast<std::size_t>(v)];
    return EdgeVector{&g, std::move(best)};
}

}  // namespace trispace
