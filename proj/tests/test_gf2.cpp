#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "trispace/edge_spaces.hpp"
#include "trispace/gf2_basis.hpp"
#include "trispace/graph.hpp"

using namespace trispace;

namespace {

BitVec from_bits(std::initializer_list<int> bits, std::size_t len) {
    BitVec v(len);
    for (int b : bits) v.set(static_cast<std::size_t>(b));
    return v;
}

BitVec random_vec(std::mt19937_64& rng, std::size_t len) {
    BitVec v(len);
    for (std::size_t i = 0; i < len; ++i)
        if (rng() & 1) v.set(i);
    return v;
}

/// All 2^k xor-combinations of the given vectors.
std::vector<BitVec> enumerate_span(const std::vector<BitVec>& vecs, std::size_t len) {
    std::vector<BitVec> span;
    const std::size_t total = std::size_t{1} << vecs.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        BitVec v(len);
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (mask & (std::size_t{1} << i)) v ^= vecs[i];
        if (std::find(span.begin(), span.end(), v) == span.end()) span.push_back(v);
    }
    return span;
}

}  // namespace

TEST_CASE("bitvec basics") {
    BitVec v(130);
    CHECK(v.none());
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.popcount() == 3);
    CHECK(v.first_set() == 0);
    CHECK(v.next_set(1) == 64);
    CHECK(v.next_set(65) == 129);
    CHECK(v.next_set(130) == BitVec::npos);
    v.flip(64);
    CHECK(v.popcount() == 2);
    CHECK_THROWS_AS(v.set(130), std::out_of_range);

    BitVec w(64);
    CHECK_THROWS_AS(v ^= w, std::invalid_argument);
}

TEST_CASE("insert of the zero vector does not change the basis") {
    Gf2Basis basis(5);
    const auto [residual, added] = basis.insert(BitVec(5));
    CHECK_FALSE(added);
    CHECK(residual.none());
    CHECK(basis.rank() == 0);
}

TEST_CASE("repeated insert is idempotent on the span") {
    Gf2Basis basis(6);
    const BitVec v = from_bits({1, 3, 4}, 6);
    CHECK(basis.insert(v).added);
    const auto second = basis.insert(v);
    CHECK_FALSE(second.added);
    CHECK(second.residual.none());
    CHECK(basis.rank() == 1);
}

TEST_CASE("dependent third vector is rejected: {110, 011, 101}") {
    Gf2Basis basis(3);
    CHECK(basis.insert(from_bits({0, 1}, 3)).added);
    CHECK(basis.insert(from_bits({1, 2}, 3)).added);
    CHECK_FALSE(basis.insert(from_bits({0, 2}, 3)).added);
    CHECK(basis.rank() == 2);
}

TEST_CASE("contains") {
    Gf2Basis basis(3);
    basis.insert(from_bits({0, 1}, 3));
    basis.insert(from_bits({1, 2}, 3));
    CHECK(basis.contains(BitVec(3)));
    CHECK(basis.contains(from_bits({0, 2}, 3)));
    CHECK_FALSE(basis.contains(from_bits({0}, 3)));
    CHECK_THROWS_AS(basis.contains(BitVec(4)), std::invalid_argument);
}

TEST_CASE("rank saturates at the space dimension") {
    const std::size_t k = 5;
    Gf2Basis basis(k);
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        BitVec v(k);
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) v.set(i);
        basis.insert(v);
    }
    CHECK(basis.rank() == k);
}

TEST_CASE("reduced rows are canonical under permuted insertion order") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t m = 24;
        std::vector<BitVec> vecs;
        for (int i = 0; i < 10; ++i) vecs.push_back(random_vec(rng, m));

        Gf2Basis a(m), b(m);
        for (const auto& v : vecs) a.insert(v);
        std::shuffle(vecs.begin(), vecs.end(), rng);
        for (const auto& v : vecs) b.insert(v);
        CHECK(a == b);
    }
}

TEST_CASE("pivot columns are exclusive and pivots strictly increase") {
    std::mt19937_64 rng(7);
    Gf2Basis basis(40);
    for (int i = 0; i < 25; ++i) basis.insert(random_vec(rng, 40));
    const auto& rows = basis.rows();
    const auto& pivots = basis.pivots();
    REQUIRE(rows.size() == pivots.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) CHECK(pivots[i] > pivots[i - 1]);
        CHECK(rows[i].first_set() == pivots[i]);
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != i) CHECK_FALSE(rows[j].test(pivots[i]));
    }
}

TEST_CASE("orthogonal complement dimensions") {
    SUBCASE("single vector in dim 3") {
        const Gf2Basis k = orthogonal_complement({from_bits({0, 1}, 3)}, 3);
        CHECK(k.rank() == 2);
    }
    SUBCASE("full standard basis has trivial complement") {
        std::vector<BitVec> std_basis;
        for (int i = 0; i < 4; ++i) std_basis.push_back(from_bits({i}, 4));
        const Gf2Basis k = orthogonal_complement(std_basis, 4);
        CHECK(k.rank() == 0);
    }
}

TEST_CASE("complement of K4 triangle rows equals the cut space of K4") {
    const Graph k4 = Graph::complete(4);
    std::vector<BitVec> tri_rows;
    for (const auto& [x, y, z] : triangles(k4).triples) {
        BitVec v(6);
        v.set(static_cast<std::size_t>(k4.edge_index(x, y)));
        v.set(static_cast<std::size_t>(k4.edge_index(x, z)));
        v.set(static_cast<std::size_t>(k4.edge_index(y, z)));
        tri_rows.push_back(v);
    }
    REQUIRE(tri_rows.size() == 4);

    const Gf2Basis kernel = orthogonal_complement(tri_rows, 6);
    CHECK(kernel.rank() == 3);
    for (const auto& row : kernel.rows())
        for (const auto& t : tri_rows) CHECK_FALSE(odd_overlap(row, t));

    // brute-force oracle: all 2^3 cut vectors of K4 lie in the kernel span
    // and the dimensions agree, so the spaces coincide
    int distinct_cuts = 0;
    std::vector<BitVec> seen;
    for (unsigned mask = 0; mask < 16; ++mask) {
        CutSpec spec{BitVec(4)};
        for (int v = 0; v < 4; ++v)
            if (mask & (1u << v)) spec.side.set(static_cast<std::size_t>(v));
        const BitVec cut = cut_vector(k4, spec);
        if (std::find(seen.begin(), seen.end(), cut) == seen.end()) {
            seen.push_back(cut);
            ++distinct_cuts;
        }
        CHECK(kernel.contains(cut));
    }
    CHECK(distinct_cuts == 8);  // 2^(n-1) cuts of a connected graph
}

TEST_CASE("rank-nullity over random vector sets") {
    std::mt19937_64 rng(2026);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t m = 1 + rng() % 64;
        const std::size_t count = rng() % 20;
        std::vector<BitVec> vecs;
        for (std::size_t i = 0; i < count; ++i) vecs.push_back(random_vec(rng, m));

        Gf2Basis direct(m);
        for (const auto& v : vecs) direct.insert(v);
        const Gf2Basis kernel = orthogonal_complement(vecs, m);
        CHECK(direct.rank() + kernel.rank() == m);
        for (const auto& row : kernel.rows())
            for (const auto& v : vecs) CHECK_FALSE(odd_overlap(row, v));
    }
}

TEST_CASE("inner product is bilinear over GF(2)") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t m = 1 + rng() % 100;
        const BitVec u = random_vec(rng, m), v = random_vec(rng, m), w = random_vec(rng, m);
        const bool lhs = odd_overlap(u ^ v, w);
        const bool rhs = odd_overlap(u, w) != odd_overlap(v, w);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("span enumeration matches basis membership on small cases") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t m = 8;
        std::vector<BitVec> vecs;
        for (int i = 0; i < 4; ++i) vecs.push_back(random_vec(rng, m));
        Gf2Basis basis(m);
        for (const auto& v : vecs) basis.insert(v);

        const auto span = enumerate_span(vecs, m);
        CHECK(span.size() == (std::size_t{1} << basis.rank()));
        for (const auto& v : span) CHECK(basis.contains(v));
    }
}
