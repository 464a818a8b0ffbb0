#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hamcycle/classifier.hpp"
#include "hamcycle/cycle_space.hpp"
#include "hamcycle/errors.hpp"
#include "hamcycle/fixtures.hpp"
#include "support.hpp"

using namespace hamcycle;
using testing::cycle_of;
using testing::edges_of;

namespace {

// Labels of THETA4: X=1, X'=2, a..d = 3..6.
const Graph& theta4() {
    static const Graph g = named_fixture("THETA4");
    return g;
}

CycleBasis theta4_bstar() {
    const Graph& g = theta4();
    return CycleBasis(g, {cycle_of(g, {1, 3, 2, 4}), cycle_of(g, {1, 5, 2, 6}), cycle_of(g, {1, 3, 2, 5})});
}

// Independent elementarity test on an adjacency matrix.
bool brute_elementary(const Graph& g, const EdgeSet& s) {
    if (s.empty()) return false;
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
    std::vector<int> deg(n, 0);
    s.for_each([&](std::size_t e) {
        const Edge ed = g.edge(static_cast<EdgeId>(e));
        a[ed.u][ed.v] = a[ed.v][ed.u] = 1;
        ++deg[ed.u];
        ++deg[ed.v];
    });
    std::vector<char> alive(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (deg[v] != 0 && deg[v] != 2) return false;
        alive[v] = deg[v] == 2;
    }
    return testing::brute_connected(a, alive);
}

} // namespace

TEST_CASE("EdgeSet basics") {
    EdgeSet a(130), b(130);
    a.set(0);
    a.set(64);
    a.set(129);
    b.set(64);
    b.set(5);
    CHECK(a.count() == 3);
    CHECK((a ^ b).members() == std::vector<std::size_t>{0, 5, 129});
    CHECK((a & b).members() == std::vector<std::size_t>{64});
    CHECK((a | b).count() == 4);
    CHECK(a.intersection_count(b) == 1);
    a.reset(64);
    CHECK_FALSE(a.test(64));
    a.flip(64);
    CHECK(a.test(64));
    a.clear();
    CHECK(a.empty());
}

TEST_CASE("xor group laws") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + t % 150;
        EdgeSet a(n), b(n), c(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (bit(rng)) a.set(i);
            if (bit(rng)) b.set(i);
            if (bit(rng)) c.set(i);
        }
        const EdgeSet zero(n);
        CHECK(xor_sets(a, b) == xor_sets(b, a));
        CHECK(xor_sets(xor_sets(a, b), c) == xor_sets(a, xor_sets(b, c)));
        CHECK(xor_sets(a, a) == zero);
        CHECK(xor_sets(a, zero) == a);
    }
}

TEST_CASE("xor examples") {
    const Graph k4 = named_fixture("K4");
    const EdgeSet f23 = edges_of(k4, {{2, 3}, {1, 2}, {1, 3}});
    const EdgeSet f24 = edges_of(k4, {{2, 4}, {1, 2}, {1, 4}});
    CHECK(xor_sets(f23, f23).empty());
    CHECK(xor_sets(f23, f24) == edges_of(k4, {{2, 3}, {2, 4}, {1, 3}, {1, 4}}));
    CHECK(is_elementary(k4, xor_sets(f23, f24)));

    const CycleBasis b = theta4_bstar();
    const EdgeSet ab = xor_sets(b[0].edges(), b[1].edges());
    CHECK(ab.count() == 8);
    CHECK_FALSE(is_elementary(theta4(), ab));
}

TEST_CASE("is_elementary examples") {
    const Graph c5 = named_fixture("C5");
    EdgeSet all = c5.empty_edge_set();
    for (EdgeId e = 0; e < c5.edge_count(); ++e) all.set(e);
    CHECK(is_elementary(c5, all));
    CHECK_FALSE(is_elementary(c5, c5.empty_edge_set()));

    const Graph two = testing::from_pairs({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 4}});
    CHECK_FALSE(is_elementary(two, edges_of(two, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})));
    CHECK(is_elementary(two, edges_of(two, {{1, 2}, {2, 3}, {1, 3}})));
    CHECK_FALSE(is_elementary(two, edges_of(two, {{1, 2}, {2, 3}})));
    CHECK_THROWS_AS(Cycle(two, edges_of(two, {{1, 2}, {2, 3}})), NotElementary);
}

TEST_CASE("is_elementary agrees with brute force") {
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        const Graph g = testing::random_graph(7, 0.5, rng);
        const std::size_t m = g.edge_count();
        if (m > 14) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            EdgeSet s = g.empty_edge_set();
            for (std::size_t e = 0; e < m; ++e)
                if ((mask >> e) & 1U) s.set(e);
            REQUIRE(is_elementary(g, s) == brute_elementary(g, s));
        }
    }
}

TEST_CASE("cycle sequences start at the smallest label") {
    const Graph& g = theta4();
    const Cycle m = cycle_of(g, {2, 5, 1, 3});
    CHECK(cycle_labels(g, m) == std::vector<Label>{1, 3, 2, 5});
    CHECK(m.length() == 4);
    CHECK(m.vertices().count() == 4);
    CHECK_THROWS_AS((void)cycle_of(g, {1, 2, 3}), PreconditionError);
    CHECK_THROWS_AS((void)cycle_of(g, {1, 3, 2, 9}), PreconditionError);
}

TEST_CASE("fundamental basis examples") {
    const Graph k4 = named_fixture("K4");
    const CycleBasis b = fundamental_basis(k4, TreeStrategy::Bfs);
    REQUIRE(b.size() == 3);
    CHECK(b[0].edges() == edges_of(k4, {{2, 3}, {1, 2}, {1, 3}}));
    CHECK(b[1].edges() == edges_of(k4, {{2, 4}, {1, 2}, {1, 4}}));
    CHECK(b[2].edges() == edges_of(k4, {{3, 4}, {1, 3}, {1, 4}}));

    const EdgeSet star = edges_of(k4, {{1, 2}, {1, 3}, {1, 4}});
    const CycleBasis given = fundamental_basis(k4, TreeStrategy::GivenTree, 0, &star);
    CHECK(given.canonical_key() == b.canonical_key());

    const Graph c5 = named_fixture("C5");
    const CycleBasis one = fundamental_basis(c5, TreeStrategy::Dfs);
    REQUIRE(one.size() == 1);
    CHECK(one[0].length() == 5);

    CHECK(fundamental_basis(theta4(), TreeStrategy::Bfs).size() == 3);
    CHECK_THROWS_AS((void)fundamental_basis(Graph(4, {{0, 1}, {2, 3}}), TreeStrategy::Bfs), PreconditionError);
    const EdgeSet not_tree = edges_of(k4, {{1, 2}, {2, 3}, {1, 3}});
    CHECK_THROWS_AS((void)fundamental_basis(k4, TreeStrategy::GivenTree, 0, &not_tree), PreconditionError);
}

TEST_CASE("basis validation") {
    const Graph& g = theta4();
    const Cycle a = cycle_of(g, {1, 3, 2, 4});
    const Cycle b = cycle_of(g, {1, 5, 2, 6});
    const Cycle ab_sum_part = cycle_of(g, {1, 3, 2, 5});
    CHECK_THROWS_AS(CycleBasis(g, {a, b}), RankDrop);
    const Cycle x = cycle_of(g, {1, 4, 2, 5});
    const Cycle y = cycle_of(g, {1, 3, 2, 5});
    // (1324)+(1425) = (1325), so these three are dependent.
    CHECK_THROWS_AS(CycleBasis(g, {a, x, y}), RankDrop);
    CHECK_NOTHROW(CycleBasis(g, {a, b, ab_sum_part}));
}

TEST_CASE("change_basis examples") {
    const Graph& g = theta4();
    const CycleBasis bstar = theta4_bstar();
    const std::vector<std::size_t> am{0, 2};
    const CycleBasis ve = change_basis(g, bstar, 0, am);
    CHECK(cycle_labels(g, ve[0]) == std::vector<Label>{1, 4, 2, 5});
    CHECK(ve[1] == bstar[1]);
    CHECK(ve[2] == bstar[2]);
    // In the rewritten basis every pair shares an edge.
    const PairTable t(g, ve);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(t.at(i, j).shared_edges == 2);

    const std::vector<std::size_t> self{1};
    CHECK(change_basis(g, bstar, 1, self).canonical_key() == bstar.canonical_key());

    const std::vector<std::size_t> ab{0, 1};
    CHECK_THROWS_AS((void)change_basis(g, bstar, 0, ab), NotElementary);
    const std::vector<std::size_t> missing{1, 2};
    CHECK_THROWS_AS((void)change_basis(g, bstar, 0, missing), PreconditionError);

    const Graph k4 = named_fixture("K4");
    const CycleBasis kb = fundamental_basis(k4, TreeStrategy::Bfs);
    const CycleBasis kh = change_basis(k4, kb, 0, std::vector<std::size_t>{0, 1});
    CHECK(cycle_labels(k4, kh[0]) == std::vector<Label>{1, 3, 2, 4});
    CHECK(kh[0].length() == 4);
}

TEST_CASE("enumerate_bases examples") {
    CHECK(enumerate_bases(named_fixture("C5"), 100).size() == 1);
    const Graph k4 = named_fixture("K4");
    const auto kb = enumerate_bases(k4, 100);
    CHECK(kb.size() >= 3);
    std::set<std::vector<EdgeSet>> keys;
    for (const CycleBasis& b : kb) keys.insert(b.canonical_key());
    CHECK(keys.size() == kb.size());
    CHECK(enumerate_bases(k4, 2).size() == 2);

    // Some enumerated THETA4 basis reaches B* with one change_basis step.
    const Graph& g = theta4();
    const auto target = theta4_bstar().canonical_key();
    bool reached = false;
    for (const CycleBasis& b : enumerate_bases(g, 100)) {
        if (b.canonical_key() == target) reached = true;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (i == j) continue;
                try {
                    if (change_basis(g, b, i, std::vector<std::size_t>{i, j}).canonical_key() == target) reached = true;
                } catch (const NotElementary&) {
                }
            }
    }
    CHECK(reached);

    bool in_expanded = false;
    for (const CycleBasis& b : expand_with_rewrites(g, enumerate_bases(g, 100), 100))
        in_expanded = in_expanded || b.canonical_key() == target;
    CHECK(in_expanded);
}

TEST_CASE("gf2 rank and unique decomposition match subset brute force") {
    std::mt19937 rng(23);
    for (int t = 0; t < 60; ++t) {
        const Graph g = testing::random_corpus_graph(4 + t % 5, 0.5, rng);
        const CycleBasis b = fundamental_basis(g, t % 2 ? TreeStrategy::Dfs : TreeStrategy::Bfs,
                                               static_cast<VertexId>(t % g.vertex_count()));
        std::vector<EdgeSet> sets;
        for (const Cycle& c : b.cycles()) sets.push_back(c.edges());
        CHECK(gf2_rank(sets) == cycle_space_dimension(g));
        if (sets.size() > 12) continue;
        // Every subset XOR is distinct, and decomposes back to that subset.
        std::set<std::vector<std::uint64_t>> sums;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sets.size()); ++mask) {
            EdgeSet s = g.empty_edge_set();
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < sets.size(); ++i)
                if ((mask >> i) & 1U) {
                    s ^= sets[i];
                    members.push_back(i);
                }
            sums.insert(s.words());
            const auto d = gf2_decompose(sets, s);
            REQUIRE(d.has_value());
            CHECK(*d == members);
        }
        CHECK(sums.size() == (std::size_t{1} << sets.size()));
        // A single edge is never in the cycle space.
        EdgeSet lone = g.empty_edge_set();
        lone.set(0);
        CHECK_FALSE(gf2_decompose(sets, lone).has_value());
    }
}

TEST_CASE("every searched basis has full rank over the corpus") {
    for (const auto& e : testing::corpus(4, 7)) {
        const Graph& g = e.graph;
        for (const CycleBasis& b : expand_with_rewrites(g, enumerate_bases(g, 4), 6)) {
            std::vector<EdgeSet> sets;
            std::size_t len = 0;
            EdgeSet covered = g.empty_edge_set();
            for (const Cycle& c : b.cycles()) {
                sets.push_back(c.edges());
                len += c.length();
                covered |= c.edges();
                CHECK(is_elementary(g, c.edges()));
            }
            CHECK(b.size() == g.edge_count() - g.vertex_count() + 1);
            CHECK(gf2_rank(sets) == b.size());
            if (find_bridges(g).empty()) CHECK(covered.count() == g.edge_count());
        }
    }
}
