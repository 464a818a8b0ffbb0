#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamcycle/classifier.hpp"
#include "hamcycle/corpus.hpp"
#include "hamcycle/errors.hpp"
#include "hamcycle/fixtures.hpp"
#include "support.hpp"

using namespace hamcycle;
using testing::cycle_of;

namespace {

const Graph& theta4() {
    static const Graph g = named_fixture("THETA4");
    return g;
}

// Shared subgraph of a and b is a single path (connected, two endpoints of degree 1).
bool shared_is_single_path(const Graph& g, const Cycle& a, const Cycle& b) {
    const EdgeSet common = a.edges() & b.edges();
    if (common.empty()) return false;
    std::vector<int> deg(g.vertex_count(), 0);
    common.for_each([&](std::size_t e) {
        ++deg[g.edge(static_cast<EdgeId>(e)).u];
        ++deg[g.edge(static_cast<EdgeId>(e)).v];
    });
    std::size_t ends = 0, verts = 0;
    for (int d : deg) {
        if (d == 1) ++ends;
        if (d > 0) ++verts;
        if (d > 2) return false;
    }
    return ends == 2 && verts == common.count() + 1;
}

} // namespace

TEST_CASE("pair classes on THETA4 and K4") {
    const Graph& g = theta4();
    const Cycle a = cycle_of(g, {1, 3, 2, 4});
    const Cycle b = cycle_of(g, {1, 5, 2, 6});
    const Cycle m = cycle_of(g, {1, 3, 2, 5});
    const PairClass ab = classify_pair(g, a, b);
    CHECK(ab.shared_vertices == 2);
    CHECK(ab.shared_edges == 0);
    CHECK(ab.tag == PairTag::TwoCommonV0);
    CHECK_FALSE(ab.sum_elementary);

    const PairClass am = classify_pair(g, a, m);
    CHECK(am.shared_edges == 2);
    CHECK(am.tag == PairTag::EdgeSharing);
    CHECK(am.sum_elementary);

    const Graph k4 = named_fixture("K4");
    const PairClass f = classify_pair(k4, cycle_of(k4, {1, 2, 3}), cycle_of(k4, {1, 2, 4}));
    CHECK(f.shared_vertices == 2);
    CHECK(f.shared_edges == 1);
    CHECK(f.tag == PairTag::EdgeSharing);
    CHECK(f.sum_elementary);
    CHECK(f.is_ve());

    const Graph two = testing::from_pairs({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 4}});
    CHECK(classify_pair(two, cycle_of(two, {1, 2, 3}), cycle_of(two, {4, 5, 6})).tag == PairTag::Disjoint);

    const Graph bow = named_fixture("BOWTIE");
    const PairClass one = classify_pair(bow, cycle_of(bow, {1, 2, 3}), cycle_of(bow, {1, 4, 5}));
    CHECK(one.shared_vertices == 1);
    CHECK(one.tag == PairTag::Other);
}

TEST_CASE("set classes") {
    const Graph& g = theta4();
    const Cycle a = cycle_of(g, {1, 3, 2, 4});
    const Cycle b = cycle_of(g, {1, 5, 2, 6});
    const Cycle m = cycle_of(g, {1, 3, 2, 5});
    CHECK(classify_set(g, std::vector<Cycle>{a, b}) == SetClass::V0Set);
    CHECK(classify_set(g, std::vector<Cycle>{a, b, m}) == SetClass::Mixed);

    const Graph k4 = named_fixture("K4");
    const std::vector<Cycle> faces{cycle_of(k4, {1, 2, 3}), cycle_of(k4, {1, 2, 4}), cycle_of(k4, {1, 3, 4})};
    CHECK(classify_set(k4, faces) == SetClass::VESet);

    const Graph two = testing::from_pairs({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 4}});
    CHECK(classify_set(two, std::vector<Cycle>{cycle_of(two, {1, 2, 3}), cycle_of(two, {4, 5, 6})}) ==
          SetClass::AllDisjoint);
    CHECK_THROWS_AS((void)classify_set(g, std::vector<Cycle>{a}), PreconditionError);
}

TEST_CASE("pair table matches classify_pair and is symmetric") {
    const Graph& g = theta4();
    const CycleBasis b(g, {cycle_of(g, {1, 3, 2, 4}), cycle_of(g, {1, 5, 2, 6}), cycle_of(g, {1, 3, 2, 5})});
    const PairTable t(g, b);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) {
                CHECK(t.at(i, j) == classify_pair(g, b[i], b[j]));
                CHECK(t.at(i, j) == t.at(j, i));
            }
    CHECK(t.set_class(std::vector<std::size_t>{0, 1}) == SetClass::V0Set);
    CHECK(t.set_class(std::vector<std::size_t>{0}) == SetClass::AllDisjoint);
}

TEST_CASE("classify_pair invariants over corpus bases") {
    for (const auto& e : testing::corpus(4, 7)) {
        const Graph& g = e.graph;
        for (const CycleBasis& b : enumerate_bases(g, 3)) {
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j) {
                    const PairClass p = classify_pair(g, b[i], b[j]);
                    CHECK(p == classify_pair(g, b[j], b[i]));
                    CHECK((p.tag == PairTag::TwoCommonV0) == (p.shared_vertices == 2 && p.shared_edges == 0));
                    CHECK((p.tag == PairTag::EdgeSharing) == (p.shared_edges >= 1));
                    CHECK(p.sum_elementary == is_elementary(g, b[i].edges() ^ b[j].edges()));
                    if (shared_is_single_path(g, b[i], b[j])) CHECK(p.sum_elementary);
                }
        }
    }
}

TEST_CASE("chain fixtures") {
    const ChainFixture two = chain_fixture(2, 4);
    CHECK(two.graph == theta4());
    REQUIRE(two.hubs.size() == 1);
    CHECK(two.hubs[0] == std::pair<Label, Label>{1, 2});
    CHECK(canonical_form(two.graph).code == canonical_form(theta4()).code);

    CHECK_THROWS_AS((void)chain_fixture(2, 3), PreconditionError);
    CHECK_THROWS_AS((void)chain_fixture(1, 4), PreconditionError);
    CHECK_THROWS_AS((void)chain_fixture(2, 2), PreconditionError);

    for (std::size_t k = 2; k <= 6; ++k) {
        for (std::size_t len : {4, 6, 8}) {
            CAPTURE(k);
            CAPTURE(len);
            const ChainFixture fx = chain_fixture(k, len);
            const Graph& g = fx.graph;
            CHECK(g.vertex_count() == k * len - 2 * (k - 1));
            CHECK(g.edge_count() == k * len);
            CHECK(fx.cycles.size() == k);
            CHECK(fx.lenses.size() == k - 1);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) {
                    const PairClass p = classify_pair(g, fx.cycles[i], fx.cycles[j]);
                    if (j == i + 1) {
                        CHECK(p.tag == PairTag::TwoCommonV0);
                    } else {
                        CHECK(p.tag == PairTag::Disjoint);
                    }
                }
            CHECK(classify_set(g, fx.cycles) == SetClass::V0Set);
            const CycleBasis b = fx.canonical_basis();
            CHECK(b.size() == 2 * k - 1);
            for (const Cycle& lens : fx.lenses) CHECK(lens.length() == len);
        }
    }
    CHECK(named_fixture("chain(3, 4)") == chain_fixture(3, 4).graph);
    CHECK_THROWS_AS((void)named_fixture("CHAIN(2,5)"), UnknownFixture);
}
