#include <catch_amalgamated.hpp>

#include "orient/digraph.hpp"
#include "orient/multipartite.hpp"

#include "helpers.hpp"

using namespace orient;

namespace {
Digraph three_cycle() {
    return Digraph::from_oriented_edges(3, {{{0, 1}, {1, 2}, {2, 0}}});
}
} // namespace

TEST_CASE("from_oriented_edges basic cases") {
    Digraph d = Digraph::from_oriented_edges(2, {{{0, 1}}});
    CHECK(d.has_arc(0, 1));
    CHECK_FALSE(d.has_arc(1, 0));
    CHECK(d.arc_count() == 1);

    Digraph c = three_cycle();
    CHECK(c.arc_count() == 3);
    CHECK(c.has_arc(2, 0));
}

TEST_CASE("from_oriented_edges rejects bad arc sets") {
    CHECK_THROWS_AS(Digraph::from_oriented_edges(3, {{{0, 1}, {1, 0}}}), ValidationError);
    CHECK_THROWS_AS(Digraph::from_oriented_edges(3, {{{1, 1}}}), ValidationError);
    CHECK_THROWS_AS(Digraph::from_oriented_edges(3, {{{0, 1}, {0, 1}}}), ValidationError);
    CHECK_THROWS_AS(Digraph::from_oriented_edges(2, {{{0, 5}}}), ValidationError);
}

TEST_CASE("all_pairs_distances on the 3-cycle and a single arc") {
    DistanceMatrix m = all_pairs_distances(three_cycle());
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) {
            if (u == v)
                CHECK(m.at(u, v) == 0);
            else
                CHECK((m.at(u, v) == 1 || m.at(u, v) == 2));
        }

    Digraph d = Digraph::from_oriented_edges(2, {{{0, 1}}});
    DistanceMatrix s = all_pairs_distances(d);
    CHECK(s.at(0, 1) == 1);
    CHECK(s.at(1, 0) == kInfiniteDistance);
}

TEST_CASE("diameter_report") {
    DiameterReport r = diameter_report(three_cycle());
    CHECK(r.strong);
    CHECK(r.diameter == 2);
    CHECK(r.witness == std::pair<int, int>{0, 2}); // lexicographically smallest at distance 2

    DiameterReport s = diameter_report(Digraph::from_oriented_edges(2, {{{0, 1}}}));
    CHECK_FALSE(s.strong);
    CHECK(s.diameter == kInfiniteDistance);

    DiameterReport one = diameter_report(Digraph(1));
    CHECK(one.strong);
    CHECK(one.diameter == 0);
}

TEST_CASE("diam_between") {
    Digraph c = three_cycle();
    std::vector<int> u{0};
    CHECK(diam_between(c, u, u) == 0);
    std::vector<int> all{0, 1, 2};
    CHECK(diam_between(c, all, all) == 2);
    CHECK_THROWS_AS(diam_between(c, {}, all), RangeError);
}

TEST_CASE("is_bridgeless_underlying") {
    CHECK(is_bridgeless_underlying(3, {{{0, 1}, {1, 2}, {0, 2}}}));
    CHECK_FALSE(is_bridgeless_underlying(3, {{{0, 1}, {1, 2}}})); // path: two bridges
    CHECK(is_bridgeless_underlying(1, {}));
    CHECK_FALSE(is_bridgeless_underlying(2, {}));                 // disconnected
    CHECK_FALSE(is_bridgeless_underlying(4, {{{0, 1}, {2, 3}}})); // disconnected

    const PartLayout L = layout({3, 5, 5});
    CHECK(is_bridgeless_underlying(L.total(), edges(L)));
}

TEST_CASE("reverse is an involution and preserves the diameter") {
    Digraph c = three_cycle();
    Digraph r = reverse(c);
    CHECK(r.has_arc(1, 0));
    CHECK(reverse(r) == c);

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        Digraph d = orient::test::random_digraph(8, rng);
        CHECK(reverse(reverse(d)) == d);
        if (d.size() > 0) {
            DiameterReport a = diameter_report(d), b = diameter_report(reverse(d));
            CHECK(a.diameter == b.diameter);
            CHECK(a.strong == b.strong);
        }
    }
}

TEST_CASE("neighbor_sets") {
    Digraph c = three_cycle();
    auto [out, in] = neighbor_sets(c, 0);
    CHECK(out == std::vector<int>{1});
    CHECK(in == std::vector<int>{2});

    Digraph iso(2);
    auto [o2, i2] = neighbor_sets(iso, 1);
    CHECK(o2.empty());
    CHECK(i2.empty());
}

TEST_CASE("distance-2 criterion: empty out/in intersection forbids distance 2") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Digraph d = orient::test::random_digraph(7, rng);
        DistanceMatrix m = all_pairs_distances(d);
        for (int u = 0; u < 7; ++u)
            for (int v = 0; v < 7; ++v) {
                if (u == v || d.has_arc(u, v))
                    continue;
                const auto [ou, iu] = neighbor_sets(d, u);
                const auto [ov, iv] = neighbor_sets(d, v);
                bool meet = false;
                for (int w : ou)
                    for (int x : iv)
                        if (w == x)
                            meet = true;
                if (!meet)
                    CHECK(m.at(u, v) != 2);
            }
    }
}

TEST_CASE("BFS distances satisfy the triangle inequality") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Digraph d = orient::test::random_digraph(8, rng);
        DistanceMatrix m = all_pairs_distances(d);
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v)
                for (int w = 0; w < 8; ++w) {
                    if (m.at(u, v) == kInfiniteDistance || m.at(v, w) == kInfiniteDistance)
                        continue;
                    CHECK(m.at(u, w) <= m.at(u, v) + m.at(v, w));
                }
    }
}

TEST_CASE("orientations of a bridged graph are never strong") {
    // path 0-1-2: both orientations of each edge
    for (int mask = 0; mask < 4; ++mask) {
        Digraph d(3);
        d.add_arc(mask & 1 ? 1 : 0, mask & 1 ? 0 : 1);
        d.add_arc(mask & 2 ? 2 : 1, mask & 2 ? 1 : 2);
        CHECK_FALSE(diameter_report(d).strong);
    }
}

TEST_CASE("induced_subdigraph keeps arcs within the selection") {
    Digraph c = three_cycle();
    std::vector<int> sel{0, 1};
    Digraph s = induced_subdigraph(c, sel);
    CHECK(s.size() == 2);
    CHECK(s.has_arc(0, 1));
    CHECK(s.arc_count() == 1);
}
