#include <catch_amalgamated.hpp>

#include <algorithm>

#include "orient/search.hpp"
#include "orient/thresholds.hpp"

using namespace orient;

TEST_CASE("brute force nails the small classified instances") {
    CHECK(f_bruteforce({2, 2, 2}).f == 2);
    CHECK(f_bruteforce({2, 2, 3}).f == 3);
    CHECK(f_bruteforce({1, 1, 1, 1}).f == 3);
    CHECK(f_bruteforce({1, 1, 1}).f == 2);
    CHECK(f_bruteforce({3, 3}).f == 3);
    CHECK(f_bruteforce({2, 3}).f == 4);
}

TEST_CASE("brute force returns a witness that attains f") {
    for (std::vector<int> parts : {std::vector<int>{2, 2, 2}, {1, 1, 1, 1}, {2, 3}}) {
        SearchResult r = f_bruteforce(parts);
        REQUIRE(r.witness.has_value());
        DiameterReport rep = diameter_report(*r.witness);
        CHECK(rep.strong);
        CHECK(rep.diameter == *r.f);
    }
}

TEST_CASE("brute force refuses oversized instances and bridged graphs") {
    CHECK_THROWS_WITH(f_bruteforce({3, 3, 3}),
                      Catch::Matchers::ContainsSubstring("exists_diam2_backtracking"));
    SearchResult bridged = f_bruteforce({1, 2});
    CHECK_FALSE(bridged.f.has_value()); // star: every orientation fails to be strong
    CHECK_FALSE(f_bruteforce({1, 1}).f.has_value());
}

TEST_CASE("f is invariant under part permutation") {
    CHECK(f_bruteforce({3, 2, 2}).f == f_bruteforce({2, 2, 3}).f);
    CHECK(f_bruteforce({3, 2}).f == f_bruteforce({2, 3}).f);
}

TEST_CASE("threaded scan returns the same f") {
    CHECK(f_bruteforce({2, 2, 3}, 24, 4).f == f_bruteforce({2, 2, 3}).f);
    CHECK(f_bruteforce({2, 3, 3}, 24, 4).f == 2);
}

TEST_CASE("backtracking decision agrees with brute force") {
    const std::vector<std::vector<int>> instances = {
        {1, 1, 1}, {2, 2, 2}, {2, 2, 3}, {1, 1, 1, 1}, {3, 3}, {2, 3, 3}};
    for (const auto& parts : instances) {
        CAPTURE(parts);
        Diam2Result bt = exists_diam2_backtracking(parts);
        CHECK(bt.exists == (f_bruteforce(parts).f == 2));
        if (bt.exists) {
            REQUIRE(bt.witness.has_value());
            CHECK(diameter_report(*bt.witness).diameter <= 2);
        }
    }
    CHECK_THROWS_AS(exists_diam2_backtracking({3, 3, 20}), RangeError);
}

TEST_CASE("sperner enumeration matches the table row") {
    const int expected_max[] = {1, 2, 3, 6, 10};
    for (int n = 1; n <= 5; ++n) {
        SpernerResult r = sperner_check(n);
        CHECK(r.max_size == expected_max[n - 1]);
        for (const auto& family : r.maximum_antichains) {
            // equality only for uniform families of one of the middle sizes
            const int size0 = std::popcount(family.front());
            CHECK((size0 == n / 2 || size0 == (n + 1) / 2));
            for (uint32_t s : family)
                CHECK(std::popcount(s) == size0);
        }
    }
    CHECK(sperner_check(4).maximum_antichains.size() == 1);
    CHECK(sperner_check(5).maximum_antichains.size() == 2);
    CHECK(sperner_check(5).antichain_count == 7581);
    CHECK(sperner_check(1).max_size == 1);
    CHECK_THROWS_AS(sperner_check(0), RangeError);
    CHECK_THROWS_AS(sperner_check(6), RangeError);
}

TEST_CASE("every orientation of an oversubscribed bipartite graph has a far pair") {
    CHECK(lemma22_check(2, 3));
    CHECK_THROWS_AS(lemma22_check(2, 2), RangeError); // hypothesis q > C(p, floor(p/2))
    CHECK_THROWS_AS(lemma22_check(4, 7), RangeError); // 28 edges over budget
}

TEST_CASE("examined counts the canonical half of the space") {
    SearchResult r = f_bruteforce({2, 2}); // 4 edges, no early stop below f=3
    CHECK(r.examined == 8);
    CHECK(r.f == 3);
}

TEST_CASE("a graph is bridged exactly when every orientation fails to be strong") {
    const std::vector<std::vector<int>> instances = {
        {1, 2}, {1, 3}, {1, 1}, {2, 2}, {1, 1, 1}, {1, 1, 2}};
    for (const auto& parts : instances) {
        CAPTURE(parts);
        const PartLayout L = layout(parts);
        const auto es = edges(L);
        bool some_strong = false;
        for (uint64_t mask = 0; mask < (uint64_t(1) << es.size()); ++mask) {
            Digraph d(L.total());
            for (size_t e = 0; e < es.size(); ++e) {
                auto [u, v] = es[e];
                if (mask >> e & 1)
                    d.add_arc(v, u);
                else
                    d.add_arc(u, v);
            }
            some_strong |= diameter_report(d).strong;
        }
        CHECK(some_strong == is_bridgeless_underlying(L.total(), es));
    }
}
