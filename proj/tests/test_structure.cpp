#include <catch_amalgamated.hpp>

#include "orient/bounds.hpp"
#include "orient/constructions.hpp"
#include "orient/structure.hpp"

#include "helpers.hpp"

using namespace orient;

namespace {

// V1 -> V2 -> V3 -> V1, every middle vertex in the "+" class.
Digraph all_plus_orientation(int p, int q) {
    const PartLayout L = layout({3, p, q});
    Digraph d(L.total());
    for (int x : L.part_vertices(0))
        for (int y : L.part_vertices(1))
            d.add_arc(x, y);
    for (int y : L.part_vertices(1))
        for (int z : L.part_vertices(2))
            d.add_arc(y, z);
    for (int z : L.part_vertices(2))
        for (int x : L.part_vertices(0))
            d.add_arc(z, x);
    return d;
}

} // namespace

TEST_CASE("classify the odd construction") {
    auto [plan, d] = odd_orientation(5, 19);
    const PartLayout L = layout({3, 5, 19});
    ClassAssignment c = classify(d, L);
    CHECK(c.class_size(0, 0b001) == 3); // k+1 middle vertices below hub 1 alone
    CHECK(c.class_size(0, 0b011) == 2); // k below hubs 1,2
    CHECK(c.class_size(1, 0b110) == 10);
    CHECK(c.class_size(1, 0b100) == 9);
    for (unsigned bits : {0b000u, 0b010u, 0b100u, 0b101u, 0b110u, 0b111u})
        CHECK(c.class_size(0, bits) == 0);

    int total = 0;
    for (int bits = 0; bits < 8; ++bits)
        total += c.class_size(0, bits) + c.class_size(1, bits);
    CHECK(total == 24); // classification is total over both non-hub parts
}

TEST_CASE("classify the singleton construction") {
    auto [plan, d] = singleton_orientation_55(5, 5, false, false);
    const PartLayout L = layout({3, 5, 5});
    ClassAssignment c = classify(d, L);
    CHECK(c.class_size(1, 0b110) == 1);
    CHECK(c.class_size(1, 0b101) == 1);
    CHECK(c.class_size(1, 0b011) == 3);
    CHECK(c.class_size(1, 0b111) == 0);
}

TEST_CASE("classify rejects layout mismatches") {
    auto [plan, d] = odd_orientation(5, 10);
    CHECK_THROWS_AS(classify(d, layout({3, 5, 19})), ValidationError);
    CHECK_THROWS_AS(classify(d, layout({5, 10, 3})), ValidationError);
    CHECK_THROWS_AS(classify(Digraph(18), layout({3, 5, 10})), ValidationError);
}

TEST_CASE("vertex with all three hub arcs inbound lands in the + class") {
    Digraph d = all_plus_orientation(5, 5);
    ClassAssignment c = classify(d, layout({3, 5, 5}));
    CHECK(c.class_size(0, 0b111) == 5);
    CHECK(c.class_size(1, 0b000) == 5);
}

TEST_CASE("h_partition sizes") {
    {
        auto [plan, d] = odd_orientation(5, 19);
        HPartition h = h_partition(classify(d, layout({3, 5, 19})));
        CHECK(h.nonempty == 2);
        CHECK(h.sizes[0b001] == 3);
        CHECK(h.sizes[0b011] == 2);
    }
    {
        auto [plan, d] = near_bipartite_orientation_57(5, 8);
        HPartition h = h_partition(classify(d, layout({3, 5, 8})));
        CHECK(h.nonempty == 3);
    }
    {
        HPartition h = h_partition(classify(all_plus_orientation(5, 5), layout({3, 5, 5})));
        CHECK(h.nonempty == 1);
    }
}

TEST_CASE("certified constructions violate nothing") {
    const std::vector<std::pair<int, std::vector<int>>> grid = {
        {5, {5, 7, 9, 12, 16, 19}}, {6, {6, 8, 11, 20, 30, 34}}};
    for (const auto& [p, qs] : grid)
        for (int q : qs) {
            auto [plan, d] = construct_diameter2(p, q);
            const PartLayout L = layout({3, p, q});
            StructureReport r = analyze_structure(d, L);
            CAPTURE(p, q, kind_name(plan.kind));
            CHECK(r.violations.empty());
            // and q respects the case bound for the observed |H|
            CaseBound cb = case_bound(p, r.h.nonempty);
            REQUIRE(cb.kind == CaseBound::Kind::Bound);
            CHECK(BigInt(q) <= cb.bound);
        }
}

TEST_CASE("the all-plus orientation violates the singleton rule and has diameter >= 3") {
    Digraph d = all_plus_orientation(5, 5);
    const PartLayout L = layout({3, 5, 5});
    StructureReport r = analyze_structure(d, L);
    bool saw3 = false;
    for (const Violation& v : r.violations)
        saw3 |= v.predicate == 3;
    CHECK(saw3);
    CHECK(diameter_report(d).diameter >= 3);
}

TEST_CASE("same class on both sides is predicate 1") {
    // K(3,1,1): both non-hub vertices below hub 1 alone
    Digraph d(5);
    d.add_arc(0, 3);
    d.add_arc(3, 1);
    d.add_arc(3, 2);
    d.add_arc(0, 4);
    d.add_arc(4, 1);
    d.add_arc(4, 2);
    d.add_arc(3, 4);
    const PartLayout L = layout({3, 1, 1});
    std::vector<Violation> v = check_lemma31(d, L, classify(d, L));
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().predicate == 1);
}

TEST_CASE("arc into a strictly larger class is predicate 5") {
    // middle vertex below {1}, last vertex below {1,2}; the arc must run
    // from the larger class to the smaller
    Digraph good(5);
    good.add_arc(0, 3);
    good.add_arc(3, 1);
    good.add_arc(3, 2);
    good.add_arc(0, 4);
    good.add_arc(1, 4);
    good.add_arc(4, 2);
    Digraph bad = good;
    good.add_arc(4, 3);
    bad.add_arc(3, 4);
    const PartLayout L = layout({3, 1, 1});
    CHECK(check_lemma31(good, L, classify(good, L)).empty());
    std::vector<Violation> v = check_lemma31(bad, L, classify(bad, L));
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().predicate == 5);
}

TEST_CASE("mixed pairs of the odd construction respect the antichain bound") {
    auto [plan, d] = odd_orientation(5, 19);
    const PartLayout L = layout({3, 5, 19});
    StructureReport r = analyze_structure(d, L);
    REQUIRE_FALSE(r.mixed_pairs.empty());
    for (const MixedPair& mp : r.mixed_pairs) {
        CHECK(mp.within_bound);
        CHECK(mp.bound == central_binom(mp.mixed_size));
    }
}

TEST_CASE("flipping one hub arc: reported violations imply diameter >= 3") {
    std::mt19937 rng(2024);
    int violations_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int q = 5 + int(rng() % 15);
        auto [plan, d] = construct_diameter2(5, q);
        const PartLayout L = layout({3, 5, q});
        const int hub = int(rng() % 3);
        const int v = 3 + int(rng() % (L.total() - 3));
        Digraph flipped = orient::test::with_flipped_arc(d, hub, v);
        std::vector<Violation> vio = check_lemma31(flipped, L, classify(flipped, L));
        bool hard = false;
        for (const Violation& x : vio)
            hard |= x.predicate == 1 || x.predicate == 3 || x.predicate == 5;
        if (hard) {
            ++violations_seen;
            CHECK(diameter_report(flipped).diameter >= 3);
        }
    }
    CHECK(violations_seen > 0); // the perturbation scheme does hit hard predicates
}
