#include <catch_amalgamated.hpp>

#include "orient/bounds.hpp"
#include "orient/thresholds.hpp"

using namespace orient;

TEST_CASE("case bounds at p = 5") {
    CHECK(case_bound(5, 1).kind == CaseBound::Kind::Impossible);
    CHECK(case_bound(5, 7).kind == CaseBound::Kind::Impossible);
    CHECK(case_bound(5, 8).kind == CaseBound::Kind::NoTheorem);

    auto bound = [](int p, int h) { return case_bound(p, h).bound; };
    CHECK(bound(5, 2) == 19);
    CHECK(bound(5, 3) == 19); // 1 + 2 + 6 + 10
    CHECK(bound(5, 4) == 14); // max{1 + 2*3 + 6, 2 + 2*6}
    CHECK(bound(5, 5) == 5);  // 2 + 3
    CHECK(bound(5, 6) == 3);
}

TEST_CASE("case bound preconditions") {
    CHECK_THROWS_AS(case_bound(4, 2), RangeError);
    CHECK_THROWS_AS(case_bound(3, 4), RangeError);
    CHECK_THROWS_AS(case_bound(5, 0), RangeError);
    CHECK_THROWS_AS(case_bound(5, 9), RangeError);
    CHECK(case_bound(4, 3).kind == CaseBound::Kind::Bound);
    CHECK(case_bound(3, 1).kind == CaseBound::Kind::Impossible);
}

TEST_CASE("the h=2 bound is one below the diameter-3 threshold") {
    for (int p = 5; p <= 12; ++p)
        CHECK(case_bound(p, 2).bound == threshold_3pq(p) - 1);
}

TEST_CASE("lemma bounds") {
    CHECK(lemma_bound(5, "4.4") == 19); // 1 + 3*C(4,2)
    CHECK(lemma_bound(6, "4.21") == 6); // C(4,2)
    CHECK(lemma_bound(5, "4.17") == 5); // 2 + C(3,1)
    CHECK(lemma_bound(5, "4.18") == 5); // 1 + 2*C(2,1)
    CHECK(lemma_bound(5, "4.19") == 5);
    CHECK(lemma_bound(5, "4.6") == 19); // the C(6,3) - 1 branch of the max
    CHECK_THROWS_AS(lemma_bound(5, "4.21"), RangeError);
    CHECK_THROWS_AS(lemma_bound(3, "4.11"), RangeError);
    CHECK_THROWS_AS(lemma_bound(5, "9.9"), RangeError);
}

TEST_CASE("every lemma bound at p=5..8 stays below the h=2 ceiling") {
    const char* ids[] = {"4.4", "4.5",  "4.6",  "4.8",  "4.9",  "4.10", "4.11",
                         "4.13", "4.14", "4.15", "4.17", "4.18", "4.19"};
    for (int p = 6; p <= 8; ++p)
        for (const char* id : ids)
            CHECK(lemma_bound(p, id) <= case_bound(p, 2).bound);
}

TEST_CASE("inequality chains hold over a small range") {
    CHECK_FALSE(verify_inequality_chains(4, 24).has_value());
    CHECK_THROWS_AS(verify_inequality_chains(3, 10), RangeError);
    CHECK_THROWS_AS(verify_inequality_chains(8, 7), RangeError);
}

TEST_CASE("the h=3 ceiling meets the threshold with equality at p = 5") {
    auto cb = [](int m) { return central_binom(m); };
    CHECK(1 + cb(2) + cb(4) + cb(5) == cb(6) - 1); // 1+2+6+10 = 19
}

TEST_CASE("two-index monotonicity is tight at m = n") {
    auto cb = [](int m) { return central_binom(m); };
    CHECK(cb(2) - cb(1) == 1); // the m = n = 1 case holds with equality
}
