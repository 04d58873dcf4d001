#include <catch_amalgamated.hpp>

#include "orient/constructions.hpp"
#include "orient/thresholds.hpp"

using namespace orient;

namespace {
FormulaVerdict F(std::vector<long long> parts) { return f_formula(std::move(parts)); }
} // namespace

TEST_CASE("threshold for the 3-row family") {
    CHECK(threshold_3pq(5) == 20);
    CHECK(threshold_3pq(6) == 35);
    CHECK(threshold_3pq(11) == 924);
    CHECK_THROWS_AS(threshold_3pq(4), RangeError);
}

TEST_CASE("formula verdicts for the tripartite family") {
    CHECK(F({3, 5, 19}).f == 2);
    CHECK(F({3, 5, 19}).source == "Theorem 1.2");
    CHECK(F({3, 5, 20}).f == 3);
    CHECK(F({3, 4, 11}).f == 2);
    CHECK(F({3, 4, 12}).f == 3);
    CHECK(F({3, 3, 6}).f == 2);
    CHECK(F({3, 3, 7}).f == 3);
    CHECK(F({2, 2, 2}).f == 2);
    CHECK(F({2, 2, 3}).f == 3);
    CHECK(F({2, 3, 3}).f == 2);
    CHECK(F({2, 3, 4}).f == 3);
}

TEST_CASE("complete graphs and bipartite graphs") {
    CHECK(F({1, 1, 1}).f == 2);
    CHECK(F({1, 1, 1, 1}).f == 3);
    CHECK(F({1, 1, 1, 1, 1}).f == 2);
    CHECK(F({1, 1}).kind == FormulaVerdict::Kind::None);
    CHECK(F({2, 2}).f == 3);
    CHECK(F({2, 3}).f == 4);
    CHECK(F({3, 3}).f == 3);
    CHECK(F({3, 4}).f == 4);
    CHECK(F({1, 5}).kind == FormulaVerdict::Kind::None);
}

TEST_CASE("shapes without a classification report the 2..3 window") {
    CHECK(F({1, 1, 2}).kind == FormulaVerdict::Kind::UnknownWithin23);
    CHECK(F({1, 2, 2}).kind == FormulaVerdict::Kind::UnknownWithin23);
    CHECK(F({4, 5, 6}).kind == FormulaVerdict::Kind::UnknownWithin23);
    CHECK(F({2, 2, 2, 2}).kind == FormulaVerdict::Kind::UnknownWithin23);
}

TEST_CASE("input is normalized by sorting") {
    CHECK(F({19, 5, 3}).f == 2);
    CHECK(F({20, 3, 5}).f == 3);
    CHECK_THROWS_AS(F({}), RangeError);
    CHECK_THROWS_AS(F({3, 0, 5}), RangeError);
}

TEST_CASE("threshold is monotone in q") {
    int prev = 2;
    for (int q = 5; q <= 30; ++q) {
        const int f = F({3, 5, q}).f;
        CHECK(f >= prev);
        prev = f;
    }
}

TEST_CASE("formula and dispatcher agree on the diameter-2 domain at p = 5") {
    for (int q = 5; q <= 25; ++q) {
        const bool formula_two = F({3, 5, q}).f == 2;
        bool constructed = true;
        try {
            construct_diameter2(5, q);
        } catch (const RangeError&) {
            constructed = false;
        }
        CHECK(formula_two == constructed);
    }
}
