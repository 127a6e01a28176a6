#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "strebel/errors.hpp"
#include "strebel/intersections.hpp"

using namespace strebel;

namespace {
Rational br(std::vector<int> d) { return intersection_number(TauProduct{std::move(d)}); }
Rational oracle(std::vector<int> d) { return string_equation_oracle(TauProduct{std::move(d)}); }
}

TEST_CASE("intersection_number examples") {
    CHECK(br({0, 0, 0}) == 1);
    CHECK(br({1, 0, 0, 0}) == 1);
    CHECK(br({1, 1, 0, 0, 0}) == 2);
    CHECK(oracle({1, 1, 0, 0, 0}) == 2);
    CHECK_THROWS_AS(br({0, 0}), UsageError);
    CHECK_THROWS_AS(br({-1, 1, 0, 0}), UsageError);
}

TEST_CASE("string equation oracle examples") {
    CHECK(oracle({0, 0, 0}) == 1);
    CHECK(oracle({2, 0, 0, 0, 0}) == 1);
    CHECK(oracle({3, 0, 0, 0, 0, 0}) == 1);
    CHECK(br({3, 0, 0, 0, 0, 0}) == 1);
    CHECK(oracle({2, 2, 0, 0, 0, 0, 0}) == br({2, 2, 0, 0, 0, 0, 0}));
    CHECK(br({2, 2, 0, 0, 0, 0, 0}) == 6);
}

TEST_CASE("closed form equals the recursion for every tuple with n <= 9") {
    int count = 0;
    for (int n = 3; n <= 9; ++n) {
        for (const auto& t : admissible_products(n)) {
            int sum = 0;
            for (int x : t.d) sum += x;
            REQUIRE(sum == n - 3);
            CHECK(intersection_number(t) == string_equation_oracle(t));
            ++count;
        }
    }
    // ordered compositions of n-3 into n parts: C(2n-4, n-1)
    long expected = 0;
    for (int n = 3; n <= 9; ++n) expected += binomial(2 * n - 4, n - 1).get_si();
    CHECK(count == expected);
}

TEST_CASE("symmetry and dimension constraint") {
    std::vector<int> d = {3, 1, 0, 0, 1, 0, 0, 0};
    std::sort(d.begin(), d.end());
    const Rational v = br(d);
    do {
        CHECK(br(d) == v);
        CHECK(oracle(d) == v);
    } while (std::next_permutation(d.begin(), d.end()));
    CHECK(br({1, 1, 0, 0}) == 0);
    CHECK(br({0, 0, 0, 0}) == 0);
    CHECK(oracle({2, 0, 0, 0}) == 0);
}
