// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include <limits>
#include <random>

#include "mspan/error.hpp"
#include "mspan/rational.hpp"

using mspan::ErrorCode;
using mspan::Rational;

TEST_CASE("rationals are stored reduced with a positive denominator") {
    const Rational a(4, 2);
    CHECK(a.num() == 2);
    CHECK(a.den() == 1);
    const Rational b(3, -6);
    CHECK(b.num() == -1);
    CHECK(b.den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
}

TEST_CASE("arithmetic and ordering are exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(9, 8) - Rational(1, 8) == Rational(1));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(9, 8).is_integer() == false);
    CHECK(Rational(-3, 5).sign() == -1);
}

TEST_CASE("ordering agrees with cross multiplication on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        CHECK((Rational(a, b) < Rational(c, d)) == (a * d < c * b));
        CHECK((Rational(a, b) == Rational(c, d)) == (a * d == c * b));
    }
}

TEST_CASE("results outside 64 bits throw OVERFLOW") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_ERROR_CODE(big + Rational(1), ErrorCode::Overflow);
    CHECK_ERROR_CODE(big * Rational(2), ErrorCode::Overflow);
    // comparisons of extreme values stay exact
    CHECK(Rational(std::numeric_limits<std::int64_t>::max(), 3) > Rational(std::numeric_limits<std::int64_t>::max() - 1, 3));
}
