#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "kappa/rational.hpp"

using kappa::Rational;
using kappa::RationalMatrix;

TEST_CASE("rational normal form") {
    const Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(8, 4).to_string() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 2) > 3);
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational parse round trip") {
    for (const char* s : {"0", "5", "-7", "3/4", "-13/2"}) CHECK(Rational::parse(s).to_string() == s);
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.5", "2/3x"}) CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("rational overflow is reported, not wrapped") {
    const Rational big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
    CHECK_THROWS_AS(big * Rational(4), kappa::RationalOverflow);
    CHECK_THROWS_AS(big + big + big, kappa::RationalOverflow);
}

TEST_CASE("field axioms on random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
    for (int i = 0; i < 500; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == 0);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("exact linear algebra") {
    RationalMatrix a(2, 2);
    a(0, 0) = 2; a(0, 1) = -1; a(1, 0) = -1; a(1, 1) = 2;
    CHECK(kappa::determinant(a) == 3);
    const auto x = kappa::solve(a, {1, 0});
    CHECK(x[0] == Rational(2, 3));
    CHECK(x[1] == Rational(1, 3));
    CHECK(a.apply(x) == kappa::RationalVector{1, 0});
    CHECK(a * RationalMatrix::identity(2) == a);
    CHECK(a.transpose() == a);

    RationalMatrix singular(2, 2);
    singular(0, 0) = 1; singular(0, 1) = 2; singular(1, 0) = 2; singular(1, 1) = 4;
    CHECK(kappa::determinant(singular) == 0);
    CHECK_THROWS_AS(kappa::solve(singular, {1, 1}), std::domain_error);
}
