#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kappa/rootsys.hpp"

using namespace kappa;

namespace {

RootSystem sys(Family f, int r, const char* mult) { return build_root_system(f, r, parse_mult(mult)); }

Covector cv(std::initializer_list<Rational> c) { return Covector(RationalVector(c)); }

Covector random_covector(std::mt19937_64& rng, int rank) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    RationalVector c(rank);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return Covector(c);
}

}  // namespace

TEST_CASE("positive roots of small systems") {
    const auto a2 = sys(Family::A, 2, "all:1");
    REQUIRE(a2.positive_roots().size() == 3);
    CHECK(a2.find_root({1, 0}) >= 0);
    CHECK(a2.find_root({0, 1}) >= 0);
    CHECK(a2.find_root({1, 1}) >= 0);
    for (const auto& r : a2.positive_roots()) CHECK(r.multiplicity == 1);

    const auto a1 = sys(Family::A, 1, "all:2");
    REQUIRE(a1.positive_roots().size() == 1);
    CHECK(a1.positive_roots()[0].multiplicity == 2);

    const auto bc1 = sys(Family::BC, 1, "short:2 long:1");
    REQUIRE(bc1.positive_roots().size() == 2);
    CHECK(bc1.positive_roots()[bc1.find_root({1})].multiplicity == 2);
    CHECK(bc1.positive_roots()[bc1.find_root({2})].multiplicity == 1);
    CHECK_FALSE(bc1.reduced());
}

TEST_CASE("root counts match classification") {
    struct Case { Family f; int rank; const char* mult; std::size_t roots; };
    const Case cases[] = {
        {Family::A, 4, "all:1", 10},          {Family::B, 3, "short:1 long:1", 9},
        {Family::C, 3, "short:1 long:1", 9},  {Family::D, 4, "all:1", 12},
        {Family::BC, 3, "medium:1 short:1 long:1", 12},
        {Family::E6, 6, "all:1", 36},         {Family::E7, 7, "all:1", 63},
        {Family::E8, 8, "all:1", 120},        {Family::F4, 4, "short:1 long:1", 24},
        {Family::G2, 2, "short:1 long:1", 6},
    };
    for (const auto& c : cases) {
        INFO(family_name(c.f) << c.rank);
        CHECK(sys(c.f, c.rank, c.mult).positive_roots().size() == c.roots);
    }
    for (int l = 1; l <= 8; ++l) CHECK(sys(Family::A, l, "all:1").positive_roots().size() == std::size_t(l * (l + 1) / 2));
}

TEST_CASE("inner product on a*") {
    const auto a2 = sys(Family::A, 2, "all:1");
    CHECK(inner(a2, cv({1, 0}), cv({0, 1})) == -1);
    CHECK(inner(a2, cv({0, 0}), cv({1, 1})) == 0);
    CHECK(inner(a2, cv({1, 1}), cv({1, 1})) == 2);
}

TEST_CASE("n(lambda) examples") {
    const auto a2 = sys(Family::A, 2, "all:1");
    CHECK(n_of(a2, cv({0, 0})) == 0);
    CHECK(n_of(a2, rho(a2)) == 3);
    CHECK(n_of(a2, fundamental_weights(a2)[0]) == 2);
}

TEST_CASE("kappa examples") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(kappa::kappa(build_root_system(Family::A, n - 1, {{LengthClass::All, 2}})) == n - 1);
        CHECK(kappa::kappa(build_root_system(Family::A, n - 1, {{LengthClass::All, 1}})) == Rational(n - 1, 2));
    }
    CHECK(kappa::kappa(sys(Family::C, 2, "short:2 long:1")) == 2);
    CHECK(kappa::kappa(sys(Family::BC, 2, "medium:2 short:2 long:1")) == Rational(7, 2));
}

TEST_CASE("Weyl group orders") {
    CHECK(weyl_group(sys(Family::A, 1, "all:1")).size() == 2);
    CHECK(weyl_group(sys(Family::A, 2, "all:1")).size() == 6);
    CHECK(weyl_group(sys(Family::G2, 2, "short:1 long:1")).size() == 12);
    CHECK(weyl_group(sys(Family::B, 3, "short:1 long:1")).size() == 48);
    CHECK(weyl_group(sys(Family::BC, 2, "medium:1 short:1 long:1")).size() == 8);
    CHECK(weyl_group(sys(Family::D, 4, "all:1")).size() == 192);
    CHECK(weyl_group(sys(Family::F4, 4, "short:1 long:1")).size() == 1152);
    CHECK_THROWS_AS(weyl_group(sys(Family::E6, 6, "all:1")), std::length_error);
}

TEST_CASE("reflections") {
    const auto a2 = sys(Family::A, 2, "all:1");
    const auto& roots = a2.positive_roots();
    const auto& a1 = roots[a2.find_root({1, 0})];
    CHECK(reflect(a2, a1, cv({0, 1})) == cv({1, 1}));
    CHECK(reflect(a2, a1, cv({1, 0})) == cv({-1, 0}));
    // fundamental weight 2 is orthogonal to alpha_1
    const auto mu2 = fundamental_weights(a2)[1];
    CHECK(reflect(a2, a1, mu2) == mu2);
    const auto s = simple_reflection(a2, 0);
    CHECK(s.apply(cv({0, 1})) == cv({1, 1}));
}

TEST_CASE("rho examples") {
    CHECK(rho(sys(Family::A, 1, "all:1")) == cv({Rational(1, 2)}));
    CHECK(rho(sys(Family::A, 2, "all:1")) == cv({1, 1}));
    CHECK(rho(sys(Family::BC, 1, "short:2 long:1")) == cv({2}));
}

TEST_CASE("fundamental weights") {
    CHECK(fundamental_weights(sys(Family::A, 1, "all:1"))[0] == cv({1}));
    CHECK(fundamental_weights(sys(Family::BC, 1, "short:2 long:1"))[0] == cv({2}));
    const auto g2 = sys(Family::G2, 2, "short:1 long:1");
    const auto mus = fundamental_weights(g2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Rational ratio = inner(g2, mus[i], g2.simple_root(j)) / inner(g2, g2.simple_root(j), g2.simple_root(j));
            CHECK(ratio == (i == j ? 1 : 0));
        }
}

TEST_CASE("dominant representative") {
    const auto a2 = sys(Family::A, 2, "all:1");
    const auto r = rho(a2);
    const auto dom = dominant_representative(a2, r);
    CHECK(dom.dominant == r);
    CHECK(dom.element.word.empty());
    const auto neg = dominant_representative(a2, Rational(-1) * r);
    CHECK(neg.dominant == r);
    CHECK(neg.element.word.size() == 3);  // longest element of S3
    CHECK(neg.element.apply(Rational(-1) * r) == r);
}

TEST_CASE("bounded region membership") {
    const auto a2 = sys(Family::A, 2, "all:1");
    const auto r = rho(a2);
    CHECK(in_bounded_region(a2, r));
    CHECK(in_bounded_region(a2, cv({0, 0})));
    CHECK_FALSE(in_bounded_region(a2, Rational(2) * r));
    CHECK(in_bounded_region(a2, Rational(-1) * r));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(build_root_system(Family::A, 0, {{LengthClass::All, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Family::E6, 5, {{LengthClass::All, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Family::A, 2, {{LengthClass::All, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(sys(Family::B, 2, "short:1"), std::invalid_argument);
    CHECK_THROWS_AS(sys(Family::A, 2, "all:1 long:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("Q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_mult("all"), std::invalid_argument);
}

TEST_CASE("property: n is Weyl invariant and dominant representative preserves it") {
    std::mt19937_64 rng(11);
    for (const auto& s : {sys(Family::B, 3, "short:2 long:1"), sys(Family::G2, 2, "short:1 long:1"),
                          sys(Family::BC, 2, "medium:2 short:3 long:1")}) {
        const auto w = weyl_group(s);
        for (int k = 0; k < 50; ++k) {
            const auto lambda = random_covector(rng, s.rank());
            const int n = n_of(s, lambda);
            for (const auto& e : w) REQUIRE(n_of(s, e.apply(lambda)) == n);
            const auto dom = dominant_representative(s, lambda);
            CHECK(dom.element.apply(lambda) == dom.dominant);
            CHECK(n_of(s, dom.dominant) == n);
            for (int i = 0; i < s.rank(); ++i) CHECK(inner(s, dom.dominant, s.simple_root(i)) >= 0);
        }
    }
}

TEST_CASE("property: Weyl elements preserve the inner product") {
    std::mt19937_64 rng(12);
    const auto s = sys(Family::F4, 4, "short:1 long:1");
    const auto w = weyl_group(s);
    for (int k = 0; k < 20; ++k) {
        const auto a = random_covector(rng, 4), b = random_covector(rng, 4);
        const auto& e = w[rng() % w.size()];
        CHECK(inner(s, e.apply(a), e.apply(b)) == inner(s, a, b));
    }
}

TEST_CASE("property: kappa bounds n/2 from below") {
    std::mt19937_64 rng(13);
    const auto s = sys(Family::E7, 7, "all:1");
    const Rational k = kappa::kappa(s);
    CHECK(k == Rational(27, 2));
    for (int i = 0; i < 500; ++i) {
        auto lambda = random_covector(rng, 7);
        if (n_of(s, lambda) == 0) continue;
        CHECK(Rational(n_of(s, lambda), 2) >= k);
    }
}
