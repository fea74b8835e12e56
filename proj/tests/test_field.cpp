#include <catch2/catch_amalgamated.hpp>

#include <mlie/field.hpp>

#include <random>

using namespace mlie;

TEST_CASE("GF(2) arithmetic") {
    CHECK(GF2{1} + GF2{1} == GF2{0});
    CHECK(GF2{1} / GF2{1} == GF2{1});
    CHECK(GF2{1} * GF2{1} == GF2{1});
    CHECK(-GF2{1} == GF2{1});
    CHECK_THROWS(GF2{1} / GF2{0});
}

TEST_CASE("Q arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(3) / Rat(2) == Rat(3, 2));
    CHECK_THROWS(Rat(1) / Rat(0));
    CHECK(sign_pow<Rat>(1) == Rat(-1));
    CHECK(sign_pow<Rat>(4) == Rat(1));
}

TEST_CASE("sign_pow is identically 1 in characteristic 2") {
    CHECK(sign_pow<GF2>(1) == GF2{1});
    CHECK(sign_pow<GF2>(7) == GF2{1});
}

TEST_CASE("Lucas binomials") {
    CHECK(binom_mod(3, 1, 2) == 1);
    CHECK(binom_mod(2, 1, 2) == 0);
    for (unsigned n = 0; n < 20; ++n) CHECK(binom_mod(n, 0, 5) == 1);
}

// Independent factorial-formula oracle.
static mpz_class factorial(unsigned n) {
    mpz_class r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

TEST_CASE("Lucas agrees with the factorial formula for n <= 64") {
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned n = 0; n <= 64; ++n)
            for (unsigned k = 0; k <= n; ++k) {
                mpz_class c = factorial(n) / (factorial(k) * factorial(n - k));
                mpz_class cm = c % p;
                REQUIRE(binom_mod(n, k, p) == cm.get_ui());
            }
    }
}

template <class F>
static void field_axioms(std::mt19937& rng, int span) {
    std::uniform_int_distribution<long> d(-span, span);
    for (int t = 0; t < 300; ++t) {
        F a{d(rng)}, b{d(rng)}, c{d(rng)};
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + (-a) == F::zero());
        if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(12345);
    field_axioms<GF2>(rng, 10);
    field_axioms<GFp<3>>(rng, 10);
    field_axioms<Rat>(rng, 40);
}
