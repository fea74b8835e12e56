#include <catch2/catch_amalgamated.hpp>

#include <mlie/divpoly.hpp>

#include <random>

using namespace mlie;

namespace {

template <class F>
DivPoly<F> random_poly(const SuperDomain& d, std::mt19937& rng, int terms = 4) {
    DivPoly<F> f(&d);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int t = 0; t < terms; ++t) {
        Monomial m(d.size());
        for (size_t i = 0; i < d.size(); ++i) {
            long cap = static_cast<long>(d.cap(i));
            m.e[i] = static_cast<Exponent>(coin(rng) % cap);
        }
        long c = coin(rng);
        f.add_term(m, F(c));
    }
    return f;
}

} // namespace

TEST_CASE("divided-power products over GF(2)") {
    auto d = make_domain(2, 1, 0, {2}); // one even u, cap 4
    auto u1 = DivPoly<GF2>::var(d, 0);
    auto u2 = DivPoly<GF2>::var(d, 0, 2);
    CHECK(u1 * u2 == DivPoly<GF2>::var(d, 0, 3)); // C(3,1) = 3 = 1 mod 2
    CHECK((u1 * u1).is_zero());                   // C(2,1) = 0 mod 2

    auto ds = make_domain(2, 0, 2);
    auto xi1 = DivPoly<GF2>::var(ds, 0);
    CHECK((xi1 * xi1).is_zero()); // odd truncation
}

TEST_CASE("distinguished derivatives") {
    auto d = make_domain(2, 1, 2, {2});
    auto u3 = DivPoly<GF2>::var(d, 0, 3);
    CHECK(u3.partial(0) == DivPoly<GF2>::var(d, 0, 2));

    auto xi1xi2 = DivPoly<GF2>::var(d, 1) * DivPoly<GF2>::var(d, 2);
    CHECK(xi1xi2.partial(1) == DivPoly<GF2>::var(d, 2));
    CHECK(DivPoly<GF2>::one(d).partial(0).is_zero());
}

TEST_CASE("degree, parity, weight") {
    auto d0 = make_domain(2, 1, 1, {2});
    auto f = DivPoly<GF2>::var(d0, 0, 2) * DivPoly<GF2>::var(d0, 1);
    CHECK(f.degree() == 3);

    auto d1 = make_domain(2, 0, 2);
    auto g = DivPoly<GF2>::var(d1, 0) * DivPoly<GF2>::var(d1, 1);
    CHECK(g.parity() == 0);

    auto d2 = make_domain(2, 0, 1).with_weights(2, {{1, 0}});
    CHECK(DivPoly<GF2>::var(d2, 0).weight() == std::vector<int>{1, 0});
}

TEST_CASE("basis enumeration honors caps and order") {
    auto d = make_domain(2, 0, 2);
    auto b = monomials_of_degree(d, 1);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == Monomial::unit(2, 0)); // xi1 before xi2
    CHECK(b[1] == Monomial::unit(2, 1));

    auto d1 = make_domain(2, 1, 0, {1});
    CHECK(monomials_of_degree(d1, 2).empty()); // u^(2) excluded at cap 2
    auto d2 = make_domain(2, 1, 0, {2});
    auto b2 = monomials_of_degree(d2, 3);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == Monomial::unit(1, 0, 3));
}

TEST_CASE("dim O(m;N|n) over GF(2) equals prod 2^{N_i} * 2^n") {
    auto d = make_domain(2, 2, 2, {1, 2});
    size_t total = 0;
    for (int k = 0; k <= 32; ++k) total += monomials_of_degree(d, k).size();
    CHECK(total == 2ull * 4ull * 4ull); // 2^1 * 2^2 * 2^2
}

TEST_CASE("supercommutativity and associativity") {
    std::mt19937 rng(7);
    {
        auto d = make_domain(2, 2, 3, {2, 1});
        for (int t = 0; t < 50; ++t) {
            auto f = random_poly<GF2>(d, rng);
            auto g = random_poly<GF2>(d, rng);
            auto h = random_poly<GF2>(d, rng);
            CHECK(f * g == g * f); // sign trivial for p=2
            CHECK((f * g) * h == f * (g * h));
        }
    }
    {
        Indeterminate q{"q", false, 16, 1, {}}, th{"th", true, 1, 1, {}}, z{"z", true, 1, 1, {}};
        SuperDomain d(0, {q, th, z});
        for (int t = 0; t < 50; ++t) {
            auto f = random_poly<Rat>(d, rng, 3);
            auto g = random_poly<Rat>(d, rng, 3);
            auto h = random_poly<Rat>(d, rng, 3);
            CHECK((f * g) * h == f * (g * h));
        }
    }
}

TEST_CASE("supercommutativity with signs over Q") {
    // homogeneous inputs: f*g = (-1)^{p(f)p(g)} g*f
    Indeterminate q{"q", false, 8, 1, {}}, th{"th", true, 1, 1, {}}, z{"z", true, 1, 1, {}};
    SuperDomain d(0, {q, th, z});
    auto thv = DivPoly<Rat>::var(d, 1);
    auto zv = DivPoly<Rat>::var(d, 2);
    CHECK(thv * zv == (zv * thv).scaled(Rat(-1)));
    auto qv = DivPoly<Rat>::var(d, 0);
    CHECK(qv * thv == thv * qv);
}

TEST_CASE("partials supercommute and satisfy Leibniz") {
    std::mt19937 rng(11);
    Indeterminate q1{"q1", false, 16, 1, {}}, q2{"q2", false, 16, 1, {}}, t1{"t1", true, 1, 1, {}},
        t2{"t2", true, 1, 1, {}};
    SuperDomain d(0, {q1, q2, t1, t2});
    for (int t = 0; t < 40; ++t) {
        auto f = random_poly<Rat>(d, rng, 3);
        auto g = random_poly<Rat>(d, rng, 3);
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = 0; j < d.size(); ++j) {
                long s = (d.odd(i) && d.odd(j)) ? -1 : 1;
                CHECK(f.partial(i).partial(j) == f.partial(j).partial(i).scaled(Rat(s)));
            }
        // Leibniz for homogeneous f: check term by term
        for (size_t i = 0; i < d.size(); ++i) {
            DivPoly<Rat> lhs = (f * g).partial(i);
            DivPoly<Rat> rhs(&d);
            rhs += f.partial(i) * g;
            for (auto& [m, c] : f.terms()) {
                Rat s = d.odd(i) ? sign_pow<Rat>(monomial_parity(d, m)) : Rat(1);
                rhs += DivPoly<Rat>::monomial(d, m, c * s) * g.partial(i);
            }
            CHECK(lhs == rhs);
        }
    }
}
