#include <catch2/catch_amalgamated.hpp>

#include <mlie/prolong.hpp>
#include <mlie/structure.hpp>

using namespace mlie;

namespace {

// prolong of (id, gl(n)) is the whole vect
template <class F>
NonpositivePart<F> vect_negative(const SuperDomain& d) {
    NonpositivePart<F> np(d);
    for (size_t i = 0; i < d.size(); ++i) np.add(-1, VField<F>::partial(d, i));
    return np;
}

} // namespace

TEST_CASE("toy: vect(1;(1)) stabilizes at degree 1") {
    static auto d = make_domain(2, 1, 0, {1});
    NonpositivePart<GF2> np(d);
    np.add(-1, VField<GF2>::partial(d, 0));
    VField<GF2> x_dx = VField<GF2>::term(d, Monomial::unit(1, 0), 0);
    np.add(0, x_dx);
    auto res = complete_prolong(np);
    CHECK(res.dim(1) == 0);
    CHECK(res.stabilized);
    CHECK(res.total_dim() == 2);
}

TEST_CASE("from_negative reproduces full vect and svect") {
    static auto d = make_domain(2, 2, 0, {1, 1});
    auto np = vect_negative<GF2>(d);
    ProlongOptions opt;
    opt.from_negative = true;
    auto res = complete_prolong(np, opt);
    CHECK(res.dim(0) == 4);
    CHECK(res.dim(1) == 2);
    CHECK(res.dim(2) == 0);
    CHECK(res.total_dim() == 8);

    // svect(3;(1,1,1)) as the prolong of (id, sl(3)): dims 3, 8, 6, 0
    static auto d3 = make_domain(2, 3, 0, {1, 1, 1});
    NonpositivePart<GF2> np3(d3);
    for (size_t i = 0; i < 3; ++i) np3.add(-1, VField<GF2>::partial(d3, i));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            np3.add(0, VField<GF2>::term(d3, Monomial::unit(3, i), j));
        }
    // traceless diagonal: x1 d1 + x2 d2, x2 d2 + x3 d3
    for (size_t i = 0; i + 1 < 3; ++i) {
        VField<GF2> h = VField<GF2>::term(d3, Monomial::unit(3, i), i);
        h += VField<GF2>::term(d3, Monomial::unit(3, i + 1), i + 1);
        np3.add(0, h);
    }
    auto r3 = complete_prolong(np3);
    CHECK(r3.dim(0) == 8);
    CHECK(r3.dim(1) == 6);
    CHECK(r3.dim(2) == 0);

    // every degree-1 element is divergence-free
    for (auto& f : r3.g.fields(1)) CHECK(vf_div(f).is_zero());
}

TEST_CASE("direct and hom strategies agree") {
    static auto d3 = make_domain(2, 3, 0, {2, 1, 1});
    NonpositivePart<GF2> np3(d3);
    for (size_t i = 0; i < 3; ++i) np3.add(-1, VField<GF2>::partial(d3, i));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            np3.add(0, VField<GF2>::term(d3, Monomial::unit(3, i), j));
        }
    for (size_t i = 0; i + 1 < 3; ++i) {
        VField<GF2> h = VField<GF2>::term(d3, Monomial::unit(3, i), i);
        h += VField<GF2>::term(d3, Monomial::unit(3, i + 1), i + 1);
        np3.add(0, h);
    }
    ProlongOptions da, ho;
    da.force_method = 1;
    ho.force_method = 2;
    auto rd = complete_prolong(np3, da);
    auto rh = complete_prolong(np3, ho);
    REQUIRE(rd.top_degree == rh.top_degree);
    for (int k = -1; k <= rd.top_degree; ++k) {
        REQUIRE(rd.dim(k) == rh.dim(k));
        if (rd.dim(k)) REQUIRE(rd.g.piece(k).ech == rh.g.piece(k).ech);
    }
}

TEST_CASE("super prolong with squaring condition: vect(1;(1)|1)") {
    // vect on (x | xi): from negative part {d_x, d_xi}
    static auto d = make_domain(2, 1, 1, {1});
    NonpositivePart<GF2> np(d);
    np.add(-1, VField<GF2>::partial(d, 0));
    np.add(-1, VField<GF2>::partial(d, 1));
    ProlongOptions opt;
    opt.from_negative = true;
    auto res = complete_prolong(np, opt);
    // dim vect(1;(1)|1) = 2 * 4 = 8 = 2 + 4 + 2
    CHECK(res.dim(0) == 4);
    CHECK(res.dim(1) == 2);
    CHECK(res.total_dim() == 8);

    ProlongOptions ho = opt;
    ho.force_method = 2;
    auto rh = complete_prolong(np, ho);
    for (int k = -1; k <= res.top_degree; ++k) REQUIRE(res.dim(k) == rh.dim(k));
}

TEST_CASE("partial prolong is contained in the complete prolong") {
    // complete vect(2;(1,1)), then restrict h1 to a single line
    static auto d = make_domain(2, 2, 0, {1, 1});
    auto np = vect_negative<GF2>(d);
    ProlongOptions opt;
    opt.from_negative = true;
    auto full = complete_prolong(np, opt);
    REQUIRE(full.dim(1) == 2);

    auto& p1 = full.g.piece(1);
    GradedPiece<GF2> h1;
    h1.comp = p1.comp;
    h1.ech = Echelon<GF2>(p1.comp.dim());
    h1.ech.add_row(p1.ech.rows()[0]);
    std::map<int, GradedPiece<GF2>> h{{1, h1}};
    auto part = partial_prolong(np, full.g, h, 1, opt);
    for (int k = 2; k <= part.top_degree; ++k) {
        for (auto& r : part.g.has(k) ? part.g.piece(k).ech.rows() : std::vector<Row<GF2>>{})
            CHECK(full.g.piece(k).ech.member(r));
    }
}

TEST_CASE("regrade re-buckets without changing elements") {
    static auto d = make_domain(2, 2, 1, {1, 1});
    auto f = VField<GF2>::term(d, Monomial::unit(3, 0), 1); // x1 d2
    static auto d2 = d.with_degrees({2, 1, 1});
    auto g = regrade<GF2>({f}, d2);
    CHECK(g.dim(1) == 1); // deg x1 - deg x2 = 1 now
    CHECK(g.total_dim() == 1);
}

TEST_CASE("noncritical coordinates of vect(1)") {
    // vect(1;N): raising N always grows the prolong
    auto builder = [](const std::vector<unsigned>& N) {
        static std::vector<std::unique_ptr<SuperDomain>> keep;
        keep.push_back(std::make_unique<SuperDomain>(make_domain(2, 1, 0, N)));
        const SuperDomain& d = *keep.back();
        NonpositivePart<GF2> np(d);
        np.add(-1, VField<GF2>::partial(d, 0));
        np.add(0, VField<GF2>::term(d, Monomial::unit(1, 0), 0));
        return np;
    };
    auto nc = noncritical_coordinates<GF2>(builder, {1});
    REQUIRE(nc.size() == 1);
    CHECK(nc[0] == 0);
}
