#include <catch2/catch_amalgamated.hpp>

#include <mlie/catalog_tables.hpp>

using namespace mlie;

TEST_CASE("series: vect and svect dimensions") {
    auto v = realize(build_vect<GF2>(2, 0, {1, 1}));
    CHECK(v.g.total_dim() == 8);
    auto s = realize(build_svect<GF2>(3, 0, {1, 1, 1}));
    CHECK(s.g.dim(0) == 8);
    CHECK(s.g.dim(1) == 6);
    CHECK(s.g.total_dim() == 17);
    // super svect(1|1)
    auto ss = realize(build_svect<GF2>(1, 1, {1}));
    CHECK(ss.g.dim(0) == 3);
}

TEST_CASE("series: h, le, sle spans") {
    auto h = realize(build_h<GF2>(1, {1, 1}));
    // h(2;(1,1)): H_f for f in O(p,q)/const: dim 4 - 1 = 3? H is not injective
    // on constants only; count via components
    CHECK(h.g.dim(-1) == 2);
    CHECK(h.g.total_dim() == 2 + h.g.dim(0) + h.g.dim(1));

    auto le = realize(build_le<GF2>(2, {1, 1}));
    // le(2;N_s|2): Le_f for f in O(q|xi)/K plus the virtual q_i^(2):
    // dim le = 2^4 - 1 + ... check the first components instead
    CHECK(le.g.dim(-1) == 4);
    auto sle = realize(build_le<GF2>(2, {1, 1}, true));
    CHECK(sle.g.dim(-1) == 4);
    CHECK(sle.g.dim(0) < le.g.dim(0));

    // irregular generators present: le gains the q_i^(2)-fields at degree 0
    // via x_i d_xi; compare against the pure span without them
    CHECK(le.g.dim(0) == 8); // pe(2) for p=2: A (4) + symmetric C (3) + ZD B (1)
}

TEST_CASE("series: contact and pericontact prolongs") {
    auto k5 = realize(build_k<GF2>(2, 0, false, {1, 1, 1, 1, 1}));
    // k(5;N_s): dim = dim O(5;N_s) = 32
    CHECK(k5.g.total_dim() == 32);
    auto m2 = realize(build_m<GF2>(2, {1, 1}));
    // m(2;N_s|3): generating functions O(2;N|3 odd incl tau): dim 32
    CHECK(m2.g.total_dim() == 32);
    // vect(1;(2)) = k(1;(2))
    auto k1 = realize(build_k<GF2>(0, 0, false, {2}));
    CHECK(k1.g.total_dim() == 4);
}

TEST_CASE("series: b_ab, sb, sm spans close") {
    auto b01 = realize(build_m_subseries<GF2>(MSeries::Bab, 2, {1, 1}, GF2{0}, GF2{1}));
    // b_{0,1} = b(n): d_tau f = 0: dim = functions without tau = 16
    CHECK(b01.g.total_dim() == 16);
    auto sb = realize(build_m_subseries<GF2>(MSeries::Sb, 2, {1, 1}));
    CHECK(sb.g.total_dim() < 16);
    auto sm = realize(build_m_subseries<GF2>(MSeries::Sm, 2, {1, 1}));
    CHECK(sm.g.total_dim() > 0);
    for (auto& [deg, piece] : sm.g.pieces())
        for (auto& f : sm.g.fields(deg)) CHECK(pericontact_laplacian(pericontact_pairing(*sm.dom), DivPoly<GF2>::zero(*sm.dom)).is_zero());
}

TEST_CASE("vle(4;N_s|3) component superdimensions") {
    auto a = realize(build_vle_super<GF2>({1, 1, 1}), 6);
    CHECK(a.g.sdim(-1) == std::make_pair<size_t, size_t>(4, 3));
    CHECK(a.g.sdim(1) == std::make_pair<size_t, size_t>(16, 18));
    CHECK(a.g.sdim(2) == std::make_pair<size_t, size_t>(10, 12));
    CHECK(a.g.sdim(3) == std::make_pair<size_t, size_t>(4, 3));
    CHECK(a.g.sdim(4) == std::make_pair<size_t, size_t>(1, 0));
    CHECK(a.g.dim(5) == 0);
}

TEST_CASE("vle(4|3) over Q has sdim g1 = 28|27") {
    auto a = realize(build_vle_super<Rat>({24, 24, 24}, 6), 1);
    CHECK(a.g.sdim(1) == std::make_pair<size_t, size_t>(28, 27));
}

TEST_CASE("vle7 prolongs to the printed dimensions") {
    auto b = build_vle7<GF2>({1, 1, 1, 1, 1, 1, 1});
    auto a = realize(b);
    CHECK(a.g.dim(0) == 25);
    CHECK(a.g.dim(1) == 34);
    CHECK(a.g.dim(2) == 22);
    CHECK(a.g.dim(3) == 7);
    CHECK(a.g.dim(4) == 1);
    CHECK(a.g.dim(5) == 0);
    CHECK(a.g.total_dim() == 96);
}

TEST_CASE("vle9 and vle9_tilde") {
    auto a = realize(build_vle9<GF2>({2, 2, 2, 1, 1, 1, 1, 1, 1}));
    CHECK(a.g.dim(-2) == 3);
    CHECK(a.g.dim(-1) == 6);
    CHECK(a.g.dim(0) == 12);
    CHECK(a.g.dim(1) == 18);

    auto t = realize(build_vle9_tilde<GF2>({2, 2, 2}), 1);
    CHECK(t.g.sdim(-2) == std::make_pair<size_t, size_t>(1, 0));
    CHECK(t.g.sdim(-1) == std::make_pair<size_t, size_t>(4, 4));
    CHECK(t.g.sdim(1) == std::make_pair<size_t, size_t>(20, 20));
}

TEST_CASE("shen prolong has total dimension 17") {
    auto a = realize(build_shen<GF2>({1, 1, 1, 2, 2}));
    CHECK(a.g.dim(1) == 2);
    CHECK(a.g.total_dim() == 17);
}

TEST_CASE("sb_tilde n=3 reproduces the printed g0") {
    auto b = build_sb_tilde<GF2>(3, {1, 1, 1, 1, 1, 1, 1}, true);
    // printed table (17 elements)
    std::vector<std::string> printed = {
        "x1*D7 + x4*D2 + x5*D3 + x7*D6",
        "x2*D7 + x4*D1 + x6*D3 + x7*D5",
        "x3*D7 + x5*D1 + x6*D2 + x7*D4",
        "x2*D1 + x6*D5",
        "x3*D1 + x6*D4",
        "x1*D2 + x5*D6",
        "x1*D1 + x2*D2 + x5*D5 + x6*D6",
        "x1*D1 + x3*D3 + x4*D4 + x6*D6",
        "x3*D2 + x5*D4",
        "x1*D3 + x4*D6",
        "x2*D3 + x4*D5",
        "x3*D4",
        "x2*D5",
        "x2*D4 + x3*D5",
        "x1*D6",
        "x1*D5 + x2*D6",
        "x1*D4 + x3*D6"};
    const SuperDomain& d = *b.dom;
    DegreeComponent c0(d, 0);
    Echelon<GF2> mine(c0.dim()), theirs(c0.dim());
    for (auto& f : b.np.parts.at(0)) mine.add_row(c0.coords<GF2>(f));
    for (auto& s : printed) theirs.add_row(c0.coords<GF2>(parse_field<GF2>(d, s)));
    CHECK(mine.rank() == 17);
    CHECK(mine == theirs);
}

TEST_CASE("sb_tilde n=3 prolong dims") {
    auto a = realize(build_sb_tilde<GF2>(3, {3, 3, 3, 1, 1, 1, 1}, true), 3);
    CHECK(a.g.dim(1) == 31);
    CHECK(a.g.dim(2) == 49);
    CHECK(a.g.dim(3) == 71);
}

TEST_CASE("kas7_tilde, kas8, kas10 first components") {
    auto k7 = realize(build_kas7_tilde<GF2>({2, 1, 1, 1, 1, 1, 1}, false), 1);
    CHECK(k7.g.sdim(1) == std::make_pair<size_t, size_t>(16, 18));
    auto k7d = realize(build_kas7_tilde<GF2>({2, 1, 1, 1, 2, 2, 2}, true), 1);
    CHECK(k7d.g.dim(1) == 55);
    auto k8 = realize(build_kas8<GF2>({2, 1, 1, 1, 1, 1, 1, 1}, false), 1);
    CHECK(k8.g.sdim(1) == std::make_pair<size_t, size_t>(16, 16));
    auto k10 = realize(build_kas10<GF2>({1, 2, 1, 1, 1, 1, 1, 1, 1, 1}, false), 1);
    CHECK(k10.g.sdim(1) == std::make_pair<size_t, size_t>(8, 8));
}

TEST_CASE("kle15 low components") {
    auto a = realize(build_kle15<GF2>({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), 1);
    CHECK(a.g.dim(-2) == 5);
    CHECK(a.g.dim(-1) == 10);
    CHECK(a.g.dim(0) == 24);
    CHECK(a.g.dim(1) == 40);
}

TEST_CASE("mb3_11 nonpositive part and g0") {
    auto a = realize(build_mb3_11<GF2>({1, 1, 1, 1, 1}), 1);
    CHECK(a.g.dim(0) == 12);
    CHECK(a.g.dim(-1) == 6);
    CHECK(a.g.dim(1) == 12); // V1 (6) + V2 at N_s (6)
}

TEST_CASE("mb9 and mb2_11 first components") {
    auto a = realize(build_mb9<GF2>({2, 2, 2, 2, 1, 1, 1, 2, 1}), 1);
    CHECK(a.g.dim(0) == 26);
    CHECK(a.g.dim(1) == 64);
    auto t = realize(build_mb2_11<GF2>({2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1}, false), 1);
    CHECK(t.g.sdim(1) == std::make_pair<size_t, size_t>(20, 20));
}

TEST_CASE("vas g0 closes and prolongs") {
    auto a = realize(build_vas<GF2>({1, 1, 1, 1, 1, 1, 1, 1}, false), 2);
    CHECK(a.g.sdim(0) == std::make_pair<size_t, size_t>(16, 16));
    CHECK(a.g.dim(1) > 0);
}
