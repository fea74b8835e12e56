#pragma once

// The mb machinery: the collection bracket presenting mb(3|8) by five
// functions of (u, chi), and the closed-form bracket on the five summands
// V1..V5 of the complex realization that pins the deformed [V4,V5]
// coefficient through a Jacobi check.

#include "extform.hpp"
#include "genfun.hpp"

namespace mlie {

// domain (u1,u2,u3 | chi1,chi2); over Q the even caps are working bounds
inline SuperDomain make_mb_domain(unsigned p, unsigned even_cap) {
    std::vector<Indeterminate> xs(5);
    for (int i = 0; i < 3; ++i) {
        xs[i].name = "u" + std::to_string(i + 1);
        xs[i].shearing = even_cap;
    }
    for (int i = 0; i < 2; ++i) {
        xs[3 + i].name = "chi" + std::to_string(i + 1);
        xs[3 + i].odd = true;
    }
    return SuperDomain(p, std::move(xs));
}

// A collection {alpha_1, alpha_2, f_1, f_2, f_3} subject to
//   sum (-1)^{p(f_i)} df_i/du_i + dalpha_1/dchi_1 + dalpha_2/dchi_2 = 0.
// The collection's parity p is the parity of the f_i (the alpha_s have
// parity p+1).
template <class F>
struct MbCollection {
    DivPoly<F> a1, a2, f1, f2, f3;
    int parity = 0;

    const DivPoly<F>& f(int i) const { return i == 0 ? f1 : (i == 1 ? f2 : f3); }
    DivPoly<F>& f(int i) { return i == 0 ? f1 : (i == 1 ? f2 : f3); }

    static MbCollection zero(const SuperDomain& d, int parity = 0) {
        MbCollection c{DivPoly<F>::zero(d), DivPoly<F>::zero(d), DivPoly<F>::zero(d),
                       DivPoly<F>::zero(d), DivPoly<F>::zero(d), parity};
        return c;
    }

    friend MbCollection operator+(const MbCollection& x, const MbCollection& y) {
        return MbCollection{x.a1 + y.a1, x.a2 + y.a2, x.f1 + y.f1,
                            x.f2 + y.f2, x.f3 + y.f3, x.parity};
    }
    friend bool operator==(const MbCollection& x, const MbCollection& y) {
        return x.a1 == y.a1 && x.a2 == y.a2 && x.f1 == y.f1 && x.f2 == y.f2 && x.f3 == y.f3;
    }
};

template <class F>
DivPoly<F> mb_constraint(const MbCollection<F>& c) {
    const SuperDomain& d = c.a1.domain();
    DivPoly<F> r(&d);
    F s = sign_pow<F>(c.parity);
    for (int i = 0; i < 3; ++i) r += c.f(i).partial(i).scaled(s);
    r += c.a1.partial(3);
    r += c.a2.partial(4);
    return r;
}

// The bracket of collections (the gamma/h formulas).
template <class F>
MbCollection<F> collection_bracket(const MbCollection<F>& X, const MbCollection<F>& Y) {
    const SuperDomain& d = X.a1.domain();
    MbCollection<F> H = MbCollection<F>::zero(d, (X.parity + Y.parity) & 1);
    F sG = sign_pow<F>(Y.parity);
    F sFG = sign_pow<F>(X.parity * Y.parity);
    auto gamma = [&](const DivPoly<F>& alpha, const DivPoly<F>& beta, const DivPoly<F>& Xa1,
                     const DivPoly<F>& Xa2, const DivPoly<F>& Ya1, const DivPoly<F>& Ya2) {
        DivPoly<F> g(&d);
        for (int i = 0; i < 3; ++i) {
            g -= X.f(i) * beta.partial(i);
            g += (alpha.partial(i) * Y.f(i)).scaled(sG);
        }
        g += Xa1 * beta.partial(3);
        g += Xa2 * beta.partial(4);
        g -= (Ya1 * alpha.partial(3)).scaled(sFG);
        g -= (Ya2 * alpha.partial(4)).scaled(sFG);
        return g;
    };
    H.a1 = gamma(X.a1, Y.a1, X.a1, X.a2, Y.a1, Y.a2);
    H.a2 = gamma(X.a2, Y.a2, X.a1, X.a2, Y.a1, Y.a2);
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        DivPoly<F> h(&d);
        for (int r = 0; r < 3; ++r) {
            h -= X.f(r) * Y.f(i).partial(r);
            h += X.f(i).partial(r) * Y.f(r);
        }
        DivPoly<F> cross(&d);
        cross += X.a2.partial(j) * Y.a1.partial(k);
        cross -= X.a2.partial(k) * Y.a1.partial(j);
        cross -= X.a1.partial(j) * Y.a2.partial(k);
        cross += X.a1.partial(k) * Y.a2.partial(j);
        h -= cross.scaled(sG);
        h += X.a1 * Y.f(i).partial(3);
        h += X.a2 * Y.f(i).partial(4);
        h -= (Y.a1 * X.f(i).partial(3)).scaled(sFG);
        h -= (Y.a2 * X.f(i).partial(4)).scaled(sFG);
        H.f(i) = h;
    }
    return H;
}

// Characteristic-2 identification with the deformed svect(5): the field
// D^f = sum f_i d_i on (u1..u3, u4 = chi1, u5 = chi2), all even.
template <class F>
MbCollection<F> collection_from_field(const SuperDomain& mbdom, const VField<F>& D, int parity) {
    static_assert(F::characteristic == 2);
    MbCollection<F> c = MbCollection<F>::zero(mbdom, parity);
    auto pull = [&](size_t i) {
        DivPoly<F> r(&mbdom);
        DivPoly<F> src = D.coeff(i);
        for (auto& [m, cf] : src.terms()) r.add_term(m, cf);
        return r;
    };
    c.f1 = pull(0);
    c.f2 = pull(1);
    c.f3 = pull(2);
    c.a1 = pull(3);
    c.a2 = pull(4);
    return c;
}

// ---------------------------------------------------------------------------
// The five summands of mb(3|8) over a characteristic-zero field, with the
// brackets of the complex realization. The [V4,V5] bracket takes the
// coefficient of its V1 summand as a parameter; the Jacobi identity for
// the paper's test triple holds for 1 and fails for 1/2.

template <class F>
struct MbElement {
    // V1: closed 2-form; V2: sl(2)-valued function (entries m[0]=f*a,
    // m[1]=f*c, m[2]=f*b, m[3]=-f*a as in ((a,c),(b,-a))); V3: vector
    // field; V4: function pair (f v1, f v2); V5: 2-form pair.
    ExtForm<F> v1;
    std::array<DivPoly<F>, 4> v2;
    VField<F> v3;
    std::pair<DivPoly<F>, DivPoly<F>> v4;
    std::pair<ExtForm<F>, ExtForm<F>> v5;

    static MbElement zero(const SuperDomain& d) {
        return MbElement{ExtForm<F>(&d, 2),
                         {DivPoly<F>::zero(d), DivPoly<F>::zero(d), DivPoly<F>::zero(d),
                          DivPoly<F>::zero(d)},
                         VField<F>(&d),
                         {DivPoly<F>::zero(d), DivPoly<F>::zero(d)},
                         {ExtForm<F>(&d, 2), ExtForm<F>(&d, 2)}};
    }

    bool is_zero() const {
        return v1.is_zero() && v2[0].is_zero() && v2[1].is_zero() && v2[2].is_zero() &&
               v2[3].is_zero() && v3.is_zero() && v4.first.is_zero() && v4.second.is_zero() &&
               v5.first.is_zero() && v5.second.is_zero();
    }

    friend MbElement operator+(const MbElement& a, const MbElement& b) {
        MbElement r = a;
        r.v1 += b.v1;
        for (int i = 0; i < 4; ++i) r.v2[i] += b.v2[i];
        r.v3 += b.v3;
        r.v4.first += b.v4.first;
        r.v4.second += b.v4.second;
        r.v5.first += b.v5.first;
        r.v5.second += b.v5.second;
        return r;
    }
    MbElement scaled(const F& c) const {
        MbElement r = *this;
        r.v1 = r.v1.scaled(c);
        for (int i = 0; i < 4; ++i) r.v2[i] = r.v2[i].scaled(c);
        r.v3 = r.v3.scaled(c);
        r.v4 = {r.v4.first.scaled(c), r.v4.second.scaled(c)};
        r.v5 = {r.v5.first.scaled(c), r.v5.second.scaled(c)};
        return r;
    }
};

// Sector brackets used by the Jacobi check. `c45` is the coefficient of the
// V1 summand of [V4, V5].
template <class F>
MbElement<F> mb_bracket_v1_v4(const SuperDomain& d, const ExtForm<F>& w,
                              const std::pair<DivPoly<F>, DivPoly<F>>& a) {
    MbElement<F> r = MbElement<F>::zero(d);
    r.v5 = {wedge(ExtForm<F>::from_function(d, a.first), w),
            wedge(ExtForm<F>::from_function(d, a.second), w)};
    return r;
}

template <class F>
MbElement<F> mb_bracket_v4_v4(const SuperDomain& d, const std::pair<DivPoly<F>, DivPoly<F>>& a,
                              const std::pair<DivPoly<F>, DivPoly<F>>& b) {
    // (df ^ dg) (v ^ w) / vvol
    MbElement<F> r = MbElement<F>::zero(d);
    ExtForm<F> two = wedge(ext_d(ExtForm<F>::from_function(d, a.first)),
                           ext_d(ExtForm<F>::from_function(d, b.second)));
    two = two - wedge(ext_d(ExtForm<F>::from_function(d, a.second)),
                      ext_d(ExtForm<F>::from_function(d, b.first)));
    r.v3 = form_div_vvol(two);
    return r;
}

template <class F>
MbElement<F> mb_bracket_v3_v1(const SuperDomain& d, const VField<F>& D, const ExtForm<F>& w) {
    MbElement<F> r = MbElement<F>::zero(d);
    r.v1 = lie_derivative_form(D, w);
    return r;
}

template <class F>
MbElement<F> mb_bracket_v4_v5(const SuperDomain& d, const std::pair<DivPoly<F>, DivPoly<F>>& a,
                              const std::pair<ExtForm<F>, ExtForm<F>>& B, const F& c45) {
    MbElement<F> r = MbElement<F>::zero(d);
    F half = F::one() / F(2);
    // V3 summand: f omega / vvol (x) v ^ w
    ExtForm<F> det(&d, 2);
    {
        ExtForm<F> t = wedge(ExtForm<F>::from_function(d, a.first), B.second);
        t = t - wedge(ExtForm<F>::from_function(d, a.second), B.first);
        det = t;
    }
    r.v3 = form_div_vvol(det);
    // V2 summand: -1/2 (f d omega - omega ^ df) (x) v.w with
    // v.w -> ((-(v1 w2 + v2 w1), 2 v1 w1), (-2 v2 w2, v1 w2 + v2 w1))
    auto t3 = [&](const DivPoly<F>& ai, const ExtForm<F>& Bj) {
        // f v_i d(omega w_j) - (omega w_j) ^ d(f v_i) as a function
        ExtForm<F> x = wedge(ExtForm<F>::from_function(d, ai), ext_d(Bj));
        x = x - wedge(Bj, ext_d(ExtForm<F>::from_function(d, ai)));
        return top_form_div_vvol(x);
    };
    DivPoly<F> t11 = t3(a.first, B.first), t12 = t3(a.first, B.second);
    DivPoly<F> t21 = t3(a.second, B.first), t22 = t3(a.second, B.second);
    // entries ((A, C), (Bm, -A)) of -1/2 t (x) (v.w)
    r.v2[0] = (t12 + t21).scaled(half);        // A = -1/2 * (-(v1w2+v2w1)) t
    r.v2[1] = t11.scaled(-F(2) * half);        // C = -1/2 * 2 v1w1 t
    r.v2[2] = t22.scaled(F(2) * half);         // B = -1/2 * (-2 v2w2) t
    r.v2[3] = (t12 + t21).scaled(-half);       // -A
    // V1 summand: c45 * df ^ d(Div D_omega) (x) v ^ w
    auto dDiv = [&](const ExtForm<F>& Bj) {
        VField<F> Dw = form_div_vvol(Bj);
        return ext_d(ExtForm<F>::from_function(d, vf_div(Dw)));
    };
    ExtForm<F> one = wedge(ext_d(ExtForm<F>::from_function(d, a.first)), dDiv(B.second));
    one = one - wedge(ext_d(ExtForm<F>::from_function(d, a.second)), dDiv(B.first));
    r.v1 = one.scaled(c45);
    return r;
}

// The paper's Jacobi test triple: a = u3 du2 ^ du3 in V1,
// b = u1 vvol^{-1/2} (x) e1, c = u2 vvol^{-1/2} (x) e2 in V4.
// Returns the defect [a,[b,c]] - [[a,b],c] - [b,[a,c]] for the given
// [V4,V5] coefficient.
template <class F>
MbElement<F> mb_jacobi_defect(const SuperDomain& d, const F& c45) {
    ExtForm<F> a(&d, 2);
    {
        IndexSet s{1, 2};
        a.add_term(s, Monomial::unit(d.size(), 2), F::one()); // u3 du2 ^ du3
    }
    std::pair<DivPoly<F>, DivPoly<F>> b{DivPoly<F>::var(d, 0), DivPoly<F>::zero(d)};
    std::pair<DivPoly<F>, DivPoly<F>> c{DivPoly<F>::zero(d), DivPoly<F>::var(d, 1)};

    MbElement<F> bc = mb_bracket_v4_v4(d, b, c);              // V3
    MbElement<F> a_bc = mb_bracket_v3_v1(d, bc.v3, a).scaled(-F::one()); // [a, D] = -[D, a]
    MbElement<F> ab = mb_bracket_v1_v4(d, a, b);              // V5
    MbElement<F> ab_c = mb_bracket_v4_v5(d, c, ab.v5, c45);   // [[a,b],c] = [c, [a,b]]
    MbElement<F> ac = mb_bracket_v1_v4(d, a, c);
    MbElement<F> b_ac = mb_bracket_v4_v5(d, b, ac.v5, c45);
    MbElement<F> defect = a_bc + ab_c.scaled(-F::one()) + b_ac.scaled(-F::one());
    return defect;
}

} // namespace mlie
