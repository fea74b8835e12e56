#pragma once

// Generating-function presentations of the classical vectorial series:
// Hamiltonian, Buttin (anti)bracket, contact and pericontact fields with
// their p=2 special forms, the vle fields, and the linear conditions that
// cut out the special subseries.

#include "vfield.hpp"

namespace mlie {

// A symplectic/periplectic pairing: coordinate pairs (first, second), an
// optional time coordinate x0, and an optional unpaired odd-dimensional
// coordinate theta (p=2 contact on an odd-dimensional space).
struct PairedDomain {
    const SuperDomain* dom = nullptr;
    std::vector<std::pair<size_t, size_t>> pairs;
    std::optional<size_t> x0;
    std::optional<size_t> theta;

    const SuperDomain& d() const { return *dom; }
};

// Standard layouts ------------------------------------------------------------

// Contact K-type: x0 = t (even, deg 2), pairs (x_i, x_{k+i}). Parities of the
// pair members are passed per pair; deg 1 each.
inline SuperDomain make_contact_domain(unsigned p, size_t k, const std::vector<bool>& first_odd,
                                       const std::vector<bool>& second_odd,
                                       const std::vector<unsigned>& N_even = {}, bool theta = false) {
    std::vector<Indeterminate> xs;
    Indeterminate t;
    t.name = "t";
    t.odd = false;
    t.deg = 2;
    xs.push_back(t);
    for (size_t i = 0; i < k; ++i) {
        Indeterminate a;
        a.name = "a" + std::to_string(i + 1);
        a.odd = first_odd[i];
        xs.push_back(a);
    }
    for (size_t i = 0; i < k; ++i) {
        Indeterminate b;
        b.name = "b" + std::to_string(i + 1);
        b.odd = second_odd[i];
        xs.push_back(b);
    }
    if (theta) {
        Indeterminate th;
        th.name = "th";
        th.odd = true;
        xs.push_back(th);
    }
    size_t ei = 0;
    for (auto& x : xs)
        if (!x.odd) x.shearing = (ei < N_even.size()) ? N_even[ei++] : 1;
    return SuperDomain(p, std::move(xs));
}

inline PairedDomain contact_pairing(const SuperDomain& d) {
    PairedDomain pd;
    pd.dom = &d;
    pd.x0 = 0;
    size_t rest = d.size() - 1;
    bool th = (rest % 2) != 0;
    size_t k = rest / 2;
    for (size_t i = 0; i < k; ++i) pd.pairs.emplace_back(1 + i, 1 + k + i);
    if (th) pd.theta = d.size() - 1;
    return pd;
}

// Pericontact M-type: x0 = tau (odd, deg 2), pairs (q_i even, xi_i odd).
inline SuperDomain make_pericontact_domain(unsigned p, size_t n, const std::vector<unsigned>& N = {}) {
    std::vector<Indeterminate> xs;
    Indeterminate tau;
    tau.name = "tau";
    tau.odd = true;
    tau.deg = 2;
    xs.push_back(tau);
    for (size_t i = 0; i < n; ++i) {
        Indeterminate q;
        q.name = "q" + std::to_string(i + 1);
        q.odd = false;
        q.shearing = N.empty() ? 1 : N.at(i);
        xs.push_back(q);
    }
    for (size_t i = 0; i < n; ++i) {
        Indeterminate xi;
        xi.name = "xi" + std::to_string(i + 1);
        xi.odd = true;
        xs.push_back(xi);
    }
    return SuperDomain(p, std::move(xs));
}

// Buttin/le layout: pairs (q_i even, xi_i odd), no time coordinate.
inline SuperDomain make_le_domain(unsigned p, size_t n, const std::vector<unsigned>& N = {}) {
    return make_domain(p, static_cast<unsigned>(n), static_cast<unsigned>(n), N);
}

inline PairedDomain le_pairing(const SuperDomain& d) {
    PairedDomain pd;
    pd.dom = &d;
    size_t n = d.size() / 2;
    for (size_t i = 0; i < n; ++i) pd.pairs.emplace_back(i, n + i);
    return pd;
}

inline PairedDomain pericontact_pairing(const SuperDomain& d) {
    PairedDomain pd;
    pd.dom = &d;
    pd.x0 = 0;
    size_t n = (d.size() - 1) / 2;
    for (size_t i = 0; i < n; ++i) pd.pairs.emplace_back(1 + i, 1 + n + i);
    return pd;
}

// ---------------------------------------------------------------------------
// Hamiltonian fields. p != 2:
//   H_f = sum (df/dp_i d_{q_i} - df/dq_i d_{p_i}) - (-1)^{p(f)} sum df/dth_j d_{th_j}
// p = 2: all signs are 1.
template <class F>
VField<F> hamilton_field(const PairedDomain& pd, const DivPoly<F>& f) {
    const SuperDomain& d = pd.d();
    VField<F> v(&d);
    if (f.is_zero()) return v;
    F mf = F::one();
    if (F::characteristic != 2) {
        auto par = f.parity();
        if (!par) throw std::invalid_argument("hamilton_field: inhomogeneous f over p != 2");
        mf = -sign_pow<F>(*par);
    }
    for (auto& [a, b] : pd.pairs) {
        if (a == b) { // theta-type diagonal pair
            v.add_coeff(a, f.partial(a).scaled(mf));
            continue;
        }
        if (!d.odd(a)) {
            // pair = (p_i, q_i): H_f = df/dp d_q - df/dq d_p
            v.add_coeff(b, f.partial(a));
            if (F::characteristic == 2) v.add_coeff(a, f.partial(b));
            else v.add_coeff(a, f.partial(b).scaled(-F::one()));
        } else {
            v.add_coeff(b, f.partial(a).scaled(mf));
            v.add_coeff(a, f.partial(b).scaled(mf));
        }
    }
    if (pd.theta) v.add_coeff(*pd.theta, f.partial(*pd.theta).scaled(mf));
    return v;
}

template <class F>
DivPoly<F> poisson_bracket(const PairedDomain& pd, const DivPoly<F>& f, const DivPoly<F>& g) {
    const SuperDomain& d = pd.d();
    DivPoly<F> r(&d);
    if (f.is_zero() || g.is_zero()) return r;
    F mf = F::one();
    if (F::characteristic != 2) {
        auto par = f.parity();
        if (!par) throw std::invalid_argument("poisson_bracket: inhomogeneous f over p != 2");
        mf = -sign_pow<F>(*par);
    }
    for (auto& [a, b] : pd.pairs) {
        if (a == b) { // theta-type diagonal pair
            r += (f.partial(a) * g.partial(a)).scaled(mf);
            continue;
        }
        if (!d.odd(a)) {
            r += f.partial(a) * g.partial(b);
            if (F::characteristic == 2) r += f.partial(b) * g.partial(a);
            else r -= f.partial(b) * g.partial(a);
        } else {
            r += (f.partial(a) * g.partial(b)).scaled(mf);
            r += (f.partial(b) * g.partial(a)).scaled(mf);
        }
    }
    if (pd.theta) r += (f.partial(*pd.theta) * g.partial(*pd.theta)).scaled(mf);
    return r;
}

// ---------------------------------------------------------------------------
// Buttin (anti)bracket on C[q,xi]:
//   Le_f = sum (df/dq_i d_{xi_i} + (-1)^{p(f)} df/dxi_i d_{q_i})
//   {f,g} = sum (df/dq_i dg/dxi_i + (-1)^{p(f)} df/dxi_i dg/dq_i)
template <class F>
VField<F> buttin_field(const PairedDomain& pd, const DivPoly<F>& f) {
    const SuperDomain& d = pd.d();
    VField<F> v(&d);
    if (f.is_zero()) return v;
    F sf = F::one();
    if (F::characteristic != 2) {
        auto par = f.parity();
        if (!par) throw std::invalid_argument("buttin_field: inhomogeneous f over p != 2");
        sf = sign_pow<F>(*par);
    }
    for (auto& [q, xi] : pd.pairs) {
        v.add_coeff(xi, f.partial(q));
        v.add_coeff(q, f.partial(xi).scaled(sf));
    }
    return v;
}

template <class F>
DivPoly<F> buttin_bracket(const PairedDomain& pd, const DivPoly<F>& f, const DivPoly<F>& g) {
    const SuperDomain& d = pd.d();
    DivPoly<F> r(&d);
    if (f.is_zero() || g.is_zero()) return r;
    F sf = F::one();
    if (F::characteristic != 2) {
        auto par = f.parity();
        if (!par) throw std::invalid_argument("buttin_bracket: inhomogeneous f over p != 2");
        sf = sign_pow<F>(*par);
    }
    for (auto& [q, xi] : pd.pairs) {
        r += f.partial(q) * g.partial(xi);
        r += (f.partial(xi) * g.partial(q)).scaled(sf);
    }
    return r;
}

// Laplacian sum d^2/dq_i dxi_i; its kernel cuts sle out of le and sb out of b.
template <class F>
DivPoly<F> pairing_laplacian(const PairedDomain& pd, const DivPoly<F>& f) {
    DivPoly<F> r(&pd.d());
    for (auto& [q, xi] : pd.pairs) r += f.partial(q).partial(xi);
    return r;
}

// ---------------------------------------------------------------------------
// p=2 contact / pericontact field of a generating function:
//   K_f = (1+E')(f) d_0 + d_0(f) E' + sum (df/da_i d_{b_i} + df/db_i d_{a_i})
// with E' = sum a_i d_{a_i} over the first halves. x0 = t (K) or tau (M).
template <class F>
VField<F> contact_field(const PairedDomain& pd, const DivPoly<F>& f) {
    static_assert(F::characteristic == 2, "p=2 contact form of the field");
    const SuperDomain& d = pd.d();
    if (!pd.x0) throw std::invalid_argument("contact_field: no time coordinate");
    if (pd.theta) {
        // odd-dimensional case: f must not depend on x0 or theta
        for (auto& [m, c] : f.terms())
            if (m.e[*pd.x0] || m.e[*pd.theta])
                throw std::invalid_argument("contact_field: f may not involve x0 or theta here");
    }
    VField<F> v(&d);
    // (1+E')(f) d_0
    DivPoly<F> e(&d);
    e += f;
    for (auto& [a, b] : pd.pairs) e += DivPoly<F>::var(d, a) * f.partial(a);
    v.add_coeff(*pd.x0, e);
    // d_0(f) E'
    DivPoly<F> f0 = f.partial(*pd.x0);
    if (!f0.is_zero())
        for (auto& [a, b] : pd.pairs) v.add_coeff(a, f0 * DivPoly<F>::var(d, a));
    for (auto& [a, b] : pd.pairs) {
        v.add_coeff(b, f.partial(a));
        v.add_coeff(a, f.partial(b));
    }
    return v;
}

// p=2 contact bracket (either k or m type):
//   {f,g} = d_0(f) (1+E')(g) + (1+E')(f) d_0(g)
//           + sum (df/da_i dg/db_i + df/db_i dg/da_i)
template <class F>
DivPoly<F> contact_bracket(const PairedDomain& pd, const DivPoly<F>& f, const DivPoly<F>& g) {
    static_assert(F::characteristic == 2, "p=2 contact bracket");
    const SuperDomain& d = pd.d();
    auto one_plus_e = [&](const DivPoly<F>& h) {
        DivPoly<F> e = h;
        for (auto& [a, b] : pd.pairs) e += DivPoly<F>::var(d, a) * h.partial(a);
        return e;
    };
    DivPoly<F> r(&d);
    r += f.partial(*pd.x0) * one_plus_e(g);
    r += one_plus_e(f) * g.partial(*pd.x0);
    for (auto& [a, b] : pd.pairs) {
        r += f.partial(a) * g.partial(b);
        r += f.partial(b) * g.partial(a);
    }
    return r;
}

// The two extra families of the p=2 odd-dimensional contact algebra:
//   A_g = g (th d_0 + d_th),   B_g = g th d_th,  g independent of th.
template <class F>
VField<F> contact_A_field(const PairedDomain& pd, const DivPoly<F>& g) {
    static_assert(F::characteristic == 2);
    const SuperDomain& d = pd.d();
    if (!pd.theta) throw std::invalid_argument("contact_A_field: no theta coordinate");
    for (auto& [m, c] : g.terms())
        if (m.e[*pd.theta]) throw std::invalid_argument("contact_A_field: g depends on theta");
    VField<F> v(&d);
    v.add_coeff(*pd.x0, g * DivPoly<F>::var(d, *pd.theta));
    v.add_coeff(*pd.theta, g);
    return v;
}

template <class F>
VField<F> contact_B_field(const PairedDomain& pd, const DivPoly<F>& g) {
    static_assert(F::characteristic == 2);
    const SuperDomain& d = pd.d();
    if (!pd.theta) throw std::invalid_argument("contact_B_field: no theta coordinate");
    for (auto& [m, c] : g.terms())
        if (m.e[*pd.theta]) throw std::invalid_argument("contact_B_field: g depends on theta");
    VField<F> v(&d);
    v.add_coeff(*pd.theta, g * DivPoly<F>::var(d, *pd.theta));
    return v;
}

// p != 2 contact field K_f = (2-E)(f) d_t - H_f + df/dt E, with E the Euler
// operator over all non-time coordinates.
template <class F>
VField<F> contact_field_classic(const PairedDomain& pd, const DivPoly<F>& f) {
    const SuperDomain& d = pd.d();
    VField<F> v(&d);
    auto euler_terms = [&](const DivPoly<F>& h, VField<F>& into) {
        for (size_t i = 0; i < d.size(); ++i) {
            if (pd.x0 && i == *pd.x0) continue;
            into.add_coeff(i, h * DivPoly<F>::var(d, i));
        }
    };
    DivPoly<F> e = f.scaled(F(2));
    for (size_t i = 0; i < d.size(); ++i) {
        if (pd.x0 && i == *pd.x0) continue;
        e -= DivPoly<F>::var(d, i) * f.partial(i);
    }
    v.add_coeff(*pd.x0, e);
    v -= hamilton_field(pd, f);
    DivPoly<F> ft = f.partial(*pd.x0);
    if (!ft.is_zero()) euler_terms(ft, v);
    return v;
}

// {f,g}_{k.b.} = (2-E)(f) dg/dt - df/dt (2-E)(g) - {f,g}_{P.b.}
template <class F>
DivPoly<F> contact_bracket_classic(const PairedDomain& pd, const DivPoly<F>& f, const DivPoly<F>& g) {
    const SuperDomain& d = pd.d();
    auto two_minus_e = [&](const DivPoly<F>& h) {
        DivPoly<F> e = h.scaled(F(2));
        for (size_t i = 0; i < d.size(); ++i) {
            if (pd.x0 && i == *pd.x0) continue;
            e -= DivPoly<F>::var(d, i) * h.partial(i);
        }
        return e;
    };
    DivPoly<F> r(&d);
    r += two_minus_e(f) * g.partial(*pd.x0);
    r -= f.partial(*pd.x0) * two_minus_e(g);
    r -= poisson_bracket(pd, f, g);
    return r;
}

// ---------------------------------------------------------------------------
// The vle fields on (x1,x2,x3,y | xi1,xi2,xi3).
//   p  = 2: D_{f,g} = Le_f + y B_f + y Delta(f) d_y + B_g + Delta(g) d_y
//   p != 2: eq-(D_{f,g}) form with the Koszul signs and the y^2 term.
// f,g do not involve y; pairs are (x_i, xi_i); y is the 4th coordinate.
struct VleLayout {
    const SuperDomain* dom = nullptr;
    size_t x[3] = {0, 1, 2};
    size_t y = 3;
    size_t xi[3] = {4, 5, 6};
};

inline SuperDomain make_vle_domain(unsigned p, const std::vector<unsigned>& M, unsigned My = 1) {
    std::vector<Indeterminate> xs(7);
    for (int i = 0; i < 3; ++i) {
        xs[i].name = "x" + std::to_string(i + 1);
        xs[i].shearing = M.at(i);
    }
    xs[3].name = "y";
    xs[3].shearing = My;
    for (int i = 0; i < 3; ++i) {
        xs[4 + i].name = "xi" + std::to_string(i + 1);
        xs[4 + i].odd = true;
    }
    return SuperDomain(p, std::move(xs));
}

template <class F>
VField<F> vle_B_operator(const VleLayout& L, const DivPoly<F>& h) {
    // B_F = F_{xi2 xi3} d_{xi1} + F_{xi3 xi1} d_{xi2} + F_{xi1 xi2} d_{xi3},
    // where F_{ab} denotes d_a(d_b(F)).
    const SuperDomain& d = *L.dom;
    VField<F> v(&d);
    v.add_coeff(L.xi[0], h.partial(L.xi[2]).partial(L.xi[1]));
    v.add_coeff(L.xi[1], h.partial(L.xi[0]).partial(L.xi[2]));
    v.add_coeff(L.xi[2], h.partial(L.xi[1]).partial(L.xi[0]));
    return v;
}

template <class F>
DivPoly<F> vle_delta(const VleLayout& L, const DivPoly<F>& h) {
    DivPoly<F> r(L.dom);
    for (int i = 0; i < 3; ++i) r += h.partial(L.x[i]).partial(L.xi[i]);
    return r;
}

template <class F>
VField<F> vle_field(const VleLayout& L, const DivPoly<F>& f, const DivPoly<F>& g) {
    const SuperDomain& d = *L.dom;
    VField<F> v(&d);
    // Le over pairs (x_i, xi_i)
    PairedDomain pd;
    pd.dom = &d;
    for (int i = 0; i < 3; ++i) pd.pairs.emplace_back(L.x[i], L.xi[i]);
    auto yv = DivPoly<F>::var(d, L.y);
    if constexpr (F::characteristic == 2) {
        if (!f.is_zero()) {
            v += buttin_field(pd, f);
            VField<F> bf = vle_B_operator(L, f);
            for (auto& [i, c] : bf.coeffs()) v.add_coeff(i, yv * c);
            v.add_coeff(L.y, yv * vle_delta(L, f));
        }
        if (!g.is_zero()) {
            v += vle_B_operator(L, g);
            v.add_coeff(L.y, vle_delta(L, g));
        }
    } else {
        if (!f.is_zero()) {
            auto pf = f.parity();
            if (!pf) throw std::invalid_argument("vle_field: inhomogeneous f");
            F sf = sign_pow<F>(*pf);
            v += buttin_field(pd, f);
            VField<F> bf = vle_B_operator(L, f);
            for (auto& [i, c] : bf.coeffs()) v.add_coeff(i, yv * c);
            DivPoly<F> dy = yv * vle_delta(L, f);
            dy += yv * yv * f.partial(L.xi[0]).partial(L.xi[1]).partial(L.xi[2]);
            v.add_coeff(L.y, dy.scaled(-sf));
        }
        if (!g.is_zero()) {
            auto pg = g.parity();
            if (!pg) throw std::invalid_argument("vle_field: inhomogeneous g");
            F sg = sign_pow<F>(*pg);
            v += vle_B_operator(L, g);
            DivPoly<F> dy = vle_delta(L, g);
            dy += (yv * g.partial(L.xi[0]).partial(L.xi[1]).partial(L.xi[2])).scaled(F(2));
            v.add_coeff(L.y, dy.scaled(-sg));
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Linear membership conditions (evaluated exactly; zero means "in").

enum class Series { Svect, SleProlong, Sb, Sm, Bab, H, Le };

// Delta^m(f) = Delta(f) + E_q d_tau(f) on the pericontact layout.
template <class F>
DivPoly<F> pericontact_laplacian(const PairedDomain& pd, const DivPoly<F>& f) {
    const SuperDomain& d = pd.d();
    DivPoly<F> r(&d);
    for (auto& [q, xi] : pd.pairs) r += f.partial(q).partial(xi);
    DivPoly<F> ft = f.partial(*pd.x0);
    for (auto& [q, xi] : pd.pairs) r += DivPoly<F>::var(d, q) * ft.partial(q);
    return r;
}

// b_{a,b} condition: (b + a E_q) d_tau(f) + a Delta(f) = 0.
template <class F>
DivPoly<F> bab_condition(const PairedDomain& pd, const DivPoly<F>& f, const F& a, const F& b) {
    const SuperDomain& d = pd.d();
    DivPoly<F> ft = f.partial(*pd.x0);
    DivPoly<F> r = ft.scaled(b);
    for (auto& [q, xi] : pd.pairs) r += (DivPoly<F>::var(d, q) * ft.partial(q)).scaled(a);
    DivPoly<F> lap(&d);
    for (auto& [q, xi] : pd.pairs) lap += f.partial(q).partial(xi);
    r += lap.scaled(a);
    return r;
}

// Berezin-style top coefficient: the coefficient of the product of all odd
// indeterminates (even exponents zero).
template <class F>
F berezin_top(const DivPoly<F>& f) {
    const SuperDomain& d = f.domain();
    Monomial top(d.size());
    for (size_t i = 0; i < d.size(); ++i)
        if (d.odd(i)) top.e[i] = 1;
    return f.coeff(top);
}

} // namespace mlie
