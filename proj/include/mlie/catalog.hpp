#pragma once

// Named constructors for the algebra families: the classical series via
// generating functions, and the exceptional algebras seeded from explicit
// vector-field tables (catalog_tables.hpp).
//
// A Built object carries everything needed to run the prolongation and the
// structure analysis: the domain (owned), the nonpositive part or a full
// per-degree span recipe, the bracket, and per-algebra metadata (weights
// live on the domain; lowering/raising sets and designated submodules are
// listed here).

#include <cctype>
#include <memory>

#include "genfun.hpp"
#include "prolong.hpp"
#include "structure.hpp"

namespace mlie {

// Parse a vector field written like "x5*D3 + x6*D2 + D7" or
// "x4^2*D1 + x4*D5". Exponents are divided-power exponents. Coordinate
// names are x<i>, directions D<i>, both 1-based.
template <class F>
VField<F> parse_field(const SuperDomain& d, const std::string& s) {
    VField<F> v(&d);
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto number = [&]() {
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("parse_field: number expected in '" + s + "'");
        return std::stoul(s.substr(start, i - start));
    };
    skip();
    while (i < s.size()) {
        Monomial m(d.size());
        long coeff = 1;
        bool have_dir = false;
        size_t dir = 0;
        while (true) {
            skip();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff = static_cast<long>(number());
            } else if (i < s.size() && (s[i] == 'x' || s[i] == 'z')) {
                ++i;
                size_t idx = number() - 1;
                if (idx >= d.size()) throw std::invalid_argument("parse_field: bad coordinate");
                unsigned long e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = number();
                }
                m.e[idx] = static_cast<Exponent>(m.e[idx] + e);
            } else if (i < s.size() && s[i] == 'D') {
                ++i;
                dir = number() - 1;
                if (dir >= d.size()) throw std::invalid_argument("parse_field: bad direction");
                have_dir = true;
            } else {
                throw std::invalid_argument("parse_field: unexpected token in '" + s + "'");
            }
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!have_dir) throw std::invalid_argument("parse_field: term without direction in '" + s + "'");
        v.add_coeff(dir, DivPoly<F>::monomial(d, m, F(coeff)));
        skip();
        if (i < s.size()) {
            if (s[i] != '+') throw std::invalid_argument("parse_field: '+' expected in '" + s + "'");
            ++i;
            skip();
        }
    }
    return v;
}

template <class F>
std::vector<VField<F>> parse_fields(const SuperDomain& d, const std::vector<std::string>& strs) {
    std::vector<VField<F>> out;
    out.reserve(strs.size());
    for (auto& s : strs) out.push_back(parse_field<F>(d, s));
    return out;
}

// ---------------------------------------------------------------------------

template <class F>
struct Built {
    std::string name;
    std::shared_ptr<SuperDomain> dom;
    NonpositivePart<F> np;
    ProlongOptions opt; // per-algebra defaults (from_negative, ceiling)

    // For series presented by generating functions the whole algebra is a
    // span recipe rather than a prolong; if set, realize() uses it.
    std::function<std::vector<VField<F>>(int)> span_of_degree;
    int span_min_degree = 0;

    // metadata
    std::vector<VField<F>> lowering, raising;
    std::map<std::string, std::vector<VField<F>>> marked;

    bool is_span() const { return static_cast<bool>(span_of_degree); }
};

template <class F>
struct Algebra {
    std::string name;
    std::shared_ptr<SuperDomain> dom;
    GradedSubspace<F> g;
    BracketFn<F> bracket;
    bool stabilized = false;
    int top_degree = 0;
};

// Realize a Built object into a graded algebra: run the prolongation, or
// evaluate the span recipe degree by degree until `depth` consecutive
// degrees vanish.
template <class F>
Algebra<F> realize(const Built<F>& b, int max_degree = -1) {
    Algebra<F> a;
    a.name = b.name;
    a.dom = b.dom;
    a.bracket = b.np.bracket ? b.np.bracket : standard_bracket<F>();
    ProlongOptions opt = b.opt;
    if (max_degree >= 0) opt.max_degree = max_degree;
    if (!b.is_span()) {
        ProlongResult<F> res = complete_prolong(b.np, opt);
        a.g = std::move(res.g);
        a.stabilized = res.stabilized;
        a.top_degree = res.top_degree;
        return a;
    }
    a.g = GradedSubspace<F>(b.dom.get());
    int zeros = 0;
    int depth = std::max(1, -b.span_min_degree);
    for (int d = b.span_min_degree; d <= opt.max_degree; ++d) {
        auto fields = b.span_of_degree(d);
        auto& piece = a.g.ensure(d);
        for (auto& f : fields) piece.ech.add_row(piece.comp.template coords<F>(f));
        a.top_degree = d;
        if (d > 0) {
            zeros = piece.ech.rank() == 0 ? zeros + 1 : 0;
            if (zeros >= depth) {
                a.stabilized = true;
                break;
            }
        }
    }
    return a;
}

// ---------------------------------------------------------------------------
// Series over generating functions.

// Diagonal coordinate weights: w(x_i) = e_i. A sensible default that makes
// every monomial field weight-homogeneous.
inline SuperDomain with_diagonal_weights(const SuperDomain& d) {
    std::vector<std::vector<int>> w(d.size(), std::vector<int>(d.size(), 0));
    for (size_t i = 0; i < d.size(); ++i) w[i][i] = 1;
    return d.with_weights(static_cast<unsigned>(d.size()), w);
}

template <class F>
Built<F> build_vect(unsigned m, unsigned n, const std::vector<unsigned>& N) {
    Built<F> b;
    b.name = "vect";
    b.dom = std::make_shared<SuperDomain>(with_diagonal_weights(make_domain(F::characteristic, m, n, N)));
    b.np = NonpositivePart<F>(*b.dom);
    for (size_t i = 0; i < b.dom->size(); ++i) b.np.add(-1, VField<F>::partial(*b.dom, i));
    b.opt.from_negative = true;
    return b;
}

template <class F>
Built<F> build_svect(unsigned m, unsigned n, const std::vector<unsigned>& N) {
    Built<F> b;
    b.name = "svect";
    b.dom = std::make_shared<SuperDomain>(with_diagonal_weights(make_domain(F::characteristic, m, n, N)));
    const SuperDomain& d = *b.dom;
    b.np = NonpositivePart<F>(d);
    for (size_t i = 0; i < d.size(); ++i) b.np.add(-1, VField<F>::partial(d, i));
    // g0 = divergence-free linear fields
    DegreeComponent w0(d, 0);
    auto ker = kernel_of<F>(w0.dim(), d.size() + 1, [&](size_t a) {
        VField<F> e = VField<F>::term(d, w0.key(a).mon, w0.key(a).dir);
        DivPoly<F> dv = vf_div(e);
        Row<F> img(d.size() + 1);
        // degree-0 functions are constants when all degrees are 1
        Monomial one(d.size());
        img.set(0, dv.coeff(one));
        return img;
    });
    for (auto& r : ker.rows()) b.np.add(0, w0.field<F>(r));
    return b;
}

// Hamiltonian series h_Pi(2n;N)
template <class F>
Built<F> build_h(unsigned n, const std::vector<unsigned>& N) {
    Built<F> b;
    b.name = "h";
    b.dom = std::make_shared<SuperDomain>(
        with_diagonal_weights(make_domain(F::characteristic, 2 * n, 0, N)));
    const SuperDomain& d = *b.dom;
    auto pairing = std::make_shared<PairedDomain>();
    pairing->dom = &d;
    for (size_t i = 0; i < n; ++i) pairing->pairs.emplace_back(i, n + i);
    b.span_min_degree = -1;
    b.span_of_degree = [&d, pairing](int deg) {
        std::vector<VField<F>> out;
        for (auto& m : monomials_of_degree(d, deg + 2))
            out.push_back(hamilton_field(*pairing, DivPoly<F>::monomial(d, m)));
        return out;
    };
    b.np = NonpositivePart<F>(d); // carried for the bracket
    return b;
}

// le(n;N|n) = Le span plus the virtual q_i^(p^{N_i}) generators.
template <class F>
Built<F> build_le(unsigned n, const std::vector<unsigned>& N, bool sle_prolong = false) {
    Built<F> b;
    b.name = sle_prolong ? "sle-prolong" : "le";
    b.dom = std::make_shared<SuperDomain>(
        with_diagonal_weights(make_le_domain(F::characteristic, n, N)));
    const SuperDomain& d = *b.dom;
    auto pairing = std::make_shared<PairedDomain>(le_pairing(d));
    // relaxed caps for the virtual generators
    std::vector<unsigned> NR(d.size());
    for (size_t i = 0; i < d.size(); ++i) NR[i] = d.odd(i) ? 1 : d.shearing(i) + 1;
    auto relaxed = std::make_shared<SuperDomain>(d.with_shearing(NR));
    b.span_min_degree = -1;
    b.span_of_degree = [&d, pairing, relaxed, sle_prolong, n](int deg) {
        std::vector<VField<F>> out;
        if (sle_prolong) {
            // kernel of Delta on the monomial span of this degree
            auto mons = monomials_of_degree(d, deg + 2);
            if (mons.empty()) return out;
            std::map<Monomial, size_t> idx;
            std::vector<Monomial> tmons = monomials_of_degree(d, deg);
            for (size_t t = 0; t < tmons.size(); ++t) idx[tmons[t]] = t;
            auto ker = kernel_of<F>(mons.size(), tmons.size(), [&](size_t a) {
                Row<F> img(tmons.size());
                auto lap = pairing_laplacian(*pairing, DivPoly<F>::monomial(d, mons[a]));
                for (auto& [m, c] : lap.terms()) img.set(idx.at(m), c);
                return img;
            });
            for (auto& r : ker.rows()) {
                DivPoly<F> f(&d);
                for (size_t a = r.first_nonzero(); a != static_cast<size_t>(-1);
                     a = r.first_nonzero(a + 1))
                    f.add_term(mons[a], r.get(a));
                VField<F> v = buttin_field(*pairing, f);
                if (!v.is_zero()) out.push_back(v);
            }
            return out;
        }
        for (size_t i = 0; i < n; ++i) {
            unsigned long cap = d.cap(i);
            if (static_cast<unsigned long>(deg + 2) == cap) {
                // virtual q_i^(cap): its Le lands inside the true domain
                PairedDomain pr;
                pr.dom = relaxed.get();
                pr.pairs = pairing->pairs;
                auto f = DivPoly<F>::var(*relaxed, i, static_cast<Exponent>(cap));
                out.push_back(buttin_field(pr, f).rebased(d));
            }
        }
        for (auto& m : monomials_of_degree(d, deg + 2)) {
            VField<F> v = buttin_field(*pairing, DivPoly<F>::monomial(d, m));
            if (!v.is_zero()) out.push_back(v);
        }
        return out;
    };
    b.np = NonpositivePart<F>(d);
    return b;
}

// Contact k(2k_ev+1;N|n_odd) and pericontact m(n;N|n+1) via the prolong of
// their standard negative parts.
template <class F>
Built<F> build_k(size_t k_even_pairs, size_t k_odd_pairs, bool with_theta,
                 const std::vector<unsigned>& N) {
    Built<F> b;
    b.name = "k";
    size_t k = k_even_pairs + k_odd_pairs;
    std::vector<bool> fo(k, false), so(k, false);
    for (size_t i = k_even_pairs; i < k; ++i) fo[i] = so[i] = true;
    b.dom = std::make_shared<SuperDomain>(with_diagonal_weights(
        make_contact_domain(F::characteristic, k, fo, so, N, with_theta)));
    const SuperDomain& d = *b.dom;
    PairedDomain pd = contact_pairing(d);
    b.np = NonpositivePart<F>(d);
    b.np.add(-2, VField<F>::partial(d, 0)); // K_1
    for (size_t i = 0; i < k; ++i) {
        b.np.add(-1, contact_field(pd, DivPoly<F>::var(d, pd.pairs[i].first)));
        b.np.add(-1, contact_field(pd, DivPoly<F>::var(d, pd.pairs[i].second)));
    }
    if (with_theta) b.np.add(-1, contact_A_field(pd, DivPoly<F>::one(d)));
    b.opt.from_negative = true;
    return b;
}

template <class F>
Built<F> build_m(size_t n, const std::vector<unsigned>& N) {
    Built<F> b;
    b.name = "m";
    b.dom = std::make_shared<SuperDomain>(
        with_diagonal_weights(make_pericontact_domain(F::characteristic, n, N)));
    const SuperDomain& d = *b.dom;
    PairedDomain pd = pericontact_pairing(d);
    b.np = NonpositivePart<F>(d);
    b.np.add(-2, VField<F>::partial(d, 0));
    for (size_t i = 0; i < n; ++i) {
        b.np.add(-1, contact_field(pd, DivPoly<F>::var(d, pd.pairs[i].first)));
        b.np.add(-1, contact_field(pd, DivPoly<F>::var(d, pd.pairs[i].second)));
    }
    b.opt.from_negative = true;
    return b;
}

// b_{a,b}(n;N), sb(n;N), sm(n;N): spans of M_f with the respective linear
// condition on f; po_{a,b} is the desuperization of b_{a,b}.
enum class MSeries { Bab, Sb, Sm };

template <class F>
Built<F> build_m_subseries(MSeries which, size_t n, const std::vector<unsigned>& N, const F& a = F::zero(),
                           const F& bpar = F::zero(), bool desuper = false) {
    Built<F> b;
    b.name = which == MSeries::Bab ? "b_ab" : (which == MSeries::Sb ? "sb" : "sm");
    if (desuper) b.name = "po_ab";
    SuperDomain base = make_pericontact_domain(F::characteristic, n, N);
    if (desuper) base = base.desuperized();
    b.dom = std::make_shared<SuperDomain>(with_diagonal_weights(base));
    const SuperDomain& d = *b.dom;
    auto pd = std::make_shared<PairedDomain>(pericontact_pairing(d));
    // generating functions live on the superdomain layout in either case
    b.span_min_degree = -2;
    F av = a, bv = bpar;
    b.span_of_degree = [&d, pd, which, av, bv](int deg) {
        std::vector<VField<F>> out;
        auto mons = monomials_of_degree(d, deg + 2);
        if (mons.empty()) return out;
        auto condition = [&](const DivPoly<F>& f) {
            std::vector<DivPoly<F>> cs;
            switch (which) {
                case MSeries::Bab: cs.push_back(bab_condition(*pd, f, av, bv)); break;
                case MSeries::Sb:
                    // sb sits inside b: d_tau f = 0 and Delta f = 0
                    cs.push_back(f.partial(*pd->x0));
                    cs.push_back(pairing_laplacian(*pd, f));
                    break;
                case MSeries::Sm: cs.push_back(pericontact_laplacian(*pd, f)); break;
            }
            return cs;
        };
        // kernel of the conditions over the monomial span of this degree
        std::map<std::pair<size_t, Monomial>, size_t> idx;
        auto key_of = [&](size_t which_cond, const Monomial& m) {
            auto key = std::make_pair(which_cond, m);
            auto it = idx.find(key);
            if (it != idx.end()) return it->second;
            size_t t = idx.size();
            idx.emplace(key, t);
            return t;
        };
        std::vector<std::vector<std::pair<size_t, F>>> imgs(mons.size());
        for (size_t i = 0; i < mons.size(); ++i) {
            auto cs = condition(DivPoly<F>::monomial(d, mons[i]));
            for (size_t w = 0; w < cs.size(); ++w)
                for (auto& [m, cc] : cs[w].terms()) imgs[i].emplace_back(key_of(w, m), cc);
        }
        auto ker = kernel_of<F>(mons.size(), idx.size(), [&](size_t i) {
            Row<F> img(idx.size());
            for (auto& [t, c] : imgs[i]) img.set(t, img.get(t) + c);
            return img;
        });
        for (auto& r : ker.rows()) {
            DivPoly<F> f(&d);
            for (size_t t = r.first_nonzero(); t != static_cast<size_t>(-1); t = r.first_nonzero(t + 1))
                f.add_term(mons[t], r.get(t));
            VField<F> v = contact_field(*pd, f);
            if (!v.is_zero()) out.push_back(v);
        }
        return out;
    };
    b.np = NonpositivePart<F>(d);
    return b;
}

// The p=2 vle family on (x1,x2,x3,y | xi1..xi3) in the standard grading,
// including the virtual generators that finite shearing requires.
template <class F>
Built<F> build_vle_super(const std::vector<unsigned>& M, unsigned My = 1,
                         const std::vector<int>& degs = {1, 1, 1, 1, 1, 1, 1}) {
    Built<F> b;
    b.name = "vle4_3";
    b.dom = std::make_shared<SuperDomain>(
        make_vle_domain(F::characteristic, M, My).with_degrees(degs));
    {
        // weights: x_i carry e_i, xi_i carry -e_i, y carries -(e1+e2+e3)
        std::vector<std::vector<int>> w(7, std::vector<int>(3, 0));
        for (int i = 0; i < 3; ++i) w[i][i] = 1;
        for (int i = 0; i < 3; ++i) w[4 + i][i] = -1;
        w[3] = {-1, -1, -1};
        *b.dom = b.dom->with_weights(3, w);
    }
    const SuperDomain& d = *b.dom;
    auto L = std::make_shared<VleLayout>();
    L->dom = &d;
    // relaxed domain admits the virtual generators
    std::vector<unsigned> NR(7);
    for (size_t i = 0; i < 7; ++i) NR[i] = d.odd(i) ? 1 : d.shearing(i) + 1;
    auto relaxed = std::make_shared<SuperDomain>(d.with_shearing(NR));
    auto LR = std::make_shared<VleLayout>();
    LR->dom = relaxed.get();

    b.span_min_degree = -1;
    b.span_of_degree = [&d, L, LR, relaxed](int deg) {
        std::vector<VField<F>> out;
        auto add_Dfg = [&](const DivPoly<F>& f, const DivPoly<F>& g) {
            VField<F> v = vle_field(*LR, f, g);
            bool legal = true;
            for (auto& [dir, poly] : v.coeffs())
                for (auto& [m, c] : poly.terms())
                    if (!monomial_legal(d, m)) legal = false;
            if (legal && !v.is_zero()) out.push_back(v.rebased(d));
        };
        // f, g range over monomials in (x|xi) only (no y), including the
        // virtual x_i^(cap) for f and x1^(s1) x2^(s2-1) x3^(s3-1) xi1 for g.
        // Le/B shift degrees by 2 on the f side and by 2 + deg(y) on the g
        // side (every conjugate pair has degree sum 2 in the gradings used).
        const int goff = 2 + d.deg(3);
        SuperDomain fd = *relaxed; // enumerate f in the relaxed caps, filter
        for (auto& m : monomials_of_degree(fd, deg + 2)) {
            if (m.e[3]) continue; // no y
            bool virt = false, legal = true;
            for (int i = 0; i < 3; ++i)
                if (m.e[i] >= d.cap(i)) {
                    legal = false;
                    // virtual f = x_i^(cap) alone
                    Monomial pure(7);
                    pure.e[i] = static_cast<Exponent>(d.cap(i));
                    virt = (m == pure);
                }
            if (legal || virt) add_Dfg(DivPoly<F>::monomial(*relaxed, m), DivPoly<F>::zero(*relaxed));
        }
        for (auto& m : monomials_of_degree(fd, deg + goff)) {
            if (m.e[3]) continue;
            bool legal = true;
            for (int i = 0; i < 3; ++i)
                if (m.e[i] >= d.cap(i)) legal = false;
            bool virt = false;
            {
                Monomial g(7);
                g.e[0] = static_cast<Exponent>(d.cap(0));
                g.e[1] = static_cast<Exponent>(d.cap(1) - 1);
                g.e[2] = static_cast<Exponent>(d.cap(2) - 1);
                g.e[4] = 1;
                virt = (m == g);
            }
            if (legal || virt) add_Dfg(DivPoly<F>::zero(*relaxed), DivPoly<F>::monomial(*relaxed, m));
        }
        return out;
    };
    b.np = NonpositivePart<F>(d);
    return b;
}

} // namespace mlie
