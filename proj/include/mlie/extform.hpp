#pragma once

// Exterior differential forms with divided-power coefficients over purely
// even domains: wedge, d, contraction, Lie derivative, vvol identifications
// and the p=2 vas bracket of 1-forms.

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "vfield.hpp"

namespace mlie {

using IndexSet = std::vector<uint8_t>; // strictly increasing coordinate indices

inline int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet& out) {
    // sign of sorting the concatenation (a,b); 0 if a repeat occurs
    out.clear();
    size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            inversions += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

template <class F>
class ExtForm {
  public:
    using Key = std::pair<IndexSet, Monomial>;

    ExtForm() = default;
    ExtForm(const SuperDomain* dom, int k) : dom_(dom), k_(k) {
        if (dom && dom->odd_count() != 0)
            throw std::invalid_argument("ExtForm: purely even domains only");
    }

    static ExtForm zero(const SuperDomain& d, int k) { return ExtForm(&d, k); }
    static ExtForm from_function(const SuperDomain& d, const DivPoly<F>& f) {
        ExtForm w(&d, 0);
        for (auto& [m, c] : f.terms()) w.add_term({}, m, c);
        return w;
    }
    static ExtForm d_coordinate(const SuperDomain& d, size_t i) {
        ExtForm w(&d, 1);
        w.add_term({static_cast<uint8_t>(i)}, Monomial(d.size()), F::one());
        return w;
    }

    const SuperDomain& domain() const { return *dom_; }
    int form_degree() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, F>& terms() const { return terms_; }

    void add_term(const IndexSet& s, const Monomial& m, const F& c) {
        if (c.is_zero()) return;
        Key k{s, m};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend ExtForm operator+(const ExtForm& a, const ExtForm& b) {
        a.check_compatible(b);
        ExtForm r = a;
        for (auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend ExtForm operator-(const ExtForm& a, const ExtForm& b) {
        a.check_compatible(b);
        ExtForm r = a;
        for (auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    ExtForm& operator+=(const ExtForm& b) { return *this = *this + b; }
    ExtForm scaled(const F& c) const {
        ExtForm r(dom_, k_);
        for (auto& [k, x] : terms_) r.add_term(k.first, k.second, x * c);
        return r;
    }
    friend bool operator==(const ExtForm& a, const ExtForm& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [k, c] : terms_) {
            if (!first) os << " + ";
            std::string cs = c.str();
            if (cs != "1" || (k.first.empty() && k.second.is_one())) os << cs << "*";
            if (!k.second.is_one()) os << monomial_str(*dom_, k.second) << "*";
            bool fi = true;
            for (auto i : k.first) {
                if (!fi) os << "^";
                os << "d" << dom_->ind(i).name;
                fi = false;
            }
            first = false;
        }
        return os.str();
    }

  private:
    void check_compatible(const ExtForm& b) const {
        if (k_ != b.k_) throw std::invalid_argument("ExtForm: form degree mismatch");
        if (dom_ != b.dom_ && !(dom_ && b.dom_ && dom_->same_layout(*b.dom_)))
            throw std::invalid_argument("ExtForm: mismatched domains");
    }

    const SuperDomain* dom_ = nullptr;
    int k_ = 0;
    std::map<Key, F> terms_;
};

template <class F>
ExtForm<F> wedge(const ExtForm<F>& a, const ExtForm<F>& b) {
    if (&a.domain() != &b.domain() && !a.domain().same_layout(b.domain()))
        throw std::invalid_argument("wedge: mismatched domains");
    const SuperDomain& d = a.domain();
    ExtForm<F> r(&d, a.form_degree() + b.form_degree());
    IndexSet merged;
    for (auto& [ka, ca] : a.terms())
        for (auto& [kb, cb] : b.terms()) {
            int s = merge_sign(ka.first, kb.first, merged);
            if (s == 0) continue;
            auto prod = DivPoly<F>::monomial(d, ka.second, ca) * DivPoly<F>::monomial(d, kb.second, cb);
            for (auto& [m, c] : prod.terms()) r.add_term(merged, m, s > 0 ? c : -c);
        }
    return r;
}

template <class F>
ExtForm<F> ext_d(const ExtForm<F>& a) {
    const SuperDomain& d = a.domain();
    ExtForm<F> r(&d, a.form_degree() + 1);
    IndexSet merged;
    for (auto& [k, c] : a.terms()) {
        for (size_t i = 0; i < d.size(); ++i) {
            if (!k.second.e[i]) continue;
            Monomial m = k.second;
            m.e[i] -= 1;
            IndexSet di{static_cast<uint8_t>(i)};
            int s = merge_sign(di, k.first, merged);
            if (s == 0) continue;
            r.add_term(merged, m, s > 0 ? c : -c);
        }
    }
    return r;
}

// Contraction with a vector field (even field on an even domain).
template <class F>
ExtForm<F> contract(const VField<F>& D, const ExtForm<F>& a) {
    const SuperDomain& d = a.domain();
    ExtForm<F> r(&d, a.form_degree() - 1);
    for (auto& [k, c] : a.terms()) {
        for (size_t t = 0; t < k.first.size(); ++t) {
            size_t idx = k.first[t];
            DivPoly<F> coef = D.coeff(idx);
            if (coef.is_zero()) continue;
            IndexSet rest;
            for (size_t s = 0; s < k.first.size(); ++s)
                if (s != t) rest.push_back(k.first[s]);
            F sgn = sign_pow<F>(static_cast<long>(t));
            auto prod = coef * DivPoly<F>::monomial(d, k.second, c);
            for (auto& [m, cc] : prod.terms()) r.add_term(rest, m, cc * sgn);
        }
    }
    return r;
}

// Cartan formula L_D = d i_D + i_D d.
template <class F>
ExtForm<F> lie_derivative_form(const VField<F>& D, const ExtForm<F>& a) {
    return ext_d(contract(D, a)) + contract(D, ext_d(a));
}

// Identification with the coordinate volume form: a top form f dx_1...dx_n
// divided by vvol is the function f.
template <class F>
DivPoly<F> top_form_div_vvol(const ExtForm<F>& a) {
    const SuperDomain& d = a.domain();
    if (a.form_degree() != static_cast<int>(d.size()))
        throw std::invalid_argument("top_form_div_vvol: wrong form degree");
    DivPoly<F> f(&d);
    for (auto& [k, c] : a.terms()) f.add_term(k.second, c);
    return f;
}

// An (n-1)-form over vvol is the vector field D with i_D(vvol) = omega:
// the component missing dx_i contributes (-1)^{i-1} times d/dx_i.
template <class F>
VField<F> form_div_vvol(const ExtForm<F>& a) {
    const SuperDomain& d = a.domain();
    const size_t n = d.size();
    if (a.form_degree() != static_cast<int>(n) - 1)
        throw std::invalid_argument("form_div_vvol: wrong form degree");
    VField<F> D(&d);
    for (auto& [k, c] : a.terms()) {
        // find the missing index
        size_t miss = n;
        size_t t = 0;
        for (size_t i = 0; i < n; ++i) {
            if (t < k.first.size() && k.first[t] == i) ++t;
            else { miss = i; break; }
        }
        F sgn = sign_pow<F>(static_cast<long>(miss));
        D.add_coeff(miss, DivPoly<F>::monomial(d, k.second, c * sgn));
    }
    return D;
}

// p=2 vas bracket of two 1-forms on 4 even coordinates:
// [w1,w2] = d(w1 ^ w2)/vvol + (d w1 ^ d w2)/vvol, a field and a function.
template <class F>
std::pair<VField<F>, DivPoly<F>> vas_bracket(const ExtForm<F>& w1, const ExtForm<F>& w2) {
    static_assert(F::characteristic == 2, "vas bracket is the p=2 operation");
    const SuperDomain& d = w1.domain();
    if (d.size() != 4) throw std::invalid_argument("vas_bracket: 4 even indeterminates required");
    if (w1.form_degree() != 1 || w2.form_degree() != 1)
        throw std::invalid_argument("vas_bracket: 1-forms required");
    VField<F> v = form_div_vvol(ext_d(wedge(w1, w2)));
    DivPoly<F> f = top_form_div_vvol(wedge(ext_d(w1), ext_d(w2)));
    return {v, f};
}

} // namespace mlie
