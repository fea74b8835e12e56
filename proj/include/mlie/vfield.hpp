#pragma once

// Vector fields sum f_i d_i in vect(m;N|n): bracket, p=2 squaring,
// divergence, density action, and graded component enumeration.

#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "divpoly.hpp"
#include "linalg.hpp"

namespace mlie {

template <class F>
class VField {
  public:
    VField() = default;
    explicit VField(const SuperDomain* dom) : dom_(dom) {}

    static VField zero(const SuperDomain& d) { return VField(&d); }
    static VField partial(const SuperDomain& d, size_t i) {
        VField v(&d);
        v.set_coeff(i, DivPoly<F>::one(d));
        return v;
    }
    static VField term(const SuperDomain& d, const Monomial& m, size_t dir, const F& c = F::one()) {
        VField v(&d);
        v.add_coeff(dir, DivPoly<F>::monomial(d, m, c));
        return v;
    }

    const SuperDomain& domain() const { return *dom_; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::map<size_t, DivPoly<F>>& coeffs() const { return coeffs_; }
    DivPoly<F> coeff(size_t i) const {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? DivPoly<F>::zero(*dom_) : it->second;
    }

    void set_coeff(size_t i, DivPoly<F> f) {
        if (f.is_zero()) coeffs_.erase(i);
        else coeffs_.insert_or_assign(i, std::move(f));
    }
    void add_coeff(size_t i, const DivPoly<F>& f) {
        if (f.is_zero()) return;
        auto it = coeffs_.find(i);
        if (it == coeffs_.end()) {
            coeffs_.emplace(i, f);
        } else {
            it->second += f;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    friend VField operator+(const VField& a, const VField& b) {
        VField r = a;
        for (auto& [i, f] : b.coeffs_) r.add_coeff(i, f);
        return r;
    }
    friend VField operator-(const VField& a, const VField& b) {
        VField r = a;
        for (auto& [i, f] : b.coeffs_) r.add_coeff(i, f.scaled(-F::one()));
        return r;
    }
    VField& operator+=(const VField& b) { return *this = *this + b; }
    VField& operator-=(const VField& b) { return *this = *this - b; }
    VField scaled(const F& c) const {
        VField r(dom_);
        if (c.is_zero()) return r;
        for (auto& [i, f] : coeffs_) r.add_coeff(i, f.scaled(c));
        return r;
    }
    friend bool operator==(const VField& a, const VField& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const VField& a, const VField& b) { return !(a == b); }

    // Derivation action sum f_i d_i(g), with the Koszul sign carried by
    // dp_partial and the product.
    DivPoly<F> apply(const DivPoly<F>& g) const {
        DivPoly<F> r(dom_);
        for (auto& [i, f] : coeffs_) r += f * g.partial(i);
        return r;
    }

    std::optional<int> degree() const {
        std::optional<int> v;
        for (auto& [i, f] : coeffs_) {
            auto fd = f.degree();
            if (!fd) return std::nullopt;
            int g = *fd - dom_->deg(i);
            if (!v) v = g;
            else if (*v != g) return std::nullopt;
        }
        return v;
    }
    std::optional<int> parity() const {
        std::optional<int> v;
        for (auto& [i, f] : coeffs_) {
            auto fp = f.parity();
            if (!fp) return std::nullopt;
            int g = (*fp + (dom_->odd(i) ? 1 : 0)) & 1;
            if (!v) v = g;
            else if (*v != g) return std::nullopt;
        }
        return v;
    }
    std::optional<std::vector<int>> weight() const {
        std::optional<std::vector<int>> v;
        for (auto& [i, f] : coeffs_) {
            for (auto& [m, c] : f.terms()) {
                auto w = monomial_weight(*dom_, m);
                for (unsigned r = 0; r < dom_->weight_rank(); ++r) w[r] -= dom_->weight(i)[r];
                if (!v) v = w;
                else if (*v != w) return std::nullopt;
            }
        }
        return v;
    }

    VField rebased(const SuperDomain& nd) const {
        VField r(&nd);
        for (auto& [i, f] : coeffs_) r.set_coeff(i, f.rebased(nd));
        return r;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [i, f] : coeffs_) {
            for (auto& [m, c] : f.terms()) {
                if (!first) os << " + ";
                std::string cs = c.str();
                if (cs != "1") os << cs << "*";
                if (!m.is_one()) os << monomial_str(*dom_, m) << "*";
                os << "D[" << dom_->ind(i).name << "]";
                first = false;
            }
        }
        return os.str();
    }

  private:
    const SuperDomain* dom_ = nullptr;
    std::map<size_t, DivPoly<F>> coeffs_; // direction -> coefficient
};

// [D,E] = D E - (-1)^{p(D)p(E)} E D, computed directionwise:
// [D,E]_j = D(E_j) - (-1)^{p(D)p(E)} E(D_j).
template <class F>
VField<F> vf_bracket(const VField<F>& D, const VField<F>& E) {
    const SuperDomain& d = D.domain();
    VField<F> r(&d);
    if (D.is_zero() || E.is_zero()) return r;
    F sgn = F::one();
    if (F::characteristic != 2) {
        auto pd = D.parity(), pe = E.parity();
        if (!pd || !pe) throw std::invalid_argument("bracket: parity-inhomogeneous field over p != 2");
        sgn = sign_pow<F>(static_cast<long>(*pd) * static_cast<long>(*pe));
    }
    for (auto& [j, ej] : E.coeffs()) r.add_coeff(j, D.apply(ej));
    for (auto& [j, dj] : D.coeffs()) r.add_coeff(j, E.apply(dj).scaled(-sgn));
    return r;
}

// p=2 squaring of an odd field: the even derivation D D, directionwise
// D(D_j). Its polarization is the bracket.
template <class F>
VField<F> vf_square(const VField<F>& D) {
    static_assert(F::characteristic == 2, "squaring is the p=2 operation");
    auto p = D.parity();
    if (!p || *p != 1) throw std::invalid_argument("square: odd homogeneous field required");
    VField<F> r(&D.domain());
    for (auto& [j, dj] : D.coeffs()) r.add_coeff(j, D.apply(dj));
    return r;
}

// Div(sum f_i d_i) = sum (-1)^{p(u_i) p(f_i)} d_i(f_i).
template <class F>
DivPoly<F> vf_div(const VField<F>& D) {
    const SuperDomain& d = D.domain();
    DivPoly<F> r(&d);
    for (auto& [i, f] : D.coeffs()) {
        if (F::characteristic != 2 && d.odd(i)) {
            // split by coefficient parity to apply the sign
            for (auto& [m, c] : f.terms()) {
                F s = sign_pow<F>(monomial_parity(d, m));
                r += DivPoly<F>::monomial(d, m, c * s).partial(i);
            }
        } else {
            r += f.partial(i);
        }
    }
    return r;
}

// Coefficient of vvol^lambda in L_D(f vvol^lambda):
// D(f) + (-1)^{p(f)p(D)} lambda f Div(D).
template <class F>
DivPoly<F> vf_density_action(const VField<F>& D, const DivPoly<F>& f, const F& lambda) {
    DivPoly<F> r = D.apply(f);
    if (!lambda.is_zero()) {
        DivPoly<F> dv = vf_div(D);
        if (F::characteristic != 2) {
            auto pd = D.parity();
            if (!pd) throw std::invalid_argument("density action: inhomogeneous field");
            for (auto& [m, c] : f.terms()) {
                F s = sign_pow<F>(static_cast<long>(monomial_parity(f.domain(), m)) * *pd);
                r += (DivPoly<F>::monomial(f.domain(), m, c * s) * dv).scaled(lambda);
            }
        } else {
            r += (f * dv).scaled(lambda);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Canonical basis of the degree-k component of vect(m;N|n): all pairs
// (direction j, monomial m) with deg(m) - deg(u_j) = k. Directions iterate
// in index order, monomials in the canonical monomial order. This fixes the
// coordinates used by all linear algebra at this degree.

struct ComponentKey {
    size_t dir;
    Monomial mon;
};

class DegreeComponent {
  public:
    DegreeComponent() = default;
    DegreeComponent(const SuperDomain& d, int k) : dom_(&d), deg_(k) {
        for (size_t j = 0; j < d.size(); ++j) {
            auto mons = monomials_of_degree(d, k + d.deg(j));
            for (auto& m : mons) {
                index_.emplace(std::make_pair(j, m), keys_.size());
                keys_.push_back(ComponentKey{j, m});
            }
        }
    }

    const SuperDomain& domain() const { return *dom_; }
    int degree() const { return deg_; }
    size_t dim() const { return keys_.size(); }
    const ComponentKey& key(size_t i) const { return keys_[i]; }

    std::optional<size_t> index_of(size_t dir, const Monomial& m) const {
        auto it = index_.find(std::make_pair(dir, m));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    template <class F>
    Row<F> coords(const VField<F>& v) const {
        Row<F> r(dim());
        for (auto& [j, f] : v.coeffs())
            for (auto& [m, c] : f.terms()) {
                auto idx = index_of(j, m);
                if (!idx) throw std::domain_error("coords: field not in this degree component");
                r.set(*idx, c);
            }
        return r;
    }

    // coords for the part of v lying in this component; other terms ignored
    template <class F>
    Row<F> coords_partial(const VField<F>& v) const {
        Row<F> r(dim());
        for (auto& [j, f] : v.coeffs())
            for (auto& [m, c] : f.terms()) {
                auto idx = index_of(j, m);
                if (idx) r.set(*idx, c);
            }
        return r;
    }

    template <class F>
    VField<F> field(const Row<F>& r) const {
        VField<F> v(dom_);
        for (size_t i = r.first_nonzero(); i != static_cast<size_t>(-1); i = r.first_nonzero(i + 1))
            v.add_coeff(keys_[i].dir, DivPoly<F>::monomial(*dom_, keys_[i].mon, r.get(i)));
        return v;
    }

    int parity_of(size_t i) const {
        return (monomial_parity(*dom_, keys_[i].mon) + (dom_->odd(keys_[i].dir) ? 1 : 0)) & 1;
    }
    std::vector<int> weight_of(size_t i) const {
        auto w = monomial_weight(*dom_, keys_[i].mon);
        for (unsigned r = 0; r < dom_->weight_rank(); ++r) w[r] -= dom_->weight(keys_[i].dir)[r];
        return w;
    }

  private:
    struct KeyHash {
        size_t operator()(const std::pair<size_t, Monomial>& k) const {
            size_t h = k.first * 1000003u;
            for (auto e : k.second.e) h = h * 131 + e;
            return h;
        }
    };
    const SuperDomain* dom_ = nullptr;
    int deg_ = 0;
    std::vector<ComponentKey> keys_;
    std::unordered_map<std::pair<size_t, Monomial>, size_t, KeyHash> index_;
};

template <class F>
std::vector<VField<F>> vf_basis_of_degree(const SuperDomain& d, int k) {
    DegreeComponent comp(d, k);
    std::vector<VField<F>> out;
    out.reserve(comp.dim());
    for (size_t i = 0; i < comp.dim(); ++i)
        out.push_back(VField<F>::term(d, comp.key(i).mon, comp.key(i).dir));
    return out;
}

} // namespace mlie
