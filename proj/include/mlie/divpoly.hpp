#pragma once

// Sparse elements of O(m;N|n) in the divided-power basis u^(r).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "domain.hpp"

namespace mlie {

struct Monomial {
    std::vector<Exponent> e;

    Monomial() = default;
    explicit Monomial(size_t n) : e(n, 0) {}
    static Monomial unit(size_t n, size_t i, Exponent k = 1) {
        Monomial m(n);
        m.e[i] = k;
        return m;
    }

    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    unsigned long total() const {
        unsigned long s = 0;
        for (auto x : e) s += x;
        return s;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
    // graded-lex ordering is imposed per degree component; inside maps we
    // only need a deterministic total order.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

inline int monomial_degree(const SuperDomain& d, const Monomial& m) {
    long s = 0;
    for (size_t i = 0; i < m.e.size(); ++i) s += static_cast<long>(m.e[i]) * d.deg(i);
    return static_cast<int>(s);
}

inline int monomial_parity(const SuperDomain& d, const Monomial& m) {
    int s = 0;
    for (size_t i = 0; i < m.e.size(); ++i)
        if (d.odd(i)) s ^= (m.e[i] & 1);
    return s;
}

inline std::vector<int> monomial_weight(const SuperDomain& d, const Monomial& m) {
    std::vector<int> w(d.weight_rank(), 0);
    for (size_t i = 0; i < m.e.size(); ++i)
        for (unsigned r = 0; r < d.weight_rank(); ++r) w[r] += static_cast<int>(m.e[i]) * d.weight(i)[r];
    return w;
}

inline bool monomial_legal(const SuperDomain& d, const Monomial& m) {
    for (size_t i = 0; i < m.e.size(); ++i)
        if (!d.exponent_ok(i, m.e[i])) return false;
    return true;
}

inline std::string monomial_str(const SuperDomain& d, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (!first) os << "*";
        os << d.ind(i).name;
        if (m.e[i] > 1) os << "^(" << m.e[i] << ")";
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

// Koszul sign of merging the odd parts of r (left) and s (right):
// (-1)^{sum over odd i<j of r_j * s_i}. Trivial for p = 2.
inline long koszul_crossings(const SuperDomain& d, const Monomial& r, const Monomial& s) {
    long cross = 0;
    for (size_t i = 0; i < d.size(); ++i) {
        if (!d.odd(i) || !s.e[i]) continue;
        for (size_t j = i + 1; j < d.size(); ++j)
            if (d.odd(j) && r.e[j]) ++cross;
    }
    return cross;
}

template <class F>
class DivPoly {
  public:
    using Terms = std::map<Monomial, F>;

    DivPoly() = default;
    explicit DivPoly(const SuperDomain* dom) : dom_(dom) {}

    static DivPoly zero(const SuperDomain& d) { return DivPoly(&d); }
    static DivPoly constant(const SuperDomain& d, const F& c) {
        DivPoly f(&d);
        f.add_term(Monomial(d.size()), c);
        return f;
    }
    static DivPoly one(const SuperDomain& d) { return constant(d, F::one()); }
    static DivPoly monomial(const SuperDomain& d, const Monomial& m, const F& c = F::one()) {
        DivPoly f(&d);
        f.add_term(m, c);
        return f;
    }
    static DivPoly var(const SuperDomain& d, size_t i, Exponent k = 1) {
        return monomial(d, Monomial::unit(d.size(), i, k));
    }

    const SuperDomain& domain() const { return *dom_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const F& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    F coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? F::zero() : it->second;
    }

    friend DivPoly operator+(const DivPoly& a, const DivPoly& b) {
        a.check_same(b);
        DivPoly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend DivPoly operator-(const DivPoly& a, const DivPoly& b) {
        a.check_same(b);
        DivPoly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    DivPoly& operator+=(const DivPoly& b) { return *this = *this + b; }
    DivPoly& operator-=(const DivPoly& b) { return *this = *this - b; }

    DivPoly scaled(const F& c) const {
        DivPoly r(dom_);
        if (c.is_zero()) return r;
        for (auto& [m, k] : terms_) r.add_term(m, k * c);
        return r;
    }

    friend bool operator==(const DivPoly& a, const DivPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DivPoly& a, const DivPoly& b) { return !(a == b); }

    // Product in the divided-power basis: (r)*(s) carries the binomial
    // structure constant prod C(r_i+s_i, r_i), vanishes when an odd exponent
    // doubles, and picks up the Koszul crossing sign for p != 2. In
    // characteristic p a sum r_i+s_i that reaches the cap p^{N_i} has
    // binomial 0 automatically (a base-p carry occurs), so truncation is
    // exact; over Q a cap hit means the caller's working bound was too
    // small, which is an error, not a truncation.
    friend DivPoly operator*(const DivPoly& a, const DivPoly& b) {
        a.check_same(b);
        const SuperDomain& d = *a.dom_;
        DivPoly r(a.dom_);
        const size_t nv = d.size();
        for (auto& [mr, cr] : a.terms_) {
            for (auto& [ms, cs] : b.terms_) {
                bool dead = false;
                F coeff = cr * cs;
                Monomial m(nv);
                for (size_t i = 0; i < nv && !dead; ++i) {
                    unsigned long s = static_cast<unsigned long>(mr.e[i]) + ms.e[i];
                    if (d.odd(i)) {
                        if (s > 1) dead = true;
                    } else if (mr.e[i] && ms.e[i]) {
                        coeff *= field_binom<F>(s, mr.e[i]);
                        if (coeff.is_zero()) dead = true;
                    }
                    if (!dead && !d.exponent_ok(i, s)) {
                        if (F::characteristic == 0)
                            throw std::overflow_error("DivPoly: exponent cap exceeded over Q");
                        dead = true; // binomial is 0 mod p; drop the term
                    }
                    m.e[i] = static_cast<Exponent>(s);
                }
                if (dead) continue;
                if (F::characteristic != 2) coeff *= sign_pow<F>(koszul_crossings(d, mr, ms));
                r.add_term(m, coeff);
            }
        }
        return r;
    }

    // Distinguished derivative d/du_i. Coefficient 1 in the divided-power
    // basis; for an odd u_i the sign walks past earlier odd factors.
    DivPoly partial(size_t i) const {
        const SuperDomain& d = *dom_;
        DivPoly r(dom_);
        for (auto& [m, c] : terms_) {
            if (!m.e[i]) continue;
            Monomial mm = m;
            mm.e[i] -= 1;
            F coeff = c;
            if (F::characteristic != 2 && d.odd(i)) {
                long before = 0;
                for (size_t j = 0; j < i; ++j)
                    if (d.odd(j) && m.e[j]) ++before;
                coeff = coeff * sign_pow<F>(before);
            }
            r.add_term(mm, coeff);
        }
        return r;
    }

    // Degree / parity / weight of a homogeneous element; nullopt if mixed.
    std::optional<int> degree() const {
        std::optional<int> v;
        for (auto& [m, c] : terms_) {
            int g = monomial_degree(*dom_, m);
            if (!v) v = g;
            else if (*v != g) return std::nullopt;
        }
        return v;
    }
    std::optional<int> parity() const {
        std::optional<int> v;
        for (auto& [m, c] : terms_) {
            int g = monomial_parity(*dom_, m);
            if (!v) v = g;
            else if (*v != g) return std::nullopt;
        }
        return v;
    }
    std::optional<std::vector<int>> weight() const {
        std::optional<std::vector<int>> v;
        for (auto& [m, c] : terms_) {
            auto g = monomial_weight(*dom_, m);
            if (!v) v = g;
            else if (*v != g) return std::nullopt;
        }
        return v;
    }

    // Transplant into a structurally identical domain (same caps/parities,
    // possibly different grading or weights), or into a desuperized one.
    DivPoly rebased(const SuperDomain& nd) const {
        DivPoly r(&nd);
        for (auto& [m, c] : terms_) {
            if (!monomial_legal(nd, m)) throw std::domain_error("rebase: monomial outside target domain");
            r.add_term(m, c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms_) {
            if (!first) os << " + ";
            std::string cs = c.str();
            if (cs != "1" || m.is_one()) {
                os << cs;
                if (!m.is_one()) os << "*";
            }
            if (!m.is_one()) os << monomial_str(*dom_, m);
            first = false;
        }
        return os.str();
    }

  private:
    void check_same(const DivPoly& b) const {
        if (dom_ != b.dom_ && !(dom_ && b.dom_ && dom_->same_layout(*b.dom_)))
            throw std::invalid_argument("DivPoly: mismatched domains");
    }

    const SuperDomain* dom_ = nullptr;
    Terms terms_;
};

// All monomials of the given degree under the domain's deg vector, in
// graded-lexicographic order (the exponent vectors are compared
// lexicographically inside one degree class). Deterministic across runs.
inline std::vector<Monomial> monomials_of_degree(const SuperDomain& d, int degv) {
    if (!d.bounded()) throw std::domain_error("monomials_of_degree: unbounded shearing entry");
    std::vector<Monomial> out;
    Monomial cur(d.size());
    // Zero and negative degree entries occur in regradings; caps keep the
    // search finite. tail_pos[i]: every degree from i on is positive, which
    // enables pruning.
    std::vector<char> tail_pos(d.size() + 1, 1);
    for (size_t i = d.size(); i-- > 0;) tail_pos[i] = tail_pos[i + 1] && d.deg(i) > 0;
    std::function<void(size_t, long)> rec = [&](size_t i, long rem) {
        if (i == d.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        long maxe = static_cast<long>(d.cap(i)) - 1;
        for (long e = 0; e <= maxe; ++e) {
            long rest = rem - e * d.deg(i);
            if (tail_pos[i] && rest < 0) break;
            cur.e[i] = static_cast<Exponent>(e);
            rec(i + 1, rest);
        }
        cur.e[i] = 0;
    };
    rec(0, degv);
    // Canonical order: decreasing lexicographic on exponent vectors, so e.g.
    // [xi1, xi2] in degree 1.
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
    return out;
}

} // namespace mlie
