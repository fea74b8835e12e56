#pragma once

// The divided-power superalgebra O(m;N|n): indeterminates, shearing vector,
// gradings and weights. A SuperDomain fixes everything the rest of the
// library needs to enumerate monomials and vector fields deterministically.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"

namespace mlie {

using Exponent = uint16_t;

constexpr unsigned kUnboundedShearing = std::numeric_limits<unsigned>::max();

struct Indeterminate {
    std::string name;
    bool odd = false;
    // Shearing entry N_i (exponent cap p^{N_i}) for even indeterminates;
    // ignored for odd ones, whose exponents are always 0 or 1.
    unsigned shearing = 1;
    int deg = 1;
    std::vector<int> weight; // length = domain weight rank
};

class SuperDomain {
  public:
    SuperDomain() = default;
    SuperDomain(unsigned p, std::vector<Indeterminate> inds, unsigned weight_rank = 0)
        : p_(p), inds_(std::move(inds)), weight_rank_(weight_rank) {
        for (auto& x : inds_) {
            if (x.weight.empty()) x.weight.assign(weight_rank_, 0);
            if (x.weight.size() != weight_rank_)
                throw std::invalid_argument("domain: weight vector length mismatch");
        }
        caps_.resize(inds_.size());
        for (size_t i = 0; i < inds_.size(); ++i) caps_[i] = cap_of(i);
    }

    unsigned characteristic() const { return p_; }
    size_t size() const { return inds_.size(); }
    const Indeterminate& ind(size_t i) const { return inds_[i]; }
    const std::vector<Indeterminate>& inds() const { return inds_; }
    unsigned weight_rank() const { return weight_rank_; }

    bool odd(size_t i) const { return inds_[i].odd; }
    int deg(size_t i) const { return inds_[i].deg; }
    const std::vector<int>& weight(size_t i) const { return inds_[i].weight; }
    unsigned shearing(size_t i) const { return inds_[i].shearing; }

    size_t even_count() const {
        return static_cast<size_t>(std::count_if(inds_.begin(), inds_.end(),
                                                 [](const Indeterminate& x) { return !x.odd; }));
    }
    size_t odd_count() const { return size() - even_count(); }

    // Exclusive exponent bound: exponents of indeterminate i run in [0, cap).
    // kUnboundedShearing caps are represented by a sentinel.
    unsigned long cap(size_t i) const { return caps_[i]; }
    bool bounded() const {
        for (size_t i = 0; i < size(); ++i)
            if (caps_[i] == kUnboundedCap) return false;
        return true;
    }

    bool exponent_ok(size_t i, unsigned long e) const { return caps_[i] == kUnboundedCap || e < caps_[i]; }

    SuperDomain with_shearing(const std::vector<unsigned>& N) const {
        if (N.size() != size()) throw std::invalid_argument("domain: shearing length mismatch");
        SuperDomain d = *this;
        for (size_t i = 0; i < size(); ++i) d.inds_[i].shearing = N[i];
        for (size_t i = 0; i < size(); ++i) d.caps_[i] = d.cap_of(i);
        return d;
    }

    SuperDomain with_degrees(const std::vector<int>& deg) const {
        if (deg.size() != size()) throw std::invalid_argument("domain: degree length mismatch");
        SuperDomain d = *this;
        for (size_t i = 0; i < size(); ++i) d.inds_[i].deg = deg[i];
        return d;
    }

    SuperDomain with_weights(unsigned rank, const std::vector<std::vector<int>>& w) const {
        if (w.size() != size()) throw std::invalid_argument("domain: weight list length mismatch");
        SuperDomain d = *this;
        d.weight_rank_ = rank;
        for (size_t i = 0; i < size(); ++i) {
            if (w[i].size() != rank) throw std::invalid_argument("domain: weight vector length mismatch");
            d.inds_[i].weight = w[i];
        }
        return d;
    }

    // Characteristic-2 desuperization: every odd indeterminate becomes an
    // even one with shearing entry 1 (exponent cap 2). Exponent semantics
    // are unchanged, so elements carry over verbatim.
    SuperDomain desuperized() const {
        if (p_ != 2) throw std::domain_error("desuperization requires p = 2");
        SuperDomain d = *this;
        for (auto& x : d.inds_)
            if (x.odd) {
                x.odd = false;
                x.shearing = 1;
            }
        for (size_t i = 0; i < d.size(); ++i) d.caps_[i] = d.cap_of(i);
        return d;
    }

    bool same_layout(const SuperDomain& o) const {
        if (p_ != o.p_ || size() != o.size()) return false;
        for (size_t i = 0; i < size(); ++i)
            if (inds_[i].odd != o.inds_[i].odd || caps_[i] != o.caps_[i]) return false;
        return true;
    }

    static constexpr unsigned long kUnboundedCap = std::numeric_limits<unsigned long>::max();

  private:
    unsigned long cap_of(size_t i) const {
        const auto& x = inds_[i];
        if (x.odd) return 2;
        if (p_ == 0) {
            // Over Q there is no shearing; callers pick a finite working cap
            // when they need enumeration. shearing stores that cap's log2-free
            // analog: interpret it directly as the cap exponent bound 2^N for
            // uniformity would be wrong, so we use N as a plain bound base:
            // cap = "unbounded" unless a finite bound was requested.
            if (x.shearing == kUnboundedShearing) return kUnboundedCap;
            return x.shearing; // direct exclusive bound over Q
        }
        if (x.shearing == kUnboundedShearing) return kUnboundedCap;
        unsigned long c = 1;
        for (unsigned k = 0; k < x.shearing; ++k) c *= p_;
        return c;
    }

    unsigned p_ = 2;
    std::vector<Indeterminate> inds_;
    unsigned weight_rank_ = 0;
    std::vector<unsigned long> caps_;
};

// Convenience builders -------------------------------------------------------

// names like u1..um, xi1..xin; all degrees 1; shearing N for even, odd cap 1.
inline SuperDomain make_domain(unsigned p, unsigned m, unsigned n,
                               const std::vector<unsigned>& N = {}) {
    std::vector<Indeterminate> xs;
    xs.reserve(m + n);
    for (unsigned i = 0; i < m; ++i) {
        Indeterminate x;
        x.name = "x" + std::to_string(i + 1);
        x.odd = false;
        x.shearing = N.empty() ? 1 : N.at(i);
        xs.push_back(std::move(x));
    }
    for (unsigned j = 0; j < n; ++j) {
        Indeterminate x;
        x.name = "xi" + std::to_string(j + 1);
        x.odd = true;
        xs.push_back(std::move(x));
    }
    return SuperDomain(p, std::move(xs));
}

} // namespace mlie
