#pragma once

// Deterministic exact linear algebra over the coefficient field.
//
// Rows over GF(2) are bit-packed words with XOR elimination; other fields
// use a dense generic path. Pivots are always leftmost-first and echelons
// are fully reduced, so every derived basis is byte-stable.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace mlie {

// ---------------------------------------------------------------------------

class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool b) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (b) w_[i >> 6] |= m;
        else w_[i >> 6] &= ~m;
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void xor_with(const BitVec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }

    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }

    // first set bit at or after position i, or npos
    static constexpr size_t npos = static_cast<size_t>(-1);
    size_t first_set(size_t from = 0) const {
        size_t k = from >> 6;
        if (k >= w_.size()) return npos;
        uint64_t cur = w_[k] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur) {
                size_t i = (k << 6) + static_cast<size_t>(std::countr_zero(cur));
                return i < n_ ? i : npos;
            }
            if (++k >= w_.size()) return npos;
            cur = w_[k];
        }
    }

    size_t popcount() const {
        size_t c = 0;
        for (auto x : w_) c += static_cast<size_t>(std::popcount(x));
        return c;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

  private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// ---------------------------------------------------------------------------
// Row abstraction: GF(2) specialization is bit-packed.

template <class F>
struct Row {
    std::vector<F> c;

    Row() = default;
    explicit Row(size_t n) : c(n, F::zero()) {}

    size_t size() const { return c.size(); }
    F get(size_t i) const { return c[i]; }
    void set(size_t i, const F& x) { c[i] = x; }
    void add_scaled(const Row& o, const F& k) {
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i] * k;
    }
    void scale(const F& k) {
        for (auto& x : c) x *= k;
    }
    size_t first_nonzero(size_t from = 0) const {
        for (size_t i = from; i < c.size(); ++i)
            if (!c[i].is_zero()) return i;
        return static_cast<size_t>(-1);
    }
    friend bool operator==(const Row& a, const Row& b) { return a.c == b.c; }
};

template <>
struct Row<GF2> {
    BitVec c;

    Row() = default;
    explicit Row(size_t n) : c(n) {}

    size_t size() const { return c.size(); }
    GF2 get(size_t i) const { return GF2{c.get(i)}; }
    void set(size_t i, const GF2& x) { c.set(i, x.v != 0); }
    void add_scaled(const Row& o, const GF2& k) {
        if (k.v) c.xor_with(o.c);
    }
    void scale(const GF2&) {}
    size_t first_nonzero(size_t from = 0) const { return c.first_set(from); }
    friend bool operator==(const Row& a, const Row& b) { return a.c == b.c; }
};

template <class F>
bool row_is_zero(const Row<F>& r) {
    return r.first_nonzero(0) == static_cast<size_t>(-1);
}

// ---------------------------------------------------------------------------

template <class F>
class Echelon {
  public:
    Echelon() = default;
    explicit Echelon(size_t width) : width_(width) {}

    size_t width() const { return width_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<Row<F>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // Reduce r against the echelon in place; returns the residue.
    void reduce_inplace(Row<F>& r) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            F c = r.get(pivots_[k]);
            if (!c.is_zero()) r.add_scaled(rows_[k], -c);
        }
    }
    Row<F> reduce(Row<F> r) const {
        reduce_inplace(r);
        return r;
    }

    bool member(Row<F> r) const {
        reduce_inplace(r);
        return row_is_zero(r);
    }

    // Insert a row; returns true if the rank grew.
    bool add_row(Row<F> r) {
        if (r.size() != width_) throw std::invalid_argument("echelon: width mismatch");
        reduce_inplace(r);
        size_t p = r.first_nonzero();
        if (p == static_cast<size_t>(-1)) return false;
        F inv = F::one() / r.get(p);
        r.scale(inv);
        // keep reduced form: clear column p everywhere above
        for (size_t k = 0; k < rows_.size(); ++k) {
            F c = rows_[k].get(p);
            if (!c.is_zero()) rows_[k].add_scaled(r, -c);
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(r));
        pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
        return true;
    }

    // Coordinates of r in the row basis, if r lies in the span.
    std::optional<std::vector<F>> coordinates(Row<F> r) const {
        std::vector<F> out(rows_.size(), F::zero());
        for (size_t k = 0; k < rows_.size(); ++k) {
            F c = r.get(pivots_[k]);
            if (!c.is_zero()) {
                out[k] = c;
                r.add_scaled(rows_[k], -c);
            }
        }
        if (!row_is_zero(r)) return std::nullopt;
        return out;
    }

    friend bool operator==(const Echelon& a, const Echelon& b) {
        return a.width_ == b.width_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
    }

  private:
    size_t width_ = 0;
    std::vector<Row<F>> rows_;
    std::vector<size_t> pivots_;
};

template <class F>
Echelon<F> echelonize(size_t width, const std::vector<Row<F>>& rows) {
    Echelon<F> e(width);
    for (auto& r : rows) e.add_row(r);
    return e;
}

// ---------------------------------------------------------------------------
// Kernel of a linear map given column-wise: image(j) is the image of the
// j-th domain basis vector, expressed in a target of dimension target_dim.
// Augmented elimination; kernel rows come out in reduced echelon form over
// the domain coordinates.

template <class F, class ImageFn>
Echelon<F> kernel_of(size_t domain_dim, size_t target_dim, ImageFn&& image) {
    std::vector<Row<F>> work;
    work.reserve(domain_dim);
    for (size_t j = 0; j < domain_dim; ++j) {
        Row<F> aug(target_dim + domain_dim);
        Row<F> img = image(j);
        if (img.size() != target_dim) throw std::invalid_argument("kernel_of: image width mismatch");
        for (size_t t = img.first_nonzero(); t != static_cast<size_t>(-1); t = img.first_nonzero(t + 1))
            aug.set(t, img.get(t));
        aug.set(target_dim + j, F::one());
        work.push_back(std::move(aug));
    }
    // eliminate on the first target_dim columns only
    std::vector<size_t> piv_col;
    std::vector<size_t> piv_row;
    for (size_t r = 0; r < work.size(); ++r) {
        for (size_t k = 0; k < piv_row.size(); ++k) {
            F c = work[r].get(piv_col[k]);
            if (!c.is_zero()) work[r].add_scaled(work[piv_row[k]], -c);
        }
        size_t p = work[r].first_nonzero();
        if (p != static_cast<size_t>(-1) && p < target_dim) {
            F inv = F::one() / work[r].get(p);
            work[r].scale(inv);
            piv_col.push_back(p);
            piv_row.push_back(r);
        }
    }
    Echelon<F> ker(domain_dim);
    for (size_t r = 0; r < work.size(); ++r) {
        size_t p = work[r].first_nonzero();
        if (p == static_cast<size_t>(-1) || p >= target_dim) {
            Row<F> combo(domain_dim);
            for (size_t j = p; j != static_cast<size_t>(-1); j = work[r].first_nonzero(j + 1))
                combo.set(j - target_dim, work[r].get(j));
            ker.add_row(std::move(combo));
        }
    }
    return ker;
}

// ---------------------------------------------------------------------------

template <class F>
Echelon<F> subspace_sum(const Echelon<F>& a, const Echelon<F>& b) {
    if (a.width() != b.width()) throw std::invalid_argument("sum: width mismatch");
    Echelon<F> e = a;
    for (auto& r : b.rows()) e.add_row(r);
    return e;
}

// Zassenhaus intersection.
template <class F>
Echelon<F> subspace_intersect(const Echelon<F>& a, const Echelon<F>& b) {
    if (a.width() != b.width()) throw std::invalid_argument("intersect: width mismatch");
    const size_t n = a.width();
    std::vector<Row<F>> work;
    for (auto& r : a.rows()) {
        Row<F> z(2 * n);
        for (size_t i = r.first_nonzero(); i != static_cast<size_t>(-1); i = r.first_nonzero(i + 1)) {
            z.set(i, r.get(i));
            z.set(n + i, r.get(i));
        }
        work.push_back(std::move(z));
    }
    for (auto& r : b.rows()) {
        Row<F> z(2 * n);
        for (size_t i = r.first_nonzero(); i != static_cast<size_t>(-1); i = r.first_nonzero(i + 1))
            z.set(i, r.get(i));
        work.push_back(std::move(z));
    }
    // eliminate on the left block; rows with zero left block give the
    // intersection in the right block.
    std::vector<size_t> piv_col, piv_row;
    for (size_t r = 0; r < work.size(); ++r) {
        for (size_t k = 0; k < piv_row.size(); ++k) {
            F c = work[r].get(piv_col[k]);
            if (!c.is_zero()) work[r].add_scaled(work[piv_row[k]], -c);
        }
        size_t p = work[r].first_nonzero();
        if (p != static_cast<size_t>(-1) && p < n) {
            F inv = F::one() / work[r].get(p);
            work[r].scale(inv);
            piv_col.push_back(p);
            piv_row.push_back(r);
        }
    }
    Echelon<F> e(n);
    for (size_t r = 0; r < work.size(); ++r) {
        size_t p = work[r].first_nonzero();
        if (p == static_cast<size_t>(-1)) continue;
        if (p >= n) {
            Row<F> v(n);
            for (size_t i = p; i != static_cast<size_t>(-1); i = work[r].first_nonzero(i + 1))
                v.set(i - n, work[r].get(i));
            e.add_row(std::move(v));
        }
    }
    return e;
}

} // namespace mlie
