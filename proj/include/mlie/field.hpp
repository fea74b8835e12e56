#pragma once

// Exact coefficient arithmetic: prime fields GF(p) and the rationals.
//
// Every algebra in this library is linear over one of these scalar types.
// GF(2) is the main target; GF(p) for small odd p and Q exist to validate
// the characteristic-independent formulas.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mlie {

// ---------------------------------------------------------------------------
// GF(2)

struct GF2 {
    uint8_t v = 0;

    constexpr GF2() = default;
    constexpr explicit GF2(long x) : v(static_cast<uint8_t>(((x % 2) + 2) % 2)) {}

    static constexpr unsigned characteristic = 2;

    static constexpr GF2 zero() { return GF2{}; }
    static constexpr GF2 one() { return GF2{1}; }

    constexpr bool is_zero() const { return v == 0; }

    friend constexpr GF2 operator+(GF2 a, GF2 b) { return GF2{a.v ^ b.v}; }
    friend constexpr GF2 operator-(GF2 a, GF2 b) { return GF2{a.v ^ b.v}; }
    friend constexpr GF2 operator*(GF2 a, GF2 b) { return GF2{static_cast<long>(a.v & b.v)}; }
    constexpr GF2 operator-() const { return *this; }

    friend GF2 operator/(GF2 a, GF2 b) {
        if (b.is_zero()) throw std::domain_error("GF(2): division by zero");
        return a;
    }

    GF2& operator+=(GF2 b) { v ^= b.v; return *this; }
    GF2& operator-=(GF2 b) { v ^= b.v; return *this; }
    GF2& operator*=(GF2 b) { v &= b.v; return *this; }

    friend constexpr bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
    friend constexpr bool operator!=(GF2 a, GF2 b) { return a.v != b.v; }

    std::string str() const { return v ? "1" : "0"; }
};

// ---------------------------------------------------------------------------
// GF(p), p a small odd prime known at compile time.

template <unsigned P>
struct GFp {
    static_assert(P >= 2, "prime expected");
    uint32_t v = 0;

    constexpr GFp() = default;
    constexpr explicit GFp(long x) {
        long r = x % static_cast<long>(P);
        if (r < 0) r += P;
        v = static_cast<uint32_t>(r);
    }

    static constexpr unsigned characteristic = P;

    static constexpr GFp zero() { return GFp{}; }
    static constexpr GFp one() { return GFp{1}; }

    constexpr bool is_zero() const { return v == 0; }

    friend constexpr GFp operator+(GFp a, GFp b) { return from_raw((a.v + b.v) % P); }
    friend constexpr GFp operator-(GFp a, GFp b) { return from_raw((a.v + P - b.v) % P); }
    friend constexpr GFp operator*(GFp a, GFp b) {
        return from_raw(static_cast<uint32_t>((static_cast<uint64_t>(a.v) * b.v) % P));
    }
    constexpr GFp operator-() const { return from_raw(v == 0 ? 0 : P - v); }

    friend GFp operator/(GFp a, GFp b) {
        if (b.is_zero()) throw std::domain_error("GF(p): division by zero");
        return a * b.inverse();
    }

    GFp inverse() const {
        // Fermat; P is tiny so the loop is fine.
        GFp r = one(), base = *this;
        unsigned e = P - 2;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    GFp& operator+=(GFp b) { return *this = *this + b; }
    GFp& operator-=(GFp b) { return *this = *this - b; }
    GFp& operator*=(GFp b) { return *this = *this * b; }

    friend constexpr bool operator==(GFp a, GFp b) { return a.v == b.v; }
    friend constexpr bool operator!=(GFp a, GFp b) { return a.v != b.v; }

    std::string str() const { return std::to_string(v); }

  private:
    static constexpr GFp from_raw(uint32_t r) {
        GFp x;
        x.v = r;
        return x;
    }
};

// ---------------------------------------------------------------------------
// Q with arbitrary-precision integers (GMP). Always reduced, positive
// denominator; both are mpq_class invariants after canonicalize().

struct Rat {
    mpq_class v;

    Rat() : v(0) {}
    explicit Rat(long x) : v(x) {}
    Rat(long num, long den) : v(num, den) {
        if (den == 0) throw std::domain_error("Q: zero denominator");
        v.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v(q) { v.canonicalize(); }

    static constexpr unsigned characteristic = 0;

    static Rat zero() { return Rat{}; }
    static Rat one() { return Rat{1}; }

    bool is_zero() const { return v == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v + b.v)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v - b.v)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v * b.v)); }
    Rat operator-() const { return Rat(mpq_class(-v)); }

    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Q: division by zero");
        return Rat(mpq_class(a.v / b.v));
    }

    Rat& operator+=(const Rat& b) { v += b.v; return *this; }
    Rat& operator-=(const Rat& b) { v -= b.v; return *this; }
    Rat& operator*=(const Rat& b) { v *= b.v; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v != b.v; }

    std::string str() const { return v.get_str(); }
};

// ---------------------------------------------------------------------------

// C(n,k) mod p by Lucas: digitwise in base p. These are the structure
// constants of the divided-power basis, so they sit on every hot path;
// n,k stay machine-sized (exponents of truncated polynomials).
inline unsigned binom_mod(unsigned long n, unsigned long k, unsigned p) {
    if (k > n) return 0;
    unsigned long r = 1;
    while (k > 0 || n > 0) {
        unsigned long nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // C(nd,kd) for digits < p
        unsigned long c = 1;
        for (unsigned long i = 0; i < kd; ++i) c = c * (nd - i) / (i + 1);
        r = (r * (c % p)) % p;
        n /= p;
        k /= p;
    }
    return static_cast<unsigned>(r);
}

// Exact C(n,k) over Z (for Q coefficients and for the factorial oracle).
inline mpz_class binom_exact(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

template <class F>
F field_binom(unsigned long n, unsigned long k) {
    if constexpr (F::characteristic == 0) {
        return F(mpq_class(binom_exact(n, k)));
    } else {
        return F(static_cast<long>(binom_mod(n, k, F::characteristic)));
    }
}

// (-1)^k in F; identically 1 in characteristic 2.
template <class F>
F sign_pow(long k) {
    if constexpr (F::characteristic == 2) return F::one();
    return (((k % 2) + 2) % 2 == 0) ? F::one() : -F::one();
}

template <class F>
F field_from_long(long x) {
    return F(x);
}

} // namespace mlie
