#pragma once

// Exact univariate polynomial arithmetic over the rationals and over prime
// fields: remainder-based gcd, fraction-free (Bareiss) resultants of
// bivariate polynomials with respect to the outer variable, and the small
// number-theoretic helpers (deterministic 64-bit Miller-Rabin, random prime
// generation) the non-degeneracy machinery relies on.

#include <cstdint>
#include <random>
#include <vector>

#include "npinv/errors.hpp"
#include "npinv/lattice.hpp"

namespace npinv {

// ---------------------------------------------------------------------------
// Prime fields with runtime modulus

// Element of F_p. The modulus travels with the value; a default-constructed
// element is a modulus-free zero that adopts the modulus of the other
// operand. Mixing two distinct moduli is a programming error.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    static Fp make(const Int& value, std::uint64_t p) {
        if (p < 2) fail(errc::bad_argument, "modulus must be at least 2");
        Int r = value % Int(p);
        if (r < 0) r += Int(p);
        return Fp{r.convert_to<std::uint64_t>(), p};
    }
    bool is_zero() const { return v == 0; }
};

namespace detail {

inline std::uint64_t joint_modulus(const Fp& a, const Fp& b) {
    if (a.p && b.p && a.p != b.p) fail(errc::bad_argument, "mixed moduli");
    return a.p ? a.p : b.p;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

inline bool operator==(const Fp& a, const Fp& b) {
    detail::joint_modulus(a, b);
    return a.v == b.v;
}
inline bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

inline Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = detail::joint_modulus(a, b);
    if (!p) return Fp{};
    std::uint64_t s = a.v + b.v;  // p < 2^63 in all uses, no overflow
    if (s >= p) s -= p;
    return Fp{s, p};
}
inline Fp operator-(const Fp& a) {
    if (!a.p || a.v == 0) return Fp{0, a.p};
    return Fp{a.p - a.v, a.p};
}
inline Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
inline Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = detail::joint_modulus(a, b);
    if (!p) return Fp{};
    return Fp{detail::mulmod(a.v, b.v, p), p};
}

inline Fp inverse(const Fp& a) {
    if (a.v == 0 || !a.p) fail(errc::bad_argument, "zero has no inverse");
    ExtGcd e = ext_gcd(Int(a.v), Int(a.p));
    if (e.g != 1) fail(errc::bad_argument, "element is not invertible");
    Int u = e.u % Int(a.p);
    if (u < 0) u += Int(a.p);
    return Fp{u.convert_to<std::uint64_t>(), a.p};
}

inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline bool is_zero(const Rat& a) { return a == 0; }
inline Rat inverse(const Rat& a) {
    if (a == 0) fail(errc::bad_argument, "zero has no inverse");
    return 1 / a;
}

inline Fp one_like(const Fp& x) { return Fp::make(Int(1), x.p); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Fp from_int_like(const Fp& x, const Int& n) { return Fp::make(n, x.p); }
inline Rat from_int_like(const Rat&, const Int& n) { return Rat(n); }

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a field

template <class F>
struct Poly {
    std::vector<F> c;  // c[i] multiplies x^i; normalized to trailing nonzero

    void normalize() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }
    bool is_zero_poly() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const F& lead() const { return c.back(); }

    static Poly constant(F v) {
        Poly r;
        if (!is_zero(v)) r.c.push_back(std::move(v));
        return r;
    }
};

template <class F>
bool operator==(const Poly<F>& a, const Poly<F>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}

template <class F>
Poly<F> operator+(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
        if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
    }
    r.normalize();
    return r;
}

template <class F>
Poly<F> operator-(const Poly<F>& a) {
    Poly<F> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b) {
    return a + (-b);
}

template <class F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    if (a.is_zero_poly() || b.is_zero_poly()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.normalize();
    return r;
}

template <class F>
Poly<F> scaled(const Poly<F>& a, const F& s) {
    Poly<F> r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(x * s);
    r.normalize();
    return r;
}

// Division with remainder; the divisor must be nonzero.
template <class F>
void divmod(const Poly<F>& a, const Poly<F>& b, Poly<F>& q, Poly<F>& r) {
    if (b.is_zero_poly()) fail(errc::bad_argument, "polynomial division by zero");
    q = Poly<F>{};
    r = a;
    F leadInv = inverse(b.lead());
    while (!r.is_zero_poly() && r.degree() >= b.degree()) {
        long shift = r.degree() - b.degree();
        F factor = r.lead() * leadInv;
        if (q.c.size() < static_cast<std::size_t>(shift + 1))
            q.c.resize(shift + 1);
        q.c[shift] = q.c[shift] + factor;
        for (long i = 0; i <= b.degree(); ++i)
            r.c[i + shift] = r.c[i + shift] - factor * b.c[i];
        r.normalize();
    }
    q.normalize();
}

// Quotient of an exact division; fails if a remainder is left over.
template <class F>
Poly<F> divide_exact(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> q, r;
    divmod(a, b, q, r);
    if (!r.is_zero_poly()) fail(errc::bad_argument, "division is not exact");
    return q;
}

// Monic greatest common divisor via the Euclidean algorithm.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero_poly()) {
        Poly<F> q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero_poly() && !(a.lead() == one_like(a.lead())))
        a = scaled(a, inverse(a.lead()));
    return a;
}

// Formal derivative. The lead coefficient serves as the field exemplar, so
// interior zero coefficients need not carry a modulus.
template <class F>
Poly<F> derivative(const Poly<F>& a) {
    Poly<F> r;
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(a.c[i] * from_int_like(a.lead(), Int(static_cast<long>(i))));
    r.normalize();
    return r;
}

template <class F>
Poly<F> poly_pow(Poly<F> a, long e) {
    if (a.is_zero_poly()) {
        if (e == 0) fail(errc::bad_argument, "zero polynomial to the power zero");
        return Poly<F>{};
    }
    Poly<F> r = Poly<F>::constant(one_like(a.lead()));
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Resultants of bivariate polynomials

// Resultant with respect to the outer variable of a = sum a[i] y^i and
// b = sum b[j] y^j, whose entries are univariate polynomials in x over a
// field. Computed by fraction-free Gaussian elimination on the Sylvester
// matrix, so every intermediate division is exact.
template <class F>
Poly<F> resultant_outer(std::vector<Poly<F>> a, std::vector<Poly<F>> b) {
    auto trim = [](std::vector<Poly<F>>& v) {
        while (!v.empty() && v.back().is_zero_poly()) v.pop_back();
    };
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return Poly<F>{};
    long m = static_cast<long>(a.size()) - 1;
    long n = static_cast<long>(b.size()) - 1;
    if (m == 0) return poly_pow(a[0], n);
    if (n == 0) return poly_pow(b[0], m);

    long N = m + n;
    F exemplar = a.back().lead();
    Poly<F> one = Poly<F>::constant(one_like(exemplar));
    std::vector<std::vector<Poly<F>>> M(N, std::vector<Poly<F>>(N));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k) M[r][r + m - k] = a[k];
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k) M[n + r][r + n - k] = b[k];

    int sign = 1;
    Poly<F> prev = one;
    for (long k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero_poly()) {
            long pivot = -1;
            for (long r = k + 1; r < N; ++r)
                if (!M[r][k].is_zero_poly()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Poly<F>{};
            std::swap(M[k], M[pivot]);
            sign = -sign;
        }
        for (long i = k + 1; i < N; ++i) {
            for (long j = k + 1; j < N; ++j)
                M[i][j] = divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = Poly<F>{};
        }
        prev = M[k][k];
    }
    Poly<F> det = M[N - 1][N - 1];
    if (sign < 0) det = -det;
    return det;
}

// ---------------------------------------------------------------------------
// Primality

namespace detail {

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                               19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Uniform-ish random prime in [2^61, 2^62).
inline std::uint64_t random_prime_62bit(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1ull << 61, (1ull << 62) - 1);
    for (;;) {
        std::uint64_t n = dist(rng) | 1;
        if (is_probable_prime(n)) return n;
    }
}

}  // namespace detail

}  // namespace npinv
