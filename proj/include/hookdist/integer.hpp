#pragma once

// Exact integer and rational helpers shared by every module.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hookdist {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den)
{
    return make_rational(Integer(std::to_string(num)), Integer(std::to_string(den)));
}

inline Integer to_integer(std::int64_t v) { return Integer(std::to_string(v)); }

/// Non-negative residue of a modulo m (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

/// Deterministic Miller-Rabin; the witness set is exact for all n < 2^64.
inline bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : small) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (auto a : small) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

inline bool is_odd_prime(std::int64_t p) { return p > 2 && is_prime(static_cast<std::uint64_t>(p)); }

/// Inverse of a modulo m, or throws when gcd(a, m) != 1. Returns 0 for m == 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    if (m <= 0) {
        throw std::invalid_argument("mod_inverse: modulus must be positive");
    }
    if (m == 1) {
        return 0;
    }
    std::int64_t old_r = mod(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw std::domain_error("mod_inverse: " + std::to_string(a) + " is not invertible modulo "
                                + std::to_string(m));
    }
    return mod(old_s, m);
}

/// Legendre symbol (m/p) for an odd prime p.
inline int legendre(std::int64_t m, std::int64_t p)
{
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("legendre: " + std::to_string(p) + " is not an odd prime");
    }
    const auto r = static_cast<std::uint64_t>(mod(m, p));
    if (r == 0) {
        return 0;
    }
    return powmod(r, static_cast<std::uint64_t>(p - 1) / 2, static_cast<std::uint64_t>(p)) == 1 ? 1 : -1;
}

/// Reduces an exact rational modulo a prime p. The denominator must be coprime to p.
inline std::int64_t rational_mod(const Rational& x, std::int64_t p)
{
    const Integer num = x.get_num();
    const Integer den = x.get_den();
    Integer pz = to_integer(p);
    Integer dr = den % pz;
    if (dr == 0) {
        throw std::domain_error("rational_mod: denominator " + den.get_str() + " is divisible by "
                                + std::to_string(p));
    }
    Integer nr = num % pz;
    if (nr < 0) {
        nr += pz;
    }
    const std::int64_t inv = mod_inverse(dr.get_si(), p);
    return mod(static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(nr.get_si()),
                                                static_cast<std::uint64_t>(inv),
                                                static_cast<std::uint64_t>(p))),
               p);
}

/// p-adic valuation of a non-zero integer.
inline int valuation(std::int64_t n, std::int64_t p)
{
    if (n == 0) {
        throw std::domain_error("valuation of zero is infinite");
    }
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace hookdist
