#pragma once

// Bernoulli numbers and polynomials, Hurwitz zeta, digamma, Lerch's
// transcendent, and the Bessel function I_{3/2}.

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <hookdist/integer.hpp>
#include <hookdist/phase.hpp>
#include <hookdist/precision.hpp>

namespace hookdist {

/// B_0..B_n with B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers(std::size_t n)
{
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (cache.size() <= n) {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        const std::size_t m = cache.size();
        Rational s = 0;
        Integer binom = 1;
        for (std::size_t k = 0; k < m; ++k) {
            s += Rational(binom) * cache[k];
            binom = binom * Integer(static_cast<unsigned long>(m + 1 - k)) / Integer(static_cast<unsigned long>(k + 1));
        }
        Rational bm = -s / Rational(Integer(static_cast<unsigned long>(m + 1)));
        bm.canonicalize();
        cache.push_back(bm);
    }
    return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

inline Rational bernoulli_number(std::size_t n) { return bernoulli_numbers(n).back(); }

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}, exact.
inline Rational bernoulli_poly(std::size_t n, const Rational& x)
{
    const auto b = bernoulli_numbers(n);
    Rational s = 0;
    Integer binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        Rational xp = 1;
        for (std::size_t j = 0; j < n - k; ++j) {
            xp *= x;
        }
        s += Rational(binom) * b[k] * xp;
        binom = binom * Integer(static_cast<unsigned long>(n - k)) / Integer(static_cast<unsigned long>(k + 1));
    }
    s.canonicalize();
    return s;
}

inline PrecFloat bernoulli_poly(std::size_t n, const PrecFloat& x)
{
    const auto b = bernoulli_numbers(n);
    PrecFloat s = 0;
    Integer binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        s += to_prec(Rational(binom) * b[k]) * boost::multiprecision::pow(x, static_cast<int>(n - k));
        binom = binom * Integer(static_cast<unsigned long>(n - k)) / Integer(static_cast<unsigned long>(k + 1));
    }
    return s;
}

/// zeta(s, a) for real s > 1, a > 0, by Euler-Maclaurin with the remainder
/// below 2^{-precision+8}.
inline PrecFloat hurwitz_zeta(const PrecFloat& s, const PrecFloat& a)
{
    if (s <= 1) {
        throw std::domain_error("hurwitz_zeta: s must exceed 1");
    }
    if (a <= 0) {
        throw std::domain_error("hurwitz_zeta: a must be positive");
    }
    const PrecFloat eps = precision_floor();
    const unsigned bits = current_precision_bits();
    const std::size_t N = 16 + bits / 4;
    PrecFloat sum = 0;
    for (std::size_t k = 0; k < N; ++k) {
        sum += boost::multiprecision::pow(PrecFloat(k) + a, -s);
    }
    const PrecFloat x = PrecFloat(N) + a;
    const PrecFloat xs = boost::multiprecision::pow(x, -s);
    sum += x * xs / (s - 1) + xs / 2;
    // tail terms B_{2j}/(2j)! s(s+1)...(s+2j-2) x^{-s-2j+1}
    PrecFloat rising = s;
    PrecFloat xpow = xs / x;
    PrecFloat fact = 2;
    PrecFloat prev = 0;
    const std::size_t jmax = 4 * bits;
    for (std::size_t j = 1; j <= jmax; ++j) {
        const PrecFloat term = to_prec(bernoulli_number(2 * j)) / fact * rising * xpow;
        const PrecFloat mag = boost::multiprecision::abs(term);
        if (j > 1 && mag > prev) {
            throw std::runtime_error("hurwitz_zeta: asymptotic tail diverged before reaching working precision");
        }
        sum += term;
        if (mag < eps * boost::multiprecision::abs(sum)) {
            return sum;
        }
        prev = mag;
        rising *= (s + PrecFloat(2 * j - 1)) * (s + PrecFloat(2 * j));
        xpow /= x * x;
        fact *= PrecFloat(2 * j + 1) * PrecFloat(2 * j + 2);
    }
    throw std::runtime_error("hurwitz_zeta: remainder bound not reached");
}

/// psi(x) for x > 0: upward recurrence, then the asymptotic series.
inline PrecFloat digamma(const PrecFloat& x)
{
    if (x <= 0) {
        throw std::domain_error("digamma: argument must be positive");
    }
    const unsigned bits = current_precision_bits();
    const PrecFloat shift_to = PrecFloat(bits / 2 + 8);
    PrecFloat y = x;
    PrecFloat acc = 0;
    while (y < shift_to) {
        acc -= 1 / y;
        y += 1;
    }
    const PrecFloat eps = precision_floor();
    PrecFloat result = boost::multiprecision::log(y) - 1 / (2 * y);
    const PrecFloat y2 = y * y;
    PrecFloat ypow = y2;
    for (std::size_t k = 1; k <= 4 * bits; ++k) {
        const PrecFloat term = to_prec(bernoulli_number(2 * k)) / (PrecFloat(2 * k) * ypow);
        result -= term;
        if (boost::multiprecision::abs(term) < eps) {
            return result + acc;
        }
        ypow *= y2;
    }
    throw std::runtime_error("digamma: asymptotic series did not converge");
}

/// Phi(z, s, a) = sum_{n>=0} z^n/(n+a)^s for |z| < 1, with a geometric tail bound.
inline PrecComplex lerch_phi(const PrecComplex& z, const PrecFloat& s, const PrecFloat& a)
{
    if (a <= 0) {
        throw std::domain_error("lerch_phi: a must be positive");
    }
    const PrecFloat r = abs(z);
    if (r >= 1) {
        throw std::domain_error("lerch_phi: |z| must be below 1 for the series route; use the root-of-unity overload");
    }
    const PrecFloat eps = precision_floor();
    PrecComplex sum;
    PrecComplex zn = 1;
    PrecFloat rn = 1;
    for (std::size_t n = 0;; ++n) {
        const PrecFloat denom = boost::multiprecision::pow(PrecFloat(n) + a, s);
        sum += zn / PrecComplex(denom);
        zn *= z;
        rn *= r;
        // |sum_{m>n} z^m/(m+a)^s| <= r^{n+1} / ((1 - r) (n+1+a)^s) for s >= 0
        const PrecFloat tail = rn * r / ((1 - r) * boost::multiprecision::pow(PrecFloat(n + 1) + a, s));
        if (tail < eps) {
            return sum;
        }
    }
}

/// Phi(xi, s, a) at a root of unity xi of order b, for s > 1:
/// b^{-s} sum_{j<b} xi^j zeta(s, (j+a)/b).
inline PrecComplex lerch_phi(const ExactPhase& xi, const PrecFloat& s, const PrecFloat& a)
{
    const Integer b = xi.turns().get_den();
    const std::int64_t bb = b.get_si();
    PrecComplex sum;
    for (std::int64_t j = 0; j < bb; ++j) {
        const PrecFloat hz = hurwitz_zeta(s, (PrecFloat(j) + a) / PrecFloat(bb));
        sum += xi.pow(j).value() * PrecComplex(hz);
    }
    return sum * PrecComplex(boost::multiprecision::pow(PrecFloat(bb), -s));
}

/// Ascending series (x/2)^{3/2} sum_k (x^2/4)^k / (k! Gamma(k + 5/2)).
inline PrecFloat bessel_i_three_halves_series(const PrecFloat& x, std::size_t terms = 0)
{
    if (x <= 0) {
        throw std::domain_error("bessel_i_three_halves: x must be positive");
    }
    const PrecFloat eps = precision_floor();
    const PrecFloat y = x * x / 4;
    PrecFloat term = 1 / gamma_value(PrecFloat(2.5));
    PrecFloat sum = term;
    for (std::size_t k = 1; terms == 0 || k < terms; ++k) {
        term *= y / (PrecFloat(k) * (PrecFloat(k) + PrecFloat(1.5)));
        sum += term;
        if (terms == 0 && term < eps * sum) {
            break;
        }
        if (k > 100000) {
            throw std::runtime_error("bessel_i_three_halves_series: no convergence");
        }
    }
    return boost::multiprecision::pow(x / 2, PrecFloat(1.5)) * sum;
}

/// I_{3/2}(x) = sqrt(2/(pi x)) (cosh x - sinh x / x); the series is used for x < 1.
inline PrecFloat bessel_i_three_halves(const PrecFloat& x)
{
    if (x <= 0) {
        throw std::domain_error("bessel_i_three_halves: x must be positive");
    }
    if (x < 1) {
        return bessel_i_three_halves_series(x);
    }
    return boost::multiprecision::sqrt(2 / (pi_value() * x))
           * (boost::multiprecision::cosh(x) - boost::multiprecision::sinh(x) / x);
}

} // namespace hookdist
