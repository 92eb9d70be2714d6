#pragma once

// Poincare polynomials of Hilbert schemes of points on C^2 (homogeneous and
// quasihomogeneous) and their modular Betti sums.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <hookdist/integer.hpp>
#include <hookdist/phase.hpp>
#include <hookdist/precision.hpp>
#include <hookdist/series.hpp>

namespace hookdist {

/// Truncated sum of P_n(T) q^n. Only even T-degrees occur, so polynomial n is
/// stored by half-degree: half_[n][j] is the coefficient of T^{2j}.
class PoincareSeries {
public:
    PoincareSeries(std::size_t order, std::vector<std::vector<Integer>> half)
        : order_(order), half_(std::move(half))
    {
        if (half_.size() != order + 1) {
            throw std::invalid_argument("PoincareSeries: expected order + 1 polynomials");
        }
    }

    std::size_t order() const { return order_; }

    /// Largest T-degree that may carry a nonzero coefficient of q^n.
    std::size_t degree_bound(std::size_t n) const { return 2 * (half_.at(n).size() - 1); }

    /// Betti number b_d of the n-th space (coefficient of T^d q^n).
    Integer betti(std::size_t n, std::size_t d) const
    {
        const auto& p = half_.at(n);
        if (d % 2 != 0 || d / 2 >= p.size()) {
            return 0;
        }
        return p[d / 2];
    }

    /// Dense coefficient vector of P_n(T) by T-degree, odd degrees included.
    std::vector<Integer> polynomial(std::size_t n) const
    {
        const auto& p = half_.at(n);
        std::vector<Integer> out(2 * p.size() - 1);
        for (std::size_t j = 0; j < p.size(); ++j) {
            out[2 * j] = p[j];
        }
        return out;
    }

    Integer at_one(std::size_t n) const
    {
        Integer s = 0;
        for (const auto& c : half_.at(n)) {
            s += c;
        }
        return s;
    }

    const std::vector<Integer>& half_degree_coeffs(std::size_t n) const { return half_.at(n); }

private:
    std::size_t order_;
    std::vector<std::vector<Integer>> half_;
};

/// prod_{m>=1} 1/(1 - T^{2m-2} q^m).
inline PoincareSeries goettsche_series(std::size_t order)
{
    // a partition of n with l parts contributes T^{2(n - l)}, so half-degrees stay below n
    std::vector<std::vector<Integer>> c(order + 1);
    c[0].assign(1, 1);
    for (std::size_t n = 1; n <= order; ++n) {
        c[n].assign(n, 0);
    }
    for (std::size_t m = 1; m <= order; ++m) {
        const std::size_t shift = m - 1;
        for (std::size_t k = m; k <= order; ++k) {
            const auto& src = c[k - m];
            auto& dst = c[k];
            for (std::size_t j = 0; j < src.size(); ++j) {
                if (sgn(src[j]) != 0) {
                    dst[j + shift] += src[j];
                }
            }
        }
    }
    return PoincareSeries(order, std::move(c));
}

/// prod_{n>=1} 1/(1 - T^2 q^{(alpha+beta) n}) * prod_{m>=1} (1 - q^{(alpha+beta) m})/(1 - q^m).
inline PoincareSeries buryak_feigin_series(std::int64_t alpha, std::int64_t beta, std::size_t order)
{
    if (alpha < 1 || beta < 1) {
        throw std::invalid_argument("buryak_feigin_series: alpha and beta must be positive");
    }
    if (gcd(alpha, beta) != 1) {
        throw std::invalid_argument("buryak_feigin_series: alpha = " + std::to_string(alpha) + " and beta = "
                                    + std::to_string(beta) + " are not coprime");
    }
    const auto s = static_cast<std::size_t>(alpha + beta);
    const IntSeries base = eta_like_product({{1, -1}, {s, 1}}, order);
    std::vector<std::vector<Integer>> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        c[n].assign(n / s + 1, 0);
        c[n][0] = base[n];
    }
    for (std::size_t m = s; m <= order; m += s) {
        for (std::size_t k = m; k <= order; ++k) {
            const auto& src = c[k - m];
            auto& dst = c[k];
            for (std::size_t j = 0; j < src.size(); ++j) {
                if (sgn(src[j]) != 0) {
                    dst[j + 1] += src[j];
                }
            }
        }
    }
    return PoincareSeries(order, std::move(c));
}

/// B(a,b;n): the sum of the Betti numbers b_d of the n-th space over d = a (mod b).
inline Integer betti_sum(const PoincareSeries& series, std::int64_t a, std::int64_t b, std::size_t n)
{
    if (b < 1 || a < 0 || a >= b) {
        throw std::invalid_argument("betti_sum: need 0 <= a < b");
    }
    if (n > series.order()) {
        throw std::out_of_range("betti_sum: n = " + std::to_string(n) + " exceeds series order "
                                + std::to_string(series.order()));
    }
    const auto& p = series.half_degree_coeffs(n);
    Integer s = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (static_cast<std::int64_t>((2 * j) % static_cast<std::size_t>(b)) == a) {
            s += p[j];
        }
    }
    return s;
}

/// B(a,b;n) recomputed as (1/b) sum_r zeta_b^{-ar} P_n(zeta_b^r); returns the absolute deviation.
inline PrecFloat betti_sum_roots_of_unity_deviation(const PoincareSeries& series, std::int64_t a, std::int64_t b,
                                                     std::size_t n)
{
    const auto& p = series.half_degree_coeffs(n);
    PrecComplex total;
    for (std::int64_t r = 0; r < b; ++r) {
        PrecComplex value;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (sgn(p[j]) != 0) {
                const auto d = static_cast<std::int64_t>(2 * j);
                value += ExactPhase::root(mod(r * d, b), b).value() * PrecComplex(to_prec(p[j]));
            }
        }
        total += ExactPhase::root(mod(-a * r, b), b).value() * value;
    }
    total /= PrecComplex(PrecFloat(b));
    return abs(total - PrecComplex(to_prec(betti_sum(series, a, b, n))));
}

inline Integer partition_count(const PoincareSeries& series, std::size_t n) { return series.at_one(n); }

/// delta(a,b;n) = B(a,b;n) / p(n) for the given series.
inline Rational betti_proportion(const PoincareSeries& series, std::int64_t a, std::int64_t b, std::size_t n)
{
    return make_rational(betti_sum(series, a, b, n), series.at_one(n));
}

inline Rational delta(std::int64_t a, std::int64_t b, std::size_t n)
{
    return betti_proportion(goettsche_series(n), a, b, n);
}

inline Rational delta_quasi(std::int64_t alpha, std::int64_t beta, std::int64_t a, std::int64_t b, std::size_t n)
{
    return betti_proportion(buryak_feigin_series(alpha, beta, n), a, b, n);
}

} // namespace hookdist
