#pragma once

// Limiting proportions c_t(a,b;n) and d(a,b), the Hardy-Ramanujan main term,
// and the empirical proportions Psi_t.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <hookdist/integer.hpp>
#include <hookdist/modular.hpp>
#include <hookdist/phase.hpp>
#include <hookdist/precision.hpp>
#include <hookdist/series.hpp>

namespace hookdist {

/// e^{pi sqrt(2n/3)} / (4 sqrt(3) n).
inline PrecFloat hardy_ramanujan_main(std::int64_t n)
{
    if (n < 1) {
        throw std::domain_error("hardy_ramanujan_main: n must be positive");
    }
    const PrecFloat nf = n;
    return boost::multiprecision::exp(pi_value() * boost::multiprecision::sqrt(2 * nf / 3))
           / (4 * boost::multiprecision::sqrt(PrecFloat(3)) * nf);
}

/// 1/b + coefficient * scale * phase, where phase is a unimodular factor that must be +-1.
struct DistributionConstant {
    std::int64_t b = 0;
    std::int64_t coefficient = 0; // I(a,b,t,n) (t/b) or the Legendre symbol
    Rational scale = 0;           // b^{-(t+1)/2} or b^{-t/2}
    ExactPhase phase;             // (-1)^{(1-t)(b-1)/4} or i^{(1-t)(b-1)/2} epsilon_b

    int phase_sign() const
    {
        if (phase.turns() == 0) {
            return 1;
        }
        if (phase.turns() == Rational(1, 2)) {
            return -1;
        }
        throw std::logic_error("DistributionConstant: phase " + phase.turns().get_str()
                               + " is not real, so the proportion would be complex");
    }

    Rational value() const
    {
        Rational v = make_rational(1, b) + Rational(to_integer(coefficient * phase_sign())) * scale;
        v.canonicalize();
        return v;
    }

    /// Rendering through the complex phase, before the sign simplification.
    PrecComplex rendered() const
    {
        return PrecComplex(to_prec(make_rational(1, b)))
               + phase.value() * PrecComplex(to_prec(scale) * PrecFloat(coefficient));
    }
};

inline Rational rational_power(std::int64_t b, int e)
{
    Integer p = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) {
        p *= to_integer(b);
    }
    return e < 0 ? make_rational(Integer(1), p) : Rational(p);
}

inline DistributionConstant ct_constant(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t n)
{
    if (t < 2) {
        throw std::invalid_argument("ct_constant: t must exceed 1");
    }
    if (!is_odd_prime(b)) {
        throw std::invalid_argument("ct_constant: b must be an odd prime");
    }
    if (a < 0 || a >= b) {
        throw std::invalid_argument("ct_constant: need 0 <= a < b");
    }
    DistributionConstant c;
    c.b = b;
    if (t % b == 0) {
        return c;
    }
    const std::int64_t e = (1 - t) * (b - 1);
    if (t % 2 != 0) {
        c.coefficient = indicator(a, b, t, n) * legendre(t, b);
        c.scale = rational_power(b, -static_cast<int>((t + 1) / 2));
        c.phase = ExactPhase(make_rational(e, 8)); // (-1)^{e/4} with e/4 an integer
        return c;
    }
    c.coefficient = legendre(indicator_residue(a, b, t, n), b);
    c.scale = rational_power(b, -static_cast<int>(t / 2));
    c.phase = ExactPhase(make_rational(e, 8)) * epsilon(b); // i^{e/2} epsilon_b
    return c;
}

/// d(a,b): 1/b for odd b, 2/b for a and b even, 0 for a odd and b even.
inline Rational d_constant(std::int64_t a, std::int64_t b)
{
    if (b < 1 || a < 0 || a >= b) {
        throw std::invalid_argument("d_constant: need 0 <= a < b");
    }
    if (b % 2 != 0) {
        return make_rational(1, b);
    }
    return a % 2 == 0 ? make_rational(2, b) : Rational(0);
}

/// Psi_t(a,b;n) = p_t(a,b;n)/p(n) from a Han series.
inline Rational psi_ratio(const CycSeries& han, std::int64_t a, std::size_t n)
{
    if (n > han.order()) {
        throw std::out_of_range("psi_ratio: n = " + std::to_string(n) + " needs series order >= " + std::to_string(n));
    }
    Integer total = 0;
    for (std::size_t j = 0; j < han.modulus(); ++j) {
        total += han.at(n, j);
    }
    return make_rational(han.at(n, static_cast<std::size_t>(a)), total);
}

/// c_t(a,b;n) e^{pi sqrt(2n/3)} / (4 sqrt(3) n).
inline PrecFloat pt_asymptotic_main(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t n)
{
    return to_prec(ct_constant(t, a, b, n).value()) * hardy_ramanujan_main(n);
}

} // namespace hookdist
