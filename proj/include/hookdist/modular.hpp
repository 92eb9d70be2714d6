#pragma once

// The gcd invariant lambda, the indicator I(a,b,t,n), and Kloosterman sums
// K(a,b,t;n) in direct and closed form.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <hookdist/integer.hpp>
#include <hookdist/phase.hpp>
#include <hookdist/precision.hpp>

namespace hookdist {

/// The three-case value g, g b or g b^2 of lambda_{t,a,b,h,k}, g = gcd(k,t), without any check.
inline std::int64_t lambda_case_formula(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t h,
                                        std::int64_t k)
{
    if (k < 1 || t < 1) {
        throw std::invalid_argument("lambda_invariant: k and t must be positive");
    }
    if (!is_odd_prime(b)) {
        throw std::invalid_argument("lambda_invariant: b must be an odd prime");
    }
    if (gcd(h, k) != 1) {
        throw std::invalid_argument("lambda_invariant: h and k must be coprime");
    }
    const std::int64_t g = gcd(k, t);
    std::int64_t factor = 1;
    if (k > 1 && (k / g) % b == 0) {
        const std::int64_t test = h * (t / g) + a * (k / (b * g));
        factor = mod(test, b) == 0 ? b * b : b;
    }
    return g * factor;
}

/// lambda_{t,a,b,h,k}; throws std::logic_error if the case formula differs from
/// gcd(kb, hbt + ak), which happens for b | a when b does not divide k/gcd(k,t).
inline std::int64_t lambda_invariant(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t h, std::int64_t k)
{
    const std::int64_t case_value = lambda_case_formula(t, a, b, h, k);
    const std::int64_t direct = gcd(k * b, h * b * t + a * k);
    if (case_value != direct) {
        throw std::logic_error("lambda_invariant: case formula " + std::to_string(case_value) + " != gcd "
                               + std::to_string(direct) + " at (t,a,b,h,k) = (" + std::to_string(t) + ","
                               + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(h) + ","
                               + std::to_string(k) + ")");
    }
    return case_value;
}

/// (1 - t^2)(1 - b^2)/24 as an exact rational.
inline Rational kloosterman_shift(std::int64_t b, std::int64_t t)
{
    return make_rational((1 - t * t) * (1 - b * b), 24);
}

/// Residue of (1 - t^2)(1 - b^2)/24 + a t - n modulo b. The rational must be b-integral.
inline std::int64_t indicator_residue(std::int64_t a, std::int64_t b, std::int64_t t, std::int64_t n)
{
    if (!is_odd_prime(b)) {
        throw std::invalid_argument("indicator: b must be an odd prime");
    }
    if (t % b == 0) {
        throw std::invalid_argument("indicator: b divides t");
    }
    const Rational x = kloosterman_shift(b, t) + Rational(to_integer(a * t - n));
    if (x.get_den() % to_integer(b) == 0) {
        throw std::logic_error("indicator: (1-t^2)(1-b^2)/24 is not " + std::to_string(b) + "-integral");
    }
    return rational_mod(x, b);
}

inline std::int64_t indicator(std::int64_t a, std::int64_t b, std::int64_t t, std::int64_t n)
{
    return indicator_residue(a, b, t, n) == 0 ? b - 1 : -1;
}

struct KloostermanParams {
    std::int64_t a = 0;
    std::int64_t b = 3;
    std::int64_t t = 2;
    std::int64_t n = 0;
};

inline void validate(const KloostermanParams& p)
{
    if (!is_odd_prime(p.b)) {
        throw std::invalid_argument("Kloosterman: b = " + std::to_string(p.b) + " is not an odd prime");
    }
    if (p.t < 1) {
        throw std::invalid_argument("Kloosterman: t must be positive");
    }
}

/// The terms omega_{h,b} / omega_{th,b}^t zeta_b^{(at-n)h} for h = 1..b-1.
inline std::vector<ExactPhase> kloosterman_terms(const KloostermanParams& p)
{
    validate(p);
    std::vector<ExactPhase> terms;
    terms.reserve(static_cast<std::size_t>(p.b - 1));
    for (std::int64_t h = 1; h < p.b; ++h) {
        const ExactPhase ratio = omega(h, p.b) / omega(p.t * h, p.b).pow(p.t);
        terms.push_back(ratio * ExactPhase::root(mod((p.a * p.t - p.n) * h, p.b), p.b));
    }
    return terms;
}

inline PrecComplex kloosterman_direct(const KloostermanParams& p)
{
    PrecComplex sum;
    for (const auto& term : kloosterman_terms(p)) {
        sum += term.value();
    }
    return sum;
}

/// coefficient * phase * (sqrt(b) if half_power), with sqrt(b) kept symbolic.
struct KloostermanClosed {
    std::int64_t coefficient = 0;
    ExactPhase phase;
    bool half_power = false;
    std::int64_t b = 0;

    PrecComplex value() const
    {
        PrecComplex v = phase.value() * PrecComplex(PrecFloat(coefficient));
        if (half_power) {
            v *= PrecComplex(boost::multiprecision::sqrt(PrecFloat(b)));
        }
        return v;
    }

    /// |K|^2 as an exact integer.
    std::int64_t norm() const { return coefficient * coefficient * (half_power ? b : 1); }
};

inline KloostermanClosed kloosterman_closed(const KloostermanParams& p)
{
    validate(p);
    if (p.t % p.b == 0) {
        throw std::invalid_argument("kloosterman_closed: b divides t");
    }
    KloostermanClosed k;
    k.b = p.b;
    const std::int64_t e = (1 - p.t) * (p.b - 1);
    if (p.t % 2 != 0) {
        // (1-t)(b-1)/4 is an integer for odd t
        const std::int64_t sign = mod(e / 4, 2) == 0 ? 1 : -1;
        k.coefficient = indicator(p.a, p.b, p.t, p.n) * sign * legendre(p.t, p.b);
        return k;
    }
    // (-1)^{(1-t)(b-1)/4} read as e^{pi i (1-t)(b-1)/4}
    k.phase = ExactPhase(make_rational(e, 8)) * epsilon(p.b);
    k.coefficient = legendre(indicator_residue(p.a, p.b, p.t, p.n), p.b);
    k.half_power = true;
    return k;
}

struct DedekindSimplificationCase {
    std::int64_t h = 0;
    bool closed_form_matches = false;
    bool bezout_form_matches = false;
    int bezout_solutions_checked = 0;
};

struct DedekindSimplificationReport {
    std::int64_t b = 0;
    std::int64_t t = 0;
    std::vector<DedekindSimplificationCase> cases;
    bool passed() const
    {
        for (const auto& c : cases) {
            if (!c.closed_form_matches || !c.bezout_form_matches) {
                return false;
            }
        }
        return !cases.empty();
    }
};

namespace detail {

inline ExactPhase sign_phase(int s)
{
    if (s == 0) {
        throw std::logic_error("sign_phase: zero Legendre symbol");
    }
    return s > 0 ? ExactPhase() : ExactPhase(Rational(1, 2));
}

/// (h/b) exp(pi i [(alpha + h - beta h b)(1 - b^2)/(12 b) + (b - 1)/4]) with alpha h - beta b = 1.
inline ExactPhase omega_bezout(std::int64_t h, std::int64_t b, std::int64_t alpha, std::int64_t beta)
{
    if (alpha * h - beta * b != 1) {
        throw std::logic_error("omega_bezout: not a Bezout pair");
    }
    const Rational turns = make_rational((alpha + h - beta * h * b) * (1 - b * b), 24 * b) + make_rational(b - 1, 8);
    return sign_phase(legendre(h, b)) * ExactPhase(turns);
}

} // namespace detail

/// omega_{h,b}/omega_{th,b}^t against (h/b)(th/b)^t e^{pi i (1-t)(b-1)/4} e^{2 pi i X h / b},
/// X = (1 - t^2)(1 - b^2)/24. The intermediate Bezout expression for omega_{h,b} is checked
/// for the least non-negative alpha and three further solutions.
inline DedekindSimplificationReport dedekind_simplification_check(std::int64_t b, std::int64_t t,
                                                                  const std::vector<std::int64_t>& hset)
{
    if (!is_odd_prime(b) || t % b == 0) {
        throw std::invalid_argument("dedekind_simplification_check: need b an odd prime not dividing t");
    }
    DedekindSimplificationReport report{b, t, {}};
    const Rational x = kloosterman_shift(b, t);
    for (std::int64_t h : hset) {
        if (h % b == 0) {
            throw std::invalid_argument("dedekind_simplification_check: h must be coprime to b");
        }
        DedekindSimplificationCase c;
        c.h = h;
        const ExactPhase lhs = omega(h, b) / omega(t * h, b).pow(t);
        int symbol = legendre(h, b);
        const int th = legendre(t * h, b);
        for (std::int64_t i = 0; i < t; ++i) {
            symbol *= th;
        }
        const ExactPhase rhs = detail::sign_phase(symbol) * ExactPhase(make_rational((1 - t) * (b - 1), 8))
                               * ExactPhase(x * make_rational(h, b));
        c.closed_form_matches = (lhs == rhs);

        const std::int64_t alpha0 = mod_inverse(h, b);
        bool all = true;
        for (std::int64_t m = 0; m < 4; ++m) {
            const std::int64_t alpha = alpha0 + m * b;
            const std::int64_t beta = (alpha * h - 1) / b;
            all = all && detail::omega_bezout(h, b, alpha, beta) == omega(h, b);
            ++c.bezout_solutions_checked;
        }
        c.bezout_form_matches = all;
        report.cases.push_back(c);
    }
    return report;
}

} // namespace hookdist
