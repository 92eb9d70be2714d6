#pragma once

// Truncated Bessel-series evaluation of the coefficients c_{t,b,r}(n) of H_t(zeta_b^r; q).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <hookdist/integer.hpp>
#include <hookdist/modular.hpp>
#include <hookdist/phase.hpp>
#include <hookdist/precision.hpp>
#include <hookdist/series.hpp>
#include <hookdist/special_functions.hpp>

namespace hookdist {

/// Expansion offset at infinity: H_t(zeta;q) = q^{1/24} times an eta quotient of weight -1/2,
/// so coefficients are indexed by n + alpha with alpha = -1/24.
inline const Rational& expansion_offset()
{
    static const Rational alpha(-1, 24);
    return alpha;
}

struct TruncationPlan {
    std::int64_t kmax = 30;
    unsigned precision_bits = default_precision_fallback;
};

/// r_{k,h,t,b}(n1,n2,n3) = 1 - g^2 + lambda^2/b^2 - 24(g^2 n1/t + lambda^2 n2/(t b^2) + n3), g = gcd(k,t).
inline Rational r_value(std::int64_t k, std::int64_t h, std::int64_t t, std::int64_t b, std::int64_t rres,
                        std::int64_t n1, std::int64_t n2, std::int64_t n3)
{
    const std::int64_t g = gcd(k, t);
    const std::int64_t lam = lambda_invariant(t, rres, b, h, k);
    Rational r = Rational(to_integer(1 - g * g)) + make_rational(lam * lam, b * b)
                 - Rational(24) * (make_rational(g * g * n1, t) + make_rational(lam * lam * n2, t * b * b)
                                   + Rational(to_integer(n3)));
    r.canonicalize();
    return r;
}

struct ZuckermanResult {
    PrecComplex value;
    std::vector<PrecFloat> shell_magnitudes; // |contribution of denominator k|, k = 1..kmax
    std::vector<PrecComplex> shells;
    PrecFloat last_shell() const { return shell_magnitudes.back(); }
};

namespace detail {

inline std::int64_t neg_inverse(std::int64_t x, std::int64_t m)
{
    if (m == 1) {
        return 0;
    }
    return mod(-mod_inverse(x, m), m);
}

} // namespace detail

/// Partial sum over k <= kmax of the Bessel series for c_{t,b,r}(n).
inline ZuckermanResult zuckerman_truncated(std::int64_t t, std::int64_t b, std::int64_t rres, std::int64_t n,
                                           const TruncationPlan& plan)
{
    if (!is_odd_prime(b) || t < 2 || t % b == 0) {
        throw std::invalid_argument("zuckerman_truncated: need b an odd prime, t > 1, b not dividing t");
    }
    if (Rational(to_integer(n)) + expansion_offset() <= 0) {
        throw std::domain_error("zuckerman_truncated: n + alpha = " + std::to_string(n) + " - 1/24 is not positive");
    }
    if (plan.kmax < b) {
        throw std::invalid_argument("zuckerman_truncated: kmax must be at least b");
    }
    ScopedPrecision guard(plan.precision_bits);
    // r_value >= 0 bounds n1 by t b^2 g^2/24 with g <= t
    const auto aux_order = static_cast<std::size_t>(t * t * t * b * b / 24 + 2);
    const IntSeries qt = eta_like_product({{1, static_cast<int>(t)}}, aux_order);
    const IntSeries ptt = eta_like_product({{1, -static_cast<int>(t)}}, aux_order);
    const IntSeries p = partition_series(aux_order);

    const PrecFloat pi = pi_value();
    const PrecFloat nn = to_prec(Rational(to_integer(n)) + expansion_offset());
    const PrecFloat prefactor = 2 * pi / boost::multiprecision::pow(nn, PrecFloat(0.75));
    const PrecFloat tf = t;

    ZuckermanResult out;
    for (std::int64_t k = 1; k <= plan.kmax; ++k) {
        const std::int64_t g = gcd(k, t);
        PrecComplex shell;
        for (std::int64_t h = 0; h < k; ++h) {
            if (gcd(h, k) != 1) {
                continue;
            }
            const std::int64_t lam = lambda_invariant(t, rres, b, h, k);
            const std::int64_t hp = detail::neg_inverse(h, k);
            const std::int64_t hkt = detail::neg_inverse(h * t / g, k / g);
            const std::int64_t m = k * b / lam;
            const std::int64_t hh = (h * b * t + rres * k) / lam;
            const std::int64_t hktbr = detail::neg_inverse(hh, m);
            const ExactPhase Omega = omega(hh, m).pow(t) * omega(h, k) / omega(h * t / g, k / g).pow(t);
            const ExactPhase twist = ExactPhase(make_rational(mod(-n * h, k), k));
            const PrecFloat scale = boost::multiprecision::pow(PrecFloat(g * b) / PrecFloat(lam), tf / 2);

            const Rational R = Rational(to_integer(1 - g * g)) + make_rational(lam * lam, b * b);
            const Rational c1 = Rational(24) * make_rational(g * g, t);
            const Rational c2 = Rational(24) * make_rational(lam * lam, t * b * b);
            PrecComplex inner;
            for (std::int64_t n1 = 0; R - c1 * Rational(to_integer(n1)) >= 0; ++n1) {
                for (std::int64_t n2 = 0; R - c1 * Rational(to_integer(n1)) - c2 * Rational(to_integer(n2)) >= 0;
                     ++n2) {
                    for (std::int64_t n3 = 0;; ++n3) {
                        const Rational rr = R - c1 * Rational(to_integer(n1)) - c2 * Rational(to_integer(n2))
                                            - Rational(24) * Rational(to_integer(n3));
                        if (rr < 0) {
                            break;
                        }
                        if (rr == 0) {
                            continue; // the Bessel factor vanishes
                        }
                        const auto i1 = static_cast<std::size_t>(n1);
                        const auto i2 = static_cast<std::size_t>(n2);
                        const auto i3 = static_cast<std::size_t>(n3);
                        if (i1 > aux_order || i2 > aux_order || i3 > aux_order) {
                            throw std::logic_error("zuckerman_truncated: auxiliary series too short");
                        }
                        const Integer coeff = qt[i1] * ptt[i2] * p[i3];
                        if (sgn(coeff) == 0) {
                            continue;
                        }
                        const std::int64_t kb = k * b;
                        const std::int64_t num = mod(g * b * hkt * n1 + lam * hktbr * n2 + b * hp * n3, kb);
                        const ExactPhase zeta = ExactPhase::root(num, kb);
                        const PrecFloat rf = to_prec(rr);
                        const PrecFloat bessel = bessel_i_three_halves(
                            pi / PrecFloat(k) * boost::multiprecision::sqrt(2 * nn * rf / 3));
                        const PrecFloat weight = to_prec(coeff) * boost::multiprecision::pow(rf / 24, PrecFloat(0.75))
                                                 * bessel;
                        inner += zeta.value() * PrecComplex(weight);
                    }
                }
            }
            shell += (Omega * twist).value() * PrecComplex(scale) * inner;
        }
        shell *= PrecComplex(prefactor / PrecFloat(k));
        out.shells.push_back(shell);
        out.shell_magnitudes.push_back(abs(shell));
        out.value += shell;
    }
    return out;
}

/// c_{t,b,r}(n) = sum_a p_t(a,b;n) zeta_b^{ra}, read from an exact Han series.
inline PrecComplex exact_coefficient(const CycSeries& han, std::int64_t rres, std::size_t n)
{
    if (n > han.order()) {
        throw std::out_of_range("exact_coefficient: n exceeds series order");
    }
    const auto b = static_cast<std::int64_t>(han.modulus());
    PrecComplex v;
    for (std::int64_t a = 0; a < b; ++a) {
        v += ExactPhase::root(mod(rres * a, b), b).value() * PrecComplex(to_prec(han.at(n, static_cast<std::size_t>(a))));
    }
    return v;
}

/// (omega_{-r tbar,b}/omega_{-r,b}^t) e^{2 pi i n r tbar/b} e^{pi sqrt(2n/3)}/(4 sqrt(3) n b^{t/2+1}),
/// the k = b main term as printed.
inline PrecComplex main_term_printed(std::int64_t t, std::int64_t b, std::int64_t rres, std::int64_t n)
{
    const std::int64_t tbar = mod_inverse(t, b);
    const ExactPhase ph = omega(mod(-rres * tbar, b), b) / omega(mod(-rres, b), b).pow(t)
                          * ExactPhase::root(mod(n * rres * tbar, b), b);
    const PrecFloat nf = n;
    const PrecFloat mag = boost::multiprecision::exp(pi_value() * boost::multiprecision::sqrt(2 * nf / 3))
                          / (4 * boost::multiprecision::sqrt(PrecFloat(3)) * nf
                             * boost::multiprecision::pow(PrecFloat(b), PrecFloat(t) / 2 + 1));
    return ph.value() * PrecComplex(mag);
}

/// The printed main term with the (r/24)^{3/4} factor of the k = b term restored: r = b^2 gives b^{3/2}.
inline PrecComplex main_term_corrected(std::int64_t t, std::int64_t b, std::int64_t rres, std::int64_t n)
{
    return main_term_printed(t, b, rres, n) * PrecComplex(boost::multiprecision::pow(PrecFloat(b), PrecFloat(1.5)));
}

} // namespace hookdist
