#pragma once

// The q-products F_1, F_2, F_3 near roots of unity: direct evaluation, leading
// asymptotics, and the numeric checks behind them.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <hookdist/integer.hpp>
#include <hookdist/modular.hpp>
#include <hookdist/phase.hpp>
#include <hookdist/precision.hpp>
#include <hookdist/special_functions.hpp>

namespace hookdist {

enum class ProductKind { F1 = 1, F2 = 2, F3 = 3 };

struct ProductValue {
    PrecComplex value;
    std::size_t factors = 0;
};

/// F_1 = prod (1 - xi q^n), F_2 = prod (1 - (xi q)^n), F_3 = prod (1 - xi^{n-1} q^n).
/// Factors are multiplied until the log-tail bound 2|q|^{N+1}/(1-|q|) drops below 2^{-precision+8}.
inline ProductValue F_direct(ProductKind kind, const ExactPhase& xi, const PrecComplex& q,
                             std::size_t max_factors = 10000000)
{
    const PrecFloat r = abs(q);
    if (r >= 1) {
        throw std::domain_error("F_direct: |q| must be below 1");
    }
    const PrecFloat eps = precision_floor();
    const PrecComplex xv = xi.value();
    PrecComplex prod = 1;
    PrecComplex qn = 1;
    PrecComplex xn = 1; // xi^n
    PrecFloat rn = 1;
    std::size_t n = 0;
    while (true) {
        ++n;
        if (n > max_factors) {
            throw std::runtime_error("F_direct: factor budget exhausted");
        }
        qn *= q;
        rn *= r;
        PrecComplex w;
        switch (kind) {
        case ProductKind::F1:
            w = xv * qn;
            break;
        case ProductKind::F2:
            xn *= xv;
            w = xn * qn;
            break;
        case ProductKind::F3:
            w = xn * qn; // xi^{n-1}
            xn *= xv;
            break;
        }
        prod *= PrecComplex(1) - w;
        if (rn < PrecFloat(0.5) && 2 * rn * r / (1 - r) < eps) {
            break;
        }
    }
    return {prod, n};
}

namespace detail {

inline std::int64_t phase_order(const ExactPhase& xi) { return xi.turns().get_den().get_si(); }

inline void require_primitive_nontrivial(const ExactPhase& xi)
{
    if (xi.is_one()) {
        throw std::invalid_argument("asymptotic: xi = 1 is the eta case and is excluded");
    }
}

} // namespace detail

/// (1 - xi)^{-1/2} exp(-xi Phi(xi,2,1)/z), principal branches.
inline PrecComplex F1_asym(const ExactPhase& xi, const PrecComplex& z)
{
    detail::require_primitive_nontrivial(xi);
    const PrecComplex x = xi.value();
    const PrecComplex li2 = x * lerch_phi(xi, PrecFloat(2), PrecFloat(1));
    return pow(PrecComplex(1) - x, PrecComplex(PrecFloat(-0.5))) * exp(-(li2 / z));
}

/// sqrt(2 pi) (b^2 z)^{1/2-1/b} / Gamma(1/b) prod_j (1 - xi^j)^{-j/b} exp(-pi^2/(6 b^2 z)).
inline PrecComplex F3_asym(const ExactPhase& xi, const PrecComplex& z)
{
    detail::require_primitive_nontrivial(xi);
    const std::int64_t b = detail::phase_order(xi);
    const PrecFloat bf = b;
    const PrecFloat pi = pi_value();
    PrecComplex v = PrecComplex(boost::multiprecision::sqrt(2 * pi) / gamma_value(1 / bf));
    v *= pow(PrecComplex(bf * bf) * z, PrecComplex(PrecFloat(0.5) - 1 / bf));
    for (std::int64_t j = 1; j < b; ++j) {
        v *= pow(PrecComplex(1) - xi.pow(j).value(), PrecComplex(-PrecFloat(j) / bf));
    }
    return v * exp(-(PrecComplex(pi * pi / (6 * bf * bf)) / z));
}

/// omega^{-1}_{(hbt+ak)/lambda, kb/lambda} (lambda/(tbz))^{1/2} exp(-pi lambda^2/(12 b^2 k t z)),
/// the leading term of F_2(zeta_b^a; q^t) at q = e^{2 pi i (h + i z)/k}.
inline PrecComplex F2_asym(std::int64_t a, std::int64_t b, std::int64_t t, std::int64_t h, std::int64_t k,
                           const PrecComplex& z)
{
    if (z.re <= 0) {
        throw std::domain_error("F2_asym: Re z must be positive");
    }
    if (h < 0 || h >= k || gcd(h, k) != 1) {
        throw std::invalid_argument("F2_asym: need 0 <= h < k with gcd(h,k) = 1");
    }
    const std::int64_t lam = lambda_invariant(t, a, b, h, k);
    const ExactPhase w = omega((h * b * t + a * k) / lam, k * b / lam);
    const PrecFloat pi = pi_value();
    const PrecFloat L = lam;
    const PrecComplex root = pow(PrecComplex(L) / (PrecComplex(PrecFloat(t * b)) * z), PrecComplex(PrecFloat(0.5)));
    const PrecComplex expo = -(PrecComplex(pi * L * L / PrecFloat(12 * b * b * k * t)) / z);
    return w.inverse().value() * root * exp(expo);
}

/// q = e^{2 pi i (h + i z)/k}.
inline PrecComplex cusp_q(std::int64_t h, std::int64_t k, const PrecComplex& z)
{
    const PrecFloat pi = pi_value();
    const PrecComplex arg = PrecComplex(PrecFloat(0), 2 * pi / PrecFloat(k)) * (PrecComplex(PrecFloat(h)) + i_unit() * z);
    return exp(arg);
}

struct ConeSample {
    PrecFloat theta;
    PrecFloat r;
    PrecFloat alpha;

    PrecComplex z() const { return polar(r, alpha); }
};

/// Ray angles {0, +-theta/2, +-theta}.
inline std::vector<PrecFloat> cone_rays(const PrecFloat& theta)
{
    return {PrecFloat(0), theta / 2, -theta / 2, theta, -theta};
}

struct RatioStudy {
    std::vector<double> z_abs;
    std::vector<double> errors; // |F_direct/F_asym - 1|
    double slope = 0;           // least-squares slope of log(error) against log|z|
    bool monotone = false;

    bool slope_within(double lo, double hi) const { return monotone && slope >= lo && slope <= hi; }
};

inline double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_loglog_slope: need at least two matched points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline RatioStudy finish_study(RatioStudy s)
{
    s.monotone = true;
    for (std::size_t i = 1; i < s.errors.size(); ++i) {
        if (!(s.errors[i] < s.errors[i - 1])) {
            s.monotone = false;
        }
    }
    s.slope = fit_loglog_slope(s.z_abs, s.errors);
    return s;
}

/// z_j = r0 2^{-j} e^{i alpha}, j = 0..steps-1.
inline std::vector<PrecComplex> dyadic_grid(const PrecFloat& r0, const PrecFloat& alpha, int steps)
{
    std::vector<PrecComplex> grid;
    PrecFloat r = r0;
    for (int j = 0; j < steps; ++j) {
        grid.push_back(polar(r, alpha));
        r /= 2;
    }
    return grid;
}

/// Ratio study for F_1 or F_3 at q = e^{-z}.
inline RatioStudy ratio_study(ProductKind kind, const ExactPhase& xi, const std::vector<PrecComplex>& grid)
{
    if (kind == ProductKind::F2) {
        throw std::invalid_argument("ratio_study: use ratio_study_F2 for F_2");
    }
    RatioStudy s;
    for (const auto& z : grid) {
        const PrecComplex q = exp(-z);
        const PrecComplex direct = F_direct(kind, xi, q).value;
        const PrecComplex asym = kind == ProductKind::F1 ? F1_asym(xi, z) : F3_asym(xi, z);
        s.z_abs.push_back(to_double(abs(z)));
        s.errors.push_back(to_double(abs(direct / asym - PrecComplex(1))));
    }
    return finish_study(std::move(s));
}

/// Ratio study for F_2(zeta_b^a; q^t) at q = e^{2 pi i (h + i z)/k}. Errors below the
/// precision floor count as converged.
inline RatioStudy ratio_study_F2(std::int64_t a, std::int64_t b, std::int64_t t, std::int64_t h, std::int64_t k,
                                 const std::vector<PrecComplex>& grid)
{
    RatioStudy s;
    const ExactPhase xi = ExactPhase::root(a, b);
    const double floor = to_double(precision_floor(16));
    for (const auto& z : grid) {
        const PrecComplex q = cusp_q(h, k, z);
        PrecComplex qt = 1;
        for (std::int64_t i = 0; i < t; ++i) {
            qt *= q;
        }
        const PrecComplex direct = F_direct(ProductKind::F2, xi, qt).value;
        s.z_abs.push_back(to_double(abs(z)));
        s.errors.push_back(std::max(floor, to_double(abs(direct / F2_asym(a, b, t, h, k, z) - PrecComplex(1)))));
    }
    s.monotone = true;
    for (std::size_t i = 1; i < s.errors.size(); ++i) {
        if (!(s.errors[i] < s.errors[i - 1] || s.errors[i] <= floor)) {
            s.monotone = false;
        }
    }
    s.slope = 0;
    return s;
}

/// |lhs - rhs| for (q;q) = omega_{h,k}^{-1} z^{-1/2} e^{pi/(12k)(z - 1/z)} (q1;q1),
/// q = e^{2 pi i (h + i z)/k}, q1 = e^{2 pi i (h' + i/z)/k}, h h' = -1 (mod k).
inline PrecFloat eta_transform_check(std::int64_t h, std::int64_t k, const PrecComplex& z)
{
    if (gcd(h, k) != 1) {
        throw std::invalid_argument("eta_transform_check: h and k must be coprime");
    }
    if (z.re <= 0) {
        throw std::domain_error("eta_transform_check: Re z must be positive");
    }
    const std::int64_t hp = k == 1 ? 0 : mod(-mod_inverse(h, k), k);
    const PrecComplex q = cusp_q(h, k, z);
    const PrecComplex q1 = cusp_q(hp, k, PrecComplex(1) / z);
    const ExactPhase one;
    const PrecComplex lhs = F_direct(ProductKind::F2, one, q).value;
    const PrecFloat pi = pi_value();
    const PrecComplex expo = PrecComplex(pi / PrecFloat(12 * k)) * (z - PrecComplex(1) / z);
    const PrecComplex rhs = omega(h, k).inverse().value() * pow(z, PrecComplex(PrecFloat(-0.5))) * exp(expo)
                            * F_direct(ProductKind::F2, one, q1).value;
    return abs(lhs - rhs);
}

/// max over primitive b-th roots xi of |sum_{j=1}^b psi(j/b) xi^j - b Log(1 - xi)|.
inline PrecFloat digamma_identity_check(std::int64_t b)
{
    if (b < 2) {
        throw std::invalid_argument("digamma_identity_check: b must be at least 2");
    }
    std::vector<PrecFloat> psi;
    for (std::int64_t j = 1; j <= b; ++j) {
        psi.push_back(digamma(PrecFloat(j) / PrecFloat(b)));
    }
    PrecFloat worst = 0;
    for (std::int64_t r = 1; r < b; ++r) {
        if (gcd(r, b) != 1) {
            continue;
        }
        const ExactPhase xi = ExactPhase::root(r, b);
        PrecComplex lhs;
        for (std::int64_t j = 1; j <= b; ++j) {
            lhs += PrecComplex(psi[static_cast<std::size_t>(j - 1)]) * xi.pow(j).value();
        }
        const PrecComplex rhs = PrecComplex(PrecFloat(b)) * log(PrecComplex(1) - xi.value());
        const PrecFloat d = abs(lhs - rhs);
        if (d > worst) {
            worst = d;
        }
    }
    return worst;
}

struct QuadratureResult {
    double quadrature = 0;
    double closed_form = 0;
    double error_estimate = 0;
    double difference() const { return std::abs(quadrature - closed_form); }
};

namespace detail {

/// Integral over [0, inf) of an integrand evaluated in working precision. The head [0, eps]
/// uses the linear Taylor data c0 + c1 x; beyond x_max the integrand is -tail/x^2 up to
/// exponentially small terms.
template <class F>
inline std::pair<double, double> integrate_half_line(F integrand, double c0, double c1, double tail, double x_max,
                                                     double eps = 1e-5)
{
    const double head = c0 * eps + c1 * eps * eps / 2;
    auto g = [&](double x) { return to_double(integrand(PrecFloat(x))); };
    double err = 0;
    double value = head - tail / x_max;
    double lo = eps;
    for (double hi : {1e-2, 1.0, 10.0, x_max}) {
        double e = 0;
        value += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, lo, hi, 10, 1e-14, &e);
        err += e;
        lo = hi;
    }
    return {value, err};
}

} // namespace detail

/// int_0^inf ( e^{-x}/(x(1 - e^{-Nx})) - 1/(N x^2) + (1/N - 1/2) e^{-x}/x ) dx
/// against log Gamma(1/N) + (1/2 - 1/N) log(1/N) - (1/2) log(2 pi).
inline QuadratureResult binet_integral_check(double N)
{
    if (!(N > 0)) {
        throw std::invalid_argument("binet_integral_check: N must be positive");
    }
    const PrecFloat Np = N;
    auto integrand = [&](const PrecFloat& x) {
        const PrecFloat ex = boost::multiprecision::exp(-x);
        return ex / (x * (1 - boost::multiprecision::exp(-Np * x))) - 1 / (Np * x * x)
               + (1 / Np - PrecFloat(0.5)) * ex / x;
    };
    const double c0 = N / 12 - 1 / (2 * N);
    const double c1 = 1 / (3 * N) - N / 12;
    const auto [value, err] = detail::integrate_half_line(integrand, c0, c1, 1 / N, 120 / std::min(1.0, N));
    const PrecFloat inv = 1 / Np;
    const PrecFloat closed = lgamma_value(inv) + (PrecFloat(0.5) - inv) * boost::multiprecision::log(inv)
                             - boost::multiprecision::log(2 * pi_value()) / 2;
    return {value, to_double(closed), err};
}

/// f(u) = 1/(u (e^u - 1)), the Euler-Maclaurin instance with c_{-2} = 1, c_{-1} = -1/2.
inline PrecFloat em_instance(const PrecFloat& u) { return 1 / (u * boost::multiprecision::expm1(u)); }

/// I*_{f,A} = int_0^inf (f(u) - 1/u^2 + e^{-Au}/(2u)) du by quadrature, against -(1/2) log(2 pi A).
inline QuadratureResult i_star_quadrature(double A)
{
    if (!(A > 0)) {
        throw std::invalid_argument("i_star_quadrature: A must be positive");
    }
    const PrecFloat Ap = A;
    auto integrand = [&](const PrecFloat& u) {
        return em_instance(u) - 1 / (u * u) + boost::multiprecision::exp(-Ap * u) / (2 * u);
    };
    const auto [value, err] = detail::integrate_half_line(integrand, 1.0 / 12 - A / 2, A * A / 4, 1.0, 120 / std::min(1.0, A));
    const PrecFloat closed = -boost::multiprecision::log(2 * pi_value() * Ap) / 2;
    return {value, to_double(closed), err};
}

struct EulerMaclaurinReport {
    double a = 0;
    double A = 0;
    bool negative_control = false;
    std::vector<double> z;
    std::vector<double> errors;
    double slope = 0;
    bool below_floor = false; // every error sits under the precision floor
    bool passed(double min_slope = 0.8) const { return below_floor || slope >= min_slope; }
};

/// sum_{n>=0} f((n+a)z) against
/// zeta(2,a)/z^2 + I*/z + (1/(2z))(Log(Az) + psi(a) + gamma) - B_1(a)/12,
/// with I* = -(1/2) log(2 pi A). The negative control flips the sign of the Log(Az) term.
inline EulerMaclaurinReport euler_maclaurin_check(const Rational& a, double A, const std::vector<PrecFloat>& zgrid,
                                                  bool negative_control = false)
{
    if (a <= 0 || a > 1) {
        throw std::invalid_argument("euler_maclaurin_check: need 0 < a <= 1");
    }
    if (!(A > 0)) {
        throw std::invalid_argument("euler_maclaurin_check: A must be positive");
    }
    EulerMaclaurinReport rep;
    rep.a = a.get_d();
    rep.A = A;
    rep.negative_control = negative_control;
    const PrecFloat ap = to_prec(a);
    const PrecFloat Ap = A;
    const PrecFloat zeta2 = hurwitz_zeta(PrecFloat(2), ap);
    const PrecFloat psi_gamma = digamma(ap) + euler_gamma();
    const PrecFloat istar = -boost::multiprecision::log(2 * pi_value() * Ap) / 2;
    const PrecFloat b1 = ap - PrecFloat(0.5);
    const PrecFloat eps = precision_floor();
    const double floor = to_double(precision_floor(32));
    std::vector<double> zs, errs;
    bool all_below = true;
    for (const auto& z : zgrid) {
        if (z <= 0 || z > PrecFloat(0.3)) {
            throw std::invalid_argument("euler_maclaurin_check: z must lie in (0, 0.3]");
        }
        PrecFloat lhs = 0;
        for (std::size_t n = 0;; ++n) {
            const PrecFloat u = (PrecFloat(n) + ap) * z;
            const PrecFloat term = em_instance(u);
            lhs += term;
            if (term < eps * z * lhs && u > 1) {
                break;
            }
        }
        const PrecFloat logterm = (boost::multiprecision::log(Ap * z) + psi_gamma) / (2 * z);
        const PrecFloat rhs = zeta2 / (z * z) + istar / z + (negative_control ? -logterm : logterm) - b1 / 12;
        const double err = to_double(boost::multiprecision::abs(lhs - rhs));
        rep.z.push_back(to_double(z));
        rep.errors.push_back(err);
        if (err > floor) {
            all_below = false;
            zs.push_back(to_double(z));
            errs.push_back(err);
        }
    }
    rep.below_floor = all_below;
    rep.slope = zs.size() >= 2 ? fit_loglog_slope(zs, errs) : 0;
    return rep;
}

} // namespace hookdist
