#include <cmath>
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include <hookdist/products.hpp>

using namespace hookdist;

namespace {

PrecFloat pi2() { return pi_value() * pi_value(); }

std::complex<double> to_std(const PrecComplex& z) { return {to_double(z.re), to_double(z.im)}; }

std::vector<PrecFloat> em_grid()
{
    std::vector<PrecFloat> g;
    PrecFloat z = PrecFloat(1) / 10;
    for (int i = 0; i < 7; ++i) {
        g.push_back(z);
        z /= 2;
    }
    return g;
}

} // namespace

TEST(SpecialFunctions, ClassicalValues)
{
    const PrecFloat tol = precision_floor(16);
    EXPECT_LT(boost::multiprecision::abs(hurwitz_zeta(PrecFloat(2), PrecFloat(1)) - pi2() / 6), tol);
    EXPECT_LT(boost::multiprecision::abs(digamma(PrecFloat(1)) + euler_gamma()), tol);
    const PrecComplex phi = lerch_phi(ExactPhase(Rational(1, 2)), PrecFloat(2), PrecFloat(1));
    EXPECT_LT(abs(phi - PrecComplex(pi2() / 12)), tol);
    // psi(1/2) = -gamma - 2 log 2
    EXPECT_LT(boost::multiprecision::abs(digamma(PrecFloat(0.5)) + euler_gamma() + 2 * boost::multiprecision::log(PrecFloat(2))),
              tol);
}

TEST(FDirect, TrivialPhaseCollapses)
{
    const ExactPhase one;
    const PrecComplex q = polar(PrecFloat(0.7), PrecFloat(0.3));
    const PrecComplex f1 = F_direct(ProductKind::F1, one, q).value;
    EXPECT_LT(to_double(abs(f1 - F_direct(ProductKind::F2, one, q).value)), 1e-60);
    EXPECT_LT(to_double(abs(f1 - F_direct(ProductKind::F3, one, q).value)), 1e-60);
}

TEST(FDirect, MinusOneAgainstDoubleProduct)
{
    const ExactPhase minus(Rational(1, 2));
    const PrecComplex q = PrecFloat(0.5);
    std::complex<double> f1 = 1, f2 = 1, f3 = 1;
    for (int n = 1; n <= 60; ++n) {
        const double qn = std::pow(0.5, n);
        f1 *= 1 + qn;
        f2 *= 1 - std::pow(-0.5, n);
        f3 *= 1 - (n % 2 == 1 ? 1.0 : -1.0) * qn;
    }
    EXPECT_LT(std::abs(to_std(F_direct(ProductKind::F1, minus, q).value) - f1), 1e-13);
    EXPECT_LT(std::abs(to_std(F_direct(ProductKind::F2, minus, q).value) - f2), 1e-13);
    EXPECT_LT(std::abs(to_std(F_direct(ProductKind::F3, minus, q).value) - f3), 1e-13);
    EXPECT_THROW(F_direct(ProductKind::F1, minus, PrecComplex(1)), std::domain_error);
}

TEST(Asymptotics, TrivialPhaseRejected)
{
    EXPECT_THROW(F1_asym(ExactPhase(), PrecComplex(PrecFloat(0.1))), std::invalid_argument);
    EXPECT_THROW(F3_asym(ExactPhase(), PrecComplex(PrecFloat(0.1))), std::invalid_argument);
    EXPECT_THROW(F2_asym(1, 3, 2, 0, 1, PrecComplex(PrecFloat(-0.1))), std::domain_error);
}

TEST(RatioStudy, F1AndF3OnCone)
{
    const PrecFloat theta = pi_value() / 4;
    for (const Rational& turns : {Rational(1, 2), Rational(1, 3)}) {
        const ExactPhase xi(turns);
        for (const auto& alpha : cone_rays(theta)) {
            const auto grid = dyadic_grid(PrecFloat(0.1), alpha, 7);
            for (ProductKind kind : {ProductKind::F1, ProductKind::F3}) {
                const RatioStudy s = ratio_study(kind, xi, grid);
                EXPECT_TRUE(s.slope_within(0.8, 1.2))
                    << "xi=" << turns.get_str() << " alpha=" << to_double(alpha) << " slope=" << s.slope;
            }
        }
    }
}

TEST(RatioStudy, F2AtCusps)
{
    struct Case {
        std::int64_t a, b, t, h, k;
    };
    for (const Case& c : {Case{1, 3, 2, 0, 1}, Case{1, 3, 2, 1, 3}, Case{2, 5, 3, 1, 2}, Case{1, 3, 4, 2, 3}}) {
        const auto grid = dyadic_grid(PrecFloat(0.1), PrecFloat(0), 7);
        const RatioStudy s = ratio_study_F2(c.a, c.b, c.t, c.h, c.k, grid);
        EXPECT_TRUE(s.monotone) << c.a << c.b << c.t << c.h << c.k;
        EXPECT_LT(s.errors.back(), 0.01);
    }
}

TEST(RatioStudy, SlopeFitRecoversPowerLaw)
{
    EXPECT_NEAR(fit_loglog_slope({1, 2, 4, 8}, {3, 6, 12, 24}), 1, 1e-12);
    EXPECT_NEAR(fit_loglog_slope({1, 2, 4}, {1, 0.25, 0.0625}), -2, 1e-12);
    EXPECT_THROW(fit_loglog_slope({1}, {1}), std::invalid_argument);
}

TEST(EtaTransform, SeveralCusps)
{
    const PrecFloat tol = precision_floor(40);
    for (auto [h, k] : {std::pair<std::int64_t, std::int64_t>{0, 1}, {1, 2}, {1, 3}, {2, 5}, {3, 7}}) {
        const PrecComplex z(PrecFloat(0.4), PrecFloat(0.15));
        EXPECT_LT(eta_transform_check(h, k, z), tol) << "h=" << h << " k=" << k;
    }
    EXPECT_THROW(eta_transform_check(2, 4, PrecComplex(PrecFloat(0.5))), std::invalid_argument);
}

TEST(DigammaIdentity, PrimitiveRoots)
{
    for (std::int64_t b : {2, 3, 5, 7, 12}) {
        EXPECT_LT(digamma_identity_check(b), precision_floor(24)) << "b=" << b;
    }
    EXPECT_THROW(digamma_identity_check(1), std::invalid_argument);
}

TEST(Quadrature, BinetAndIStar)
{
    for (double N : {1.0, 2.0, 5.0}) {
        const QuadratureResult r = binet_integral_check(N);
        EXPECT_LT(r.difference(), 1e-12) << "N=" << N;
    }
    // N = 1 closed form collapses to -(1/2) log(2 pi)
    EXPECT_NEAR(binet_integral_check(1).closed_form, -0.5 * std::log(2 * M_PI), 1e-15);
    for (double A : {0.5, 1.0, 3.0}) {
        const QuadratureResult r = i_star_quadrature(A);
        EXPECT_LT(r.difference(), 1e-12) << "A=" << A;
        EXPECT_NEAR(r.closed_form, -0.5 * std::log(2 * M_PI * A), 1e-15);
    }
    EXPECT_THROW(binet_integral_check(0), std::invalid_argument);
}

TEST(EulerMaclaurin, ExpansionAndNegativeControl)
{
    for (const Rational& a : {Rational(1, 3), Rational(1, 2), Rational(1)}) {
        const auto rep = euler_maclaurin_check(a, 1.0, em_grid());
        EXPECT_TRUE(rep.passed()) << "a=" << a.get_str() << " slope=" << rep.slope;
        const auto neg = euler_maclaurin_check(a, 1.0, em_grid(), true);
        EXPECT_FALSE(neg.passed()) << "a=" << a.get_str();
    }
    EXPECT_THROW(euler_maclaurin_check(Rational(1, 2), 1.0, {PrecFloat(0.5)}), std::invalid_argument);
    EXPECT_THROW(euler_maclaurin_check(Rational(0), 1.0, em_grid()), std::invalid_argument);
}

TEST(Precision, ScopedGuardRestores)
{
    const unsigned before = current_precision_bits();
    {
        ScopedPrecision p(512);
        EXPECT_GE(current_precision_bits(), 512u);
        EXPECT_LT(precision_floor(), PrecFloat(1e-150));
    }
    EXPECT_EQ(current_precision_bits(), before);
    EXPECT_THROW(ScopedPrecision(32), std::invalid_argument);
}

TEST(Precision, EtaCheckTightensWithPrecision)
{
    const PrecComplex z(PrecFloat(0.3), PrecFloat(0.1));
    const double at_default = to_double(eta_transform_check(1, 3, z));
    ScopedPrecision p(512);
    const PrecComplex z512(PrecFloat(3) / 10, PrecFloat(1) / 10);
    const double at_512 = to_double(eta_transform_check(1, 3, z512));
    EXPECT_LT(at_512, at_default);
    EXPECT_LT(at_512, 1e-120);
}
