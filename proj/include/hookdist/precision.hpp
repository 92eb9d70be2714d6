#pragma once

// Arbitrary-precision real and complex values on MPFR.

#include <cstdlib>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include <hookdist/integer.hpp>

namespace hookdist {

using PrecFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                                boost::multiprecision::et_off>;

inline constexpr unsigned default_precision_fallback = 256;

inline unsigned bits_to_digits10(unsigned bits) { return static_cast<unsigned>(bits * 0.30103) + 1; }

/// Working precision in bits; HOOKDIST_PRECISION overrides the default of 256.
inline unsigned default_precision_bits()
{
    if (const char* env = std::getenv("HOOKDIST_PRECISION")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 64 && v <= 1 << 20) {
            return static_cast<unsigned>(v);
        }
        throw std::invalid_argument(std::string("HOOKDIST_PRECISION must be an integer >= 64, got '") + env + "'");
    }
    return default_precision_fallback;
}

namespace detail {

// Applies the default precision before main; a malformed HOOKDIST_PRECISION falls back to 256 here
// and is reported by default_precision_bits() when a caller asks for it explicitly.
inline const bool precision_initialised = [] {
    unsigned bits = default_precision_fallback;
    try {
        bits = default_precision_bits();
    } catch (const std::invalid_argument&) {
    }
    PrecFloat::default_precision(bits_to_digits10(bits));
    return true;
}();

} // namespace detail

/// Sets the precision of newly created PrecFloat values for the guard's lifetime.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned bits) : saved_(PrecFloat::default_precision())
    {
        if (bits < 64) {
            throw std::invalid_argument("ScopedPrecision: precision must be at least 64 bits");
        }
        bits_ = bits;
        PrecFloat::default_precision(bits_to_digits10(bits));
    }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;
    ~ScopedPrecision() { PrecFloat::default_precision(saved_); }

    unsigned bits() const { return bits_; }

private:
    unsigned saved_;
    unsigned bits_ = 0;
};

inline unsigned current_precision_bits()
{
    return static_cast<unsigned>(boost::multiprecision::detail::digits10_2_2(PrecFloat::default_precision()));
}

/// 2^{-bits + slack}: the smallest tolerance that is meaningful at the current precision.
inline PrecFloat precision_floor(int slack = 8)
{
    PrecFloat r = 1;
    mpfr_mul_2si(r.backend().data(), r.backend().data(), -static_cast<long>(current_precision_bits()) + slack,
                 MPFR_RNDN);
    return r;
}

inline PrecFloat to_prec(const Integer& z)
{
    PrecFloat r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

inline PrecFloat to_prec(const Rational& q)
{
    PrecFloat r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

inline PrecFloat pi_value() { return boost::math::constants::pi<PrecFloat>(); }
inline PrecFloat euler_gamma() { return boost::math::constants::euler<PrecFloat>(); }

inline PrecFloat lgamma_value(const PrecFloat& x)
{
    PrecFloat r;
    int sign = 0;
    mpfr_lgamma(r.backend().data(), &sign, x.backend().data(), MPFR_RNDN);
    return r;
}

inline PrecFloat gamma_value(const PrecFloat& x)
{
    PrecFloat r;
    mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

struct PrecComplex {
    PrecFloat re = 0;
    PrecFloat im = 0;

    PrecComplex() = default;
    PrecComplex(PrecFloat r) : re(std::move(r)), im(0) {}
    PrecComplex(PrecFloat r, PrecFloat i) : re(std::move(r)), im(std::move(i)) {}
    PrecComplex(int r) : re(r), im(0) {}

    friend PrecComplex operator+(const PrecComplex& a, const PrecComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend PrecComplex operator-(const PrecComplex& a, const PrecComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend PrecComplex operator-(const PrecComplex& a) { return {-a.re, -a.im}; }
    friend PrecComplex operator*(const PrecComplex& a, const PrecComplex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend PrecComplex operator/(const PrecComplex& a, const PrecComplex& b)
    {
        const PrecFloat d = b.re * b.re + b.im * b.im;
        if (d == 0) {
            throw std::domain_error("PrecComplex: division by zero");
        }
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    PrecComplex& operator+=(const PrecComplex& b) { return *this = *this + b; }
    PrecComplex& operator-=(const PrecComplex& b) { return *this = *this - b; }
    PrecComplex& operator*=(const PrecComplex& b) { return *this = *this * b; }
    PrecComplex& operator/=(const PrecComplex& b) { return *this = *this / b; }
};

inline PrecComplex conj(const PrecComplex& z) { return {z.re, -z.im}; }
inline PrecFloat abs(const PrecComplex& z) { return boost::multiprecision::hypot(z.re, z.im); }
inline PrecFloat arg(const PrecComplex& z) { return boost::multiprecision::atan2(z.im, z.re); }

inline PrecComplex polar(const PrecFloat& r, const PrecFloat& theta)
{
    return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

inline PrecComplex exp(const PrecComplex& z) { return polar(boost::multiprecision::exp(z.re), z.im); }

/// Principal logarithm.
inline PrecComplex log(const PrecComplex& z)
{
    if (z.re == 0 && z.im == 0) {
        throw std::domain_error("log of zero");
    }
    return {boost::multiprecision::log(abs(z)), arg(z)};
}

/// Principal power z^w = exp(w Log z).
inline PrecComplex pow(const PrecComplex& z, const PrecComplex& w) { return exp(w * log(z)); }

inline PrecComplex sqrt(const PrecComplex& z)
{
    if (z.re == 0 && z.im == 0) {
        return {};
    }
    return pow(z, PrecComplex(PrecFloat(0.5)));
}

inline PrecComplex i_unit() { return {PrecFloat(0), PrecFloat(1)}; }

inline double to_double(const PrecFloat& x) { return x.convert_to<double>(); }

} // namespace hookdist
