#pragma once

// Roots of unity as exact rational phases; Dedekind sums and the eta multiplier.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <hookdist/integer.hpp>
#include <hookdist/precision.hpp>

namespace hookdist {

/// e^{2 pi i r} with 0 <= r < 1.
class ExactPhase {
public:
    ExactPhase() : r_(0) {}
    explicit ExactPhase(const Rational& r) : r_(reduce(r)) {}

    /// zeta_b^a = e^{2 pi i a / b}.
    static ExactPhase root(std::int64_t a, std::int64_t b) { return ExactPhase(make_rational(a, b)); }

    const Rational& turns() const { return r_; }

    ExactPhase inverse() const { return ExactPhase(-r_); }

    ExactPhase pow(std::int64_t e) const { return ExactPhase(r_ * Rational(to_integer(e))); }

    /// A power with rational exponent: e^{2 pi i r e}, reading the phase through its stored representative.
    ExactPhase pow(const Rational& e) const { return ExactPhase(r_ * e); }

    bool is_one() const { return r_ == 0; }

    PrecComplex value() const
    {
        const PrecFloat theta = 2 * pi_value() * to_prec(r_);
        return polar(PrecFloat(1), theta);
    }

    friend ExactPhase operator*(const ExactPhase& a, const ExactPhase& b) { return ExactPhase(a.r_ + b.r_); }
    friend ExactPhase operator/(const ExactPhase& a, const ExactPhase& b) { return ExactPhase(a.r_ - b.r_); }
    ExactPhase& operator*=(const ExactPhase& b) { return *this = *this * b; }
    friend bool operator==(const ExactPhase& a, const ExactPhase& b) { return a.r_ == b.r_; }

private:
    static Rational reduce(const Rational& r)
    {
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        Rational out = r - Rational(fl);
        out.canonicalize();
        return out;
    }

    Rational r_;
};

/// ((x)) = x - floor(x) - 1/2 off the integers, 0 on them.
inline Rational sawtooth(const Rational& x)
{
    if (x.get_den() == 1) {
        return 0;
    }
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rational r = x - Rational(fl) - Rational(1, 2);
    r.canonicalize();
    return r;
}

/// s(h,k) = sum over mu mod k of ((mu/k))((h mu/k)).
inline Rational dedekind_sum(std::int64_t h, std::int64_t k)
{
    if (k < 1) {
        throw std::invalid_argument("dedekind_sum: k must be positive");
    }
    const std::int64_t hr = mod(h, k);
    Rational s = 0;
    for (std::int64_t mu = 1; mu < k; ++mu) {
        // ((mu/k)) = mu/k - 1/2 for 0 < mu < k
        const std::int64_t hm = mod(hr * mu, k);
        if (hm == 0) {
            continue;
        }
        s += make_rational(2 * mu - k, 2 * k) * make_rational(2 * hm - k, 2 * k);
    }
    return s;
}

/// omega_{h,k} = e^{pi i s(h,k)}; non-coprime arguments are first divided by their gcd.
inline ExactPhase omega(std::int64_t h, std::int64_t k)
{
    if (k < 1) {
        throw std::invalid_argument("omega: k must be positive");
    }
    const std::int64_t g = gcd(h, k);
    const std::int64_t hh = g == 0 ? 0 : h / g;
    const std::int64_t kk = g == 0 ? 1 : k / g;
    return ExactPhase(dedekind_sum(hh, kk) / 2);
}

/// epsilon_b = 1 for b = 1 (mod 4) and i for b = 3 (mod 4).
inline ExactPhase epsilon(std::int64_t b)
{
    if (b % 2 == 0) {
        throw std::invalid_argument("epsilon: b must be odd");
    }
    return mod(b, 4) == 1 ? ExactPhase() : ExactPhase(Rational(1, 4));
}

} // namespace hookdist
