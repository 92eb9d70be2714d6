#pragma once

// Truncated power series in q with big-integer coefficients, and the
// group-ring variant with coefficients in Z[x]/(x^b - 1).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <hookdist/integer.hpp>

namespace hookdist {

class IntSeries {
public:
    explicit IntSeries(std::size_t order) : coeffs_(order + 1) {}

    IntSeries(std::size_t order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() != order + 1) {
            throw std::invalid_argument("IntSeries: expected " + std::to_string(order + 1) + " coefficients, got "
                                        + std::to_string(coeffs_.size()));
        }
    }

    static IntSeries one(std::size_t order)
    {
        IntSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    /// c * q^k, truncated.
    static IntSeries monomial(std::size_t order, std::size_t k, const Integer& c = 1)
    {
        IntSeries s(order);
        if (k <= order) {
            s.coeffs_[k] = c;
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Integer& operator[](std::size_t n) const { return coeffs_[n]; }
    Integer& operator[](std::size_t n) { return coeffs_[n]; }
    std::span<const Integer> coeffs() const { return coeffs_; }

    IntSeries truncated(std::size_t order) const
    {
        if (order > this->order()) {
            throw std::invalid_argument("IntSeries::truncated: cannot raise the truncation order");
        }
        return IntSeries(order, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    /// In-place multiplication by (1 + c q^m), O(N).
    void mul_binomial(std::size_t m, const Integer& c)
    {
        if (m == 0) {
            throw std::invalid_argument("mul_binomial: step must be positive");
        }
        for (std::size_t k = order(); k >= m; --k) {
            coeffs_[k] += c * coeffs_[k - m];
            if (k == m) {
                break;
            }
        }
    }

    /// In-place multiplication by (1 - q^m)^{-1}, O(N).
    void div_one_minus(std::size_t m)
    {
        if (m == 0) {
            throw std::invalid_argument("div_one_minus: step must be positive");
        }
        for (std::size_t k = m; k <= order(); ++k) {
            coeffs_[k] += coeffs_[k - m];
        }
    }

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

    friend IntSeries operator+(const IntSeries& a, const IntSeries& b)
    {
        IntSeries r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= r.order(); ++n) {
            r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        }
        return r;
    }

    friend IntSeries operator-(const IntSeries& a, const IntSeries& b)
    {
        IntSeries r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= r.order(); ++n) {
            r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
        }
        return r;
    }

private:
    std::vector<Integer> coeffs_;
};

namespace detail {

// Convolution cut-over point; above it a sub-quadratic kernel could be plugged in.
inline constexpr std::size_t schoolbook_threshold = static_cast<std::size_t>(-1);

inline void schoolbook_convolve(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out)
{
    const std::size_t n = out.size();
    Integer acc;
    for (std::size_t k = 0; k < n; ++k) {
        acc = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            if (sgn(a[i]) != 0 && sgn(b[k - i]) != 0) {
                mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
            }
        }
        out[k] = acc;
    }
}

} // namespace detail

inline IntSeries series_mul(const IntSeries& a, const IntSeries& b)
{
    IntSeries r(std::min(a.order(), b.order()));
    std::vector<Integer> out(r.order() + 1);
    detail::schoolbook_convolve(a.coeffs(), b.coeffs(), out);
    return IntSeries(r.order(), std::move(out));
}

inline IntSeries operator*(const IntSeries& a, const IntSeries& b) { return series_mul(a, b); }

/// Multiplicative inverse of a series whose constant term is +1 or -1.
inline IntSeries series_invert(const IntSeries& a)
{
    const Integer& c0 = a[0];
    if (c0 != 1 && c0 != -1) {
        throw std::domain_error("series_invert: constant term " + c0.get_str() + " is not a unit");
    }
    const std::size_t N = a.order();
    IntSeries r(N);
    r[0] = c0;
    Integer acc;
    for (std::size_t n = 1; n <= N; ++n) {
        acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (sgn(a[i]) != 0) {
                mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), r[n - i].get_mpz_t());
            }
        }
        // c0 * r_n + acc = 0 and c0 = 1/c0
        r[n] = -c0 * acc;
    }
    return r;
}

inline IntSeries series_pow(const IntSeries& a, int e)
{
    if (e < 0) {
        return series_pow(series_invert(a), -e);
    }
    IntSeries result = IntSeries::one(a.order());
    IntSeries base = a;
    auto k = static_cast<unsigned>(e);
    while (k > 0) {
        if (k & 1U) {
            result = series_mul(result, base);
        }
        k >>= 1U;
        if (k > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

/// One factor of an eta-like product: prod_{n>=1} (1 - q^{step*n})^exponent.
struct EtaFactor {
    std::size_t step = 1;
    int exponent = 1;
};

inline IntSeries eta_like_product(std::span<const EtaFactor> terms, std::size_t order)
{
    IntSeries s = IntSeries::one(order);
    const Integer minus_one = -1;
    for (const auto& term : terms) {
        if (term.step == 0) {
            throw std::invalid_argument("eta_like_product: step must be positive");
        }
        for (std::size_t m = term.step; m <= order; m += term.step) {
            for (int i = 0; i < term.exponent; ++i) {
                s.mul_binomial(m, minus_one);
            }
            for (int i = 0; i < -term.exponent; ++i) {
                s.div_one_minus(m);
            }
        }
    }
    return s;
}

inline IntSeries eta_like_product(std::initializer_list<EtaFactor> terms, std::size_t order)
{
    return eta_like_product(std::span<const EtaFactor>(terms.begin(), terms.size()), order);
}

/// Partition generating function P(q) = 1/(q;q)_inf up to q^order.
inline IntSeries partition_series(std::size_t order) { return eta_like_product({{1, -1}}, order); }

/// Element of Z[x]/(x^b - 1); component j is the coefficient of x^j.
class CycCoeff {
public:
    explicit CycCoeff(std::size_t modulus) : components_(modulus)
    {
        if (modulus == 0) {
            throw std::invalid_argument("CycCoeff: modulus must be positive");
        }
    }

    CycCoeff(std::size_t modulus, std::vector<Integer> components) : components_(std::move(components))
    {
        if (modulus == 0 || components_.size() != modulus) {
            throw std::invalid_argument("CycCoeff: expected " + std::to_string(modulus) + " components");
        }
    }

    static CycCoeff monomial(std::size_t modulus, std::int64_t power, const Integer& c = 1)
    {
        CycCoeff r(modulus);
        r.components_[static_cast<std::size_t>(mod(power, static_cast<std::int64_t>(modulus)))] = c;
        return r;
    }

    std::size_t modulus() const { return components_.size(); }
    const Integer& operator[](std::size_t j) const { return components_[j]; }
    Integer& operator[](std::size_t j) { return components_[j]; }
    std::span<const Integer> components() const { return components_; }

    Integer specialize_at_one() const
    {
        Integer s = 0;
        for (const auto& c : components_) {
            s += c;
        }
        return s;
    }

    friend bool operator==(const CycCoeff&, const CycCoeff&) = default;

    friend CycCoeff operator+(const CycCoeff& a, const CycCoeff& b)
    {
        check_same(a, b);
        CycCoeff r(a.modulus());
        for (std::size_t j = 0; j < a.modulus(); ++j) {
            r.components_[j] = a.components_[j] + b.components_[j];
        }
        return r;
    }

    friend CycCoeff operator*(const CycCoeff& a, const CycCoeff& b)
    {
        check_same(a, b);
        const std::size_t m = a.modulus();
        CycCoeff r(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(a.components_[i]) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < m; ++j) {
                const std::size_t k = (i + j) % m;
                mpz_addmul(r.components_[k].get_mpz_t(), a.components_[i].get_mpz_t(),
                           b.components_[j].get_mpz_t());
            }
        }
        return r;
    }

private:
    static void check_same(const CycCoeff& a, const CycCoeff& b)
    {
        if (a.modulus() != b.modulus()) {
            throw std::invalid_argument("CycCoeff: mismatched moduli");
        }
    }

    std::vector<Integer> components_;
};

/// One factor family prod_{n>=1} (1 - x^{x_step*n + x_offset} q^{q_step*n})^exponent.
struct CycFactorPattern {
    std::size_t q_step = 1;
    std::int64_t x_step = 1;
    std::int64_t x_offset = 0;
    int exponent = 1;
};

/// Truncated power series with coefficients in Z[x]/(x^b - 1), stored densely
/// as (order + 1) * modulus integers.
class CycSeries {
public:
    CycSeries(std::size_t order, std::size_t modulus) : order_(order), modulus_(modulus), data_((order + 1) * modulus)
    {
        if (modulus == 0) {
            throw std::invalid_argument("CycSeries: modulus must be positive");
        }
    }

    static CycSeries one(std::size_t order, std::size_t modulus)
    {
        CycSeries s(order, modulus);
        s.data_[0] = 1;
        return s;
    }

    /// Embeds an integer series at x^0.
    static CycSeries embed(const IntSeries& s, std::size_t modulus)
    {
        CycSeries r(s.order(), modulus);
        for (std::size_t n = 0; n <= s.order(); ++n) {
            r.at(n, 0) = s[n];
        }
        return r;
    }

    std::size_t order() const { return order_; }
    std::size_t modulus() const { return modulus_; }

    const Integer& at(std::size_t n, std::size_t j) const { return data_[n * modulus_ + j]; }
    Integer& at(std::size_t n, std::size_t j) { return data_[n * modulus_ + j]; }

    CycCoeff coeff(std::size_t n) const
    {
        auto first = data_.begin() + static_cast<std::ptrdiff_t>(n * modulus_);
        return CycCoeff(modulus_, std::vector<Integer>(first, first + static_cast<std::ptrdiff_t>(modulus_)));
    }

    void set_coeff(std::size_t n, const CycCoeff& c)
    {
        if (c.modulus() != modulus_) {
            throw std::invalid_argument("CycSeries::set_coeff: mismatched modulus");
        }
        for (std::size_t j = 0; j < modulus_; ++j) {
            at(n, j) = c[j];
        }
    }

    /// Image under x -> 1.
    IntSeries specialize_at_one() const
    {
        IntSeries s(order_);
        for (std::size_t n = 0; n <= order_; ++n) {
            for (std::size_t j = 0; j < modulus_; ++j) {
                s[n] += at(n, j);
            }
        }
        return s;
    }

    /// In-place multiplication by (1 + c x^xpow q^m), O(N b).
    void mul_binomial(std::size_t m, std::int64_t xpow, const Integer& c)
    {
        if (m == 0) {
            throw std::invalid_argument("CycSeries::mul_binomial: step must be positive");
        }
        const auto shift = static_cast<std::size_t>(mod(xpow, static_cast<std::int64_t>(modulus_)));
        for (std::size_t k = order_; k >= m; --k) {
            for (std::size_t j = 0; j < modulus_; ++j) {
                mpz_addmul(at(k, (j + shift) % modulus_).get_mpz_t(), c.get_mpz_t(), at(k - m, j).get_mpz_t());
            }
            if (k == m) {
                break;
            }
        }
    }

    /// In-place multiplication by (1 - x^xpow q^m)^{-1}, O(N b).
    void div_one_minus(std::size_t m, std::int64_t xpow)
    {
        if (m == 0) {
            throw std::invalid_argument("CycSeries::div_one_minus: step must be positive");
        }
        const auto shift = static_cast<std::size_t>(mod(xpow, static_cast<std::int64_t>(modulus_)));
        for (std::size_t k = m; k <= order_; ++k) {
            for (std::size_t j = 0; j < modulus_; ++j) {
                at(k, (j + shift) % modulus_) += at(k - m, j);
            }
        }
    }

    void apply(const CycFactorPattern& p)
    {
        if (p.q_step == 0) {
            throw std::invalid_argument("CycFactorPattern: q_step must be positive");
        }
        const Integer minus_one = -1;
        std::int64_t n = 1;
        for (std::size_t m = p.q_step; m <= order_; m += p.q_step, ++n) {
            const std::int64_t xpow = p.x_step * n + p.x_offset;
            for (int i = 0; i < p.exponent; ++i) {
                mul_binomial(m, xpow, minus_one);
            }
            for (int i = 0; i < -p.exponent; ++i) {
                div_one_minus(m, xpow);
            }
        }
    }

    friend bool operator==(const CycSeries&, const CycSeries&) = default;

private:
    std::size_t order_;
    std::size_t modulus_;
    std::vector<Integer> data_;
};

inline void check_compatible(const CycSeries& a, const CycSeries& b)
{
    if (a.modulus() != b.modulus()) {
        throw std::invalid_argument("CycSeries: mismatched moduli");
    }
}

inline CycSeries cyc_mul(const CycSeries& a, const CycSeries& b)
{
    check_compatible(a, b);
    const std::size_t N = std::min(a.order(), b.order());
    const std::size_t m = a.modulus();
    CycSeries r(N, m);
    for (std::size_t i = 0; i <= N; ++i) {
        for (std::size_t ci = 0; ci < m; ++ci) {
            const Integer& x = a.at(i, ci);
            if (sgn(x) == 0) {
                continue;
            }
            for (std::size_t k = i; k <= N; ++k) {
                for (std::size_t cj = 0; cj < m; ++cj) {
                    mpz_addmul(r.at(k, (ci + cj) % m).get_mpz_t(), x.get_mpz_t(), b.at(k - i, cj).get_mpz_t());
                }
            }
        }
    }
    return r;
}

/// Inverse of a series whose constant coefficient is a monomial unit +-x^j.
inline CycSeries cyc_invert(const CycSeries& a)
{
    const std::size_t m = a.modulus();
    const std::size_t N = a.order();
    std::size_t unit_pos = m;
    for (std::size_t j = 0; j < m; ++j) {
        if (sgn(a.at(0, j)) != 0) {
            if (unit_pos != m || (a.at(0, j) != 1 && a.at(0, j) != -1)) {
                throw std::domain_error("cyc_invert: constant coefficient is not a monomial unit");
            }
            unit_pos = j;
        }
    }
    if (unit_pos == m) {
        throw std::domain_error("cyc_invert: constant coefficient is zero");
    }
    // c0 = s x^u with s = +-1, so c0^{-1} = s x^{-u}
    const Integer s = a.at(0, unit_pos);
    const std::size_t inv_shift = (m - unit_pos) % m;
    CycSeries r(N, m);
    r.at(0, inv_shift) = s;
    CycCoeff acc(m);
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t j = 0; j < m; ++j) {
            acc[j] = 0;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t ci = 0; ci < m; ++ci) {
                const Integer& x = a.at(i, ci);
                if (sgn(x) == 0) {
                    continue;
                }
                for (std::size_t cj = 0; cj < m; ++cj) {
                    mpz_addmul(acc[(ci + cj) % m].get_mpz_t(), x.get_mpz_t(), r.at(n - i, cj).get_mpz_t());
                }
            }
        }
        // r_n = -c0^{-1} * acc
        for (std::size_t j = 0; j < m; ++j) {
            r.at(n, (j + inv_shift) % m) = -s * acc[j];
        }
    }
    return r;
}

/// prod over the given patterns, as a CycSeries of modulus b.
inline CycSeries cyc_geometric_factor(std::size_t modulus, std::span<const CycFactorPattern> patterns,
                                      std::size_t order)
{
    CycSeries s = CycSeries::one(order, modulus);
    for (const auto& p : patterns) {
        s.apply(p);
    }
    return s;
}

inline CycSeries cyc_geometric_factor(std::size_t modulus, std::initializer_list<CycFactorPattern> patterns,
                                      std::size_t order)
{
    return cyc_geometric_factor(modulus, std::span<const CycFactorPattern>(patterns.begin(), patterns.size()), order);
}

/// Reads the x^a component of every coefficient.
inline IntSeries extract_component(const CycSeries& s, std::size_t a)
{
    if (a >= s.modulus()) {
        throw std::out_of_range("extract_component: residue " + std::to_string(a) + " out of range for modulus "
                                + std::to_string(s.modulus()));
    }
    IntSeries r(s.order());
    for (std::size_t n = 0; n <= s.order(); ++n) {
        r[n] = s.at(n, a);
    }
    return r;
}

} // namespace hookdist
