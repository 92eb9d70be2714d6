#pragma once

// Modular t-hook counts p_t(a,b;n), Han's generating function, t-core series,
// and the vanishing theorems for t = 2, 3.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <hookdist/integer.hpp>
#include <hookdist/partitions.hpp>
#include <hookdist/series.hpp>

namespace hookdist {

struct HookQuery {
    int t = 2;
    int a = 0;
    int b = 2;
    int n = 0;
};

inline void validate(const HookQuery& q)
{
    if (q.t < 2) {
        throw std::invalid_argument("hook query: t must exceed 1");
    }
    if (q.b < 2) {
        throw std::invalid_argument("hook query: modulus must be at least 2");
    }
    if (q.a < 0 || q.a >= q.b) {
        throw std::invalid_argument("hook query: residue " + std::to_string(q.a) + " outside [0, "
                                    + std::to_string(q.b) + ")");
    }
    if (q.n < 0) {
        throw std::invalid_argument("hook query: negative n");
    }
}

inline std::uint64_t brute_force_pt(const HookQuery& q)
{
    validate(q);
    const auto hist = t_hook_histogram(q.n, q.t);
    std::uint64_t total = 0;
    for (std::size_t c = static_cast<std::size_t>(q.a); c < hist.size(); c += static_cast<std::size_t>(q.b)) {
        total += hist[c];
    }
    return total;
}

/// H_t(x;q) in Z[x]/(x^b - 1)[[q]]: the x^a component of q^n is p_t(a,b;n).
inline CycSeries han_series(int t, int b, std::size_t order)
{
    if (t < 2 || b < 2) {
        throw std::invalid_argument("han_series: need t > 1 and b >= 2");
    }
    const auto ut = static_cast<std::size_t>(t);
    // prod (1 - q^{tn})^t / (1 - q^n)
    IntSeries base = eta_like_product({{1, -1}, {ut, t}}, order);
    CycSeries h = CycSeries::embed(base, static_cast<std::size_t>(b));
    // F_2(x; q^t)^{-t} = prod (1 - x^n q^{tn})^{-t}
    h.apply(CycFactorPattern{ut, 1, 0, -t});
    return h;
}

inline IntSeries pt_series(const CycSeries& han, int a)
{
    return extract_component(han, static_cast<std::size_t>(a));
}

inline IntSeries pt_series(int t, int a, int b, std::size_t order)
{
    validate(HookQuery{t, a, b, 0});
    return pt_series(han_series(t, b, order), a);
}

struct NekrasovOkounkovReport {
    std::size_t order = 0;
    std::vector<int> weights;
    std::vector<int> failing_weights;
    bool passed() const { return failing_weights.empty(); }
};

/// Sum over lambda of q^|lambda| prod_h (1 - w/h^2) against prod (1 - q^n)^{w-1}, for each integer w.
inline NekrasovOkounkovReport nekrasov_okounkov_check(std::size_t order, std::vector<int> weights = {})
{
    if (order > 25) {
        throw std::invalid_argument("nekrasov_okounkov_check: order " + std::to_string(order)
                                    + " exceeds the enumeration bound 25");
    }
    if (weights.empty()) {
        // the left side is a polynomial of degree <= N in w
        for (int w = 0; w <= static_cast<int>(order) + 1; ++w) {
            weights.push_back(w);
        }
    }
    std::vector<std::vector<std::vector<int>>> hooks_by_size(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        for_each_partition(static_cast<int>(n), [&](const Partition& p) {
            hooks_by_size[n].push_back(hook_multiset(p));
        });
    }
    NekrasovOkounkovReport report{order, weights, {}};
    for (int w : weights) {
        const IntSeries rhs = eta_like_product({{1, w - 1}}, order);
        bool ok = true;
        for (std::size_t n = 0; n <= order && ok; ++n) {
            Rational lhs = 0;
            for (const auto& hooks : hooks_by_size[n]) {
                Rational term = 1;
                for (int h : hooks) {
                    term *= Rational(1) - make_rational(w, static_cast<std::int64_t>(h) * h);
                }
                lhs += term;
            }
            ok = (lhs == Rational(rhs[n]));
        }
        if (!ok) {
            report.failing_weights.push_back(w);
        }
    }
    return report;
}

enum class CoreSeriesKind { B, C };

namespace detail {

inline int legendre3(Integer d)
{
    const long r = mpz_fdiv_ui(d.get_mpz_t(), 3);
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

inline IntSeries core_closed_form(int t, std::size_t order)
{
    IntSeries s(order);
    if (t == 2) {
        for (std::size_t k = 0; k * (k + 1) / 2 <= order; ++k) {
            s[k * (k + 1) / 2] = 1;
        }
        return s;
    }
    for (std::size_t n = 0; n <= order; ++n) {
        const std::size_t m = 3 * n + 1;
        long total = 0;
        for (std::size_t d = 1; d * d <= m; ++d) {
            if (m % d == 0) {
                total += legendre3(static_cast<unsigned long>(d));
                if (d * d != m) {
                    total += legendre3(static_cast<unsigned long>(m / d));
                }
            }
        }
        s[n] = total;
    }
    return s;
}

} // namespace detail

/// B_t = prod (1 - q^n)^{-t}; C_t = prod (1 - q^{tn})^t / (1 - q^n), for t in {2, 3}.
/// C_t is computed as a product and in closed form; a mismatch throws.
inline IntSeries core_series(int t, CoreSeriesKind kind, std::size_t order)
{
    if (t != 2 && t != 3) {
        throw std::invalid_argument("core_series: t must be 2 or 3");
    }
    const auto ut = static_cast<std::size_t>(t);
    if (kind == CoreSeriesKind::B) {
        return eta_like_product({{1, -t}}, order);
    }
    IntSeries product = eta_like_product({{1, -1}, {ut, t}}, order);
    IntSeries closed = detail::core_closed_form(t, order);
    if (!(product == closed)) {
        throw std::logic_error("core_series: product and closed form disagree for t = " + std::to_string(t));
    }
    return product;
}

/// Hypothesis of the vanishing theorem. For t = 2 the modulus is ell and the
/// condition is a Legendre symbol; for t = 3 it is ell^2 and an ell-adic valuation.
inline bool vanishing_predicate(int t, std::int64_t ell, std::int64_t a1, std::int64_t a2)
{
    if (t == 2) {
        if (!is_odd_prime(ell)) {
            throw std::invalid_argument("vanishing_predicate: t = 2 needs an odd prime, got " + std::to_string(ell));
        }
        if (a1 < 0 || a1 >= ell || a2 < 0 || a2 >= ell) {
            throw std::invalid_argument("vanishing_predicate: residues must lie in [0, ell)");
        }
        return legendre(-16 * a1 + 8 * a2 + 1, ell) == -1;
    }
    if (t == 3) {
        if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell)) || ell % 3 != 2) {
            throw std::invalid_argument("vanishing_predicate: t = 3 needs a prime congruent to 2 mod 3, got "
                                        + std::to_string(ell));
        }
        if (a1 < 0 || a1 >= ell * ell || a2 < 0 || a2 >= ell * ell) {
            throw std::invalid_argument("vanishing_predicate: residues must lie in [0, ell^2)");
        }
        const std::int64_t v = -9 * a1 + 3 * a2 + 1;
        return v != 0 && valuation(v, ell) == 1;
    }
    throw std::invalid_argument("vanishing_predicate: t must be 2 or 3");
}

inline std::int64_t vanishing_modulus(int t, std::int64_t ell) { return t == 2 ? ell : ell * ell; }

struct VanishingReport {
    int t = 0;
    std::int64_t ell = 0;
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    bool predicate = false;
    std::size_t checked = 0;
    std::optional<std::size_t> first_nonzero; // argument N with p_t(a1, m; N) != 0
    bool all_zero() const { return !first_nonzero.has_value(); }
    bool passed() const { return predicate && all_zero(); }
};

/// Scans p_t(a1, m; m n + a2) for m n + a2 <= nmax using a precomputed Han series of modulus m.
inline VanishingReport verify_vanishing(const CycSeries& han, int t, std::int64_t ell, std::int64_t a1,
                                        std::int64_t a2, std::size_t nmax)
{
    const std::int64_t m = vanishing_modulus(t, ell);
    if (han.modulus() != static_cast<std::size_t>(m)) {
        throw std::invalid_argument("verify_vanishing: series modulus does not match");
    }
    if (nmax > han.order()) {
        throw std::invalid_argument("verify_vanishing: nmax " + std::to_string(nmax) + " exceeds series order "
                                    + std::to_string(han.order()));
    }
    VanishingReport r{t, ell, a1, a2, vanishing_predicate(t, ell, a1, a2), 0, std::nullopt};
    for (auto N = static_cast<std::size_t>(a2); N <= nmax; N += static_cast<std::size_t>(m)) {
        ++r.checked;
        if (sgn(han.at(N, static_cast<std::size_t>(a1))) != 0) {
            r.first_nonzero = N;
            break;
        }
    }
    return r;
}

inline VanishingReport verify_vanishing(int t, std::int64_t ell, std::int64_t a1, std::int64_t a2, std::size_t nmax)
{
    const std::int64_t m = vanishing_modulus(t, ell);
    return verify_vanishing(han_series(t, static_cast<int>(m), nmax), t, ell, a1, a2, nmax);
}

struct KeyIdentityReport {
    std::int64_t ell = 0;
    std::int64_t a1 = 0;
    std::size_t nmax = 0;
    std::optional<std::size_t> first_mismatch;
    bool passed() const { return !first_mismatch.has_value(); }
};

/// p_2(a1, ell; N) = sum of b_2(m) over m = a1 (mod ell) with 2m + k(k+1)/2 = N.
inline KeyIdentityReport key_identity_check(const CycSeries& han2, std::int64_t ell, std::int64_t a1,
                                            std::size_t nmax)
{
    if (!is_odd_prime(ell)) {
        throw std::invalid_argument("key_identity_check: ell must be an odd prime");
    }
    if (han2.modulus() != static_cast<std::size_t>(ell) || nmax > han2.order()) {
        throw std::invalid_argument("key_identity_check: series does not cover the request");
    }
    const IntSeries b2 = core_series(2, CoreSeriesKind::B, nmax / 2);
    KeyIdentityReport r{ell, a1, nmax, std::nullopt};
    for (std::size_t N = 0; N <= nmax; ++N) {
        Integer rhs = 0;
        for (std::size_t k = 0; k * (k + 1) / 2 <= N; ++k) {
            const std::size_t rest = N - k * (k + 1) / 2;
            if (rest % 2 != 0) {
                continue;
            }
            const std::size_t m = rest / 2;
            if (static_cast<std::int64_t>(m % static_cast<std::size_t>(ell)) == a1) {
                rhs += b2[m];
            }
        }
        if (rhs != han2.at(N, static_cast<std::size_t>(a1))) {
            r.first_mismatch = N;
            break;
        }
    }
    return r;
}

} // namespace hookdist
