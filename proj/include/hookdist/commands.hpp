#pragma once

// Table builders and verification suites behind the command-line tool.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <hookdist/distributions.hpp>
#include <hookdist/exact_formula.hpp>
#include <hookdist/hilbert.hpp>
#include <hookdist/hooks.hpp>
#include <hookdist/modular.hpp>
#include <hookdist/products.hpp>
#include <hookdist/report.hpp>

namespace hookdist {

inline constexpr std::size_t default_series_order = 5200;

struct OrderExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::size_t required_order(const std::vector<std::int64_t>& nlist, std::size_t order)
{
    if (nlist.empty()) {
        throw std::invalid_argument("empty list of n values");
    }
    std::int64_t top = 0;
    for (auto n : nlist) {
        if (n < 0) {
            throw std::invalid_argument("negative n in table request");
        }
        top = std::max(top, n);
    }
    if (static_cast<std::size_t>(top) > order) {
        throw OrderExceeded("n = " + std::to_string(top) + " needs series order >= " + std::to_string(top)
                            + " but the configured order is " + std::to_string(order) + " (use --order "
                            + std::to_string(top) + ")");
    }
    return static_cast<std::size_t>(top);
}

/// n0, n0 + stride, ..., up to nmax.
inline std::vector<std::int64_t> stride_list(std::int64_t n0, std::int64_t stride, std::int64_t nmax)
{
    if (stride < 1) {
        throw std::invalid_argument("stride must be positive");
    }
    std::vector<std::int64_t> out;
    for (std::int64_t n = n0; n <= nmax; n += stride) {
        out.push_back(n);
    }
    return out;
}

/// Psi_t(a,b;n) for each n in nlist and a < b, from a Han series at the configured order.
inline TableReport cmd_hooks_table(int t, int b, const std::vector<std::int64_t>& nlist,
                                   std::size_t order = default_series_order)
{
    required_order(nlist, order);
    const CycSeries han = han_series(t, b, order);
    TableReport r;
    r.title = "Psi_" + std::to_string(t) + "(a," + std::to_string(b) + ";n)";
    r.family = "hooks";
    r.t = t;
    r.b = b;
    r.order = order;
    r.rows = nlist;
    for (int a = 0; a < b; ++a) {
        r.columns.push_back(a);
    }
    for (auto n : nlist) {
        std::vector<Rational> row;
        for (int a = 0; a < b; ++a) {
            row.push_back(psi_ratio(han, a, static_cast<std::size_t>(n)));
        }
        r.cells.push_back(std::move(row));
    }
    return r;
}

struct HilbertFamily {
    bool quasi = false;
    std::int64_t alpha = 1;
    std::int64_t beta = 1;

    std::string name() const
    {
        return quasi ? "quasi(" + std::to_string(alpha) + "," + std::to_string(beta) + ")" : "homogeneous";
    }
};

/// "homogeneous" or "quasi(alpha,beta)".
inline HilbertFamily parse_family(const std::string& s)
{
    if (s == "homogeneous") {
        return {};
    }
    long al = 0, be = 0;
    char close = 0;
    std::istringstream is(s);
    std::string head(6, '\0');
    is.read(head.data(), 6);
    char comma = 0;
    if (head == "quasi(" && (is >> al >> comma >> be >> close) && comma == ',' && close == ')' && is.peek() == EOF) {
        return {true, al, be};
    }
    throw std::invalid_argument("unknown family '" + s + "'; expected homogeneous or quasi(alpha,beta)");
}

/// delta(a,b;n) or delta_{alpha,beta}(a,b;n).
inline TableReport cmd_hilbert_table(const HilbertFamily& family, int b, const std::vector<std::int64_t>& nlist,
                                     std::size_t order = default_series_order)
{
    const std::size_t top = required_order(nlist, order);
    if (b < 1) {
        throw std::invalid_argument("modulus must be positive");
    }
    const PoincareSeries series
        = family.quasi ? buryak_feigin_series(family.alpha, family.beta, top) : goettsche_series(top);
    TableReport r;
    r.title = family.quasi ? "delta_{" + std::to_string(family.alpha) + "," + std::to_string(family.beta) + "}(a,"
                                 + std::to_string(b) + ";n)"
                           : "delta(a," + std::to_string(b) + ";n)";
    r.family = family.name();
    r.b = b;
    r.order = top;
    r.rows = nlist;
    for (int a = 0; a < b; ++a) {
        r.columns.push_back(a);
    }
    for (auto n : nlist) {
        std::vector<Rational> row;
        for (int a = 0; a < b; ++a) {
            row.push_back(betti_proportion(series, a, b, static_cast<std::size_t>(n)));
        }
        r.cells.push_back(std::move(row));
    }
    return r;
}

struct CaseResult {
    std::string label;
    bool passed = false;
    double error = 0; // measured error, 0 for exact checks
};

struct VerifyReport {
    std::string suite;
    std::vector<CaseResult> cases;

    bool passed() const
    {
        if (cases.empty()) {
            return false;
        }
        for (const auto& c : cases) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }

    void add(std::string label, bool ok, double error = 0) { cases.push_back({std::move(label), ok, error}); }
};

inline nlohmann::ordered_json to_json(const VerifyReport& r)
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["passed"] = r.passed();
    auto cases = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) {
        cases.push_back({{"label", c.label}, {"passed", c.passed}, {"error", c.error}});
    }
    j["cases"] = std::move(cases);
    return j;
}

inline std::string to_text(const VerifyReport& r)
{
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& c : r.cases) {
        if (!c.passed) {
            ++failed;
            os << "FAIL " << c.label << " error=" << c.error << "\n";
        }
    }
    os << r.suite << ": " << r.cases.size() - failed << "/" << r.cases.size() << " cases passed\n";
    return os.str();
}

struct VerifyOptions {
    int t = 2;                 // vanishing, zuckerman
    std::int64_t ell = 3;      // vanishing
    std::size_t nmax = 300;    // vanishing
    std::int64_t bmax = 13;    // kloosterman, lambda
    std::int64_t tmax = 12;    // kloosterman, lambda
    std::int64_t kmax = 40;    // lambda; Kmax for zuckerman is zk_kmax
    std::size_t N = 10;        // nekrasov
    double A = 1;              // em
    std::int64_t b = 3;        // zuckerman
    std::int64_t n_lo = 10;    // zuckerman
    std::int64_t n_hi = 20;    // zuckerman
    std::int64_t zk_kmax = 30; // zuckerman
    double zk_tolerance = 0.5; // zuckerman
    double kloosterman_tolerance = 1e-20;
};

inline std::vector<std::int64_t> odd_primes_up_to(std::int64_t bmax)
{
    std::vector<std::int64_t> out;
    for (std::int64_t p = 3; p <= bmax; p += 2) {
        if (is_odd_prime(p)) {
            out.push_back(p);
        }
    }
    return out;
}

inline VerifyReport verify_vanishing_suite(const VerifyOptions& o)
{
    VerifyReport r{"vanishing", {}};
    const std::int64_t m = vanishing_modulus(o.t, o.ell);
    vanishing_predicate(o.t, o.ell, 0, 0); // validates (t, ell)
    const CycSeries han = han_series(o.t, static_cast<int>(m), o.nmax);
    const std::int64_t expected_per_a1 = o.t == 2 ? (o.ell - 1) / 2 : o.ell - 1;
    for (std::int64_t a1 = 0; a1 < m; ++a1) {
        std::int64_t pairs = 0;
        for (std::int64_t a2 = 0; a2 < m; ++a2) {
            if (!vanishing_predicate(o.t, o.ell, a1, a2)) {
                continue;
            }
            ++pairs;
            const auto rep = verify_vanishing(han, o.t, o.ell, a1, a2, o.nmax);
            r.add("p_" + std::to_string(o.t) + "(" + std::to_string(a1) + "," + std::to_string(m) + ";"
                      + std::to_string(m) + "n+" + std::to_string(a2) + ")=0 checked " + std::to_string(rep.checked),
                  rep.passed());
        }
        r.add("pair count a1=" + std::to_string(a1) + " is " + std::to_string(pairs), pairs == expected_per_a1,
              static_cast<double>(pairs - expected_per_a1));
    }
    return r;
}

inline VerifyReport verify_kloosterman_suite(const VerifyOptions& o)
{
    VerifyReport r{"kloosterman", {}};
    for (auto b : odd_primes_up_to(o.bmax)) {
        for (std::int64_t t = 2; t <= o.tmax; ++t) {
            if (t % b == 0) {
                continue;
            }
            for (std::int64_t a = 0; a < b; ++a) {
                for (std::int64_t n = 0; n < b; ++n) {
                    const KloostermanParams p{a, b, t, n};
                    const double err = to_double(abs(kloosterman_direct(p) - kloosterman_closed(p).value()));
                    r.add("K(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(t) + ";"
                              + std::to_string(n) + ")",
                          err < o.kloosterman_tolerance, err);
                }
            }
            std::vector<std::int64_t> hs;
            for (std::int64_t h = 1; h < b; ++h) {
                hs.push_back(h);
            }
            r.add("dedekind simplification b=" + std::to_string(b) + " t=" + std::to_string(t),
                  dedekind_simplification_check(b, t, hs).passed());
        }
    }
    return r;
}

inline VerifyReport verify_lambda_suite(const VerifyOptions& o)
{
    VerifyReport r{"lambda", {}}; // residues 1 <= a < b
    for (auto b : odd_primes_up_to(o.bmax)) {
        for (std::int64_t t = 2; t <= o.tmax; ++t) {
            std::size_t checked = 0;
            bool ok = true;
            for (std::int64_t k = 1; k <= o.kmax; ++k) {
                for (std::int64_t h = 0; h < k; ++h) {
                    if (gcd(h, k) != 1) {
                        continue;
                    }
                    for (std::int64_t a = 1; a < b; ++a) {
                        ok = ok && lambda_case_formula(t, a, b, h, k) == gcd(k * b, h * b * t + a * k);
                        ++checked;
                    }
                }
            }
            r.add("lambda b=" + std::to_string(b) + " t=" + std::to_string(t) + " (" + std::to_string(checked)
                      + " cases)",
                  ok);
        }
    }
    return r;
}

inline VerifyReport verify_nekrasov_suite(const VerifyOptions& o)
{
    VerifyReport r{"nekrasov", {}};
    const auto rep = nekrasov_okounkov_check(o.N);
    for (int w : rep.weights) {
        bool ok = true;
        for (int f : rep.failing_weights) {
            ok = ok && f != w;
        }
        r.add("weight " + std::to_string(w) + " to order " + std::to_string(o.N), ok);
    }
    return r;
}

inline std::vector<PrecFloat> em_grid()
{
    std::vector<PrecFloat> g;
    PrecFloat z = 0.1;
    for (int k = 0; k < 7; ++k) {
        g.push_back(z);
        z /= 2;
    }
    return g;
}

inline VerifyReport verify_em_suite(const VerifyOptions& o)
{
    VerifyReport r{"em", {}};
    const auto grid = em_grid();
    for (const Rational& a : {Rational(1, 3), Rational(1, 2), Rational(1)}) {
        const auto rep = euler_maclaurin_check(a, o.A, grid);
        r.add("euler-maclaurin a=" + a.get_str() + " slope " + std::to_string(rep.slope)
                  + (rep.below_floor ? " (below floor)" : ""),
              rep.passed(), rep.errors.back());
        const auto neg = euler_maclaurin_check(a, o.A, grid, true);
        r.add("negative control a=" + a.get_str() + " rejected", !neg.passed(), neg.errors.back());
    }
    for (double N : {1.0, 2.0, 5.0}) {
        const auto q = binet_integral_check(N);
        r.add("binet integral N=" + std::to_string(static_cast<int>(N)), q.difference() < 1e-12, q.difference());
    }
    const auto is = i_star_quadrature(o.A);
    r.add("I* quadrature", is.difference() < 1e-12, is.difference());
    for (std::int64_t b : {2, 3, 5, 7}) {
        const double err = to_double(digamma_identity_check(b));
        r.add("digamma identity b=" + std::to_string(b), err < to_double(precision_floor(32)), err);
    }
    return r;
}

inline VerifyReport verify_eta_suite(const VerifyOptions&)
{
    VerifyReport r{"eta", {}};
    struct Case {
        std::int64_t h, k;
        double re, im;
    };
    const double tol = to_double(precision_floor(40));
    for (const Case& c : {Case{0, 1, 0.2, 0}, Case{0, 1, 0.5, 0.3}, Case{1, 2, 0.3, 0}, Case{1, 3, 0.2, 0.1},
                          Case{2, 5, 0.25, -0.1}, Case{3, 7, 0.4, 0.2}}) {
        const double err = to_double(eta_transform_check(c.h, c.k, PrecComplex(PrecFloat(c.re), PrecFloat(c.im))));
        r.add("eta transform h=" + std::to_string(c.h) + " k=" + std::to_string(c.k), err < tol, err);
    }
    return r;
}

inline VerifyReport verify_products_suite(const VerifyOptions&)
{
    VerifyReport r{"products", {}};
    const PrecFloat theta = pi_value() / 4;
    for (const ExactPhase& xi : {ExactPhase(Rational(1, 2)), ExactPhase(Rational(1, 3))}) {
        for (const auto& alpha : cone_rays(theta)) {
            const auto grid = dyadic_grid(PrecFloat(0.1), alpha, 7);
            for (ProductKind kind : {ProductKind::F1, ProductKind::F3}) {
                const auto s = ratio_study(kind, xi, grid);
                std::ostringstream label;
                label << "F" << static_cast<int>(kind) << " xi=" << xi.turns().get_str() << " ray "
                      << to_double(alpha) << " slope " << s.slope;
                r.add(label.str(), s.slope_within(0.8, 1.2), s.errors.back());
            }
        }
    }
    const auto grid = dyadic_grid(PrecFloat(0.05), PrecFloat(0), 6);
    struct F2Case {
        std::int64_t a, b, t, h, k;
    };
    for (const F2Case& c : {F2Case{1, 3, 2, 0, 1}, F2Case{1, 3, 2, 1, 3}, F2Case{2, 5, 3, 1, 2}, F2Case{1, 3, 4, 2, 3}}) {
        const auto s = ratio_study_F2(c.a, c.b, c.t, c.h, c.k, grid);
        r.add("F2 a=" + std::to_string(c.a) + " b=" + std::to_string(c.b) + " t=" + std::to_string(c.t)
                  + " h/k=" + std::to_string(c.h) + "/" + std::to_string(c.k),
              s.monotone && s.errors.back() < 0.01, s.errors.back());
    }
    return r;
}

inline VerifyReport verify_zuckerman_suite(const VerifyOptions& o)
{
    VerifyReport r{"zuckerman", {}};
    const CycSeries han = han_series(o.t, static_cast<int>(o.b), static_cast<std::size_t>(o.n_hi));
    for (std::int64_t rr = 1; rr < o.b; ++rr) {
        for (std::int64_t n = o.n_lo; n <= o.n_hi; ++n) {
            const auto z = zuckerman_truncated(o.t, o.b, rr, n, {o.zk_kmax, current_precision_bits()});
            const double err = to_double(abs(z.value - exact_coefficient(han, rr, static_cast<std::size_t>(n))));
            r.add("c_{" + std::to_string(o.t) + "," + std::to_string(o.b) + "," + std::to_string(rr) + "}("
                      + std::to_string(n) + ") Kmax=" + std::to_string(o.zk_kmax),
                  err < o.zk_tolerance, err);
        }
    }
    return r;
}

inline const std::vector<std::string>& verify_suite_names()
{
    static const std::vector<std::string> names{"vanishing", "kloosterman", "lambda", "nekrasov",
                                                "em",        "eta",         "products", "zuckerman"};
    return names;
}

inline VerifyReport cmd_verify(const std::string& suite, const VerifyOptions& o)
{
    if (suite == "vanishing") {
        return verify_vanishing_suite(o);
    }
    if (suite == "kloosterman") {
        return verify_kloosterman_suite(o);
    }
    if (suite == "lambda") {
        return verify_lambda_suite(o);
    }
    if (suite == "nekrasov") {
        return verify_nekrasov_suite(o);
    }
    if (suite == "em") {
        return verify_em_suite(o);
    }
    if (suite == "eta") {
        return verify_eta_suite(o);
    }
    if (suite == "products") {
        return verify_products_suite(o);
    }
    if (suite == "zuckerman") {
        return verify_zuckerman_suite(o);
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

struct AsymOptions {
    int kind = 1;
    std::int64_t b = 2;  // xi = zeta_b for F_1 and F_3
    std::int64_t a = 1;  // F_2 uses xi = zeta_b^a
    std::int64_t t = 2;
    std::int64_t h = 0;
    std::int64_t k = 1;
    double r0 = 0.1;
    double alpha = 0;    // ray angle
    int steps = 7;
};

/// Direct product against its small-z asymptotic on a dyadic ray.
inline nlohmann::ordered_json cmd_asym_products(const AsymOptions& o)
{
    if (o.kind < 1 || o.kind > 3) {
        throw std::invalid_argument("product kind must be 1, 2 or 3");
    }
    if (o.steps < 2) {
        throw std::invalid_argument("need at least 2 grid points");
    }
    const auto grid = dyadic_grid(PrecFloat(o.r0), PrecFloat(o.alpha), o.steps);
    const RatioStudy s = o.kind == 2 ? ratio_study_F2(o.a, o.b, o.t, o.h, o.k, grid)
                                     : ratio_study(static_cast<ProductKind>(o.kind), ExactPhase::root(1, o.b), grid);
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "F" + std::to_string(o.kind);
    j["b"] = o.b;
    if (o.kind == 2) {
        j["a"] = o.a;
        j["t"] = o.t;
        j["h"] = o.h;
        j["k"] = o.k;
    }
    j["alpha"] = o.alpha;
    j["z_abs"] = s.z_abs;
    j["relative_error"] = s.errors;
    j["monotone"] = s.monotone;
    if (o.kind != 2) {
        j["slope"] = s.slope;
    }
    return j;
}

} // namespace hookdist
