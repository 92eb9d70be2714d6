// hookdist: hook-count and Betti-sum tables, verification suites, product asymptotics.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hookdist/commands.hpp>

namespace {

struct OutputOptions {
    std::string format = "text";
    std::optional<unsigned> precision;
    std::size_t order = hookdist::default_series_order;
    std::string out;
};

void emit(const OutputOptions& o, const std::string& body)
{
    if (o.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write to '" + o.out + "'");
    }
    f << body;
    if (!f) {
        throw std::runtime_error("write to '" + o.out + "' failed");
    }
}

std::string render(const OutputOptions& o, const hookdist::TableReport& r)
{
    if (o.format == "csv") {
        return hookdist::to_csv(r);
    }
    if (o.format == "json") {
        return hookdist::to_json(r).dump(2) + "\n";
    }
    return hookdist::to_text(r);
}

std::vector<std::int64_t> resolve_nlist(const std::vector<std::int64_t>& nlist, std::int64_t stride,
                                        std::int64_t nmin, std::int64_t nmax)
{
    if (!nlist.empty()) {
        return nlist;
    }
    if (stride > 0) {
        return hookdist::stride_list(nmin > 0 ? nmin : stride, stride, nmax);
    }
    throw CLI::ValidationError("--n", "give --n values or --stride with --nmax");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and asymptotic statistics of t-hooks and Hilbert-scheme Betti numbers"};
    app.require_subcommand(1);
    app.fallthrough();
    OutputOptions out;
    app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--precision", out.precision, "Working precision in bits (default 256, or HOOKDIST_PRECISION)")
        ->check(CLI::Range(64u, 1u << 20));
    app.add_option("--order", out.order, "Series truncation order")->check(CLI::PositiveNumber);
    app.add_option("--out", out.out, "Write output to this path");

    std::vector<std::int64_t> nlist;
    std::int64_t stride = 0, nmin = 0, nmax = 0;

    auto* hooks = app.add_subcommand("hooks-table", "Psi_t(a,b;n) = p_t(a,b;n)/p(n)");
    int t = 3, b = 3;
    hooks->add_option("--t", t, "Hook length divisor")->check(CLI::Range(2, 64));
    hooks->add_option("--b", b, "Modulus")->check(CLI::Range(2, 64));
    hooks->add_option("--n", nlist, "Values of n")->delimiter(',');
    hooks->add_option("--stride", stride, "Step between n values");
    hooks->add_option("--nmin", nmin, "First n for --stride (default: the stride)");
    hooks->add_option("--nmax", nmax, "Last n for --stride");

    auto* hilbert = app.add_subcommand("hilbert-table", "delta(a,b;n) for the homogeneous or quasi(alpha,beta) family");
    std::string family = "homogeneous";
    int hb = 3;
    hilbert->add_option("--family", family, "homogeneous or quasi(alpha,beta)");
    hilbert->add_option("--b", hb, "Modulus")->check(CLI::Range(1, 64));
    hilbert->add_option("--n", nlist, "Values of n")->delimiter(',');
    hilbert->add_option("--stride", stride, "Step between n values");
    hilbert->add_option("--nmin", nmin, "First n for --stride (default: the stride)");
    hilbert->add_option("--nmax", nmax, "Last n for --stride");

    auto* verify = app.add_subcommand("verify", "Run a verification suite; exit status 0 iff every case passes");
    std::string suite;
    hookdist::VerifyOptions vo;
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(hookdist::verify_suite_names()));
    verify->add_option("--t", vo.t, "t for vanishing / zuckerman");
    verify->add_option("--ell", vo.ell, "Prime ell for vanishing");
    verify->add_option("--nmax", vo.nmax, "Largest argument for vanishing");
    verify->add_option("--bmax", vo.bmax, "Largest b for kloosterman / lambda");
    verify->add_option("--tmax", vo.tmax, "Largest t for kloosterman / lambda");
    verify->add_option("--kmax", vo.kmax, "Largest k for lambda");
    verify->add_option("--N", vo.N, "Order for nekrasov")->check(CLI::Range(1, 25));
    verify->add_option("--A", vo.A, "Cutoff A for em")->check(CLI::PositiveNumber);
    verify->add_option("--b", vo.b, "Odd prime b for zuckerman");
    verify->add_option("--n-lo", vo.n_lo, "First n for zuckerman");
    verify->add_option("--n-hi", vo.n_hi, "Last n for zuckerman");
    verify->add_option("--Kmax", vo.zk_kmax, "Truncation Kmax for zuckerman");

    auto* asym = app.add_subcommand("asym", "Asymptotic studies");
    asym->require_subcommand(1);
    auto* products = asym->add_subcommand("products", "Direct product against its z -> 0 asymptotic on a dyadic ray");
    hookdist::AsymOptions ao;
    products->add_option("--kind", ao.kind, "1, 2 or 3")->check(CLI::Range(1, 3));
    products->add_option("--b", ao.b, "Order of the root of unity");
    products->add_option("--a", ao.a, "Residue a (kind 2)");
    products->add_option("--t", ao.t, "t (kind 2)");
    products->add_option("--cusp-h", ao.h, "Cusp numerator h (kind 2)");
    products->add_option("--cusp-k", ao.k, "Cusp denominator k (kind 2)");
    products->add_option("--r0", ao.r0, "Largest |z|")->check(CLI::PositiveNumber);
    products->add_option("--alpha", ao.alpha, "Ray angle in radians");
    products->add_option("--steps", ao.steps, "Number of dyadic points");

    CLI11_PARSE(app, argc, argv);

    try {
        hookdist::ScopedPrecision precision(out.precision ? *out.precision : hookdist::default_precision_bits());
        if (hooks->parsed()) {
            const auto r = hookdist::cmd_hooks_table(t, b, resolve_nlist(nlist, stride, nmin, nmax), out.order);
            emit(out, render(out, r));
            return 0;
        }
        if (hilbert->parsed()) {
            const auto r = hookdist::cmd_hilbert_table(hookdist::parse_family(family), hb,
                                                       resolve_nlist(nlist, stride, nmin, nmax), out.order);
            emit(out, render(out, r));
            return 0;
        }
        if (verify->parsed()) {
            const auto r = hookdist::cmd_verify(suite, vo);
            emit(out, out.format == "json" ? hookdist::to_json(r).dump(2) + "\n" : hookdist::to_text(r));
            return r.passed() ? 0 : 1;
        }
        if (products->parsed()) {
            emit(out, hookdist::cmd_asym_products(ao).dump(2) + "\n");
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "hookdist: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
