#pragma once

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <iostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "errors.hpp"
#include "goettsche.hpp"
#include "picard.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "record.hpp"
#include "regression.hpp"
#include "series.hpp"
#include "strata.hpp"

namespace realgz::cli {

enum ExitCode : int { ok = 0, verification_failure = 1, usage = 2 };

inline std::string coefficient_text(const Rational& r) { return to_string(r); }
inline std::string coefficient_text(const PolyEC& p) { return to_string(p); }

namespace detail {

struct SeriesOptions {
    std::string kind;
    long er = 0;
    long ec = 24;
    std::size_t order = 0;
    bool symbolic = false;
    bool json = false;
};

template <Coefficient T>
Series<T> compute_series(const std::string& kind, const Topology<T>& top, std::size_t order)
{
    if (kind == "hilbert-real") {
        return real_hilbert_series(top, order);
    }
    if (kind == "welschinger") {
        return welschinger_series(top, order);
    }
    if (kind == "symmetric") {
        return real_symmetric_series(top, order);
    }
    return complex_goettsche_series(top.e_complex, order);
}

template <Coefficient T>
OutputRecord series_record(const SeriesOptions& opts, const Topology<T>& top)
{
    OutputRecord rec;
    rec.mode = opts.kind;
    rec.order = opts.order;
    const auto s = compute_series(opts.kind, top, opts.order);
    for (std::size_t g = 0; g <= opts.order; ++g) {
        rec.coefficients.emplace_back(g, coefficient_text(s[g]));
    }
    return rec;
}

inline void print_series_text(const OutputRecord& rec, std::ostream& out)
{
    out << "# " << rec.mode;
    if (std::holds_alternative<SymbolicTopology>(rec.topology)) {
        out << "  symbolic (a = e_R, c = e_C)";
    } else if (const auto* num = std::get_if<NumericTopology>(&rec.topology)) {
        if (num->er) {
            out << "  e_R=" << *num->er;
        }
        out << " e_C=" << num->ec;
    }
    out << "  order=" << rec.order << '\n';
    const char* var = rec.mode == "symmetric" ? "t" : "q";
    for (const auto& [g, text] : rec.coefficients) {
        out << var << '^' << g << "  " << text << '\n';
    }
}

inline int run_series(const SeriesOptions& opts, bool er_given, bool ec_given, std::ostream& out)
{
    OutputRecord rec;
    if (opts.symbolic) {
        if (er_given || ec_given) {
            throw usage_error("--symbolic cannot be combined with --er/--ec");
        }
        rec = series_record(opts, symbolic_topology());
        rec.topology = SymbolicTopology{};
    } else if (opts.kind == "complex" && !er_given) {
        rec = series_record(opts, Topology<Rational>{Rational(opts.ec), Rational(opts.ec)});
        rec.topology = NumericTopology{std::nullopt, opts.ec};
    } else {
        if (!er_given) {
            throw usage_error("--er is required for numeric series (or pass --symbolic)");
        }
        rec = series_record(opts, numeric_topology(opts.er, opts.ec));
        rec.topology = NumericTopology{opts.er, opts.ec};
    }
    if (opts.json) {
        out << render(rec) << '\n';
    } else {
        print_series_text(rec, out);
    }
    return ok;
}

inline int run_examples(std::ostream& out)
{
    bool all = true;
    auto report = [&](const std::string& label, const std::string& got, const std::string& want, bool pass) {
        all = all && pass;
        out << (pass ? "ok        " : "MISMATCH  ") << label << ": " << got;
        if (!pass) {
            out << " (expected " << want << ")";
        }
        out << '\n';
    };

    out << "# e(X^[g]_R), symbolic in a = e_R, c = e_C\n";
    const auto expected = regression::low_genus_euler();
    const auto series = real_hilbert_series(symbolic_topology(), expected.size());
    for (std::size_t g = 1; g <= expected.size(); ++g) {
        const auto& want = expected[g - 1];
        report("g=" + std::to_string(g), to_string(series[g]), to_string(want), series[g] == want);
    }

    out << "# |w_g| lower bounds on K3 surfaces (e_C = 24)\n";
    for (const auto& c : regression::k3_bounds()) {
        const auto rep = signed_count(numeric_topology(c.e_real, 24), c.genus);
        const BigInt got = abs(rep.signed_count);
        report(c.description + ", g=" + std::to_string(c.genus), to_string(got), std::to_string(c.expected),
               got == c.expected);
    }

    out << "# e(X^[3]_R) at (e_R, e_C) = (-16, 24) and its signed count\n";
    const auto rep = signed_count(numeric_topology(-16, 24), 3);
    report("e(X^[3]_R)", to_string(rep.euler), "-1152", rep.euler == -1152);
    report("w_3 = (-1)^3 e(X^[3]_R)", to_string(rep.signed_count), "1152", rep.signed_count == 1152);

    out << (all ? "all examples match\n" : "examples FAILED\n");
    return all ? ok : verification_failure;
}

/// Random parity-valid topologies: e_R in [-20, 20], e_C = e_R + 2k, k in [-10, 20].
inline std::vector<Topology<Rational>> random_topologies(std::uint64_t seed, std::size_t trials)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> er_dist(-20, 20);
    std::uniform_int_distribution<long> k_dist(-10, 20);
    std::vector<Topology<Rational>> out;
    for (std::size_t i = 0; i < trials; ++i) {
        const long er = er_dist(rng);
        out.push_back(numeric_topology(er, er + 2 * k_dist(rng)));
    }
    return out;
}

/// Recursive vs closed Picard Euler characteristics, the degree-indexed
/// recursion, and the sign identity for every (r, s, t) with genus ≤ max_genus.
inline bool picard_sweep(unsigned max_genus)
{
    using namespace picard;
    for (unsigned r = 0; r <= max_genus; ++r) {
        for (unsigned s = 0; r + s <= max_genus; ++s) {
            for (unsigned t = 0; r + s + 2 * t <= max_genus; ++t) {
                const RealNodalCurve curve{r, s, t};
                const int closed = picard_euler_closed(curve);
                const auto nodes = curve.nodes();
                if (picard_euler_recursive(curve, nodes) != closed) {
                    return false;
                }
                if (picard_euler_by_degree(curve, nodes).front().at(static_cast<int>(curve.genus())) != closed) {
                    return false;
                }
                const int parity = curve.genus() % 2 == 0 ? 1 : -1;
                if (parity * closed != welschinger_sign(curve)) {
                    return false;
                }
            }
        }
    }
    return positive_genus_euler() == 0;
}

struct VerifyOptions {
    std::size_t order = 10;
    std::uint64_t seed = 1;
    std::size_t trials = 20;
    bool json = false;
};

inline int run_verify(const VerifyOptions& opts, std::ostream& out)
{
    const std::size_t n_max = opts.order;
    const std::size_t symbolic_max = std::min<std::size_t>(n_max, 10);
    std::vector<bool> pass(n_max + 1, true);

    const auto sym = symbolic_topology();
    const auto sym_hilb = real_hilbert_series(sym, symbolic_max);
    const auto sym_sym = real_symmetric_series(sym, symbolic_max);
    const auto sym_oracle = strata::hilbert_coefficients(sym, static_cast<unsigned>(symbolic_max));
    const auto sym_sym_oracle = strata::symmetric_coefficients(sym, static_cast<unsigned>(symbolic_max));
    for (std::size_t n = 0; n <= symbolic_max; ++n) {
        pass[n] = pass[n] && sym_hilb[n] == sym_oracle[n] && sym_sym[n] == sym_sym_oracle[n];
    }

    for (const auto& top : random_topologies(opts.seed, opts.trials)) {
        const auto hilb = real_hilbert_series(top, n_max);
        const auto welsch = welschinger_series(top, n_max);
        const auto symm = real_symmetric_series(top, n_max);
        const auto oracle = strata::hilbert_coefficients(top, static_cast<unsigned>(n_max));
        const auto sym_oracle_n = strata::symmetric_coefficients(top, static_cast<unsigned>(n_max));
        for (std::size_t n = 0; n <= n_max; ++n) {
            const Rational signed_euler = n % 2 == 0 ? hilb[n] : Rational(-hilb[n]);
            pass[n] = pass[n] && hilb[n] == oracle[n] && symm[n] == sym_oracle_n[n] && welsch[n] == signed_euler
                      && is_integer(hilb[n]);
        }
    }

    const bool picard_ok = picard_sweep(12);
    const bool all = picard_ok && std::all_of(pass.begin(), pass.end(), [](bool b) { return b; });

    if (opts.json) {
        OutputRecord rec;
        rec.mode = "verify";
        rec.order = n_max;
        rec.checks.emplace();
        for (std::size_t n = 0; n <= n_max; ++n) {
            rec.checks->emplace_back(n, pass[n]);
        }
        out << render(rec) << '\n';
    } else {
        out << "# strata oracle vs closed formulas: symbolic n <= " << symbolic_max << ", numeric n <= " << n_max
            << " over " << opts.trials << " topologies (seed " << opts.seed << ")\n";
        for (std::size_t n = 0; n <= n_max; ++n) {
            out << "n=" << n << "  " << (pass[n] ? "ok" : "MISMATCH") << '\n';
        }
        out << "picard sweep (genus <= 12): " << (picard_ok ? "ok" : "MISMATCH") << '\n';
        out << (all ? "verification passed\n" : "verification FAILED\n");
    }
    return all ? ok : verification_failure;
}

struct PicardOptions {
    unsigned cross = 0;
    unsigned solitary = 0;
    unsigned pairs = 0;
    bool degree_debug = false;
    bool json = false;
};

inline int run_picard(const PicardOptions& opts, std::ostream& out)
{
    using namespace picard;
    const RealNodalCurve curve{opts.cross, opts.solitary, opts.pairs};
    const auto nodes = curve.nodes();
    const unsigned g = curve.genus();
    const int e = picard_euler_recursive(curve, nodes);
    const int sign = welschinger_sign(curve);
    const int signed_e = (g % 2 == 0 ? 1 : -1) * e;
    bool consistent = signed_e == sign && e == picard_euler_closed(curve);

    std::vector<DegreeStep> steps;
    if (opts.degree_debug) {
        steps = picard_euler_by_degree(curve, nodes);
        consistent = consistent && steps.front().at(static_cast<int>(g)) == e;
    }

    if (opts.json) {
        OutputRecord rec;
        rec.mode = "picard";
        rec.order = g;
        rec.coefficients.emplace_back(g, std::to_string(e));
        rec.checks.emplace();
        rec.checks->emplace_back(g, consistent);
        rec.curve = CurveInfo{curve.cross, curve.solitary, curve.pairs, sign};
        out << render(rec) << '\n';
        return consistent ? ok : verification_failure;
    }

    out << "curve: cross=" << curve.cross << " solitary=" << curve.solitary << " pairs=" << curve.pairs << '\n';
    out << "g = " << g << '\n';
    out << "e(Pic^g_R) = " << e << '\n';
    out << "welschinger sign = " << sign << '\n';
    out << "(-1)^g * e(Pic^g_R) = " << signed_e << (consistent ? " = sign: consistent" : " != sign: INCONSISTENT")
        << '\n';
    if (opts.degree_debug) {
        out << "# degree-indexed recursion, step k = nodes normalized so far\n";
        for (const auto& step : steps) {
            out << "step " << step.normalized;
            if (step.normalized > 0) {
                out << " (after " << to_string(nodes[step.normalized - 1]) << ")";
            }
            out << ':';
            for (std::size_t i = 0; i < step.euler.size(); ++i) {
                out << "  d=" << step.min_degree + static_cast<int>(i) << ":" << step.euler[i];
            }
            out << '\n';
        }
    }
    return consistent ? ok : verification_failure;
}

} // namespace detail

/// Entry point shared by the realgz binary and the tests. `args` excludes
/// the program name. Returns 0 on success, 1 on a verification mismatch
/// and 2 on usage errors (including parity-invalid topologies).
inline int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Real Goettsche / Welschinger generating functions and real Picard Euler characteristics"};
    app.require_subcommand(1);

    detail::SeriesOptions series_opts;
    auto* series = app.add_subcommand("series", "Print generating-function coefficients 0..G");
    series->add_option("--kind", series_opts.kind, "Series kind")
        ->required()
        ->check(CLI::IsMember({"hilbert-real", "welschinger", "symmetric", "complex"}));
    auto* er_opt = series->add_option("--er", series_opts.er, "Euler characteristic of the real locus");
    auto* ec_opt = series->add_option("--ec", series_opts.ec, "Euler characteristic of the surface (default 24)");
    series->add_option("--order", series_opts.order, "Truncation order G")->required();
    series->add_flag("--symbolic", series_opts.symbolic, "Keep e_R, e_C as symbols a, c");
    series->add_flag("--json", series_opts.json, "Emit a JSON record");

    app.add_subcommand("examples", "Check the published low-genus table and K3 bounds");

    detail::VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Compare closed formulas against the strata oracle");
    verify->add_option("--order", verify_opts.order, "Largest index checked")->required();
    verify->add_option("--seed", verify_opts.seed, "Seed for random topologies");
    verify->add_option("--trials", verify_opts.trials, "Number of random topologies");
    verify->add_flag("--json", verify_opts.json, "Emit a JSON record");

    detail::PicardOptions picard_opts;
    auto* pic = app.add_subcommand("picard", "Euler characteristic of a real compactified Picard variety");
    pic->add_option("--cross", picard_opts.cross, "Number of cross points");
    pic->add_option("--solitary", picard_opts.solitary, "Number of solitary points");
    pic->add_option("--pairs", picard_opts.pairs, "Number of conjugate pairs of nodes");
    pic->add_flag("--degree-debug", picard_opts.degree_debug, "Show the degree-indexed two-term recursion");
    pic->add_flag("--json", picard_opts.json, "Emit a JSON record");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (series->parsed()) {
            return detail::run_series(series_opts, er_opt->count() > 0, ec_opt->count() > 0, out);
        }
        if (verify->parsed()) {
            return detail::run_verify(verify_opts, out);
        }
        if (pic->parsed()) {
            return detail::run_picard(picard_opts, out);
        }
        return detail::run_examples(out);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const domain_error& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    }
}

} // namespace realgz::cli
