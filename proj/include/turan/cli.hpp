#pragma once

// Command-line front end: verify, scan, extremal, selftest.
// Exit codes: 0 success, 1 verification failure or inadmissible instance, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bounds.hpp"
#include "genverify.hpp"
#include "report.hpp"

namespace turan::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

class UsageError : public Error {
public:
    using Error::Error;
};

inline std::string valid_kind_list() {
    std::string out;
    for (auto k : all_kinds) out += (out.empty() ? "" : ", ") + std::string(to_string(k));
    return out;
}

/// "all" or a comma-separated list of kind names.
inline std::vector<BoundKind> parse_kinds(const std::string& text) {
    if (text == "all") return {all_kinds.begin(), all_kinds.end()};
    std::vector<BoundKind> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto kind = parse_kind(item);
        if (!kind) throw UsageError("unknown kind '" + item + "'; valid kinds: all, " + valid_kind_list());
        if (std::find(out.begin(), out.end(), *kind) == out.end()) out.push_back(*kind);
    }
    if (out.empty()) throw UsageError("no kinds given; valid kinds: all, " + valid_kind_list());
    return out;
}

/// "re,im" or a bare real.
inline Complex parse_complex(const std::string& text) {
    std::size_t used = 0;
    try {
        const auto comma = text.find(',');
        const std::string re_text = text.substr(0, comma);
        const double re = std::stod(re_text, &used);
        if (used != re_text.size()) throw UsageError("");
        if (comma == std::string::npos) return {re, 0.0};
        const std::string im_text = text.substr(comma + 1);
        const double im = std::stod(im_text, &used);
        if (used != im_text.size()) throw UsageError("");
        return {re, im};
    } catch (const std::exception&) {
        throw UsageError("cannot parse complex number '" + text + "' (expected re,im)");
    }
}

struct RunSpec {
    std::string command;
    GenConfig gen;
    int instances = 1000;
    int points = 256;
    std::string kinds = "all";
    unsigned threads = 0;  // 0: hardware concurrency
    std::string output;    // empty: stdout
    std::string format;    // empty: per-command default

    std::vector<std::string> zeros;
    std::vector<std::string> poles;
    std::string leading = "1,0";
    int origin_order = 0;
    double k = 1.0;
    int rows = 360;

    double tolerance = 1e-8;
};

namespace detail {

inline void emit(const RunSpec& spec, const std::string& text, std::ostream& out) {
    if (spec.output.empty() || spec.output == "-") {
        out << text;
        return;
    }
    std::ofstream f(spec.output, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + spec.output + "'");
    f << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string resolve_format(const RunSpec& spec, const char* fallback) {
    const std::string f = spec.format.empty() ? fallback : spec.format;
    if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
    return f;
}

inline int cmd_verify(RunSpec spec, std::ostream& out, std::ostream& err) {
    if (const char* env = std::getenv("TURAN_SEED")) {
        try {
            std::size_t used = 0;
            spec.gen.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("TURAN_SEED is not an unsigned integer: ") + env);
        }
    }
    const std::string format = resolve_format(spec, "json");
    SweepOptions opt;
    opt.instances = spec.instances;
    opt.points = spec.points;
    opt.kinds = parse_kinds(spec.kinds);
    opt.threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    try {
        spec.gen.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    if (spec.instances < 1 || spec.points < 8) throw UsageError("--instances must be >= 1 and --points >= 8");

    const VerificationReport rep = verify_sweep(spec.gen, opt);
    emit(spec, format == "json" ? dump(to_json(rep, "verify")) : to_csv(rep, "verify"), out);
    for (const auto& k : rep.kinds)
        if (k.violations) err << "violations: " << to_string(k.kind) << " " << k.violations << "\n";
    return rep.passed() ? exit_ok : exit_failure;
}

inline int cmd_scan(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    const std::string format = resolve_format(spec, "csv");
    if (spec.rows < 1) throw UsageError("--rows must be >= 1");
    if (spec.origin_order < 0) throw UsageError("--s must be >= 0");
    RootForm num{parse_complex(spec.leading), {}, spec.origin_order};
    for (const auto& z : spec.zeros) num.roots.push_back(parse_complex(z));
    std::vector<Complex> poles;
    for (const auto& a : spec.poles) poles.push_back(parse_complex(a));

    try {
        const RationalFn r(std::move(num), PoleSet(std::move(poles)), spec.k);
        std::vector<BoundKind> kinds;
        if (spec.kinds == "all") {
            for (auto kind : all_kinds)
                if (hypothesis_holds(kind, r)) kinds.push_back(kind);
        } else {
            kinds = parse_kinds(spec.kinds);
        }
        const ScanTable table = scan_instance(r, kinds, spec.rows);
        emit(spec, format == "csv" ? to_csv(table) : dump(to_json(table)), out);
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        err << "inadmissible instance: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_ok;
}

inline int cmd_extremal(const RunSpec& spec, std::ostream& out, std::ostream&) {
    const std::string format = resolve_format(spec, "json");
    if (!(spec.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
    const VerificationReport rep = extremal_suite(spec.tolerance);
    emit(spec, format == "json" ? dump(to_json(rep, "extremal")) : to_csv(rep, "extremal"), out);
    return rep.equality_passed() ? exit_ok : exit_failure;
}

inline int cmd_selftest(std::ostream& out) {
    bool ok = true;
    auto line = [&](bool pass, const std::string& what) {
        out << (pass ? "PASS " : "FAIL ") << what << "\n";
        ok = ok && pass;
    };

    GenConfig cfg;
    cfg.seed = 42;
    const RationalFn start = instance_at(cfg, 0);
    const ShrinkResult s1 = shrink(start, flipped_inequality_predicate());
    const ShrinkResult s2 = shrink(start, flipped_inequality_predicate());
    line(s1.input_violated && s1.instance.n() == 1, "shrink reduces injected violation to n = 1");
    line(to_json(extremal_suite(), "extremal").dump() == to_json(extremal_suite(), "extremal").dump(), "extremal suite is deterministic");
    line(s1.instance.n() == s2.instance.n() && s1.accepted_steps == s2.accepted_steps, "shrink is deterministic");

    SweepOptions opt;
    opt.instances = 20;
    opt.points = 32;
    opt.kinds = {BoundKind::Thm3_1, BoundKind::Thm2_3, BoundKind::Turan_1_3};
    opt.threads = 1;
    const auto a = to_json(verify_sweep(cfg, opt), "verify").dump();
    opt.threads = 3;
    const auto b = to_json(verify_sweep(cfg, opt), "verify").dump();
    line(a == b, "sweep report independent of worker count");
    line(verify_sweep(cfg, opt).passed(), "small sweep (Thm3_1, Thm2_3, Turan_1_3) has no violations");

    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const RationalFn r = instance_at(cfg, static_cast<std::uint64_t>(i));
        for (int j = 0; j < 16; ++j)
            worst = std::max(worst, std::abs(lemma42_residual(r.poleset(), std::polar(1.0, 0.39 * j))));
    }
    line(worst < 1e-9, "log-derivative identity residual < 1e-9");
    return ok ? exit_ok : exit_failure;
}

} // namespace detail

/// Parses argv and runs one command.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Turan-type derivative bounds for rational functions with prescribed poles", "turan"};
    app.require_subcommand(1);
    RunSpec spec;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", spec.output, "Report path (default: stdout)");
        sub->add_option("--format", spec.format, "json or csv");
    };

    auto* verify = app.add_subcommand("verify", "Random sweep over admissible instances");
    verify->add_option("--instances", spec.instances, "Number of instances")->capture_default_str();
    verify->add_option("--points", spec.points, "Equispaced circle points per instance")->capture_default_str();
    verify->add_option("--seed", spec.gen.seed, "64-bit seed (TURAN_SEED overrides)")->capture_default_str();
    verify->add_option("--kinds", spec.kinds, "all, or comma-separated kind names")->capture_default_str();
    verify->add_option("--max-n", spec.gen.max_n, "Maximum number of poles")->capture_default_str();
    verify->add_option("--k-min", spec.gen.k_range.lo)->capture_default_str();
    verify->add_option("--k-max", spec.gen.k_range.hi)->capture_default_str();
    verify->add_option("--pole-min", spec.gen.pole_radius_range.lo, "Minimum pole modulus")->capture_default_str();
    verify->add_option("--pole-max", spec.gen.pole_radius_range.hi, "Maximum pole modulus")->capture_default_str();
    verify->add_flag("--force-s", spec.gen.force_s_positive, "Every instance has a zero at the origin");
    verify->add_flag("--force-m-eq-n", spec.gen.force_m_equals_n, "Every instance has m = n");
    verify->add_option("--threads", spec.threads, "Worker threads (0: all cores)");
    add_output(verify);

    auto* scan = app.add_subcommand("scan", "Per-angle table for one instance");
    scan->add_option("--zero", spec.zeros, "Non-origin zero re,im (repeatable)");
    scan->add_option("--pole", spec.poles, "Pole re,im (repeatable)");
    scan->add_option("--leading", spec.leading, "Leading coefficient re,im")->capture_default_str();
    scan->add_option("--s", spec.origin_order, "Order of the zero at the origin")->capture_default_str();
    scan->add_option("--k", spec.k, "Zero-radius bound")->capture_default_str();
    scan->add_option("--rows", spec.rows, "Number of angles")->capture_default_str();
    scan->add_option("--kinds", spec.kinds, "all (every applicable kind) or comma-separated names");
    add_output(scan);

    auto* extremal = app.add_subcommand("extremal", "Equality cases over the parameter grid");
    extremal->add_option("--tolerance", spec.tolerance, "Relative tolerance on |lhs - rhs|")->capture_default_str();
    add_output(extremal);

    app.add_subcommand("selftest", "Harness self-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (verify->parsed()) return detail::cmd_verify(spec, out, err);
        if (scan->parsed()) return detail::cmd_scan(spec, out, err);
        if (extremal->parsed()) return detail::cmd_extremal(spec, out, err);
        return detail::cmd_selftest(out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace turan::cli
