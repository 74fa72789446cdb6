#pragma once

// Machine-readable reports: JSON for sweeps and the extremal suite, CSV for
// per-angle scans. Report schema version is `report_schema_version`.

#include <cstdio>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "circlenorm.hpp"
#include "genverify.hpp"

namespace turan {

inline constexpr int report_schema_version = 1;

using Json = nlohmann::ordered_json;

/// %.17g: lossless for doubles.
inline std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline Json record_json(const PointRecord& p, std::uint64_t seed) {
    return Json{{"seed", seed},       {"instance", p.instance}, {"point", p.point},
                {"angle", p.angle},   {"lhs", p.lhs},           {"rhs", p.rhs},
                {"margin", p.margin}, {"normalized_margin", p.normalized}};
}

inline Json config_json(const GenConfig& c) {
    return Json{{"max_n", c.max_n},
                {"k_range", {c.k_range.lo, c.k_range.hi}},
                {"pole_radius_range", {c.pole_radius_range.lo, c.pole_radius_range.hi}},
                {"force_s_positive", c.force_s_positive},
                {"force_m_equals_n", c.force_m_equals_n},
                {"seed", c.seed}};
}

inline Json extremal_row_json(const ExtremalRow& r) {
    Json j{{"kind", to_string(r.kind)}, {"n", r.n}, {"m", r.m}, {"s", r.s}, {"k", r.k}, {"a", r.a}};
    if (r.h) j["h"] = *r.h;
    if (r.alpha) j["alpha"] = *r.alpha;
    j["angle"] = r.angle;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["rel_error"] = r.rel_error;
    j["expected_sharp"] = r.expected_sharp;
    j["within_tolerance"] = r.within;
    return j;
}

} // namespace detail

inline Json to_json(const VerificationReport& rep, std::string_view command) {
    Json j{{"schema_version", report_schema_version}, {"command", command}};
    if (command == "verify") {
        j["config"] = detail::config_json(rep.config);
        j["instances"] = rep.instances;
        j["points_per_instance"] = rep.points_per_instance;
        j["slack"] = rep.slack;
        j["total_violations"] = rep.total_violations();
        Json kinds = Json::array();
        for (const auto& k : rep.kinds) {
            Json e{{"kind", to_string(k.kind)},
                   {"instances_applicable", k.instances_applicable},
                   {"checks", k.checks},
                   {"violations", k.violations}};
            e["worst"] = k.worst ? detail::record_json(*k.worst, rep.config.seed) : Json(nullptr);
            Json samples = Json::array();
            for (const auto& v : k.violation_samples) samples.push_back(detail::record_json(v, rep.config.seed));
            e["violation_samples"] = std::move(samples);
            kinds.push_back(std::move(e));
        }
        j["kinds"] = std::move(kinds);
        if (rep.ordering_checked) {
            const auto& o = rep.ordering;
            j["ordering"] = Json{{"checks", o.checks},
                                 {"violations", o.violations},
                                 {"strict_instances", o.strict_instances},
                                 {"strict_failures", o.strict_failures},
                                 {"min_thm31_minus_thm23", o.min_thm31_minus_thm23},
                                 {"min_cor32_fixed_minus_thm23", o.min_cor32_fixed_minus_thm23}};
        }
    }
    if (!rep.equality.empty()) {
        Json rows = Json::array();
        for (const auto& r : rep.equality) rows.push_back(detail::extremal_row_json(r));
        j["equality"] = Json{{"tolerance", rep.equality_tolerance}, {"passed", rep.equality_passed()}, {"rows", rows}};
    }
    j["passed"] = rep.passed();
    return j;
}

inline std::string to_csv(const VerificationReport& rep, std::string_view command) {
    std::ostringstream os;
    if (command == "verify") {
        os << "seed,kind,instances_applicable,checks,violations,worst_normalized_margin,worst_instance,worst_point,"
              "worst_angle\n";
        for (const auto& k : rep.kinds) {
            os << rep.config.seed << ',' << to_string(k.kind) << ',' << k.instances_applicable << ',' << k.checks << ','
               << k.violations << ',';
            if (k.worst)
                os << format_real(k.worst->normalized) << ',' << k.worst->instance << ',' << k.worst->point << ','
                   << format_real(k.worst->angle);
            else
                os << ",,,";
            os << '\n';
        }
    } else {
        os << "kind,n,m,s,k,a,h,alpha,angle,lhs,rhs,rel_error,expected_sharp,within_tolerance\n";
        for (const auto& r : rep.equality) {
            os << to_string(r.kind) << ',' << r.n << ',' << r.m << ',' << r.s << ',' << format_real(r.k) << ','
               << format_real(r.a) << ',' << (r.h ? format_real(*r.h) : "") << ','
               << (r.alpha ? format_real(*r.alpha) : "") << ',' << format_real(r.angle) << ',' << format_real(r.lhs)
               << ',' << format_real(r.rhs) << ',' << format_real(r.rel_error) << ',' << (r.expected_sharp ? 1 : 0)
               << ',' << (r.within ? 1 : 0) << '\n';
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// per-angle scan of a single instance

struct ScanTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Rows at angles 2πj/rows: |r|, |r′|, |B′| and, per kind, the bound and its margin.
inline ScanTable scan_instance(const RationalFn& r, std::span<const BoundKind> kinds, int rows) {
    if (rows < 1) throw DomainError("scan: rows must be >= 1");
    for (auto kind : kinds)
        if (auto why = hypothesis_violation(kind, r)) throw HypothesisError(std::string(to_string(kind)) + ": " + *why);

    NormData unit, on_k;
    unit.sup_norm = sup_on_circle(r).value;
    unit.mprime = min_on_circle(r, 1.0).value;
    on_k.mprime = min_on_circle(r, r.k()).value;
    const double sup_p = sup_on_circle(r.numerator()).value;

    ScanTable t;
    t.columns = {"angle", "abs_r", "abs_r_prime", "abs_B_prime"};
    for (auto kind : kinds) {
        t.columns.push_back("rhs_" + std::string(to_string(kind)));
        t.columns.push_back("margin_" + std::string(to_string(kind)));
    }
    const Blaschke b(r.poleset());
    for (int j = 0; j < rows; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / rows;
        const Complex z = std::polar(1.0, theta);
        std::vector<double> row{theta, std::abs(eval_r(r, z)), std::abs(eval_r_prime(r, z)), abs_B_prime_on_circle(b, z)};
        for (auto kind : kinds) {
            NormData norms = kind == BoundKind::Thm3_2 ? on_k : unit;
            if (traits(kind).polynomial) norms.sup_norm = sup_p;
            const Margin mg = check_point(kind, r, z, norms);
            row.push_back(mg.rhs);
            row.push_back(mg.margin);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline std::string to_csv(const ScanTable& t) {
    std::ostringstream os;
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_real(row[c]);
        os << '\n';
    }
    return os.str();
}

inline Json to_json(const ScanTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json e = Json::object();
        for (std::size_t c = 0; c < row.size(); ++c) e[t.columns[c]] = row[c];
        rows.push_back(std::move(e));
    }
    return Json{{"schema_version", report_schema_version}, {"command", "scan"}, {"columns", t.columns}, {"rows", rows}};
}

} // namespace turan
