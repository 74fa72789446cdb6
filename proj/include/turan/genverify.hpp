#pragma once

// Seeded instance generation, verification sweeps over the unit circle,
// the sharpness (extremal) suite and greedy shrinking of violations.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "circlenorm.hpp"
#include "random.hpp"
#include "rational.hpp"

namespace turan {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct GenConfig {
    int max_n = 12;
    Interval k_range{0.1, 1.0};
    Interval pole_radius_range{1.1, 4.0};
    bool force_s_positive = false;
    bool force_m_equals_n = false;
    std::uint64_t seed = 7;

    void validate() const {
        if (max_n < 1) throw DomainError("GenConfig: max_n must be >= 1");
        if (!(k_range.lo > 0.0 && k_range.lo <= k_range.hi && k_range.hi <= 1.0))
            throw DomainError("GenConfig: k_range must be a nonempty subinterval of (0, 1]");
        if (!(pole_radius_range.lo > 1.0 + pole_margin && pole_radius_range.lo <= pole_radius_range.hi))
            throw DomainError("GenConfig: pole_radius_range must be a nonempty subinterval of (1, inf)");
    }
};

/// Draws an instance admissible for Thm3_1 and every rational kind sharing its hypothesis.
inline RationalFn gen_instance(const GenConfig& cfg, CounterRng& rng) {
    cfg.validate();
    const int n = rng.uniform_int(1, cfg.max_n);
    const int m = cfg.force_m_equals_n ? n : rng.uniform_int(cfg.force_s_positive ? 1 : 0, n);
    const int s = cfg.force_s_positive ? rng.uniform_int(1, m) : rng.uniform_int(0, m);
    const double k = rng.uniform(cfg.k_range.lo, cfg.k_range.hi);

    RootForm num;
    num.origin_order = s;
    num.leading = std::polar(rng.uniform(0.5, 2.0), rng.angle());
    for (int j = 0; j < m - s; ++j) {
        const double radius = k * std::sqrt(rng.uniform());
        num.roots.push_back(std::polar(radius, rng.angle()));
    }
    std::vector<Complex> poles;
    for (int j = 0; j < n; ++j)
        poles.push_back(std::polar(rng.uniform(cfg.pole_radius_range.lo, cfg.pole_radius_range.hi), rng.angle()));
    return RationalFn(std::move(num), PoleSet(std::move(poles)), k);
}

/// Instance `index` of the sweep seeded by cfg.seed.
inline RationalFn instance_at(const GenConfig& cfg, std::uint64_t index) {
    CounterRng rng = CounterRng(cfg.seed).split(index);
    return gen_instance(cfg, rng);
}

// ---------------------------------------------------------------------------
// per-instance evaluation

/// Everything needed to evaluate every kind on one instance.
struct InstanceContext {
    RationalFn r;
    std::optional<RootForm> reflected_numerator;  // zeros outside the disk, for Erdős–Lax
    CircleExtremum sup_r, min_r_unit, min_r_k, sup_p;
    std::optional<CircleExtremum> sup_reflected;
    std::vector<double> angles;  // grid points first, then argmax/argmin extras

    explicit InstanceContext(RationalFn rf, int points) : r(std::move(rf)) {
        sup_r = sup_on_circle(r);
        min_r_unit = min_on_circle(r, 1.0);
        min_r_k = min_on_circle(r, r.k());
        sup_p = sup_on_circle(r.numerator());
        const auto& roots = r.numerator().roots;
        if (!r.numerator().is_zero() && std::none_of(roots.begin(), roots.end(), [](Complex b) { return b == Complex{}; })) {
            reflected_numerator = reflected(r.numerator());
            sup_reflected = sup_on_circle(*reflected_numerator);
        }
        for (int j = 0; j < points; ++j) angles.push_back(2.0 * std::numbers::pi * j / points);
        angles.push_back(sup_r.at_angle);
        angles.push_back(min_r_unit.at_angle);
        angles.push_back(sup_p.at_angle);
        if (sup_reflected) angles.push_back(sup_reflected->at_angle);
    }

    [[nodiscard]] bool applicable(BoundKind kind) const {
        if (kind == BoundKind::ErdosLax_1_2)
            return reflected_numerator && !polynomial_hypothesis_violation(kind, *reflected_numerator, 1.0);
        return hypothesis_holds(kind, r);
    }

    [[nodiscard]] Margin check(BoundKind kind, Complex z) const {
        if (kind == BoundKind::ErdosLax_1_2)
            return check_polynomial_point(kind, *reflected_numerator, 1.0, z, {std::nullopt, sup_reflected->value});
        NormData norms;
        switch (traits(kind).scale) {
        case Scale::plus_min: norms.mprime = kind == BoundKind::Thm3_2 ? min_r_k.value : min_r_unit.value; break;
        case Scale::sup_norm: norms.sup_norm = traits(kind).polynomial ? sup_p.value : sup_r.value; break;
        case Scale::pointwise: break;
        }
        return check_point(kind, r, z, norms);
    }
};

/// One point at which a bound was checked; reproducible from (seed, instance, point).
struct PointRecord {
    std::uint64_t instance = 0;
    int point = 0;
    double angle = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double normalized = 0.0;
};

struct KindSummary {
    BoundKind kind = BoundKind::Thm3_1;
    int instances_applicable = 0;
    long checks = 0;
    long violations = 0;
    std::optional<PointRecord> worst{};  // smallest normalized margin
    std::vector<PointRecord> violation_samples{};
};

struct OrderingSummary {
    long checks = 0;
    long violations = 0;
    int strict_instances = 0;  // instances with some |b_j| < k − 1e-6
    int strict_failures = 0;
    double min_thm31_minus_thm23 = std::numeric_limits<double>::infinity();
    double min_cor32_fixed_minus_thm23 = std::numeric_limits<double>::infinity();
};

struct ExtremalRow {
    BoundKind kind = BoundKind::Thm3_1;
    int n = 0, m = 0, s = 0;
    double k = 1.0;
    double a = 0.0;
    std::optional<double> h{};
    std::optional<double> alpha{};
    double angle = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_error = 0.0;  // |lhs − rhs| / lhs
    bool expected_sharp = true;
    bool within = true;
};

struct VerificationReport {
    GenConfig config;
    int instances = 0;
    int points_per_instance = 0;
    double slack = 1e-9;
    std::vector<KindSummary> kinds;
    OrderingSummary ordering;
    bool ordering_checked = false;
    std::vector<ExtremalRow> equality;
    double equality_tolerance = 1e-8;

    [[nodiscard]] long total_violations() const {
        long v = 0;
        for (const auto& k : kinds) v += k.violations;
        return v;
    }

    [[nodiscard]] const KindSummary* find(BoundKind kind) const {
        for (const auto& k : kinds)
            if (k.kind == kind) return &k;
        return nullptr;
    }

    [[nodiscard]] bool equality_passed() const {
        return std::all_of(equality.begin(), equality.end(), [](const ExtremalRow& r) { return !r.expected_sharp || r.within; });
    }

    [[nodiscard]] bool passed() const {
        return total_violations() == 0 && (!ordering_checked || (ordering.violations == 0 && ordering.strict_failures == 0)) &&
               equality_passed();
    }
};

struct SweepOptions {
    int instances = 1000;
    int points = 256;
    std::vector<BoundKind> kinds{all_kinds.begin(), all_kinds.end()};
    unsigned threads = 1;
    double slack = 1e-9;
    std::size_t max_violation_samples = 20;
};

namespace detail {

struct KindOutcome {
    bool applicable = false;
    long checks = 0;
    long violations = 0;
    std::optional<PointRecord> worst;
    std::vector<PointRecord> samples;
};

struct InstanceOutcome {
    std::vector<KindOutcome> kinds;
    OrderingSummary ordering;
    bool ordering_checked = false;
};

inline InstanceOutcome evaluate_instance(const RationalFn& r, std::uint64_t index, const SweepOptions& opt) {
    const InstanceContext ctx(r, opt.points);
    InstanceOutcome out;
    out.kinds.resize(opt.kinds.size());
    for (std::size_t q = 0; q < opt.kinds.size(); ++q) {
        const BoundKind kind = opt.kinds[q];
        auto& ko = out.kinds[q];
        if (!ctx.applicable(kind)) continue;
        ko.applicable = true;
        for (std::size_t j = 0; j < ctx.angles.size(); ++j) {
            const Margin mg = ctx.check(kind, std::polar(1.0, ctx.angles[j]));
            const PointRecord rec{index, static_cast<int>(j), ctx.angles[j], mg.lhs, mg.rhs, mg.margin, mg.normalized()};
            ++ko.checks;
            if (!ko.worst || rec.normalized < ko.worst->normalized) ko.worst = rec;
            if (!mg.satisfied(opt.slack)) {
                ++ko.violations;
                if (ko.samples.size() < opt.max_violation_samples) ko.samples.push_back(rec);
            }
        }
    }
    if (hypothesis_holds(BoundKind::Thm3_1, r)) {
        out.ordering_checked = true;
        auto& o = out.ordering;
        bool strict_seen = false, strict_failed = false;
        for (double theta : ctx.angles) {
            const OrderingReport rep = check_ordering_claims(r, std::polar(1.0, theta));
            ++o.checks;
            if (!rep.holds) ++o.violations;
            strict_seen = strict_seen || rep.strict_expected;
            strict_failed = strict_failed || !rep.strict_holds;
            o.min_thm31_minus_thm23 = std::min(o.min_thm31_minus_thm23, rep.thm31_minus_thm23);
            o.min_cor32_fixed_minus_thm23 = std::min(o.min_cor32_fixed_minus_thm23, rep.cor32_fixed_minus_thm23);
        }
        o.strict_instances = strict_seen ? 1 : 0;
        o.strict_failures = strict_failed ? 1 : 0;
    }
    return out;
}

} // namespace detail

/// Generates `opt.instances` instances from cfg.seed and checks every requested kind at
/// `opt.points` equispaced circle points plus the argmax/argmin points of |r|, |p| and |p*|.
/// The report does not depend on opt.threads.
inline VerificationReport verify_sweep(const GenConfig& cfg, const SweepOptions& opt) {
    cfg.validate();
    if (opt.instances < 1) throw DomainError("verify_sweep: instances must be >= 1");
    if (opt.points < 8) throw DomainError("verify_sweep: points must be >= 8");

    std::vector<detail::InstanceOutcome> outcomes(static_cast<std::size_t>(opt.instances));
    auto work = [&](unsigned worker, unsigned workers) {
        for (std::size_t i = worker; i < outcomes.size(); i += workers)
            outcomes[i] = detail::evaluate_instance(instance_at(cfg, i), i, opt);
    };
    const unsigned workers = std::max(1u, opt.threads);
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
    }

    VerificationReport rep;
    rep.config = cfg;
    rep.instances = opt.instances;
    rep.points_per_instance = opt.points;
    rep.slack = opt.slack;
    for (auto kind : opt.kinds) rep.kinds.push_back(KindSummary{.kind = kind});
    for (const auto& out : outcomes) {
        for (std::size_t q = 0; q < opt.kinds.size(); ++q) {
            const auto& ko = out.kinds[q];
            auto& ks = rep.kinds[q];
            if (!ko.applicable) continue;
            ++ks.instances_applicable;
            ks.checks += ko.checks;
            ks.violations += ko.violations;
            if (ko.worst && (!ks.worst || ko.worst->normalized < ks.worst->normalized)) ks.worst = ko.worst;
            for (const auto& v : ko.samples)
                if (ks.violation_samples.size() < opt.max_violation_samples) ks.violation_samples.push_back(v);
        }
        if (out.ordering_checked) {
            rep.ordering_checked = true;
            auto& o = rep.ordering;
            o.checks += out.ordering.checks;
            o.violations += out.ordering.violations;
            o.strict_instances += out.ordering.strict_instances;
            o.strict_failures += out.ordering.strict_failures;
            o.min_thm31_minus_thm23 = std::min(o.min_thm31_minus_thm23, out.ordering.min_thm31_minus_thm23);
            o.min_cor32_fixed_minus_thm23 =
                std::min(o.min_cor32_fixed_minus_thm23, out.ordering.min_cor32_fixed_minus_thm23);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// extremal instances

/// z^s (z + k)^{m−s} / (z − a)^n, equality case of Thm3_1 and Cor3_2 at z = 1.
inline RationalFn turan_extremal(int n, int m, int s, double k, double a) {
    RootForm num{1.0, std::vector<Complex>(static_cast<std::size_t>(m - s), Complex{-k}), s};
    return RationalFn(std::move(num), PoleSet(std::vector<Complex>(static_cast<std::size_t>(n), Complex{a})), k);
}

/// B(z) + h e^{iα} for B with an n-fold pole at a, in root form.
/// Zeros solve ((1 − āz)/(z − a))^n = −c, i.e. z = (1 + ζa)/(ζ + ā) for each n-th root ζ of −c.
inline RationalFn blaschke_plus_constant(int n, Complex a, double h, double alpha) {
    const Complex c = std::polar(h, alpha);
    RootForm num;
    num.leading = std::pow(-std::conj(a), n) + c;
    const double base_arg = std::arg(-c);
    for (int j = 0; j < n; ++j) {
        const Complex zeta = std::polar(std::pow(h, 1.0 / n), (base_arg + 2.0 * std::numbers::pi * j) / n);
        num.roots.push_back((1.0 + zeta * a) / (zeta + std::conj(a)));
    }
    return RationalFn(std::move(num), PoleSet(std::vector<Complex>(static_cast<std::size_t>(n), a)), 1.0);
}

/// Equality instances over the parameter grid; each row records lhs, rhs and the relative gap.
/// Rows for the printed Cor3_2 are expected sharp only where its exponent agrees with m − s.
inline VerificationReport extremal_suite(double tolerance = 1e-8) {
    VerificationReport rep;
    rep.equality_tolerance = tolerance;
    const Complex one{1.0};
    for (int n = 1; n <= 6; ++n)
        for (int m = 0; m <= n; ++m)
            for (int s = 0; s <= m; ++s)
                for (double k : {0.25, 0.5, 1.0})
                    for (double a : {1.5, 2.0, 4.0}) {
                        const RationalFn r = turan_extremal(n, m, s, k, a);
                        for (auto kind : {BoundKind::Thm3_1, BoundKind::Cor3_2_exponent_fixed, BoundKind::Cor3_2}) {
                            const Margin mg = check_point(kind, r, one);
                            ExtremalRow row{.kind = kind, .n = n, .m = m, .s = s, .k = k, .a = a};
                            row.lhs = mg.lhs;
                            row.rhs = mg.rhs;
                            row.rel_error = std::abs(mg.lhs - mg.rhs) / mg.lhs;
                            row.expected_sharp = kind != BoundKind::Cor3_2 || s == 0 || m == 0 || k == 1.0;
                            row.within = row.rel_error <= tolerance;
                            rep.equality.push_back(row);
                        }
                    }

    for (int n = 1; n <= 6; ++n)
        for (double a : {1.5, 2.0, 4.0})
            for (double h : {0.25, 1.0})
                for (double alpha : {0.0, std::numbers::pi / 3.0}) {
                    const RationalFn r = blaschke_plus_constant(n, a, h, alpha);
                    const CircleExtremum top = sup_on_circle(r);
                    const CircleExtremum bottom = min_on_circle(r, 1.0);
                    const Margin mg = check_point(BoundKind::Thm2_1, r, top.point(), {bottom.value, std::nullopt});
                    ExtremalRow row{.kind = BoundKind::Thm2_1, .n = n, .m = n, .s = 0, .k = 1.0, .a = a, .h = h, .alpha = alpha,
                                    .angle = top.at_angle};
                    row.lhs = mg.lhs;
                    row.rhs = mg.rhs;
                    row.rel_error = std::abs(mg.lhs - mg.rhs) / mg.lhs;
                    row.within = row.rel_error <= tolerance;
                    rep.equality.push_back(row);
                }
    return rep;
}

// ---------------------------------------------------------------------------
// shrinking

using ViolationPredicate = std::function<bool(const RationalFn&)>;

/// True when `kind` is violated somewhere on the instance's sweep points.
inline ViolationPredicate violates(BoundKind kind, int points = 64, double slack = 1e-9) {
    return [=](const RationalFn& r) {
        try {
            const InstanceContext ctx(r, points);
            if (!ctx.applicable(kind)) return false;
            for (double theta : ctx.angles)
                if (!ctx.check(kind, std::polar(1.0, theta)).satisfied(slack)) return true;
        } catch (const Error&) {
            return false;
        }
        return false;
    };
}

struct ShrinkResult {
    RationalFn instance;
    bool input_violated = false;  // false: input returned unchanged
    int accepted_steps = 0;
};

namespace detail {

inline std::vector<RationalFn> shrink_candidates(const RationalFn& r) {
    std::vector<RationalFn> out;
    const RootForm& num = r.numerator();
    const auto& poles = r.poleset().poles();
    auto with = [&](RootForm nr, std::vector<Complex> np) {
        try {
            out.emplace_back(std::move(nr), PoleSet(std::move(np)), r.k());
        } catch (const Error&) {
        }
    };
    if (r.n() > 1 && r.m() <= r.n() - 1) with(num, {poles.begin(), poles.end() - 1});
    if (!num.roots.empty()) {
        RootForm nr = num;
        nr.roots.pop_back();
        with(nr, poles);
    }
    if (num.origin_order > 0) {
        RootForm nr = num;
        --nr.origin_order;
        with(nr, poles);
    }
    if (num.leading != Complex{1.0}) {
        RootForm nr = num;
        nr.leading = 1.0;
        with(nr, poles);
    }
    double biggest = 0.0;
    for (const auto& b : num.roots) biggest = std::max(biggest, std::abs(b));
    if (biggest > 1e-3) {
        RootForm nr = num;
        for (auto& b : nr.roots) b *= 0.5;
        with(nr, poles);
    }
    for (std::size_t j = 0; j < poles.size(); ++j) {
        if (poles[j] == Complex{2.0}) continue;
        auto np = poles;
        np[j] = 2.0;
        with(num, np);
    }
    return out;
}

} // namespace detail

/// Greedy reduction: fewer poles and zeros, zeros pulled toward 0, poles moved to 2,
/// accepting each step only while `still_violates` holds. Deterministic.
inline ShrinkResult shrink(const RationalFn& start, const ViolationPredicate& still_violates, int max_steps = 500) {
    ShrinkResult res{start, still_violates(start), 0};
    if (!res.input_violated) return res;
    bool progressed = true;
    while (progressed && res.accepted_steps < max_steps) {
        progressed = false;
        for (auto& cand : detail::shrink_candidates(res.instance)) {
            if (still_violates(cand)) {
                res.instance = std::move(cand);
                ++res.accepted_steps;
                progressed = true;
                break;
            }
        }
    }
    return res;
}

/// Shrinks the violation of `kind` recorded for instance `index` of a sweep over `cfg`.
inline ShrinkResult shrink(const GenConfig& cfg, std::uint64_t index, BoundKind kind, int points = 64) {
    return shrink(instance_at(cfg, index), violates(kind, points));
}

/// Harness self-test predicate: Thm3_1 read with the inequality flipped, which
/// any instance with |r′(1)| > F(1)|r(1)| "violates".
inline ViolationPredicate flipped_inequality_predicate() {
    return [](const RationalFn& r) {
        if (!hypothesis_holds(BoundKind::Thm3_1, r)) return false;
        const Margin mg = check_point(BoundKind::Thm3_1, r, Complex{1.0});
        return mg.lhs > mg.rhs + 1e-9;
    };
}

} // namespace turan
