#pragma once

// Right-hand sides of the Bernstein/Turán-type inequalities for polynomials
// and for rational functions with prescribed poles, their hypotheses, and the
// pointwise margin |r′(z)| − bound on the unit circle.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "polycore.hpp"
#include "rational.hpp"

namespace turan {

enum class BoundKind {
    Bernstein_1_1,
    ErdosLax_1_2,
    Turan_1_3,
    LMR_2_1,
    LMR_2_2_supnorm,
    LMR_2_2_pointwise,
    Thm2_1,
    Thm2_2,
    Thm2_3,
    Thm3_1,
    Cor3_1,
    Cor3_2,
    Cor3_2_exponent_fixed,
    Cor3_3,
    Cor3_4,
    Thm3_2,
};

inline constexpr std::array all_kinds{
    BoundKind::Bernstein_1_1,   BoundKind::ErdosLax_1_2, BoundKind::Turan_1_3, BoundKind::LMR_2_1,
    BoundKind::LMR_2_2_supnorm, BoundKind::LMR_2_2_pointwise, BoundKind::Thm2_1, BoundKind::Thm2_2,
    BoundKind::Thm2_3,          BoundKind::Thm3_1,       BoundKind::Cor3_1,    BoundKind::Cor3_2,
    BoundKind::Cor3_2_exponent_fixed, BoundKind::Cor3_3, BoundKind::Cor3_4,  BoundKind::Thm3_2,
};

inline constexpr std::string_view to_string(BoundKind kind) {
    switch (kind) {
    case BoundKind::Bernstein_1_1: return "Bernstein_1_1";
    case BoundKind::ErdosLax_1_2: return "ErdosLax_1_2";
    case BoundKind::Turan_1_3: return "Turan_1_3";
    case BoundKind::LMR_2_1: return "LMR_2_1";
    case BoundKind::LMR_2_2_supnorm: return "LMR_2_2_supnorm";
    case BoundKind::LMR_2_2_pointwise: return "LMR_2_2_pointwise";
    case BoundKind::Thm2_1: return "Thm2_1";
    case BoundKind::Thm2_2: return "Thm2_2";
    case BoundKind::Thm2_3: return "Thm2_3";
    case BoundKind::Thm3_1: return "Thm3_1";
    case BoundKind::Cor3_1: return "Cor3_1";
    case BoundKind::Cor3_2: return "Cor3_2";
    case BoundKind::Cor3_2_exponent_fixed: return "Cor3_2_exponent_fixed";
    case BoundKind::Cor3_3: return "Cor3_3";
    case BoundKind::Cor3_4: return "Cor3_4";
    case BoundKind::Thm3_2: return "Thm3_2";
    }
    return "?";
}

inline std::optional<BoundKind> parse_kind(std::string_view name) {
    for (auto k : all_kinds)
        if (to_string(k) == name) return k;
    return std::nullopt;
}

enum class Direction { lower, upper };

/// What the factor multiplies: |r(z)|, |r(z)| + m′, or the sup-norm.
enum class Scale { pointwise, plus_min, sup_norm };

struct KindTraits {
    Direction direction;
    Scale scale;
    bool polynomial;
};

inline constexpr KindTraits traits(BoundKind kind) {
    switch (kind) {
    case BoundKind::Bernstein_1_1:
    case BoundKind::ErdosLax_1_2: return {Direction::upper, Scale::sup_norm, true};
    case BoundKind::Turan_1_3:
    case BoundKind::Cor3_4: return {Direction::lower, Scale::pointwise, true};
    case BoundKind::LMR_2_1: return {Direction::upper, Scale::sup_norm, false};
    case BoundKind::LMR_2_2_supnorm: return {Direction::lower, Scale::sup_norm, false};
    case BoundKind::Thm2_1:
    case BoundKind::Thm3_2: return {Direction::lower, Scale::plus_min, false};
    default: return {Direction::lower, Scale::pointwise, false};
    }
}

/// Radius of the circle on which m′ is taken: |z| = 1 for Thm2_1, |z| = k for Thm3_2.
inline double mprime_radius(BoundKind kind, double k) { return kind == BoundKind::Thm3_2 ? k : 1.0; }

/// The printed k^m exponent, or k^{m−s} as produced by the product Π |b_j|/k over the m − s roots.
enum class ExponentVariant { printed, fixed };

struct NormData {
    std::optional<double> mprime;    // min |r| on the kind's m′ circle
    std::optional<double> sup_norm;  // ‖r‖ (or ‖p‖ for polynomial kinds)
};

struct Margin {
    double lhs = 0.0;  // |r′(z)| or |p′(z)|
    double rhs = 0.0;  // the bound at z
    double margin = 0.0;  // lhs − rhs for lower bounds, rhs − lhs for upper bounds
    Complex at_point{};
    BoundKind kind = BoundKind::Thm3_1;
    Direction direction = Direction::lower;

    /// Margin scaled by max(1, lhs), the quantity every tolerance is stated against.
    [[nodiscard]] double normalized() const { return margin / std::max(1.0, lhs); }
    [[nodiscard]] bool satisfied(double slack = 1e-9) const { return normalized() >= -slack; }
};

// ---------------------------------------------------------------------------
// hypotheses

namespace detail {

inline bool zeros_within(const RootForm& p, double radius) {
    return std::all_of(p.roots.begin(), p.roots.end(),
                       [&](Complex b) { return std::abs(b) <= radius * (1.0 + zero_radius_slack); });
}

} // namespace detail

/// Empty if `p` (a polynomial with zero-radius bound k) satisfies the hypothesis of `kind`.
inline std::optional<std::string> polynomial_hypothesis_violation(BoundKind kind, const RootForm& p, double k) {
    if (!traits(kind).polynomial) return std::string(to_string(kind)) + " is not a polynomial bound";
    if (p.is_zero()) return "polynomial is identically zero";
    switch (kind) {
    case BoundKind::Bernstein_1_1: return std::nullopt;
    case BoundKind::ErdosLax_1_2:
        if (p.origin_order > 0) return "zero at origin (Erdos-Lax needs all zeros in |z| >= 1)";
        for (const auto& b : p.roots)
            if (std::abs(b) < 1.0 - zero_radius_slack) return "zero inside unit circle";
        return std::nullopt;
    case BoundKind::Turan_1_3:
        if (!detail::zeros_within(p, 1.0)) return "zero outside closed unit disk";
        return std::nullopt;
    case BoundKind::Cor3_4:
        if (!(k > 0.0 && k <= 1.0)) return "zero-radius bound k outside (0, 1]";
        if (!detail::zeros_within(p, k)) return "zero outside |z| <= k";
        return std::nullopt;
    default: return std::nullopt;
    }
}

/// Empty if `r` satisfies the hypothesis of `kind`; otherwise names the violated condition.
inline std::optional<std::string> hypothesis_violation(BoundKind kind, const RationalFn& r) {
    if (traits(kind).polynomial) return polynomial_hypothesis_violation(kind, r.numerator(), r.k());
    if (r.numerator().is_zero()) return "numerator is identically zero";
    if (r.m() > r.n()) return "more zeros than poles (m > n)";

    switch (kind) {
    case BoundKind::LMR_2_1:
    case BoundKind::LMR_2_2_supnorm: return std::nullopt;
    case BoundKind::LMR_2_2_pointwise:
    case BoundKind::Thm2_1:
        if (!detail::zeros_within(r.numerator(), 1.0)) return "zero outside closed unit disk";
        if (r.m() != r.n()) return "requires exactly n zeros (m = n)";
        return std::nullopt;
    default: break;
    }

    if (auto why = r.inadmissible_reason()) return why;
    if (kind == BoundKind::Cor3_1 && r.m() != r.n()) return "requires m = n";
    if (kind == BoundKind::Cor3_3 && r.s() != 0) return "requires no zero at origin (s = 0)";
    return std::nullopt;
}

inline bool hypothesis_holds(BoundKind kind, const RationalFn& r) { return !hypothesis_violation(kind, r); }

// ---------------------------------------------------------------------------
// right-hand-side factors

namespace detail {

/// Σ over the non-origin zeros of 1/(1 + |b_j|).
inline double reciprocal_sum(const RootForm& p) {
    double acc = 0.0;
    for (const auto& b : p.roots) acc += 1.0 / (1.0 + std::abs(b));
    return acc;
}

/// (k^e |c_m| − |c_s|) / (k^e |c_m| + |c_s|) with c_s the constant term of the non-origin factor.
inline double coefficient_ratio(const RootForm& p, double k, int exponent) {
    const double top = std::pow(k, exponent) * std::abs(p.leading);
    const double cs = p.abs_factor_constant();
    return (top - cs) / (top + cs);
}

} // namespace detail

inline double polynomial_rhs_factor(BoundKind kind, const RootForm& p, double k,
                                    ExponentVariant variant = ExponentVariant::printed) {
    if (auto why = polynomial_hypothesis_violation(kind, p, k))
        throw HypothesisError(std::string(to_string(kind)) + ": " + *why);
    const double d = p.zero_count();
    switch (kind) {
    case BoundKind::Bernstein_1_1: return d;
    case BoundKind::ErdosLax_1_2:
    case BoundKind::Turan_1_3: return d / 2.0;
    case BoundKind::Cor3_4: {
        const int e = variant == ExponentVariant::printed ? p.zero_count() : static_cast<int>(p.roots.size());
        const double t = detail::coefficient_ratio(p, k, e);
        // (n/(k+1)) {1 + sk/n + (k/n) T} multiplied out so n = 0 is well defined
        return (d + p.origin_order * k + k * t) / (k + 1.0);
    }
    default: throw DomainError("polynomial_rhs_factor: not a polynomial kind");
    }
}

/// Multiplier F(z) of the inequality |r′(z)| ≥ F(z)·(scale) (or ≤ for upper-bound kinds).
inline double rhs_factor(BoundKind kind, const RationalFn& r, Complex z) {
    detail::require_on_circle(z, "rhs_factor");
    if (traits(kind).polynomial) return polynomial_rhs_factor(kind, r.numerator(), r.k());
    if (auto why = hypothesis_violation(kind, r)) throw HypothesisError(std::string(to_string(kind)) + ": " + *why);

    const double bp = abs_B_prime_on_circle(Blaschke(r.poleset()), z);
    const double n = r.n(), m = r.m(), s = r.s(), k = r.k();
    const double roots = static_cast<double>(r.numerator().roots.size());  // m − s
    const double bsum = detail::reciprocal_sum(r.numerator());

    switch (kind) {
    case BoundKind::LMR_2_1: return bp;
    case BoundKind::LMR_2_2_supnorm:
    case BoundKind::LMR_2_2_pointwise:
    case BoundKind::Thm2_1: return 0.5 * bp;
    case BoundKind::Thm2_2: return 0.5 * (bp - (n * (1.0 + k) - 2.0 * m) / (1.0 + k));
    case BoundKind::Thm2_3: return 0.5 * (bp - n + 2.0 * (m + s * k) / (1.0 + k));
    case BoundKind::Thm3_1:
        return 0.5 * (bp - n + 2.0 * (m + s * k) / (1.0 + k) + 2.0 * (bsum - roots / (1.0 + k)));
    case BoundKind::Cor3_1:
        return 0.5 * (bp + (n * (1.0 - k) + 2.0 * s * k) / (1.0 + k) + 2.0 * (bsum - (n - s) / (1.0 + k)));
    case BoundKind::Cor3_2:
    case BoundKind::Cor3_2_exponent_fixed: {
        const int e = kind == BoundKind::Cor3_2 ? r.m() : r.m() - r.s();
        const double t = detail::coefficient_ratio(r.numerator(), k, e);
        return 0.5 * (bp - n + 2.0 * (m + s * k) / (1.0 + k) + 2.0 * k / (k + 1.0) * t);
    }
    case BoundKind::Cor3_3: {
        const double t = detail::coefficient_ratio(r.numerator(), k, r.m());
        return 0.5 * (bp - n + 2.0 * m / (1.0 + k) + 2.0 * k / (k + 1.0) * t);
    }
    case BoundKind::Thm3_2: {
        // the sum runs over all m zeros; each origin zero contributes 1/(1 + 0)
        const double all_zeros = s + bsum;
        return 0.5 * (bp + (n * (1.0 - k) - 2.0 * m) / (1.0 + k) + 2.0 * (all_zeros - (n - m) / (1.0 + k)));
    }
    default: throw DomainError("rhs_factor: unhandled kind");
    }
}

// ---------------------------------------------------------------------------
// pointwise checks

namespace detail {

inline double scale_value(BoundKind kind, double pointwise, const NormData& norms) {
    switch (traits(kind).scale) {
    case Scale::pointwise: return pointwise;
    case Scale::plus_min:
        if (!norms.mprime) throw DomainError(std::string(to_string(kind)) + ": m' (min modulus) is required");
        return pointwise + *norms.mprime;
    case Scale::sup_norm:
        if (!norms.sup_norm) throw DomainError(std::string(to_string(kind)) + ": sup-norm is required");
        return *norms.sup_norm;
    }
    return pointwise;
}

inline Margin make_margin(BoundKind kind, double lhs, double rhs, Complex z) {
    const Direction dir = traits(kind).direction;
    return {lhs, rhs, dir == Direction::lower ? lhs - rhs : rhs - lhs, z, kind, dir};
}

} // namespace detail

/// Polynomial bounds (Bernstein, Erdős–Lax, Turán, Cor3_4) at z on the unit circle.
inline Margin check_polynomial_point(BoundKind kind, const RootForm& p, double k, Complex z, const NormData& norms,
                                     ExponentVariant variant = ExponentVariant::printed) {
    detail::require_on_circle(z, "check_polynomial_point");
    const double factor = polynomial_rhs_factor(kind, p, k, variant);
    const double lhs = std::abs(derivative(expand(p))(z));
    const double scale = detail::scale_value(kind, std::abs(eval_rootform(p, z)), norms);
    return detail::make_margin(kind, lhs, factor * scale, z);
}

inline Margin check_point(BoundKind kind, const RationalFn& r, Complex z, const NormData& norms = {}) {
    if (traits(kind).polynomial) return check_polynomial_point(kind, r.numerator(), r.k(), z, norms);
    const double factor = rhs_factor(kind, r, z);
    const double lhs = std::abs(eval_r_prime(r, z));
    const double scale = detail::scale_value(kind, std::abs(eval_r(r, z)), norms);
    return detail::make_margin(kind, lhs, factor * scale, z);
}

/// |p′(z)| ≥ (n/(k+1)){1 + sk/n + (k/n)T}|p(z)| for p = z^s h with h's zeros in |z| ≤ k.
inline Margin polynomial_bound_cor34(const RootForm& h_and_s, double k, Complex z,
                                     ExponentVariant variant = ExponentVariant::printed) {
    return check_polynomial_point(BoundKind::Cor3_4, h_and_s, k, z, {}, variant);
}

/// z^d · conj(p(1/z̄)) in root form: zeros 1/b̄_j, no origin zero. Needs b_j ≠ 0.
inline RootForm reflected(const RootForm& p) {
    RootForm q{std::conj(p.leading), {}, 0};
    q.roots.reserve(p.roots.size());
    for (const auto& b : p.roots) {
        if (b == Complex{}) throw DomainError("reflected: zero root has no reflection");
        q.leading *= -std::conj(b);
        q.roots.push_back(1.0 / std::conj(b));
    }
    return q;
}

// ---------------------------------------------------------------------------
// lemmas

/// Re(z w′(z)/w(z)) − (n − |B′(z)|)/2, identically zero on the unit circle.
inline double lemma42_residual(const PoleSet& ps, Complex z) {
    detail::require_on_circle(z, "lemma42_residual");
    const double lhs = std::real(z * ps.log_derivative(z));
    return lhs - (ps.n() - abs_B_prime_on_circle(Blaschke(ps), z)) / 2.0;
}

enum class SeqDirection { le_one, ge_one };

struct SeqResult {
    double lhs;
    double rhs;
    bool holds;
};

/// Σ (1 − x_j)/(1 + x_j) against (1 − Π x_j)/(1 + Π x_j).
/// le_one (0 ≤ x_j ≤ 1) expects lhs ≥ rhs; ge_one (x_j ≥ 1) expects lhs ≤ rhs.
inline SeqResult seq_inequality(std::span<const double> xs, SeqDirection dir) {
    double lhs = 0.0, prod = 1.0;
    for (double x : xs) {
        if (dir == SeqDirection::le_one && !(x >= 0.0 && x <= 1.0))
            throw DomainError("seq_inequality: le_one requires 0 <= x <= 1");
        if (dir == SeqDirection::ge_one && !(x >= 1.0)) throw DomainError("seq_inequality: ge_one requires x >= 1");
        lhs += (1.0 - x) / (1.0 + x);
        prod *= x;
    }
    double rhs = (1.0 - prod) / (1.0 + prod);
    if (std::isinf(prod)) rhs = -1.0;
    return {lhs, rhs, dir == SeqDirection::le_one ? lhs >= rhs : lhs <= rhs};
}

// ---------------------------------------------------------------------------
// ordering claims and reductions

struct OrderingReport {
    double thm31_minus_thm23 = 0.0;
    double cor32_fixed_minus_thm23 = 0.0;
    bool holds = true;            // both differences ≥ −1e-12
    bool strict_expected = false; // some |b_j| < k − 1e-6
    bool strict_holds = true;     // both differences > 0 when strict_expected
};

inline OrderingReport check_ordering_claims(const RationalFn& r, Complex z) {
    OrderingReport rep;
    const double base = rhs_factor(BoundKind::Thm2_3, r, z);
    rep.thm31_minus_thm23 = rhs_factor(BoundKind::Thm3_1, r, z) - base;
    rep.cor32_fixed_minus_thm23 = rhs_factor(BoundKind::Cor3_2_exponent_fixed, r, z) - base;
    rep.holds = rep.thm31_minus_thm23 >= -1e-12 && rep.cor32_fixed_minus_thm23 >= -1e-12;
    for (const auto& b : r.numerator().roots) rep.strict_expected = rep.strict_expected || std::abs(b) < r.k() - 1e-6;
    rep.strict_holds = !rep.strict_expected || (rep.thm31_minus_thm23 > 0.0 && rep.cor32_fixed_minus_thm23 > 0.0);
    return rep;
}

/// Thm3_1 with s = 0, written out separately.
inline double origin_free_factor(const RationalFn& r, Complex z) {
    if (r.s() != 0) throw HypothesisError("origin_free_factor: requires s = 0");
    const double bp = abs_B_prime_on_circle(Blaschke(r.poleset()), z);
    const double n = r.n(), m = r.m(), k = r.k();
    double sum = 0.0;
    for (const auto& b : r.numerator().roots) sum += 1.0 / (1.0 + std::abs(b));
    return 0.5 * (bp - n + 2.0 * m / (1.0 + k) + 2.0 * (sum - m / (1.0 + k)));
}

/// Cor3_2 at k = 1: ½{|B′| − n + m + s + (|c_m| − |c_s|)/(|c_m| + |c_s|)}.
inline double unit_radius_factor(const RationalFn& r, Complex z) {
    if (r.k() != 1.0) throw HypothesisError("unit_radius_factor: requires k = 1");
    const double bp = abs_B_prime_on_circle(Blaschke(r.poleset()), z);
    const double cm = std::abs(r.numerator().leading);
    const double cs = r.numerator().abs_factor_constant();
    return 0.5 * (bp - r.n() + r.m() + r.s() + (cm - cs) / (cm + cs));
}

} // namespace turan
