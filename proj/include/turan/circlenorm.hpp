#pragma once

// Maximum and minimum of |f| over a circle |z| = radius: dense angular grid,
// then golden-section refinement of every grid-local extremum.

#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polycore.hpp"
#include "rational.hpp"

namespace turan {

inline constexpr int default_grid = 4096;
inline constexpr double default_angle_tol = 1e-10;

struct CircleExtremum {
    double value = 0.0;
    double at_angle = 0.0;  // radians, [0, 2π)
    double radius = 1.0;
    int samples_used = 0;

    [[nodiscard]] Complex point() const { return std::polar(radius, at_angle); }
};

namespace detail {

inline double wrap_angle(double t) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0;
    return t;
}

// sign = +1 maximises |f|, sign = −1 minimises it; everything is phrased as maximisation of sign·|f|.
template <class F>
CircleExtremum circle_extremum(F&& f, double radius, int grid, double tol, double sign) {
    if (!(radius > 0.0)) throw DomainError("circle extremum: radius must be positive");
    if (grid < 64) throw DomainError("circle extremum: grid must be at least 64");
    if (!(tol > 0.0)) throw DomainError("circle extremum: tolerance must be positive");

    int evals = 0;
    auto score = [&](double theta) {
        ++evals;
        const double v = std::abs(f(std::polar(radius, theta)));
        if (!std::isfinite(v)) throw PoleProximityError("circle extremum: pole on circle");
        return sign * v;
    };

    const double step = 2.0 * std::numbers::pi / grid;
    std::vector<double> samples(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) samples[static_cast<std::size_t>(i)] = score(step * i);

    double best_score = samples[0];
    double best_theta = 0.0;
    double lo = samples[0], hi = samples[0];
    for (int i = 0; i < grid; ++i) {
        const double v = samples[static_cast<std::size_t>(i)];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        if (v > best_score) {
            best_score = v;
            best_theta = step * i;
        }
    }

    // flat |f|: nothing to refine
    if (hi - lo <= 1e-15 * std::max(std::abs(hi), std::abs(lo))) return {sign * best_score, 0.0, radius, evals};

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto refine = [&](double a, double b) {
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = score(c), fd = score(d);
        double top = std::max(fc, fd), top_t = fc >= fd ? c : d;
        while (b - a > tol) {
            if (fc >= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = score(c);
                if (fc > top) top = fc, top_t = c;
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = score(d);
                if (fd > top) top = fd, top_t = d;
            }
        }
        return std::pair{top, top_t};
    };

    for (int i = 0; i < grid; ++i) {
        const double v = samples[static_cast<std::size_t>(i)];
        const double prev = samples[static_cast<std::size_t>((i + grid - 1) % grid)];
        const double next = samples[static_cast<std::size_t>((i + 1) % grid)];
        if (v < prev || v < next) continue;
        const auto [val, theta] = refine(step * (i - 1), step * (i + 1));
        // strict improvement only, so the lowest angle wins ties
        if (val > best_score + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(best_score)) {
            best_score = val;
            best_theta = theta;
        }
    }
    return {sign * best_score, wrap_angle(best_theta), radius, evals};
}

} // namespace detail

/// max |f| over |z| = radius.
template <std::invocable<Complex> F>
CircleExtremum sup_on_circle(F&& f, double radius = 1.0, int grid = default_grid, double tol = default_angle_tol) {
    return detail::circle_extremum(std::forward<F>(f), radius, grid, tol, 1.0);
}

/// min |f| over |z| = radius.
template <std::invocable<Complex> F>
CircleExtremum min_on_circle(F&& f, double radius = 1.0, int grid = default_grid, double tol = default_angle_tol) {
    return detail::circle_extremum(std::forward<F>(f), radius, grid, tol, -1.0);
}

namespace detail {

inline void require_no_pole_on_circle(const PoleSet& poles, double radius) {
    for (const auto& a : poles.poles())
        if (std::abs(std::abs(a) - radius) <= 1e-9)
            throw PoleProximityError("circle extremum: pole on circle (a = " + format_complex(a) + ")");
}

} // namespace detail

inline CircleExtremum sup_on_circle(const RationalFn& r, double radius = 1.0, int grid = default_grid,
                                    double tol = default_angle_tol) {
    detail::require_no_pole_on_circle(r.poleset(), radius);
    return sup_on_circle([&r](Complex z) { return eval_r(r, z); }, radius, grid, tol);
}

inline CircleExtremum min_on_circle(const RationalFn& r, double radius = 1.0, int grid = default_grid,
                                    double tol = default_angle_tol) {
    detail::require_no_pole_on_circle(r.poleset(), radius);
    return min_on_circle([&r](Complex z) { return eval_r(r, z); }, radius, grid, tol);
}

/// ‖p‖ on |z| = radius for a polynomial in root form.
inline CircleExtremum sup_on_circle(const RootForm& p, double radius = 1.0, int grid = default_grid,
                                    double tol = default_angle_tol) {
    return sup_on_circle([&p](Complex z) { return eval_rootform(p, z); }, radius, grid, tol);
}

} // namespace turan
