#pragma once

// Test-only reference computations. Nothing here calls into the evaluation
// paths it is used to check.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// Σ c_j z^j with explicit powers.
inline Complex power_sum(const std::vector<Complex>& c, Complex z) {
    Complex acc{};
    for (std::size_t j = 0; j < c.size(); ++j) acc += c[j] * std::pow(z, static_cast<int>(j));
    return acc;
}

/// Central difference of an analytic f along the real direction.
inline Complex central_difference(const std::function<Complex(Complex)>& f, Complex z, double h = 1e-5) {
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

/// f′(z) for analytic f at z = e^{iθ}, from the tangential difference quotient along the circle.
inline Complex circle_difference(const std::function<Complex(Complex)>& f, double theta, double h = 1e-5) {
    const Complex z = std::polar(1.0, theta);
    const Complex d = (f(std::polar(1.0, theta + h)) - f(std::polar(1.0, theta - h))) / (2.0 * h);
    return d / (Complex{0.0, 1.0} * z);
}

struct BruteExtrema {
    double max = 0.0;
    double argmax = 0.0;
    double min = 0.0;
    double argmin = 0.0;
};

/// |f| on `samples` equispaced points of |z| = radius.
inline BruteExtrema brute_force_circle(const std::function<Complex(Complex)>& f, double radius,
                                       int samples = 1'000'000) {
    BruteExtrema out{-1.0, 0.0, std::numeric_limits<double>::infinity(), 0.0};
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * std::numbers::pi * i / samples;
        const double v = std::abs(f(std::polar(radius, t)));
        if (v > out.max) out.max = v, out.argmax = t;
        if (v < out.min) out.min = v, out.argmin = t;
    }
    return out;
}

/// Rational function from zero/pole lists evaluated as a plain product quotient.
inline Complex product_quotient(Complex lead, int s, const std::vector<Complex>& zeros,
                                const std::vector<Complex>& poles, Complex z) {
    Complex num = lead * std::pow(z, s);
    for (auto b : zeros) num *= (z - b);
    Complex den{1.0};
    for (auto a : poles) den *= (z - a);
    return num / den;
}

inline Complex random_in_disk(std::mt19937_64& g, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(radius * std::sqrt(u(g)), 2.0 * std::numbers::pi * u(g));
}

inline Complex random_in_annulus(std::mt19937_64& g, double lo, double hi) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(lo + (hi - lo) * u(g), 2.0 * std::numbers::pi * u(g));
}

inline double random_angle(std::mt19937_64& g) {
    return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(g);
}

} // namespace oracle
