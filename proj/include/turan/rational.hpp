#pragma once

// Rational functions r = p / w with prescribed poles outside the closed unit
// disk, and the Blaschke product B = w* / w attached to the same poles.

#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polycore.hpp"

namespace turan {

inline constexpr double pole_margin = 1e-12;        // poles need |a| > 1 + pole_margin
inline constexpr double pole_proximity = 1e-12;     // evaluation refused closer than this to a pole
inline constexpr double on_circle_tolerance = 1e-10;
inline constexpr double zero_radius_slack = 1e-12;  // relative slack on |b_j| <= k

namespace detail {

inline std::string format_complex(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << ',' << z.imag();
    return os.str();
}

inline void require_on_circle(Complex z, const char* what) {
    if (std::abs(std::abs(z) - 1.0) > on_circle_tolerance)
        throw DomainError(std::string(what) + ": point is off the unit circle");
}

} // namespace detail

/// Multiset of prescribed poles, all strictly outside the closed unit disk.
class PoleSet {
public:
    PoleSet() = default;

    explicit PoleSet(std::vector<Complex> poles) : poles_(std::move(poles)) {
        for (const auto& a : poles_) {
            const double mod = std::abs(a);
            if (mod < 1.0)
                throw DomainError("pole inside unit circle (a = " + detail::format_complex(a) + ")");
            if (mod <= 1.0 + pole_margin)
                throw DomainError("pole on unit circle (a = " + detail::format_complex(a) + ")");
        }
    }

    [[nodiscard]] int n() const noexcept { return static_cast<int>(poles_.size()); }
    [[nodiscard]] const std::vector<Complex>& poles() const noexcept { return poles_; }

    void require_not_pole(Complex z) const {
        for (const auto& a : poles_)
            if (std::abs(z - a) <= pole_proximity)
                throw PoleProximityError("evaluation point within 1e-12 of pole " + detail::format_complex(a));
    }

    /// w(z) = Π (z − a_j)
    [[nodiscard]] Complex w(Complex z) const noexcept {
        Complex acc{1.0};
        for (const auto& a : poles_) acc *= (z - a);
        return acc;
    }

    /// w′(z) / w(z) = Σ 1/(z − a_j)
    [[nodiscard]] Complex log_derivative(Complex z) const noexcept {
        Complex acc{};
        for (const auto& a : poles_) acc += 1.0 / (z - a);
        return acc;
    }

    [[nodiscard]] Polynomial w_poly() const { return expand(RootForm{1.0, poles_, 0}); }

    /// w*(z) = z^n conj(w(1/z̄))
    [[nodiscard]] Polynomial w_star_poly() const { return conj_reciprocal(w_poly(), n()); }

private:
    std::vector<Complex> poles_;
};

/// r(z) = numerator(z) / w(z) with zeros restricted to |z| <= k.
///
/// Instances violating the zero restriction can still be built (for negative
/// tests); admissible() reports whether the restriction holds.
class RationalFn {
public:
    RationalFn(RootForm numerator, PoleSet poles, double k = 1.0)
        : num_(std::move(numerator)), poles_(std::move(poles)), k_(k) {
        if (!(k_ > 0.0)) throw DomainError("zero-radius bound k must be positive");
        if (num_.origin_order < 0) throw DomainError("origin order must be nonnegative");
    }

    [[nodiscard]] const RootForm& numerator() const noexcept { return num_; }
    [[nodiscard]] const PoleSet& poleset() const noexcept { return poles_; }
    [[nodiscard]] double k() const noexcept { return k_; }
    [[nodiscard]] int n() const noexcept { return poles_.n(); }
    [[nodiscard]] int m() const noexcept { return num_.zero_count(); }
    [[nodiscard]] int s() const noexcept { return num_.origin_order; }

    [[nodiscard]] Polynomial numerator_poly() const { return expand(num_); }

    /// Empty when the instance is admissible; otherwise names the first violated condition.
    [[nodiscard]] std::optional<std::string> inadmissible_reason() const {
        if (k_ > 1.0) return "zero-radius bound k exceeds 1";
        if (m() > n()) return "more zeros than poles (m > n)";
        for (const auto& b : num_.roots)
            if (std::abs(b) > k_ * (1.0 + zero_radius_slack))
                return "zero " + detail::format_complex(b) + " lies outside |z| <= k";
        return std::nullopt;
    }

    [[nodiscard]] bool admissible() const { return !inadmissible_reason(); }

private:
    RootForm num_;
    PoleSet poles_;
    double k_;
};

/// Blaschke product B(z) = Π (1 − ā_j z)/(z − a_j).
class Blaschke {
public:
    explicit Blaschke(PoleSet poles) : poles_(std::move(poles)) {}

    [[nodiscard]] const PoleSet& poleset() const noexcept { return poles_; }

private:
    PoleSet poles_;
};

inline Complex eval_B(const Blaschke& b, Complex z) {
    b.poleset().require_not_pole(z);
    Complex acc{1.0};
    for (const auto& a : b.poleset().poles()) acc *= (1.0 - std::conj(a) * z) / (z - a);
    return acc;
}

/// B′(z) = Σ_j (|a_j|² − 1)/(z − a_j)² · Π_{i≠j} (1 − ā_i z)/(z − a_i)
inline Complex eval_B_prime(const Blaschke& b, Complex z) {
    b.poleset().require_not_pole(z);
    const auto& poles = b.poleset().poles();
    const std::size_t n = poles.size();
    if (n == 0) return {};
    std::vector<Complex> factor(n);
    for (std::size_t j = 0; j < n; ++j) factor[j] = (1.0 - std::conj(poles[j]) * z) / (z - poles[j]);
    // prefix/suffix products give Π_{i≠j} without division
    std::vector<Complex> prefix(n + 1, Complex{1.0}), suffix(n + 1, Complex{1.0});
    for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] * factor[j];
    for (std::size_t j = n; j > 0; --j) suffix[j - 1] = suffix[j] * factor[j - 1];
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) {
        const Complex d = z - poles[j];
        acc += (std::norm(poles[j]) - 1.0) / (d * d) * prefix[j] * suffix[j + 1];
    }
    return acc;
}

/// |B′(z)| on the unit circle, Σ_j (|a_j|² − 1)/|z − a_j|².
inline double abs_B_prime_on_circle(const Blaschke& b, Complex z) {
    detail::require_on_circle(z, "abs_B_prime_on_circle");
    double acc = 0.0;
    for (const auto& a : b.poleset().poles()) acc += (std::norm(a) - 1.0) / std::norm(z - a);
    return acc;
}

inline Complex eval_r(const RationalFn& r, Complex z) {
    r.poleset().require_not_pole(z);
    return eval_rootform(r.numerator(), z) / r.poleset().w(z);
}

/// Quotient rule on the expanded numerator and denominator.
inline Complex eval_r_prime_quotient(const RationalFn& r, Complex z) {
    r.poleset().require_not_pole(z);
    const Polynomial p = r.numerator_poly();
    const Polynomial w = r.poleset().w_poly();
    const Complex wz = w(z);
    return (derivative(p)(z) * wz - p(z) * derivative(w)(z)) / (wz * wz);
}

/// r(z) · (s/z + Σ 1/(z − b_j) − Σ 1/(z − a_j)); undefined at numerator zeros.
inline Complex eval_r_prime_logarithmic(const RationalFn& r, Complex z) {
    r.poleset().require_not_pole(z);
    const RootForm& num = r.numerator();
    if (num.is_zero()) return {};
    Complex log_d = -r.poleset().log_derivative(z);
    if (num.origin_order > 0) log_d += static_cast<double>(num.origin_order) / z;
    for (const auto& b : num.roots) log_d += 1.0 / (z - b);
    return eval_r(r, z) * log_d;
}

/// r′(z): logarithmic form away from numerator zeros, quotient rule near them.
inline Complex eval_r_prime(const RationalFn& r, Complex z) {
    constexpr double near_zero = 1e-6;
    const RootForm& num = r.numerator();
    bool near = num.origin_order > 0 && std::abs(z) < near_zero;
    for (const auto& b : num.roots) near = near || std::abs(z - b) < near_zero;
    return near ? eval_r_prime_quotient(r, z) : eval_r_prime_logarithmic(r, z);
}

namespace detail {

inline void require_star_domain(const RationalFn& r, Complex z) {
    if (z == Complex{}) throw DomainError("r_star: z = 0");
    const double mod = std::abs(z);
    if (mod < 0.5 || mod > 2.0) throw DomainError("r_star: |z| outside [0.5, 2]");
    r.poleset().require_not_pole(z);
    r.poleset().require_not_pole(1.0 / std::conj(z));
}

} // namespace detail

/// r*(z) = B(z) · conj(r(1/z̄))
inline Complex r_star(const RationalFn& r, Complex z) {
    detail::require_star_domain(r, z);
    const Blaschke b(r.poleset());
    return eval_B(b, z) * std::conj(eval_r(r, 1.0 / std::conj(z)));
}

/// (r*)′(z) = B′(z)·conj(r(1/z̄)) − B(z)·conj(r′(1/z̄)) / z²
inline Complex r_star_prime(const RationalFn& r, Complex z) {
    detail::require_on_circle(z, "r_star_prime");
    detail::require_star_domain(r, z);
    const Blaschke b(r.poleset());
    const Complex u = 1.0 / std::conj(z);
    return eval_B_prime(b, z) * std::conj(eval_r(r, u)) - eval_B(b, z) * std::conj(eval_r_prime(r, u)) / (z * z);
}

} // namespace turan
