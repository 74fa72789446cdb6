#pragma once

// Dense complex polynomials, root-form products and the two transforms the
// rational-function machinery is built on (conjugate reciprocal, polar derivative).

#include <algorithm>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace turan {

using Complex = std::complex<double>;

/// Dense polynomial c_0 + c_1 z + ... + c_d z^d. Trailing zero coefficients are
/// stripped on construction, so the zero polynomial has an empty coefficient list.
class Polynomial {
public:
    /// degree() of the zero polynomial.
    static constexpr int minus_infinity = std::numeric_limits<int>::min();

    Polynomial() = default;

    explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial monomial(int power, Complex c = 1.0) {
        std::vector<Complex> v(static_cast<std::size_t>(power) + 1, Complex{});
        v.back() = c;
        return Polynomial(std::move(v));
    }

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }

    [[nodiscard]] int degree() const noexcept {
        return coeffs_.empty() ? minus_infinity : static_cast<int>(coeffs_.size()) - 1;
    }

    [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^j; zero beyond the degree.
    [[nodiscard]] Complex coeff(std::size_t j) const noexcept {
        return j < coeffs_.size() ? coeffs_[j] : Complex{};
    }

    [[nodiscard]] Complex leading() const noexcept { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

    /// Horner evaluation.
    [[nodiscard]] Complex operator()(Complex z) const noexcept {
        Complex acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
    }

    std::vector<Complex> coeffs_;
};

inline Complex eval_poly(const Polynomial& p, Complex z) noexcept { return p(z); }

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> v(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.coeff(j) + b.coeff(j);
    return Polynomial(std::move(v));
}

inline Polynomial operator*(Complex c, const Polynomial& p) {
    std::vector<Complex> v(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Complex> v(a.coeffs().size() + b.coeffs().size() - 1, Complex{});
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Polynomial(std::move(v));
}

inline Polynomial derivative(const Polynomial& p) {
    if (p.degree() <= 0) return {};
    std::vector<Complex> v(p.coeffs().size() - 1);
    for (std::size_t j = 1; j < p.coeffs().size(); ++j) v[j - 1] = static_cast<double>(j) * p.coeffs()[j];
    return Polynomial(std::move(v));
}

/// z^origin_order · leading · Π (z − roots[j]).
/// A zero `leading` is accepted and stands for the identically zero function.
struct RootForm {
    Complex leading{1.0};
    std::vector<Complex> roots;
    int origin_order = 0;

    /// Total number of zeros, origin included (the "m" of the bounds).
    [[nodiscard]] int zero_count() const noexcept { return origin_order + static_cast<int>(roots.size()); }

    [[nodiscard]] bool is_zero() const noexcept { return leading == Complex{}; }

    /// |constant term of the non-origin factor| = |leading| · Π |b_j|.
    [[nodiscard]] double abs_factor_constant() const noexcept {
        double acc = std::abs(leading);
        for (const auto& b : roots) acc *= std::abs(b);
        return acc;
    }
};

inline Complex eval_rootform(const RootForm& rf, Complex z) noexcept {
    Complex acc = rf.leading;
    for (int i = 0; i < rf.origin_order; ++i) acc *= z;
    for (const auto& b : rf.roots) acc *= (z - b);
    return acc;
}

/// Coefficient form by multiplying in one linear factor at a time.
inline Polynomial expand(const RootForm& rf) {
    if (rf.is_zero()) return {};
    std::vector<Complex> c{rf.leading};
    c.reserve(rf.roots.size() + 1);
    for (const auto& b : rf.roots) {
        c.push_back(Complex{});
        for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - b * c[j];
        c[0] = -b * c[0];
    }
    c.insert(c.begin(), static_cast<std::size_t>(rf.origin_order), Complex{});
    return Polynomial(std::move(c));
}

/// q(z) = z^n · conj(p(1/z̄)): coefficients reversed up to index n and conjugated.
inline Polynomial conj_reciprocal(const Polynomial& p, int n) {
    if (n < 0 || p.degree() > n) throw DomainError("conj_reciprocal: degree(p) exceeds n");
    if (p.is_zero()) return {};
    std::vector<Complex> v(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = std::conj(p.coeff(static_cast<std::size_t>(n - j)));
    return Polynomial(std::move(v));
}

/// D_α p = n·p + (α − z)·p′, degree ≤ n − 1.
inline Polynomial polar_derivative(const Polynomial& p, int n, Complex alpha) {
    if (n < 0 || p.degree() > n) throw DomainError("polar_derivative: degree(p) exceeds n");
    if (n == 0 || p.is_zero()) return {};
    const double nd = static_cast<double>(n);
    std::vector<Complex> v(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double jd = static_cast<double>(j);
        v[j] = (nd - jd) * p.coeff(j) + alpha * (jd + 1.0) * p.coeff(j + 1);
    }
    return Polynomial(std::move(v));
}

} // namespace turan
