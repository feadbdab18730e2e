// Copyright 2026 The maskcheck authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maskcheck/mask.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maskcheck {
namespace {

bool nearly_real(Complex z) { return std::abs(z.imag()) <= kRealClassifyTol * (1.0 + std::abs(z.real())); }

Complex to_complex(const RationalPoint& p) { return {to_double(p.re), to_double(p.im)}; }

}  // namespace

RootSet::RootSet(std::vector<Complex> roots, std::optional<std::vector<RationalPoint>> exact)
    : roots_(std::move(roots)), exact_(std::move(exact)) {
    validate();
}

void RootSet::validate() const {
    double log_norm = 0.0;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        if (exact_) {
            const RationalPoint& p = (*exact_)[i];
            if (p.is_real() && p.re == 1) throw std::domain_error("root set: root at z = 1 is not allowed");
        }
        double gap = std::abs(roots_[i] - Complex(1.0, 0.0));
        if (gap < kUnitRootGap) throw std::domain_error("root set: root too close to z = 1 (ill-conditioned normalization)");
        log_norm += std::log(gap);
    }
    // prod |1 - z_i| must stay representable; otherwise P(1)=1 normalization
    // silently produces garbage.
    if (log_norm < std::log(1e-300)) throw std::domain_error("root set: prod(1 - z_i) underflows (conditioning error)");
}

RootSet RootSet::from_complex(std::vector<Complex> roots) { return RootSet(std::move(roots), std::nullopt); }

RootSet RootSet::from_real(const std::vector<double>& roots) {
    std::vector<Complex> zs(roots.begin(), roots.end());
    return RootSet(std::move(zs), std::nullopt);
}

RootSet RootSet::from_exact(std::vector<RationalPoint> roots) {
    std::vector<Complex> zs;
    zs.reserve(roots.size());
    for (const auto& p : roots) zs.push_back(to_complex(p));
    return RootSet(std::move(zs), std::move(roots));
}

RootSet RootSet::parse(const std::vector<std::string>& literals) {
    std::vector<RationalPoint> pts;
    pts.reserve(literals.size());
    for (const auto& text : literals) {
        auto p = parse_rational_complex(text);
        if (!p) throw std::invalid_argument("cannot parse root literal: '" + text + "'");
        pts.push_back(std::move(*p));
    }
    return from_exact(std::move(pts));
}

bool RootSet::all_real() const {
    if (exact_) {
        for (const auto& p : *exact_)
            if (!p.is_real()) return false;
        return true;
    }
    for (Complex z : roots_)
        if (!nearly_real(z)) return false;
    return true;
}

bool RootSet::has_minus_one() const {
    if (exact_) {
        for (const auto& p : *exact_)
            if (p.is_real() && p.re == -1) return true;
        return false;
    }
    for (Complex z : roots_)
        if (std::abs(z - Complex(-1.0, 0.0)) <= kMinusOneTol) return true;
    return false;
}

std::vector<double> RootSet::real_parts() const {
    if (!all_real()) throw std::domain_error("root set: non-real root where a real one is required");
    std::vector<double> xs;
    xs.reserve(roots_.size());
    for (Complex z : roots_) xs.push_back(z.real());
    return xs;
}

RootSet RootSet::appended(Complex extra) const {
    std::vector<Complex> zs = roots_;
    zs.push_back(extra);
    // exact coordinates survive only for exactly representable extras
    if (exact_ && extra.imag() == 0.0 && extra.real() == std::floor(extra.real())) {
        auto pts = *exact_;
        pts.push_back(RationalPoint{Rational(static_cast<long>(extra.real())), Rational(0)});
        return RootSet(std::move(zs), std::move(pts));
    }
    return RootSet(std::move(zs), std::nullopt);
}

bool MaskCoefficients::real_coefficients(double tol) const {
    for (Complex c : coeffs)
        if (std::abs(c.imag()) > tol * (1.0 + std::abs(c.real()))) return false;
    return true;
}

FactorCoefficients factor_coefficients(Complex z0) {
    const double x = z0.real();
    const double y = z0.imag();
    const double d = (x - 1.0) * (x - 1.0) + y * y;
    if (d == 0.0) throw std::domain_error("factor_coefficients: z0 = 1");
    return {1.0 + 2.0 * x / d, -2.0 * x / d, -2.0 * y / d};
}

RationalFactor factor_coefficients_exact(const RationalPoint& z0) {
    Rational dx = z0.re - 1;
    Rational d = dx * dx + z0.im * z0.im;
    if (sgn(d) == 0) throw std::domain_error("factor_coefficients: z0 = 1");
    Rational f2 = Rational(-2) * z0.re / d;
    Rational f3 = Rational(-2) * z0.im / d;
    Rational f1 = Rational(1) - f2;
    f1.canonicalize();
    f2.canonicalize();
    f3.canonicalize();
    return {f1, f2, f3};
}

std::vector<double> alpha_values(const RootSet& roots) {
    if (!roots.all_real()) throw std::domain_error("alpha_values: all roots must be real");
    std::vector<double> a;
    a.reserve(roots.degree());
    for (Complex z : roots.roots()) {
        const double x = z.real();
        const double d = (x - 1.0) * (x - 1.0);
        if (d == 0.0) throw std::domain_error("alpha_values: root at 1");
        a.push_back((x * x + 1.0) / d);
    }
    return a;
}

std::vector<Rational> alpha_values_exact(const RootSet& roots) {
    if (!roots.exact()) throw std::domain_error("alpha_values_exact: root set has no exact coordinates");
    if (!roots.all_real()) throw std::domain_error("alpha_values: all roots must be real");
    std::vector<Rational> a;
    a.reserve(roots.degree());
    for (const auto& p : *roots.exact()) {
        Rational dx = p.re - 1;
        Rational d = dx * dx;
        if (sgn(d) == 0) throw std::domain_error("alpha_values: root at 1");
        Rational v = (p.re * p.re + 1) / d;
        v.canonicalize();
        a.push_back(std::move(v));
    }
    return a;
}

MaskCoefficients polynomial_from_roots(const RootSet& roots) {
    MaskCoefficients mask;
    if (roots.exact()) {
        std::vector<RationalPoint> coeffs{RationalPoint{Rational(1), Rational(0)}};
        RationalPoint norm{Rational(1), Rational(0)};
        for (const auto& z : *roots.exact()) {
            // multiply by (w - z)
            std::vector<RationalPoint> next(coeffs.size() + 1, RationalPoint{Rational(0), Rational(0)});
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                next[j + 1].re += coeffs[j].re;
                next[j + 1].im += coeffs[j].im;
                next[j].re -= coeffs[j].re * z.re - coeffs[j].im * z.im;
                next[j].im -= coeffs[j].re * z.im + coeffs[j].im * z.re;
            }
            coeffs = std::move(next);
            // norm *= (1 - z)
            RationalPoint one_minus{Rational(1) - z.re, -z.im};
            RationalPoint n2{norm.re * one_minus.re - norm.im * one_minus.im,
                             norm.re * one_minus.im + norm.im * one_minus.re};
            norm = std::move(n2);
        }
        Rational norm_abs2 = norm.re * norm.re + norm.im * norm.im;
        if (sgn(norm_abs2) == 0) throw std::domain_error("polynomial_from_roots: root at 1");
        std::vector<RationalPoint> normalized;
        normalized.reserve(coeffs.size());
        mask.coeffs.reserve(coeffs.size());
        for (auto& c : coeffs) {
            // c / norm = c * conj(norm) / |norm|^2
            Rational re = (c.re * norm.re + c.im * norm.im) / norm_abs2;
            Rational im = (c.im * norm.re - c.re * norm.im) / norm_abs2;
            re.canonicalize();
            im.canonicalize();
            mask.coeffs.emplace_back(to_double(re), to_double(im));
            normalized.push_back(RationalPoint{std::move(re), std::move(im)});
        }
        mask.exact = std::move(normalized);
        return mask;
    }

    std::vector<Complex> coeffs{Complex(1.0, 0.0)};
    Complex norm(1.0, 0.0);
    for (Complex z : roots.roots()) {
        std::vector<Complex> next(coeffs.size() + 1, Complex(0.0, 0.0));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] += coeffs[j];
            next[j] -= coeffs[j] * z;
        }
        coeffs = std::move(next);
        norm *= (Complex(1.0, 0.0) - z);
    }
    if (norm == Complex(0.0, 0.0)) throw std::domain_error("polynomial_from_roots: root at 1");
    for (Complex& c : coeffs) c /= norm;
    mask.coeffs = std::move(coeffs);
    return mask;
}

Complex evaluate_polynomial(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * z + coeffs[j];
    return acc;
}

Complex evaluate_mask(const MaskCoefficients& mask, double xi) {
    const double theta = -2.0 * std::numbers::pi * xi;
    const Complex z = std::polar(1.0, theta);
    Complex value = evaluate_polynomial(mask.coeffs, z);
    const int shift = std::max(-mask.offset, 0);
    if (shift != 0) value *= std::polar(1.0, theta * static_cast<double>(shift));
    return value;
}

}  // namespace maskcheck
