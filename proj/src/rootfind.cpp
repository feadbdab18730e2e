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

#include "maskcheck/rootfind.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace maskcheck {
namespace {

Complex derivative_at(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = coeffs.size(); j-- > 1;) acc = acc * z + static_cast<double>(j) * coeffs[j];
    return acc;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("polynomial_roots: empty coefficient vector");
    const std::size_t n = coeffs.size() - 1;
    if (n == 0) return {};
    if (std::abs(coeffs.back()) == 0.0) throw std::invalid_argument("polynomial_roots: leading coefficient is zero");

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const Complex lead = coeffs.back();
    for (std::size_t i = 0; i + 1 < n; ++i) companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -coeffs[i] / lead;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("polynomial_roots: eigen solver failed");

    double norm2 = 0.0;
    for (const Complex& c : coeffs) norm2 += std::norm(c);
    const double residual_cap = 1e-8 * std::sqrt(norm2);

    std::vector<Complex> roots;
    roots.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex z = solver.eigenvalues()(static_cast<Eigen::Index>(i));
        for (int it = 0; it < 3; ++it) {
            const Complex p = evaluate_polynomial(coeffs, z);
            const Complex dp = derivative_at(coeffs, z);
            if (std::abs(dp) == 0.0) break;
            const Complex step = p / dp;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            const Complex next = z - step;
            if (std::abs(evaluate_polynomial(coeffs, next)) < std::abs(p)) z = next;
        }
        if (std::abs(evaluate_polynomial(coeffs, z)) > residual_cap)
            throw std::runtime_error("polynomial_roots: residual check failed");
        roots.push_back(z);
    }
    return roots;
}

namespace {

// P(z) / (z - r) by Horner; call only when P(r) is negligible.
std::vector<Complex> deflate(const std::vector<Complex>& coeffs, Complex r) {
    const std::size_t n = coeffs.size() - 1;
    std::vector<Complex> q(n);
    Complex carry = coeffs[n];
    for (std::size_t j = n; j-- > 0;) {
        q[j] = carry;
        carry = coeffs[j] + r * carry;
    }
    return q;
}

}  // namespace

RootSet roots_from_coefficients(const std::vector<Complex>& coeffs) {
    if (coeffs.size() < 2) throw std::invalid_argument("roots_from_coefficients: need degree >= 1");

    // Roots at 0 and -1 are read off the coefficients and deflated first:
    // a multiple root turns into a wide eigenvalue cluster of the companion
    // matrix (radius ~ eps^(1/m)) and would evade the -1 detection tolerance.
    std::vector<Complex> work = coeffs;
    std::size_t zeros = 0, minus_ones = 0;
    auto norm2 = [](const std::vector<Complex>& c) {
        double acc = 0.0;
        for (const Complex& v : c) acc += std::norm(v);
        return std::sqrt(acc);
    };
    while (work.size() > 1 && std::abs(work.front()) <= kMinusOneTol * norm2(work)) {
        work.erase(work.begin());
        ++zeros;
    }
    while (work.size() > 1 &&
           std::abs(evaluate_polynomial(work, Complex(-1.0, 0.0))) <= kMinusOneTol * norm2(work)) {
        work = deflate(work, Complex(-1.0, 0.0));
        ++minus_ones;
    }

    std::vector<Complex> roots(zeros, Complex(0.0, 0.0));
    roots.insert(roots.end(), minus_ones, Complex(-1.0, 0.0));
    for (Complex z : polynomial_roots(work)) {
        if (std::abs(z.imag()) <= kRealClassifyTol * (1.0 + std::abs(z.real()))) z = Complex(z.real(), 0.0);
        roots.push_back(z);
    }
    return RootSet::from_complex(std::move(roots));
}

}  // namespace maskcheck
