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

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "maskcheck/exact.hpp"

namespace maskcheck {

using Complex = std::complex<double>;

// Classification tolerances (float mode).
inline constexpr double kRealClassifyTol = 1e-8;  // |Im z| <= tol * (1 + |Re z|)
inline constexpr double kMinusOneTol = 1e-8;      // |z + 1| <= tol
inline constexpr double kUnitRootGap = 1e-12;     // reject |z - 1| below this
inline constexpr double kDefaultTol = 1e-9;

/// Multiset of roots of the algebraic polynomial P; multiplicity by
/// repetition. Roots equal to 1 are rejected outright: the canonical form
/// P(z) = prod (z - z_i)/(1 - z_i) divides by (1 - z_i), and a root too
/// close to 1 makes the normalization meaningless (conditioning error).
///
/// When every root was supplied as a rational literal the exact coordinates
/// are kept alongside the double ones and criteria run in exact arithmetic.
class RootSet {
public:
    static RootSet from_complex(std::vector<Complex> roots);
    static RootSet from_real(const std::vector<double>& roots);
    static RootSet from_exact(std::vector<RationalPoint> roots);

    /// Parses root literals ("-1", "1/2", "0.25", "1+2i"). All literals are
    /// rational, so the result always carries exact coordinates.
    static RootSet parse(const std::vector<std::string>& literals);

    const std::vector<Complex>& roots() const { return roots_; }
    const std::optional<std::vector<RationalPoint>>& exact() const { return exact_; }

    std::size_t degree() const { return roots_.size(); }
    bool all_real() const;
    bool has_minus_one() const;

    /// Real parts, in root order. Requires all_real().
    std::vector<double> real_parts() const;

    RootSet appended(Complex extra) const;

private:
    RootSet(std::vector<Complex> roots, std::optional<std::vector<RationalPoint>> exact);
    void validate() const;

    std::vector<Complex> roots_;
    std::optional<std::vector<RationalPoint>> exact_;
};

/// Coefficients c_0..c_n of P in ascending powers, normalized to P(1) = 1,
/// plus the exponent shift N of m0(xi) = P(e^{-2 pi i xi}) e^{-2 pi i xi max{-N,0}}.
struct MaskCoefficients {
    std::vector<Complex> coeffs;
    int offset = 0;
    std::optional<std::vector<RationalPoint>> exact;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool real_coefficients(double tol = kRealClassifyTol) const;
};

/// First-degree trig-polynomial coefficients of one root factor:
/// psi_{z0}(e^{i phi}) = f1 + f2 cos phi + f3 sin phi.
struct FactorCoefficients {
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;
};

/// The three factor coefficients (F1, F2, F3) at x = Re z0, y = Im z0.
/// Throws std::domain_error for z0 = 1.
FactorCoefficients factor_coefficients(Complex z0);

struct RationalFactor {
    Rational f1, f2, f3;
};
RationalFactor factor_coefficients_exact(const RationalPoint& z0);

/// a_i = F1(x_i, 0) = (x_i^2 + 1)/(x_i - 1)^2 for every (real) root.
/// Throws std::domain_error on a non-real root or a root at 1.
std::vector<double> alpha_values(const RootSet& roots);
std::vector<Rational> alpha_values_exact(const RootSet& roots);

/// Expands prod (z - z_i)/(1 - z_i). Exact coefficients are carried through
/// when the root set has them; the double coefficients are then their
/// correctly rounded values.
MaskCoefficients polynomial_from_roots(const RootSet& roots);

/// m0(xi). |result| is 1-periodic in xi.
Complex evaluate_mask(const MaskCoefficients& mask, double xi);

/// P evaluated by Horner at an arbitrary point.
Complex evaluate_polynomial(const std::vector<Complex>& coeffs, Complex z);

}  // namespace maskcheck
