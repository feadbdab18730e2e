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

#include <optional>
#include <vector>

#include "maskcheck/mask.hpp"
#include "maskcheck/verdict.hpp"

namespace maskcheck {

/// T(phi) = |P(z)|^2 + |P(-z)|^2 on z = e^{i phi}: a real, pi-periodic trig
/// polynomial carrying only even harmonics,
///   T(phi) = c_0 + sum_{l>=1} c_l cos(2 l phi) + s_l sin(2 l phi).
struct SubQmfPolynomial {
    std::vector<double> cos_coeffs;  // c_0..c_L
    std::vector<double> sin_coeffs;  // s_0..s_L with s_0 = 0

    std::size_t harmonics() const { return cos_coeffs.empty() ? 0 : cos_coeffs.size() - 1; }

    double evaluate(double phi) const;
    double derivative(double phi) const;

    /// T(0) = sum of cosine coefficients.
    double value_at_zero() const;

    /// sum (|c_l| + |s_l|); used for rounding slack estimates.
    double coefficient_scale() const;

    /// True when every sine coefficient is negligible against the scale
    /// (real-rooted masks give a pure cosine expansion).
    bool cosine_only(double tol = 1e-12) const;
};

/// Result of the grid scan: an estimate of max T plus a rigorous upper
/// bound via the global Lipschitz constant sum 2l (|c_l| + |s_l|):
/// certified_upper_bound = max_estimate + pi * lipschitz_bound / grid_size.
struct CircleMaxCertificate {
    double max_estimate = 0.0;
    double argmax = 0.0;  // in [0, pi)
    double lipschitz_bound = 0.0;
    long grid_size = 0;
    double certified_upper_bound = 0.0;
};

/// Laurent autocorrelation r_{-n}..r_n of the coefficient vector,
/// r_k = sum_j c_{j+k} conj(c_j); |P(e^{i theta})|^2 = sum r_k e^{i k theta}.
/// Index k is stored at position k + n.
std::vector<Complex> autocorrelation(const MaskCoefficients& mask);

/// Builds T from two independent autocorrelations (of P and of P(-z)).
/// Odd-frequency coefficients must cancel; a residue above 1e-12 * scale
/// raises std::logic_error (internal consistency check).
SubQmfPolynomial build_T(const MaskCoefficients& mask);

/// Cosine expansion of T through the symmetric means:
/// d_l = 4 sum_{k=l}^{[n/2]} 2^{-2k} multinomial(n; n-2k, k-l, k+l) Delta^{2k} rho_{n-2k},
/// T = d_0/2 + sum d_l cos(2 l phi). Independent route used to cross-check
/// build_T for real-rooted masks.
SubQmfPolynomial expanded_T_real_roots(const std::vector<double>& a);

/// Uniform scan of [0, pi) with local golden-section refinement at the best
/// point. grid is clamped up to 8 * (harmonics + 1).
CircleMaxCertificate max_on_circle(const SubQmfPolynomial& T, long grid);

/// c_0 + sum sqrt(c_l^2 + s_l^2), outward-rounded: a sharp upper bound for
/// max T, attained exactly when the expansion is cosine-only with
/// nonnegative coefficients.
double coefficient_upper_bound(const SubQmfPolynomial& T);

struct BernsteinBound {
    double bound = 0.0;
    bool conclusive = false;
};

/// For cosine-only T: rewrites T as p(v) = c_0 + sum c_l T_l(v) on
/// v = cos 2phi in [-1, 1] and encloses max p by Bernstein coefficients
/// with de Casteljau subdivision until every piece is below `target`
/// (or the piece budget runs out). Sound up to the included rounding slack.
BernsteinBound bernstein_upper_bound(const SubQmfPolynomial& T, double target);

struct OracleRun {
    Verdict verdict;
    CircleMaxCertificate certificate;
    double coefficient_bound = 0.0;
    std::optional<double> bernstein_bound;
};

/// Decides |P(z)|^2 + |P(-z)|^2 <= 1 on the circle:
/// FAILS as soon as the scan finds T > 1 + tol (witness angle reported);
/// HOLDS when any sound upper bound (coefficient bound, Bernstein enclosure,
/// Lipschitz certificate) drops to 1 + tol; the grid doubles up to 2^20
/// points before giving up with INCONCLUSIVE.
OracleRun run_sub_qmf_oracle(const MaskCoefficients& mask, double tol = kDefaultTol, long initial_grid = 0);

Verdict sub_qmf_check(const MaskCoefficients& mask, double tol = kDefaultTol);

}  // namespace maskcheck
