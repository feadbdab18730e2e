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

#include "maskcheck/cascade.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "maskcheck/trig.hpp"

namespace maskcheck {

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
    if (count == 0) return {};
    if (count == 1 || lo == hi) return {lo};
    std::vector<double> xs(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) xs[i] = lo + step * static_cast<double>(i);
    return xs;
}

PhiHatSamples phi_hat(const MaskCoefficients& mask, const std::vector<double>& xi_grid, int depth, double tol) {
    if (depth < 1) throw std::invalid_argument("phi_hat: depth must be >= 1");
    const Complex at_one = evaluate_polynomial(mask.coeffs, Complex(1.0, 0.0));
    if (std::abs(at_one - Complex(1.0, 0.0)) > tol)
        throw std::invalid_argument("phi_hat: mask is not normalized (P(1) != 1)");

    PhiHatSamples out;
    out.xi_grid = xi_grid;
    out.truncation_depth = depth;
    out.values.reserve(xi_grid.size());
    for (double xi : xi_grid) {
        Complex acc(1.0, 0.0);
        for (int j = 1; j <= depth; ++j) {
            const double arg = std::ldexp(xi, -j);
            if (arg == 0.0) break;  // remaining factors are m0(0) = 1
            acc *= evaluate_mask(mask, arg);
        }
        out.values.push_back(acc);
    }
    return out;
}

double mask_lipschitz_constant(const MaskCoefficients& mask) {
    double acc = 0.0;
    for (std::size_t k = 0; k < mask.coeffs.size(); ++k) acc += static_cast<double>(k) * std::abs(mask.coeffs[k]);
    return 2.0 * std::numbers::pi * acc;
}

MallatReport mallat_preconditions(const MaskCoefficients& mask, double tol) {
    MallatReport report;
    const Complex at_one = evaluate_polynomial(mask.coeffs, Complex(1.0, 0.0));
    report.normalized = std::abs(at_one - Complex(1.0, 0.0)) <= tol;
    report.decay = true;  // finitely many taps
    if (report.normalized) {
        report.sub_qmf = sub_qmf_check(mask, tol);
    } else {
        report.sub_qmf.status = Status::Inconclusive;
        report.sub_qmf.method = "oracle";
        report.sub_qmf.margin = 0.0;
    }
    return report;
}

}  // namespace maskcheck
