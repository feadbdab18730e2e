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

#include <vector>

#include "maskcheck/mask.hpp"
#include "maskcheck/verdict.hpp"

namespace maskcheck {

inline constexpr int kDefaultCascadeDepth = 24;
inline constexpr std::size_t kDefaultCascadeGrid = 1024;
inline constexpr double kDefaultCascadeRange = 8.0;

/// Samples of the truncated infinite product prod_{j=1}^{J} m0(xi / 2^j).
struct PhiHatSamples {
    std::vector<double> xi_grid;
    std::vector<Complex> values;
    int truncation_depth = 0;
};

std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

/// Truncated refinement product on a frequency grid. Factors whose argument
/// is exactly zero contribute m0(0) = 1 by the P(1) = 1 precondition, so
/// phi_hat(0) is exactly 1 at every depth.
/// Throws std::invalid_argument when |P(1) - 1| > tol.
PhiHatSamples phi_hat(const MaskCoefficients& mask, const std::vector<double>& xi_grid, int depth,
                      double tol = kDefaultTol);

/// 2 pi sum |k c_k|: Lipschitz constant of m0; successive truncations differ
/// by at most max|xi| 2^{-J} times this on a grid.
double mask_lipschitz_constant(const MaskCoefficients& mask);

/// The three preconditions for the infinite product to define an L2
/// refinement function: m0(0) = 1, coefficient decay (automatic for a
/// polynomial mask), and the sub-QMF inequality (delegated to the oracle).
struct MallatReport {
    bool normalized = false;
    bool decay = false;
    Verdict sub_qmf;

    bool pass() const { return normalized && decay && sub_qmf.status == Status::Holds; }
};

MallatReport mallat_preconditions(const MaskCoefficients& mask, double tol = kDefaultTol);

}  // namespace maskcheck
