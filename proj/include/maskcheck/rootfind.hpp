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

namespace maskcheck {

/// Roots of c_0 + c_1 z + ... + c_n z^n via the companion matrix, polished
/// by Newton steps. Every root must satisfy |P(z_i)| <= 1e-8 ||coeffs||_2
/// or std::runtime_error is thrown. Leading zero coefficients are rejected;
/// the constant polynomial has no roots.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

/// Root recovery for coefficient input: finds the roots and classifies
/// z as real when |Im z| <= 1e-8 (1 + |Re z|), snapping classified roots to
/// the real axis. The result carries no exact coordinates (float mode).
RootSet roots_from_coefficients(const std::vector<Complex>& coeffs);

}  // namespace maskcheck
