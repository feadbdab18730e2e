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

#include "maskcheck/mask.hpp"
#include "maskcheck/symmetric.hpp"
#include "maskcheck/verdict.hpp"

namespace maskcheck {

/// Sufficient condition for arbitrary degree: HOLDS when every even
/// difference Delta^{2k} rho_{n-2k} is nonnegative, INCONCLUSIVE otherwise
/// (with the first violated k as witness). Never FAILS. Requires all roots
/// real and at least one equal to -1.
Verdict theorem_criterion(const RootSet& roots, const CheckOptions& opts = {});

/// HOLDS iff every root is <= 0 (same preconditions as theorem_criterion);
/// INCONCLUSIVE otherwise.
Verdict corollary_nonpositive(const RootSet& roots, const CheckOptions& opts = {});

/// Exact criterion for degree 2 with roots {-1, z2}: HOLDS iff z2 is real
/// and <= 0, FAILS otherwise.
Verdict prop1_degree2(Complex z2, const CheckOptions& opts = {});
Verdict prop1_degree2_exact(const RationalPoint& z2);

/// Exact criterion for degree 3 with roots {-1, z1, z2}: HOLDS iff
/// 1 - A1 A2 - B1 B2 >= 0 and B1 + B2 = 0 (A_i = F1(z_i), B_i = F3(z_i)).
Verdict prop2_degree3(Complex z1, Complex z2, const CheckOptions& opts = {});
Verdict prop2_degree3_exact(const RationalPoint& z1, const RationalPoint& z2);

/// Real-root specialization of the degree-3 criterion: HOLDS iff
/// x1 x2 (x1 + x2 - 2) + x1 + x2 <= 0.
Verdict corollary1_degree3_real(double x1, double x2, const CheckOptions& opts = {});
Verdict corollary1_degree3_real_exact(const Rational& x1, const Rational& x2);

/// Picks the most specific criterion for the root set's degree and reality
/// pattern: missing -1 root -> FAILS outright (T(0) > 1); degree 2 and 3 get
/// their exact criteria; everything else real runs the even-difference
/// condition with the nonpositive-roots check as a second chance. Root sets
/// with complex roots of degree >= 4 have no criterion and come back
/// INCONCLUSIVE with method "none".
Verdict criterion_for(const RootSet& roots, const CheckOptions& opts = {});

/// Difference-triangle bundle for a real root set, double or exact.
SymmetricTable<double> symmetric_table(const RootSet& roots);
SymmetricTable<Rational> symmetric_table_exact(const RootSet& roots);

}  // namespace maskcheck
