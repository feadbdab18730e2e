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

#include <string>
#include <vector>

namespace maskcheck {

/// One run of the classic table-form validation: a-values and symmetric
/// polynomials through std::pow-based power sums, binomials by Pascal
/// recursion, symmetric means, and the full (n+1) x (n+1) difference table
/// (zeros below the diagonal). criterion_holds is the strict sign check
/// delta[2k][n] >= 0 for every k <= n/2.
///
/// The arithmetic follows the reference algorithm operation by operation so
/// the rendered table is reproducible bit for bit.
struct DifferenceTableRun {
    int n = 0;
    std::vector<double> roots;                // x_1..x_n
    std::vector<double> a;                    // a_1..a_n
    std::vector<double> sigma;                // sigma_0..sigma_n
    std::vector<double> rho;                  // rho_0..rho_n
    std::vector<std::vector<double>> delta;   // full square table
    bool criterion_holds = false;
};

DifferenceTableRun divided_difference_run(const std::vector<double>& roots);

/// Shortest round-trip decimal rendering (17 significant digits at most).
std::string format_shortest(double value);

/// Fixed 17-significant-digit rendering for CSV output.
std::string format_sci17(double value);

/// Renders the table plus the verdict line. Compatibility mode prints the
/// full square including the zero padding, one trailing space per cell,
/// exactly like the reference transcript; default mode prints only the
/// meaningful triangle (row i, columns i..n).
std::string render_difference_table(const DifferenceTableRun& run, bool compat);

}  // namespace maskcheck
