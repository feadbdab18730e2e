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

#include "maskcheck/table_format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace maskcheck {

DifferenceTableRun divided_difference_run(const std::vector<double>& roots) {
    DifferenceTableRun run;
    const int n = static_cast<int>(roots.size());
    run.n = n;
    run.roots = roots;

    std::vector<double> x(n + 1, 0.0);
    std::vector<double> a(n + 1, 0.0);
    std::vector<double> sigma(n + 1, 1.0);
    for (int i = 1; i <= n; ++i) {
        x[i] = roots[static_cast<std::size_t>(i - 1)];
        a[i] = 1.0 + 2.0 * x[i] / ((x[i] - 1.0) * (x[i] - 1.0));
    }

    // Newton recursion with std::pow power sums, in reference order.
    for (int k = 1; k <= n; ++k) {
        double sum_j = 0.0;
        for (int j = 0; j <= k - 1; ++j) {
            double pkj = 0.0;
            for (int l = 1; l <= n; ++l) pkj += std::pow(a[l], k - j);
            sum_j += std::pow(-1.0, k - j - 1) * sigma[j] * pkj;
        }
        sigma[k] = sum_j / static_cast<double>(k);
    }

    std::vector<std::vector<double>> c(n + 1, std::vector<double>(n + 1, 1.0));
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];

    std::vector<double> ro(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) ro[k] = sigma[k] / c[n][k];

    std::vector<std::vector<double>> delta(n + 1, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i <= n; ++i) delta[0][i] = ro[i];
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) delta[i][j] = delta[i - 1][j] - delta[i - 1][j - 1];

    bool is_done = true;
    for (int k = 0; k <= n / 2; ++k)
        if (delta[2 * k][n] < 0.0) is_done = false;

    run.a.assign(a.begin() + 1, a.end());
    run.sigma = std::move(sigma);
    run.rho = std::move(ro);
    run.delta = std::move(delta);
    run.criterion_holds = is_done;
    return run;
}

std::string format_shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

std::string format_sci17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return std::string(buf);
}

std::string render_difference_table(const DifferenceTableRun& run, bool compat) {
    std::string out;
    const int n = run.n;
    for (int i = 0; i <= n; ++i) {
        const int first = compat ? 0 : i;
        for (int j = first; j <= n; ++j) {
            out += format_shortest(run.delta[i][j]);
            out += ' ';
        }
        out += '\n';
    }
    out += run.criterion_holds ? "[TRUE] The inequality holds" : "[FALSE] The criteria doesn't answer";
    out += '\n';
    return out;
}

}  // namespace maskcheck
