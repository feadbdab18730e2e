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

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "maskcheck/exact.hpp"

namespace maskcheck {

namespace detail {

template <class R>
R from_integer(const Integer& z) {
    if constexpr (std::is_same_v<R, double>) {
        return z.get_d();
    } else {
        return R(z);
    }
}

}  // namespace detail

template <class R>
R scalar_binomial(unsigned n, unsigned k) {
    return detail::from_integer<R>(binomial(n, k));
}

/// sigma_0..sigma_n of the values a_1..a_n: the coefficients defined by the
/// Newton recursion sigma_k = (1/k) sum_{j=0}^{k-1} (-1)^{k-j-1} sigma_j p_{k-j}
/// with power sums p_m = sum_i a_i^m, equal to the subset sums
/// sum_{|S|=k} prod_{j in S} a_j. Empty input yields {1}.
///
/// Exact arithmetic runs the recursion verbatim. The double instantiation
/// expands prod (1 + a_i t) instead: the power sums grow like (max a_i)^n
/// and their alternating combination cancels catastrophically once a root
/// sits near 1, while the expansion adds only nonnegative terms for the
/// positive a-values this pipeline produces.
template <class R>
std::vector<R> newton_sigmas(const std::vector<R>& a) {
    const std::size_t n = a.size();
    std::vector<R> sigma(n + 1, R(0));
    sigma[0] = R(1);
    if (n == 0) return sigma;

    if constexpr (std::is_same_v<R, double>) {
        std::size_t used = 0;
        for (double v : a) {
            ++used;
            for (std::size_t k = used; k >= 1; --k) sigma[k] += v * sigma[k - 1];
        }
        return sigma;
    } else {
        // power sums p_1..p_n
        std::vector<R> power(a.begin(), a.end());
        std::vector<R> psum(n + 1, R(0));
        for (std::size_t m = 1; m <= n; ++m) {
            R s = R(0);
            for (std::size_t i = 0; i < n; ++i) {
                if (m > 1) power[i] = power[i] * a[i];
                s += power[i];
            }
            psum[m] = s;
        }

        for (std::size_t k = 1; k <= n; ++k) {
            R acc = R(0);
            for (std::size_t j = 0; j < k; ++j) {
                R term = sigma[j] * psum[k - j];
                if ((k - j - 1) % 2 == 0) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            sigma[k] = acc / R(static_cast<int>(k));
        }
        return sigma;
    }
}

/// Full (n+1) x (n+1) backward-difference table of rho. Row 0 is rho itself;
/// diff[i][j] = diff[i-1][j] - diff[i-1][j-1] for j >= i, zero below.
/// diff[2k][n] is Delta^{2k} rho_{n-2k}.
template <class R>
std::vector<std::vector<R>> difference_table(const std::vector<R>& rho) {
    const std::size_t n = rho.empty() ? 0 : rho.size() - 1;
    std::vector<std::vector<R>> diff(n + 1, std::vector<R>(n + 1, R(0)));
    for (std::size_t j = 0; j <= n && j < rho.size(); ++j) diff[0][j] = rho[j];
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) diff[i][j] = diff[i - 1][j] - diff[i - 1][j - 1];
    return diff;
}

/// a-values, elementary symmetric polynomials, symmetric means and the
/// difference triangle in one bundle.
template <class R>
struct SymmetricTable {
    std::vector<R> a;
    std::vector<R> sigma;
    std::vector<R> rho;
    std::vector<std::vector<R>> diff;

    std::size_t order() const { return a.size(); }

    /// Delta^{2k} rho_{n-2k}
    const R& delta(std::size_t k) const {
        const std::size_t n = order();
        if (2 * k > n) throw std::out_of_range("SymmetricTable::delta: 2k exceeds n");
        return diff[2 * k][n];
    }

    static SymmetricTable build(std::vector<R> a_values) {
        SymmetricTable t;
        t.a = std::move(a_values);
        t.sigma = newton_sigmas(t.a);
        const std::size_t n = t.a.size();
        t.rho.reserve(n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            t.rho.push_back(t.sigma[k] / scalar_binomial<R>(static_cast<unsigned>(n), static_cast<unsigned>(k)));
        t.diff = difference_table(t.rho);
        return t;
    }
};

}  // namespace maskcheck
