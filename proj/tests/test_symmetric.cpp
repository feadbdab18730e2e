#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "maskcheck/mask.hpp"
#include "maskcheck/rng.hpp"
#include "maskcheck/symmetric.hpp"

using namespace maskcheck;

namespace {

// Independent oracle: enumerate all subsets.
template <class R>
std::vector<R> sigma_bruteforce(const std::vector<R>& a) {
    const std::size_t n = a.size();
    std::vector<R> out(n + 1, R(0));
    out[0] = R(1);
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        R prod = R(1);
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (subset >> i & 1u) {
                prod = prod * a[i];
                ++bits;
            }
        }
        out[static_cast<std::size_t>(bits)] += prod;
    }
    return out;
}

// Independent oracle: Delta^{2k} rho_{n-2k} as the closed binomial sum.
double delta_binomial_sum(const std::vector<double>& rho, std::size_t k) {
    const std::size_t n = rho.size() - 1;
    double acc = 0.0;
    for (std::size_t j = n - 2 * k; j <= n; ++j) {
        const double coeff = to_double(binomial(static_cast<unsigned>(2 * k), static_cast<unsigned>(n - j)));
        acc += ((n - j) % 2 == 0 ? 1.0 : -1.0) * coeff * rho[j];
    }
    return acc;
}

}  // namespace

TEST_SUITE_BEGIN("symmetric");

TEST_CASE("newton_sigmas on the pinned examples") {
    auto s = newton_sigmas<double>({0.5, 0.5});
    REQUIRE(s.size() == 3);
    CHECK(s[0] == 1.0);
    CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s[2] == doctest::Approx(0.25).epsilon(1e-15));

    auto t = newton_sigmas<double>({1.0, 2.0, 3.0});
    REQUIRE(t.size() == 4);
    CHECK(t[1] == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(t[2] == doctest::Approx(11.0).epsilon(1e-14));
    CHECK(t[3] == doctest::Approx(6.0).epsilon(1e-14));

    CHECK(newton_sigmas<double>({}) == std::vector<double>{1.0});
}

TEST_CASE("newton_sigmas equals subset enumeration (float, n <= 16)") {
    SplitMix64 rng(101u);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t n = 1 + rng.below(16);
        std::vector<double> a;
        for (std::size_t i = 0; i < n; ++i) a.push_back(rng.uniform(0.05, 2.0));
        auto fast = newton_sigmas(a);
        auto slow = sigma_bruteforce(a);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(std::abs(fast[k] - slow[k]) <= 1e-10 * std::max(1.0, std::abs(slow[k])));
        }
    }
}

TEST_CASE("newton_sigmas equals subset enumeration (exact rationals)") {
    SplitMix64 rng(202u);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 1 + rng.below(9);
        std::vector<Rational> a;
        for (std::size_t i = 0; i < n; ++i) {
            long num = static_cast<long>(rng.below(41)) - 20;
            long den = 1 + static_cast<long>(rng.below(9));
            Rational q(num, den);
            q.canonicalize();
            a.push_back(q);
        }
        auto fast = newton_sigmas(a);
        auto slow = sigma_bruteforce(a);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t k = 0; k <= n; ++k) CHECK(fast[k] == slow[k]);
    }
}

TEST_CASE("difference_table basics") {
    auto table = difference_table<double>({1.0, 0.5, 0.25});
    CHECK(table[0][2] == 0.25);
    CHECK(table[2][2] == doctest::Approx(0.25).epsilon(1e-15));  // 1/4 - 2*(1/2) + 1

    auto flat = difference_table<double>({1.0, 1.0});
    CHECK(flat[1][1] == 0.0);

    // geometric rho = 2^-j: every even difference at the corner is 2^-n
    for (std::size_t n = 1; n <= 12; ++n) {
        std::vector<double> rho;
        for (std::size_t j = 0; j <= n; ++j) rho.push_back(std::ldexp(1.0, -static_cast<int>(j)));
        auto diff = difference_table(rho);
        for (std::size_t k = 0; 2 * k <= n; ++k)
            CHECK(diff[2 * k][n] == doctest::Approx(std::ldexp(1.0, -static_cast<int>(n))).epsilon(1e-12));
    }
}

TEST_CASE("difference corner entries equal the closed binomial sum") {
    SplitMix64 rng(303u);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t n = 1 + rng.below(20);
        std::vector<double> rho;
        for (std::size_t j = 0; j <= n; ++j) rho.push_back(rng.uniform(-2.0, 2.0));
        auto diff = difference_table(rho);
        for (std::size_t k = 0; 2 * k <= n; ++k)
            CHECK(std::abs(diff[2 * k][n] - delta_binomial_sum(rho, k)) <= 1e-12 * (1.0 + std::abs(diff[2 * k][n])));
    }
}

TEST_CASE("SymmetricTable bundles the pipeline") {
    auto table = SymmetricTable<double>::build({0.5, 0.5});
    CHECK(table.order() == 2);
    CHECK(table.sigma[0] == 1.0);
    CHECK(table.rho[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(table.rho[2] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(table.delta(1) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(table.delta(2), std::out_of_range);

    auto exact = SymmetricTable<Rational>::build({Rational(1, 2), Rational(1, 2)});
    CHECK(exact.delta(0) == Rational(1, 4));
    CHECK(exact.delta(1) == Rational(1, 4));
}

TEST_CASE("pipeline matches enumeration through alpha values") {
    SplitMix64 rng(404u);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 1 + rng.below(10);
        std::vector<double> roots;
        for (std::size_t i = 0; i < n; ++i) roots.push_back(rng.uniform(-4.0, 0.8));
        auto a = alpha_values(RootSet::from_real(roots));
        auto fast = newton_sigmas(a);
        auto slow = sigma_bruteforce(a);
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(std::abs(fast[k] - slow[k]) <= 1e-10 * std::max(1.0, std::abs(slow[k])));
    }
}

TEST_SUITE_END();
