#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "maskcheck/cascade.hpp"
#include "maskcheck/rng.hpp"

using namespace maskcheck;

namespace {

// Haar closed form with the e^{-2 pi i xi} evaluation convention.
Complex haar_phi_hat(double xi) {
    if (xi == 0.0) return {1.0, 0.0};
    const double s = std::sin(std::numbers::pi * xi) / (std::numbers::pi * xi);
    return std::polar(1.0, -std::numbers::pi * xi) * s;
}

}  // namespace

TEST_SUITE_BEGIN("cascade");

TEST_CASE("phi_hat(0) is exactly 1 at every depth") {
    auto mask = polynomial_from_roots(RootSet::parse({"-1", "-1", "-1"}));
    for (int depth : {1, 4, 24, 40}) {
        auto samples = phi_hat(mask, {0.0}, depth);
        CHECK(samples.values[0] == Complex(1.0, 0.0));
    }
}

TEST_CASE("Haar cascade matches the closed form") {
    auto haar = polynomial_from_roots(RootSet::parse({"-1"}));

    auto at_one = phi_hat(haar, {1.0}, 24);
    CHECK(std::abs(at_one.values[0]) <= 1e-6);

    auto at_half = phi_hat(haar, {0.5}, 24);
    CHECK(std::abs(at_half.values[0]) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-6));

    auto grid = uniform_grid(-8.0, 8.0, 257);
    auto samples = phi_hat(haar, grid, 24);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(std::abs(samples.values[i] - haar_phi_hat(grid[i])) <= 1e-6);
    }
}

TEST_CASE("conjugate symmetry for real masks") {
    auto mask = polynomial_from_roots(RootSet::parse({"-1", "-1", "-1/2"}));
    SplitMix64 rng(41u);
    for (int i = 0; i < 20; ++i) {
        const double xi = rng.uniform(0.0, 6.0);
        auto pair = phi_hat(mask, {xi, -xi}, 20);
        CHECK(std::abs(pair.values[1] - std::conj(pair.values[0])) <= 1e-12);
    }
}

TEST_CASE("refinement identity at finite depth") {
    auto mask = polynomial_from_roots(RootSet::parse({"-1", "-1", "-3"}));
    auto grid = uniform_grid(-6.0, 6.0, 101);
    auto deep = phi_hat(mask, grid, 20);
    std::vector<double> half_grid;
    for (double xi : grid) half_grid.push_back(xi / 2.0);
    auto shallow = phi_hat(mask, half_grid, 19);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Complex expected = evaluate_mask(mask, grid[i] / 2.0) * shallow.values[i];
        CHECK(std::abs(deep.values[i] - expected) <= 1e-12);
    }
}

TEST_CASE("successive truncations obey the Lipschitz bound") {
    auto mask = polynomial_from_roots(RootSet::parse({"-1", "-2", "0"}));
    const double lipschitz = mask_lipschitz_constant(mask);
    auto grid = uniform_grid(-4.0, 4.0, 65);
    for (int depth = 8; depth <= 20; depth += 4) {
        auto coarse = phi_hat(mask, grid, depth);
        auto fine = phi_hat(mask, grid, depth + 1);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double bound = std::abs(grid[i]) * std::ldexp(1.0, -depth) * lipschitz + 1e-12;
            CHECK(std::abs(fine.values[i] - coarse.values[i]) <= bound);
        }
    }
}

TEST_CASE("phi_hat rejects unnormalized masks") {
    MaskCoefficients bad;
    bad.coeffs = {Complex(1.0, 0.0), Complex(1.0, 0.0)};
    CHECK_THROWS_AS(phi_hat(bad, {0.5}, 8), std::invalid_argument);
    CHECK_THROWS_AS(phi_hat(polynomial_from_roots(RootSet::parse({"-1"})), {0.5}, 0), std::invalid_argument);
}

TEST_CASE("mallat_preconditions") {
    auto b3 = mallat_preconditions(polynomial_from_roots(RootSet::parse({"-1", "-1", "-1"})));
    CHECK(b3.normalized);
    CHECK(b3.decay);
    CHECK(b3.sub_qmf.holds());
    CHECK(b3.pass());

    auto bad_root = mallat_preconditions(polynomial_from_roots(RootSet::parse({"-1", "2"})));
    CHECK(bad_root.normalized);
    CHECK(bad_root.sub_qmf.fails());
    CHECK(!bad_root.pass());

    MaskCoefficients unnormalized;
    unnormalized.coeffs = {Complex(1.0, 0.0), Complex(1.0, 0.0)};
    auto report = mallat_preconditions(unnormalized);
    CHECK(!report.normalized);
    CHECK(!report.pass());
}

TEST_CASE("uniform_grid edges") {
    CHECK(uniform_grid(0.0, 0.0, 5) == std::vector<double>{0.0});
    CHECK(uniform_grid(1.0, 2.0, 1) == std::vector<double>{1.0});
    CHECK(uniform_grid(0.0, 1.0, 0).empty());
    auto grid = uniform_grid(-8.0, 8.0, 1024);
    CHECK(grid.size() == 1024);
    CHECK(grid.front() == -8.0);
    CHECK(grid.back() == 8.0);
}

TEST_SUITE_END();
