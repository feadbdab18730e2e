#include <cmath>

#include "doctest.h"
#include "maskcheck/criteria.hpp"
#include "maskcheck/rng.hpp"
#include "maskcheck/trig.hpp"

using namespace maskcheck;

TEST_SUITE_BEGIN("criteria");

TEST_CASE("theorem criterion on the B-spline family") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::string> roots(static_cast<std::size_t>(n), "-1");
        auto set = RootSet::parse(roots);

        Verdict exact = theorem_criterion(set, {Mode::Exact, 0.0});
        CHECK(exact.holds());
        CHECK(exact.method == "theorem1");

        auto table = symmetric_table_exact(set);
        for (std::size_t k = 0; 2 * k <= static_cast<std::size_t>(n); ++k)
            CHECK(table.delta(k) == pow2_inverse(static_cast<unsigned>(n)));

        Verdict approx = theorem_criterion(set, {Mode::Float, 1e-9});
        CHECK(approx.holds());
        CHECK(approx.margin == doctest::Approx(std::ldexp(1.0, -n)).epsilon(1e-12));
    }
}

TEST_CASE("theorem criterion accepts {-1, 0, -2}") {
    auto set = RootSet::parse({"-1", "0", "-2"});
    Verdict v = theorem_criterion(set);
    CHECK(v.holds());
    // exact corner values: delta^0 rho_3 = 5/18, delta^2 rho_1 = 2/27
    auto table = symmetric_table_exact(set);
    CHECK(table.delta(0) == Rational(5, 18));
    CHECK(table.delta(1) == Rational(2, 27));
}

TEST_CASE("theorem criterion is inconclusive for {-1, 3}") {
    auto set = RootSet::parse({"-1", "3"});
    Verdict v = theorem_criterion(set);
    CHECK(v.status == Status::Inconclusive);
    REQUIRE(v.witness_index);
    CHECK(*v.witness_index == 1);  // delta^2 rho_0 = 5/4 - 2*(3/2)*... < 0
    CHECK(v.margin == doctest::Approx(-0.75).epsilon(1e-12));
    // never FAILS: the condition is only sufficient
    CHECK(v.status != Status::Fails);
}

TEST_CASE("roots at zero sit exactly on the decision boundary") {
    // a = (1/2, 1, 1, 1): the top even differences vanish identically
    auto set = RootSet::parse({"-1", "0", "0", "0"});
    Verdict exact = theorem_criterion(set, {Mode::Exact, 0.0});
    CHECK(exact.holds());
    CHECK(exact.boundary);
    CHECK(exact.margin == 0.0);

    auto table = symmetric_table_exact(set);
    CHECK(table.delta(1) == 0);
    CHECK(table.delta(2) == 0);

    Verdict approx = theorem_criterion(set, {Mode::Float, 1e-9});
    CHECK(approx.holds());
    CHECK(approx.boundary);
}

TEST_CASE("theorem criterion preconditions") {
    CHECK_THROWS_AS(theorem_criterion(RootSet::parse({"-2", "-3"})), std::domain_error);      // no -1
    CHECK_THROWS_AS(theorem_criterion(RootSet::parse({"-1", "1+1i"})), std::domain_error);    // non-real
    CHECK_THROWS_AS(theorem_criterion(RootSet::parse({"-1", "1"})), std::domain_error);       // root at 1
}

TEST_CASE("corollary_nonpositive") {
    CHECK(corollary_nonpositive(RootSet::parse({"-1", "0", "-5"})).holds());
    CHECK(corollary_nonpositive(RootSet::parse({"-1"})).holds());

    Verdict v = corollary_nonpositive(RootSet::parse({"-1", "0.001"}));
    CHECK(v.status == Status::Inconclusive);
    CHECK(v.margin == doctest::Approx(-0.001).epsilon(1e-12));
}

TEST_CASE("prop1 on the pinned examples") {
    CHECK(prop1_degree2(Complex(-3.0, 0.0)).holds());

    Verdict half = prop1_degree2(Complex(0.5, 0.0));
    CHECK(half.fails());
    CHECK(half.margin == doctest::Approx(-4.0).epsilon(1e-12));  // 1 - F1(1/2) = 1 - 5

    Verdict imag = prop1_degree2(Complex(0.0, 1.0));
    CHECK(imag.fails());  // F3(i) = -1 violates B = 0

    CHECK_THROWS_AS(prop1_degree2(Complex(1.0, 0.0)), std::domain_error);

    CHECK(prop1_degree2_exact(RationalPoint{Rational(-3), Rational(0)}).holds());
    CHECK(prop1_degree2_exact(RationalPoint{Rational(1, 2), Rational(0)}).fails());
    Verdict boundary = prop1_degree2_exact(RationalPoint{Rational(0), Rational(0)});
    CHECK(boundary.holds());
    CHECK(boundary.boundary);
    CHECK(boundary.margin == 0.0);
}

TEST_CASE("prop2 on the pinned examples") {
    Verdict both_zero = prop2_degree3(Complex(0.0, 0.0), Complex(0.0, 0.0));
    CHECK(both_zero.holds());
    CHECK(both_zero.margin == doctest::Approx(0.0));
    CHECK(both_zero.boundary);

    // conjugate pair: B1 + B2 = 0 automatically
    Complex z(-1.0, 1.0);
    Verdict pair = prop2_degree3(z, std::conj(z));
    CHECK(pair.holds());
    CHECK(pair.margin == doctest::Approx(0.8).epsilon(1e-12));  // 1 - 9/25 + 4/25

    Verdict bad = prop2_degree3(Complex(-2.0, 0.0), Complex(3.0, 0.0));
    CHECK(bad.fails());

    Verdict pair_exact = prop2_degree3_exact(RationalPoint{Rational(-1), Rational(1)}, RationalPoint{Rational(-1), Rational(-1)});
    CHECK(pair_exact.holds());
    CHECK(pair_exact.margin == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("prop2 conjugate pairs agree with the oracle") {
    SplitMix64 rng(777u);
    for (int rep = 0; rep < 40; ++rep) {
        Complex z(rng.uniform(-3.0, 3.0), rng.uniform(0.05, 3.0));
        if (std::abs(z - Complex(1.0, 0.0)) < 0.1) continue;
        Verdict crit = prop2_degree3(z, std::conj(z));
        auto mask = polynomial_from_roots(RootSet::from_complex({Complex(-1.0, 0.0), z, std::conj(z)}));
        Verdict oracle = sub_qmf_check(mask);
        REQUIRE(oracle.status != Status::Inconclusive);
        CHECK(crit.status == oracle.status);
    }
}

TEST_CASE("corollary1 on the pinned examples") {
    Verdict zero = corollary1_degree3_real(0.0, 0.0);
    CHECK(zero.holds());
    CHECK(zero.margin == 0.0);

    Verdict neg = corollary1_degree3_real(-2.0, -3.0);
    CHECK(neg.holds());
    CHECK(neg.margin == doctest::Approx(47.0).epsilon(1e-12));  // -(6*(-7) - 5)

    Verdict half = corollary1_degree3_real(0.5, 0.5);
    CHECK(half.fails());
    CHECK(half.margin == doctest::Approx(-0.75).epsilon(1e-12));

    CHECK_THROWS_AS(corollary1_degree3_real(1.0, 0.5), std::domain_error);

    CHECK(corollary1_degree3_real_exact(Rational(-2), Rational(-3)).margin == doctest::Approx(47.0));
    CHECK(corollary1_degree3_real_exact(Rational(1, 2), Rational(1, 2)).fails());
}

TEST_CASE("corollary1 agrees with prop2 on real inputs") {
    SplitMix64 rng(888u);
    for (int rep = 0; rep < 200; ++rep) {
        double x1 = rng.uniform(-4.0, 4.0);
        double x2 = rng.uniform(-4.0, 4.0);
        if (std::abs(x1 - 1.0) < 0.05 || std::abs(x2 - 1.0) < 0.05) continue;
        CHECK(corollary1_degree3_real(x1, x2).status == prop2_degree3(Complex(x1, 0.0), Complex(x2, 0.0)).status);
    }
}

TEST_CASE("criterion_for dispatches by shape") {
    CHECK(criterion_for(RootSet::parse({"-1", "-2"})).method == "prop1");
    CHECK(criterion_for(RootSet::parse({"-1", "0.3", "0.4"})).method == "corollary1");
    CHECK(criterion_for(RootSet::parse({"-1", "0.3", "0.4"})).fails());
    CHECK(criterion_for(RootSet::parse({"-1", "1+1i", "1-1i"})).method == "prop2");
    CHECK(criterion_for(RootSet::parse({"-1", "-1", "-1", "-1"})).method == "theorem1");

    Verdict no_m1 = criterion_for(RootSet::parse({"-2", "-3"}));
    CHECK(no_m1.fails());
    CHECK(no_m1.method == "remark1");

    // complex, degree >= 4: no closed-form criterion
    Verdict none = criterion_for(RootSet::parse({"-1", "2i", "-2i", "0.5"}));
    CHECK(none.status == Status::Inconclusive);
    CHECK(none.method == "none");
}

TEST_CASE("{-1, 0.3, 0.4} margin matches the cubic") {
    Verdict v = criterion_for(RootSet::parse({"-1", "0.3", "0.4"}));
    CHECK(v.margin == doctest::Approx(-0.544).epsilon(1e-12));
}

TEST_CASE("theorem HOLDS implies oracle HOLDS on random sets") {
    SplitMix64 rng(999u);
    int tested = 0;
    for (int rep = 0; rep < 400 && tested < 60; ++rep) {
        const std::size_t extra = 1 + rng.below(5);
        std::vector<Complex> roots{Complex(-1.0, 0.0)};
        for (std::size_t i = 0; i < extra; ++i) roots.emplace_back(rng.uniform(-4.0, 0.9), 0.0);
        auto set = RootSet::from_complex(roots);
        Verdict crit = theorem_criterion(set);
        if (!crit.holds()) continue;
        ++tested;
        CHECK(sub_qmf_check(polynomial_from_roots(set)).holds());
    }
    CHECK(tested >= 30);
}

TEST_SUITE_END();
