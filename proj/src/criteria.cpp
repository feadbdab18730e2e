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

#include "maskcheck/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maskcheck {
namespace {

bool exact_available(const RootSet& roots) { return roots.exact().has_value(); }

bool use_exact(const RootSet& roots, const CheckOptions& opts) {
    switch (opts.mode) {
        case Mode::Float: return false;
        case Mode::Exact:
            if (!exact_available(roots)) throw std::invalid_argument("exact mode requested but roots carry no exact coordinates");
            return true;
        case Mode::Auto: return exact_available(roots);
    }
    return false;
}

void require_theorem_preconditions(const RootSet& roots) {
    if (!roots.all_real()) throw std::domain_error("criterion requires all roots real");
    if (!roots.has_minus_one()) throw std::domain_error("criterion requires a root at -1");
}

Verdict holds(std::string method, double margin, bool boundary = false) {
    Verdict v;
    v.status = Status::Holds;
    v.margin = margin;
    v.method = std::move(method);
    v.boundary = boundary;
    return v;
}

Verdict fails(std::string method, double margin) {
    Verdict v;
    v.status = Status::Fails;
    v.margin = margin;
    v.method = std::move(method);
    return v;
}

Verdict inconclusive(std::string method, double margin) {
    Verdict v;
    v.status = Status::Inconclusive;
    v.margin = margin;
    v.method = std::move(method);
    return v;
}

}  // namespace

SymmetricTable<double> symmetric_table(const RootSet& roots) {
    return SymmetricTable<double>::build(alpha_values(roots));
}

SymmetricTable<Rational> symmetric_table_exact(const RootSet& roots) {
    return SymmetricTable<Rational>::build(alpha_values_exact(roots));
}

Verdict theorem_criterion(const RootSet& roots, const CheckOptions& opts) {
    require_theorem_preconditions(roots);
    const std::size_t n = roots.degree();

    if (use_exact(roots, opts)) {
        auto table = symmetric_table_exact(roots);
        Rational min_delta = table.delta(0);
        int violated = -1;
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            const Rational& d = table.delta(k);
            if (d < min_delta) min_delta = d;
            if (sgn(d) < 0 && violated < 0) violated = static_cast<int>(k);
        }
        double margin = to_double(min_delta);
        if (violated < 0) return holds("theorem1", margin, sgn(min_delta) == 0);
        Verdict v = inconclusive("theorem1", margin);
        v.witness_index = violated;
        return v;
    }

    auto table = symmetric_table(roots);
    double min_delta = table.delta(0);
    int violated = -1;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        double d = table.delta(k);
        min_delta = std::min(min_delta, d);
        if (d < -opts.tol && violated < 0) violated = static_cast<int>(k);
    }
    if (violated < 0) return holds("theorem1", min_delta, std::abs(min_delta) <= opts.tol);
    Verdict v = inconclusive("theorem1", min_delta);
    v.witness_index = violated;
    return v;
}

Verdict corollary_nonpositive(const RootSet& roots, const CheckOptions& opts) {
    require_theorem_preconditions(roots);

    if (use_exact(roots, opts)) {
        const auto& pts = *roots.exact();
        Rational max_root = pts.front().re;
        for (const auto& p : pts) max_root = std::max(max_root, p.re);
        double margin = -to_double(max_root);
        if (sgn(max_root) <= 0) return holds("corollary2", margin, sgn(max_root) == 0);
        return inconclusive("corollary2", margin);
    }

    double max_root = roots.roots().front().real();
    for (Complex z : roots.roots()) max_root = std::max(max_root, z.real());
    const double margin = -max_root;
    if (margin >= -opts.tol) return holds("corollary2", margin, std::abs(margin) <= opts.tol);
    return inconclusive("corollary2", margin);
}

// When the equality constraint B = 0 is met, the reported margin is the
// inequality slack; otherwise the worse of the two violations.
Verdict prop1_degree2(Complex z2, const CheckOptions& opts) {
    FactorCoefficients f = factor_coefficients(z2);  // throws on z2 = 1
    const double a_slack = 1.0 - f.f1;
    const bool b_ok = std::abs(f.f3) <= opts.tol;
    const double margin = b_ok ? a_slack : std::min(a_slack, -std::abs(f.f3));
    if (b_ok && a_slack >= -opts.tol) return holds("prop1", margin, std::abs(margin) <= opts.tol);
    return fails("prop1", margin);
}

Verdict prop1_degree2_exact(const RationalPoint& z2) {
    RationalFactor f = factor_coefficients_exact(z2);
    Rational a_slack = Rational(1) - f.f1;
    const bool b_ok = sgn(f.f3) == 0;
    Rational b_abs = sgn(f.f3) < 0 ? Rational(-f.f3) : f.f3;
    Rational margin_q = b_ok ? a_slack : std::min(a_slack, Rational(-b_abs));
    const double margin = to_double(margin_q);
    if (b_ok && sgn(a_slack) >= 0) return holds("prop1", margin, sgn(margin_q) == 0);
    return fails("prop1", margin);
}

Verdict prop2_degree3(Complex z1, Complex z2, const CheckOptions& opts) {
    FactorCoefficients g1 = factor_coefficients(z1);
    FactorCoefficients g2 = factor_coefficients(z2);
    const double slack = 1.0 - g1.f1 * g2.f1 - g1.f3 * g2.f3;
    const double bsum = g1.f3 + g2.f3;
    const bool b_ok = std::abs(bsum) <= opts.tol;
    const double margin = b_ok ? slack : std::min(slack, -std::abs(bsum));
    if (b_ok && slack >= -opts.tol) return holds("prop2", margin, std::abs(margin) <= opts.tol);
    return fails("prop2", margin);
}

Verdict prop2_degree3_exact(const RationalPoint& z1, const RationalPoint& z2) {
    RationalFactor g1 = factor_coefficients_exact(z1);
    RationalFactor g2 = factor_coefficients_exact(z2);
    Rational slack = Rational(1) - g1.f1 * g2.f1 - g1.f3 * g2.f3;
    Rational bsum = g1.f3 + g2.f3;
    const bool b_ok = sgn(bsum) == 0;
    Rational b_abs = sgn(bsum) < 0 ? Rational(-bsum) : bsum;
    Rational margin_q = b_ok ? slack : std::min(slack, Rational(-b_abs));
    const double margin = to_double(margin_q);
    if (b_ok && sgn(slack) >= 0) return holds("prop2", margin, sgn(margin_q) == 0);
    return fails("prop2", margin);
}

Verdict corollary1_degree3_real(double x1, double x2, const CheckOptions& opts) {
    if (x1 == 1.0 || x2 == 1.0) throw std::domain_error("corollary1: root at 1");
    const double cubic = x1 * x2 * (x1 + x2 - 2.0) + x1 + x2;
    const double margin = -cubic;
    if (margin >= -opts.tol) return holds("corollary1", margin, std::abs(margin) <= opts.tol);
    return fails("corollary1", margin);
}

Verdict corollary1_degree3_real_exact(const Rational& x1, const Rational& x2) {
    if (x1 == 1 || x2 == 1) throw std::domain_error("corollary1: root at 1");
    Rational cubic = x1 * x2 * (x1 + x2 - 2) + x1 + x2;
    Rational margin_q = -cubic;
    const double margin = to_double(margin_q);
    if (sgn(cubic) <= 0) return holds("corollary1", margin, sgn(cubic) == 0);
    return fails("corollary1", margin);
}

Verdict criterion_for(const RootSet& roots, const CheckOptions& opts) {
    const std::size_t n = roots.degree();
    if (n == 0) return holds("trivial", 0.0);

    if (!roots.has_minus_one()) {
        // P(-1) != 0 makes T(0) = 1 + |P(-1)|^2 > 1, so the inequality fails;
        // the excess must clear the tolerance before that counts as a verdict.
        MaskCoefficients mask = polynomial_from_roots(roots);
        const Complex p_minus1 = evaluate_polynomial(mask.coeffs, Complex(-1.0, 0.0));
        const double excess = std::norm(p_minus1);
        if (excess > opts.tol) return fails("remark1", -excess);
        return inconclusive("none", -excess);
    }

    const bool exact = exact_available(roots) && opts.mode != Mode::Float;

    auto split_minus_one = [&](std::vector<std::size_t>& rest) {
        bool removed = false;
        for (std::size_t i = 0; i < roots.degree(); ++i) {
            bool is_m1;
            if (exact) {
                const auto& p = (*roots.exact())[i];
                is_m1 = p.is_real() && p.re == -1;
            } else {
                is_m1 = std::abs(roots.roots()[i] - Complex(-1.0, 0.0)) <= kMinusOneTol;
            }
            if (is_m1 && !removed) {
                removed = true;
            } else {
                rest.push_back(i);
            }
        }
    };

    if (n == 2) {
        std::vector<std::size_t> rest;
        split_minus_one(rest);
        if (exact) return prop1_degree2_exact((*roots.exact())[rest[0]]);
        return prop1_degree2(roots.roots()[rest[0]], opts);
    }

    if (n == 3) {
        std::vector<std::size_t> rest;
        split_minus_one(rest);
        if (roots.all_real()) {
            if (exact)
                return corollary1_degree3_real_exact((*roots.exact())[rest[0]].re, (*roots.exact())[rest[1]].re);
            return corollary1_degree3_real(roots.roots()[rest[0]].real(), roots.roots()[rest[1]].real(), opts);
        }
        if (exact) return prop2_degree3_exact((*roots.exact())[rest[0]], (*roots.exact())[rest[1]]);
        return prop2_degree3(roots.roots()[rest[0]], roots.roots()[rest[1]], opts);
    }

    if (roots.all_real()) {
        Verdict main = theorem_criterion(roots, opts);
        if (main.holds()) return main;
        Verdict easy = corollary_nonpositive(roots, opts);
        if (easy.holds()) return easy;
        return main;
    }

    return inconclusive("none", 0.0);
}

}  // namespace maskcheck
