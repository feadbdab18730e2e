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

#include "maskcheck/trig.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "maskcheck/symmetric.hpp"

namespace maskcheck {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kGridCap = 1L << 20;

double golden_section_max(const SubQmfPolynomial& T, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = T.evaluate(x1);
    double f2 = T.evaluate(x2);
    for (int it = 0; it < 120 && (b - a) > 1e-15; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = T.evaluate(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = T.evaluate(x1);
        }
    }
    return 0.5 * (a + b);
}

// Bernstein coefficients on [0,1] from power coefficients: b_i = sum_k p_k C(i,k)/C(m,k).
std::vector<double> power_to_bernstein(const std::vector<double>& p) {
    const std::size_t m = p.size() - 1;
    std::vector<double> b(m + 1, 0.0);
    for (std::size_t i = 0; i <= m; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k <= i; ++k) {
            const double w = to_double(binomial(static_cast<unsigned>(i), static_cast<unsigned>(k))) /
                             to_double(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
            acc += p[k] * w;
        }
        b[i] = acc;
    }
    return b;
}

void decasteljau_split(const std::vector<double>& b, std::vector<double>& left, std::vector<double>& right) {
    const std::size_t m = b.size() - 1;
    std::vector<double> row = b;
    left.resize(m + 1);
    right.resize(m + 1);
    left[0] = row[0];
    right[m] = row[m];
    for (std::size_t level = 1; level <= m; ++level) {
        for (std::size_t i = 0; i + level <= m; ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        left[level] = row[0];
        right[m - level] = row[m - level];
    }
}

}  // namespace

double SubQmfPolynomial::evaluate(double phi) const {
    double acc = cos_coeffs.empty() ? 0.0 : cos_coeffs[0];
    for (std::size_t l = 1; l < cos_coeffs.size(); ++l) {
        const double angle = 2.0 * static_cast<double>(l) * phi;
        acc += cos_coeffs[l] * std::cos(angle);
        if (l < sin_coeffs.size()) acc += sin_coeffs[l] * std::sin(angle);
    }
    return acc;
}

double SubQmfPolynomial::derivative(double phi) const {
    double acc = 0.0;
    for (std::size_t l = 1; l < cos_coeffs.size(); ++l) {
        const double w = 2.0 * static_cast<double>(l);
        const double angle = w * phi;
        acc -= w * cos_coeffs[l] * std::sin(angle);
        if (l < sin_coeffs.size()) acc += w * sin_coeffs[l] * std::cos(angle);
    }
    return acc;
}

double SubQmfPolynomial::value_at_zero() const {
    double acc = 0.0;
    for (double c : cos_coeffs) acc += c;
    return acc;
}

double SubQmfPolynomial::coefficient_scale() const {
    double acc = 0.0;
    for (double c : cos_coeffs) acc += std::abs(c);
    for (double s : sin_coeffs) acc += std::abs(s);
    return acc;
}

bool SubQmfPolynomial::cosine_only(double tol) const {
    const double scale = std::max(1.0, coefficient_scale());
    for (double s : sin_coeffs)
        if (std::abs(s) > tol * scale) return false;
    return true;
}

std::vector<Complex> autocorrelation(const MaskCoefficients& mask) {
    const std::size_t n = mask.degree();
    const auto& c = mask.coeffs;
    std::vector<Complex> r(2 * n + 1, Complex(0.0, 0.0));
    for (std::size_t shift = 0; shift <= n; ++shift) {
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j + shift < c.size(); ++j) acc += c[j + shift] * std::conj(c[j]);
        r[n + shift] = acc;
        r[n - shift] = std::conj(acc);
    }
    return r;
}

SubQmfPolynomial build_T(const MaskCoefficients& mask) {
    const std::size_t n = mask.degree();
    auto r_plus = autocorrelation(mask);

    MaskCoefficients negated;
    negated.coeffs = mask.coeffs;
    negated.offset = mask.offset;
    for (std::size_t j = 1; j < negated.coeffs.size(); j += 2) negated.coeffs[j] = -negated.coeffs[j];
    auto r_minus = autocorrelation(negated);

    std::vector<Complex> t(2 * n + 1);
    double scale = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = r_plus[i] + r_minus[i];
        scale += std::abs(t[i]);
    }
    scale = std::max(1.0, scale);

    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::size_t k = (i >= n) ? i - n : n - i;
        if (k % 2 == 1 && std::abs(t[i]) > 1e-12 * scale)
            throw std::logic_error("build_T: odd-frequency coefficient survived cancellation");
    }

    SubQmfPolynomial T;
    const std::size_t lmax = n / 2;
    T.cos_coeffs.assign(lmax + 1, 0.0);
    T.sin_coeffs.assign(lmax + 1, 0.0);
    T.cos_coeffs[0] = t[n].real();
    for (std::size_t l = 1; l <= lmax; ++l) {
        const Complex tk = t[n + 2 * l];
        T.cos_coeffs[l] = 2.0 * tk.real();
        T.sin_coeffs[l] = -2.0 * tk.imag();
    }
    return T;
}

SubQmfPolynomial expanded_T_real_roots(const std::vector<double>& a) {
    const std::size_t n = a.size();
    auto table = SymmetricTable<double>::build(a);
    const std::size_t m = n / 2;

    SubQmfPolynomial T;
    T.cos_coeffs.assign(m + 1, 0.0);
    T.sin_coeffs.assign(m + 1, 0.0);
    for (std::size_t l = 0; l <= m; ++l) {
        double d = 0.0;
        for (std::size_t k = l; k <= m; ++k) {
            const double weight = to_double(multinomial3(static_cast<unsigned>(n), static_cast<unsigned>(n - 2 * k),
                                                         static_cast<unsigned>(k - l), static_cast<unsigned>(k + l)));
            d += std::ldexp(weight, -2 * static_cast<int>(k)) * table.delta(k);
        }
        d *= 4.0;
        T.cos_coeffs[l] = (l == 0) ? 0.5 * d : d;
    }
    return T;
}

CircleMaxCertificate max_on_circle(const SubQmfPolynomial& T, long grid) {
    const long min_grid = 8 * (static_cast<long>(T.harmonics()) + 1);
    const long g = std::max({grid, min_grid, 16L});
    const double h = std::numbers::pi / static_cast<double>(g);

    double best = -std::numeric_limits<double>::infinity();
    long best_i = 0;
    for (long i = 0; i < g; ++i) {
        const double v = T.evaluate(static_cast<double>(i) * h);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }

    const double center = static_cast<double>(best_i) * h;
    const double refined_phi = golden_section_max(T, center - h, center + h);
    const double refined = T.evaluate(refined_phi);

    CircleMaxCertificate cert;
    if (refined > best) {
        cert.max_estimate = refined;
        cert.argmax = refined_phi;
    } else {
        cert.max_estimate = best;
        cert.argmax = center;
    }
    cert.argmax = std::fmod(cert.argmax, std::numbers::pi);
    if (cert.argmax < 0.0) cert.argmax += std::numbers::pi;

    double lip = 0.0;
    for (std::size_t l = 1; l < T.cos_coeffs.size(); ++l) {
        double pair = std::abs(T.cos_coeffs[l]);
        if (l < T.sin_coeffs.size()) pair += std::abs(T.sin_coeffs[l]);
        lip += 2.0 * static_cast<double>(l) * pair;
    }
    cert.lipschitz_bound = lip;
    cert.grid_size = g;
    cert.certified_upper_bound = cert.max_estimate + std::numbers::pi * lip / static_cast<double>(g);
    return cert;
}

double coefficient_upper_bound(const SubQmfPolynomial& T) {
    double acc = T.cos_coeffs.empty() ? 0.0 : T.cos_coeffs[0];
    for (std::size_t l = 1; l < T.cos_coeffs.size(); ++l) {
        const double s = (l < T.sin_coeffs.size()) ? T.sin_coeffs[l] : 0.0;
        acc += std::hypot(T.cos_coeffs[l], s);
    }
    // outward rounding slack for the summation itself
    return acc + 8.0 * kEps * static_cast<double>(T.cos_coeffs.size() + 1) * std::max(1.0, T.coefficient_scale());
}

BernsteinBound bernstein_upper_bound(const SubQmfPolynomial& T, double target) {
    BernsteinBound out;
    if (!T.cosine_only()) {
        out.bound = std::numeric_limits<double>::infinity();
        return out;
    }
    const std::size_t m = T.harmonics();

    // p(v) = c_0 + sum c_l T_l(v) in the power basis, v in [-1, 1]
    std::vector<double> power(m + 1, 0.0);
    std::vector<double> t_prev{1.0};        // T_0
    std::vector<double> t_cur{0.0, 1.0};    // T_1
    power[0] = T.cos_coeffs[0];
    for (std::size_t l = 1; l <= m; ++l) {
        for (std::size_t k = 0; k < t_cur.size(); ++k) power[k] += T.cos_coeffs[l] * t_cur[k];
        if (l < m) {
            std::vector<double> t_next(l + 2, 0.0);
            for (std::size_t k = 0; k < t_cur.size(); ++k) t_next[k + 1] += 2.0 * t_cur[k];
            for (std::size_t k = 0; k < t_prev.size(); ++k) t_next[k] -= t_prev[k];
            t_prev = std::move(t_cur);
            t_cur = std::move(t_next);
        }
    }

    // substitute v = 2t - 1 to move to [0, 1]
    std::vector<double> on01{power[m]};
    for (std::size_t k = m; k-- > 0;) {
        std::vector<double> next(on01.size() + 1, 0.0);
        for (std::size_t i = 0; i < on01.size(); ++i) {
            next[i] -= on01[i];
            next[i + 1] += 2.0 * on01[i];
        }
        next[0] += power[k];
        on01 = std::move(next);
    }

    // rounding slack covers the basis conversions as well as the splits;
    // T <= 1 forces |c_l| <= 2, so the power-basis detour stays tame
    std::vector<double> bern = power_to_bernstein(on01);
    double coeff_mass = 0.0;
    for (double p : on01) coeff_mass += std::abs(p);
    for (double b : bern) coeff_mass += std::abs(b);
    const double mdbl = static_cast<double>(m ? m : 1);
    const double slack = 64.0 * kEps * mdbl * mdbl * std::max(1.0, coeff_mass);

    struct Piece {
        std::vector<double> b;
        int depth;
    };
    std::deque<Piece> queue;
    queue.push_back({std::move(bern), 0});

    constexpr int kMaxDepth = 40;
    constexpr int kPieceBudget = 50000;
    int processed = 0;
    double overall = -std::numeric_limits<double>::infinity();
    bool conclusive = true;

    while (!queue.empty()) {
        if (++processed > kPieceBudget) {
            conclusive = false;
            for (const auto& piece : queue)
                for (double b : piece.b) overall = std::max(overall, b + slack);
            break;
        }
        Piece piece = std::move(queue.front());
        queue.pop_front();
        double piece_max = -std::numeric_limits<double>::infinity();
        for (double b : piece.b) piece_max = std::max(piece_max, b);
        piece_max += slack;
        if (piece_max <= target) {
            overall = std::max(overall, piece_max);
            continue;
        }
        // endpoint coefficients are true values of p: one above the target
        // proves the maximum exceeds it and no subdivision can close the gap
        if (piece.b.front() > target || piece.b.back() > target) {
            out.bound = std::max(overall, piece_max);
            out.conclusive = false;
            return out;
        }
        if (piece.depth >= kMaxDepth) {
            overall = std::max(overall, piece_max);
            conclusive = false;
            continue;
        }
        std::vector<double> left, right;
        decasteljau_split(piece.b, left, right);
        queue.push_back({std::move(left), piece.depth + 1});
        queue.push_back({std::move(right), piece.depth + 1});
    }

    out.bound = overall;
    out.conclusive = conclusive;
    return out;
}

OracleRun run_sub_qmf_oracle(const MaskCoefficients& mask, double tol, long initial_grid) {
    OracleRun run;
    const SubQmfPolynomial T = build_T(mask);
    const double threshold = 1.0 + tol;
    const double eval_slack = 32.0 * kEps * std::max(1.0, T.coefficient_scale());

    // The static bounds are only worth computing once the scan has not
    // already disproved the inequality.
    bool static_ready = false;
    double static_bound = std::numeric_limits<double>::infinity();

    long grid = initial_grid > 0 ? initial_grid : std::max<long>(256, 8 * (static_cast<long>(T.harmonics()) + 1));
    for (;;) {
        run.certificate = max_on_circle(T, grid);

        if (run.certificate.max_estimate > threshold) {
            run.verdict.status = Status::Fails;
            run.verdict.margin = 1.0 - run.certificate.max_estimate;
            run.verdict.witness_angle = run.certificate.argmax;
            run.verdict.method = "oracle";
            return run;
        }

        if (!static_ready) {
            static_ready = true;
            run.coefficient_bound = coefficient_upper_bound(T);
            static_bound = run.coefficient_bound;
            if (static_bound > threshold && T.cosine_only()) {
                BernsteinBound bb = bernstein_upper_bound(T, threshold);
                run.bernstein_bound = bb.bound;
                if (bb.conclusive) static_bound = std::min(static_bound, bb.bound);
            }
        }

        const double upper = std::min(static_bound, run.certificate.certified_upper_bound + eval_slack);
        if (upper <= threshold) {
            run.verdict.status = Status::Holds;
            run.verdict.margin = 1.0 - upper;
            run.verdict.method = "oracle";
            run.verdict.boundary = std::abs(run.verdict.margin) <= tol;
            return run;
        }

        if (run.certificate.grid_size >= kGridCap) break;
        grid = run.certificate.grid_size * 2;
    }

    run.verdict.status = Status::Inconclusive;
    run.verdict.margin = 1.0 - std::min(static_bound, run.certificate.certified_upper_bound + eval_slack);
    run.verdict.witness_angle = run.certificate.argmax;
    run.verdict.method = "oracle";
    return run;
}

Verdict sub_qmf_check(const MaskCoefficients& mask, double tol) { return run_sub_qmf_oracle(mask, tol).verdict; }

}  // namespace maskcheck
