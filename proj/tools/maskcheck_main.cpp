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

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "maskcheck/cascade.hpp"
#include "maskcheck/criteria.hpp"
#include "maskcheck/mask.hpp"
#include "maskcheck/table_format.hpp"
#include "maskcheck/rng.hpp"
#include "maskcheck/rootfind.hpp"
#include "maskcheck/trig.hpp"
#include "maskcheck/verdict.hpp"

namespace {

using namespace maskcheck;

// Exit codes: 0/1/2 carry the verdict for check/oracle; usage and refusal
// errors stay clear of that range.
constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitRefused = 65;
constexpr int kExitSoundness = 70;

/// Everything one invocation needs; filled from flags and the environment.
struct RunManifest {
    enum class Command { Check, Oracle, Table, Sweep, Refine };

    Command command = Command::Check;
    std::string roots_csv;
    std::string coeffs_csv;
    std::string mode_flag;
    double tol = kDefaultTol;
    long grid = 0;  // oracle starting grid (0 = default)

    bool compat = false;  // table

    std::uint64_t seed = 1;  // sweep
    long count = 0;
    int degree = 3;
    int positive_count = 0;
    std::pair<double, double> range{-5.0, 0.0};
    std::pair<double, double> positive_range{0.0, 5.0};
    std::string sweep_out = "sweep.csv";

    std::pair<double, double> xi_range{-kDefaultCascadeRange, kDefaultCascadeRange};  // refine
    std::size_t xi_grid = kDefaultCascadeGrid;
    int depth = kDefaultCascadeDepth;
    std::string refine_out = "refine.csv";
    bool force = false;

    Mode mode() const {
        std::string request = mode_flag;
        if (request.empty()) {
            if (const char* env = std::getenv("MASKCHECK_MODE")) request = env;
        }
        if (request.empty()) return Mode::Auto;
        auto mode = parse_mode(request);
        if (!mode) throw CLI::ValidationError("--mode", "expected auto, exact or float");
        return *mode;
    }
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    for (char c : text) {
        if (c == ',' || c == ';' || c == ' ' || c == '\t') {
            if (!item.empty()) out.push_back(std::exchange(item, {}));
        } else {
            item.push_back(c);
        }
    }
    if (!item.empty()) out.push_back(item);
    return out;
}

struct ResolvedInput {
    RootSet roots;
    MaskCoefficients mask;  // normalized (P(1) = 1)
    bool from_coefficients = false;
    bool rescaled = false;
};

ResolvedInput resolve_input(const RunManifest& manifest) {
    const Mode mode = manifest.mode();
    const bool have_roots = !manifest.roots_csv.empty();
    const bool have_coeffs = !manifest.coeffs_csv.empty();
    if (have_roots == have_coeffs)
        throw CLI::ValidationError("input", "exactly one of --roots / --coeffs must be given");

    if (have_roots) {
        RootSet roots = RootSet::parse(split_list(manifest.roots_csv));
        if (mode == Mode::Float) {
            // drop exact coordinates on request
            roots = RootSet::from_complex(roots.roots());
        }
        MaskCoefficients mask = polynomial_from_roots(roots);
        return ResolvedInput{std::move(roots), std::move(mask), false, false};
    }

    if (mode == Mode::Exact)
        throw CLI::ValidationError("--mode", "exact mode is unavailable for coefficient input (roots are recovered numerically)");

    std::vector<Complex> coeffs;
    for (const auto& token : split_list(manifest.coeffs_csv)) {
        auto p = parse_rational_complex(token);
        if (!p) throw CLI::ValidationError("--coeffs", "cannot parse coefficient '" + token + "'");
        coeffs.emplace_back(to_double(p->re), to_double(p->im));
    }
    while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2) throw CLI::ValidationError("--coeffs", "need a polynomial of degree >= 1");

    const Complex at_one = evaluate_polynomial(coeffs, Complex(1.0, 0.0));
    if (std::abs(at_one) < 1e-12) throw CLI::ValidationError("--coeffs", "P(1) is zero; cannot normalize");
    bool rescaled = false;
    MaskCoefficients mask;
    mask.coeffs = coeffs;
    if (std::abs(at_one - Complex(1.0, 0.0)) > 1e-12) {
        for (Complex& c : mask.coeffs) c /= at_one;
        rescaled = true;
    }
    RootSet roots = roots_from_coefficients(coeffs);
    return ResolvedInput{std::move(roots), std::move(mask), true, rescaled};
}

std::string roots_to_string(const RootSet& roots) {
    std::string out;
    for (std::size_t i = 0; i < roots.roots().size(); ++i) {
        if (i) out += ';';
        const Complex z = roots.roots()[i];
        out += format_shortest(z.real());
        if (z.imag() != 0.0) {
            if (z.imag() > 0.0) out += '+';
            out += format_shortest(z.imag());
            out += 'i';
        }
    }
    return out;
}

void emit(std::ostream& os, const std::string& key, const std::string& value) { os << key << '=' << value << '\n'; }
void emit(std::ostream& os, const std::string& key, double value) { emit(os, key, format_shortest(value)); }
void emit(std::ostream& os, const std::string& key, bool value) { emit(os, key, std::string(value ? "true" : "false")); }

void emit_verdict(std::ostream& os, const std::string& prefix, const Verdict& v) {
    emit(os, prefix + ".method", v.method);
    emit(os, prefix + ".status", std::string(to_string(v.status)));
    emit(os, prefix + ".margin", v.margin);
    emit(os, prefix + ".boundary", v.boundary);
    if (v.witness_angle) emit(os, prefix + ".witness_angle", *v.witness_angle);
    if (v.witness_index) emit(os, prefix + ".witness_index", std::to_string(*v.witness_index));
}

int run_check(const RunManifest& manifest) {
    const Mode mode = manifest.mode();
    ResolvedInput input = resolve_input(manifest);

    CheckOptions opts;
    opts.mode = mode;
    opts.tol = manifest.tol;
    const Verdict criterion = criterion_for(input.roots, opts);
    const OracleRun oracle = run_sub_qmf_oracle(input.mask, manifest.tol, manifest.grid);

    // knife-edge inputs may straddle the tolerance band; a violation needs
    // both margins clear of it
    if (criterion.holds() && oracle.verdict.fails() && criterion.margin > manifest.tol &&
        oracle.verdict.margin < -manifest.tol) {
        std::cerr << "soundness violation: criterion HOLDS but oracle FAILS\n";
        return kExitSoundness;
    }

    std::ostream& os = std::cout;
    emit(os, "command", std::string("check"));
    emit(os, "mode", std::string(to_string(mode)));
    emit(os, "exact_arithmetic", input.roots.exact().has_value());
    emit(os, "degree", std::to_string(input.roots.degree()));
    emit(os, "roots", roots_to_string(input.roots));
    emit(os, "from_coefficients", input.from_coefficients);
    if (input.from_coefficients) emit(os, "normalized", input.rescaled);
    emit_verdict(os, "criterion", criterion);
    emit_verdict(os, "oracle", oracle.verdict);
    emit(os, "oracle.max_estimate", oracle.certificate.max_estimate);
    emit(os, "oracle.certified_upper_bound", oracle.certificate.certified_upper_bound);
    const Verdict& final_v = criterion.status == Status::Inconclusive ? oracle.verdict : criterion;
    emit(os, "verdict", std::string(to_string(final_v.status)));

    int code = kExitInconclusive;
    if (criterion.holds()) code = kExitHolds;
    if (criterion.fails()) code = kExitFails;
    emit(os, "exit", std::to_string(code));
    return code;
}

int run_oracle(const RunManifest& manifest) {
    ResolvedInput input = resolve_input(manifest);
    const OracleRun oracle = run_sub_qmf_oracle(input.mask, manifest.tol, manifest.grid);

    std::ostream& os = std::cout;
    emit(os, "command", std::string("oracle"));
    emit(os, "degree", std::to_string(input.roots.degree()));
    emit(os, "roots", roots_to_string(input.roots));
    emit_verdict(os, "oracle", oracle.verdict);
    emit(os, "oracle.max_estimate", oracle.certificate.max_estimate);
    emit(os, "oracle.argmax", oracle.certificate.argmax);
    emit(os, "oracle.lipschitz_bound", oracle.certificate.lipschitz_bound);
    emit(os, "oracle.grid_size", std::to_string(oracle.certificate.grid_size));
    emit(os, "oracle.certified_upper_bound", oracle.certificate.certified_upper_bound);
    emit(os, "oracle.coefficient_bound", oracle.coefficient_bound);
    if (oracle.bernstein_bound) emit(os, "oracle.bernstein_bound", *oracle.bernstein_bound);
    emit(os, "verdict", std::string(to_string(oracle.verdict.status)));
    int code = kExitInconclusive;
    if (oracle.verdict.holds()) code = kExitHolds;
    if (oracle.verdict.fails()) code = kExitFails;
    emit(os, "exit", std::to_string(code));
    return code;
}

int run_table(const RunManifest& manifest) {
    long long n = 0;
    if (!(std::cin >> n) || n < 0) {
        std::cerr << "table: expected a nonnegative integer count\n";
        return kExitUsage;
    }
    std::vector<double> roots(static_cast<std::size_t>(n), 0.0);
    for (auto& x : roots) {
        if (!(std::cin >> x)) {
            std::cerr << "table: expected " << n << " real roots\n";
            return kExitUsage;
        }
    }
    const bool has_minus_one =
        std::any_of(roots.begin(), roots.end(), [](double x) { return std::abs(x + 1.0) <= kMinusOneTol; });
    if (!has_minus_one) std::cerr << "warning: no root at -1; the sufficient condition presumes one\n";

    const DifferenceTableRun run = divided_difference_run(roots);
    std::cout << render_difference_table(run, manifest.compat);
    return 0;
}

int run_sweep(const RunManifest& manifest) {
    if (manifest.count < 1) {
        std::cerr << "sweep: --count must be >= 1\n";
        return kExitUsage;
    }
    if (manifest.degree < 1 || manifest.positive_count > manifest.degree - 1) {
        std::cerr << "sweep: need degree >= 1 and positive-count <= degree - 1\n";
        return kExitUsage;
    }

    std::ofstream csv(manifest.sweep_out, std::ios::binary);
    if (!csv) {
        std::cerr << "sweep: cannot open '" << manifest.sweep_out << "' for writing\n";
        return kExitUsage;
    }
    csv << "seed,index,roots,criterion_method,criterion_status,criterion_margin,"
           "oracle_status,oracle_margin,oracle_max_estimate\n";

    SplitMix64 rng(manifest.seed);
    CheckOptions opts;
    opts.tol = manifest.tol;
    long holds_holds = 0, inc_holds = 0, inc_fails = 0, fails_fails = 0, other = 0;

    for (long row = 0; row < manifest.count; ++row) {
        std::vector<Complex> roots{Complex(-1.0, 0.0)};
        for (int i = 0; i < manifest.degree - 1; ++i) {
            const bool positive = i < manifest.positive_count;
            const auto& r = positive ? manifest.positive_range : manifest.range;
            double x = rng.uniform(r.first, r.second);
            // keep away from the rejected point z = 1
            while (std::abs(x - 1.0) < 1e-6) x = rng.uniform(r.first, r.second);
            roots.emplace_back(x, 0.0);
        }
        const RootSet set = RootSet::from_complex(roots);
        const Verdict criterion = criterion_for(set, opts);
        const OracleRun oracle_run = run_sub_qmf_oracle(polynomial_from_roots(set), manifest.tol);
        const Verdict& oracle = oracle_run.verdict;

        if (criterion.holds() && oracle.fails() && criterion.margin > manifest.tol && oracle.margin < -manifest.tol) {
            std::cerr << "sweep: soundness violation at row " << row << " (criterion HOLDS, oracle FAILS), roots "
                      << roots_to_string(set) << "\n";
            return kExitSoundness;
        }

        if (criterion.holds() && oracle.holds()) ++holds_holds;
        else if (criterion.status == Status::Inconclusive && oracle.holds()) ++inc_holds;
        else if (criterion.status == Status::Inconclusive && oracle.fails()) ++inc_fails;
        else if (criterion.fails() && oracle.fails()) ++fails_fails;
        else ++other;

        csv << manifest.seed << ',' << row << ',' << roots_to_string(set) << ',' << criterion.method << ','
            << to_string(criterion.status) << ',' << format_sci17(criterion.margin) << ',' << to_string(oracle.status)
            << ',' << format_sci17(oracle.margin) << ',' << format_sci17(oracle_run.certificate.max_estimate) << '\n';
    }

    std::cout << "sweep: seed=" << manifest.seed << " count=" << manifest.count << " degree=" << manifest.degree << "\n"
              << "holds_holds=" << holds_holds << " inconclusive_holds=" << inc_holds
              << " inconclusive_fails=" << inc_fails << " fails_fails=" << fails_fails << " other=" << other << "\n"
              << "csv=" << manifest.sweep_out << "\n";
    return 0;
}

int run_refine(const RunManifest& manifest) {
    // refine checks the mask exactly as given: no renormalization here,
    // an unnormalized mask must fail the m0(0) = 1 clause.
    MaskCoefficients mask;
    if (!manifest.coeffs_csv.empty() && manifest.roots_csv.empty()) {
        for (const auto& token : split_list(manifest.coeffs_csv)) {
            auto p = parse_rational_complex(token);
            if (!p) throw CLI::ValidationError("--coeffs", "cannot parse coefficient '" + token + "'");
            mask.coeffs.emplace_back(to_double(p->re), to_double(p->im));
        }
        if (mask.coeffs.empty()) throw CLI::ValidationError("--coeffs", "empty coefficient list");
    } else if (!manifest.roots_csv.empty() && manifest.coeffs_csv.empty()) {
        RootSet roots = RootSet::parse(split_list(manifest.roots_csv));
        if (manifest.mode() == Mode::Float) roots = RootSet::from_complex(roots.roots());
        mask = polynomial_from_roots(roots);
    } else {
        throw CLI::ValidationError("input", "exactly one of --roots / --coeffs must be given");
    }

    const MallatReport report = mallat_preconditions(mask, manifest.tol);
    std::cout << "preconditions: normalized=" << (report.normalized ? "true" : "false")
              << " decay=" << (report.decay ? "true" : "false") << " sub_qmf=" << to_string(report.sub_qmf.status)
              << " -> " << (report.pass() ? "PASS" : "FAIL") << "\n";
    if (!report.pass() && !manifest.force) {
        std::cerr << "refine: preconditions failed; re-run with --force to sample anyway\n";
        return kExitRefused;
    }

    const auto xi = uniform_grid(manifest.xi_range.first, manifest.xi_range.second, manifest.xi_grid);
    const PhiHatSamples samples = phi_hat(mask, xi, manifest.depth, report.normalized ? manifest.tol : 1e9);

    std::ofstream csv(manifest.refine_out, std::ios::binary);
    if (!csv) {
        std::cerr << "refine: cannot open '" << manifest.refine_out << "' for writing\n";
        return kExitUsage;
    }
    csv << "xi,re,im,abs\n";
    for (std::size_t i = 0; i < samples.xi_grid.size(); ++i) {
        const Complex v = samples.values[i];
        csv << format_sci17(samples.xi_grid[i]) << ',' << format_sci17(v.real()) << ',' << format_sci17(v.imag()) << ','
            << format_sci17(std::abs(v)) << '\n';
    }
    std::cout << "refine: depth=" << manifest.depth << " samples=" << samples.xi_grid.size() << " csv="
              << manifest.refine_out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decides the sub-QMF inequality |m0(xi)|^2 + |m0(xi+1/2)|^2 <= 1 for polynomial refinement masks"};
    app.require_subcommand(1);

    RunManifest manifest;

    auto add_input_opts = [&](CLI::App* cmd) {
        cmd->add_option("--roots", manifest.roots_csv, "comma-separated roots, e.g. \"-1,1/2,0.25,1+2i\"");
        cmd->add_option("--coeffs", manifest.coeffs_csv, "comma-separated coefficients c0,c1,... of P");
        cmd->add_option("--mode", manifest.mode_flag, "arithmetic mode: auto|exact|float (env MASKCHECK_MODE)");
        cmd->add_option("--tol", manifest.tol, "criterion/oracle tolerance (default 1e-9)");
    };

    CLI::App* check = app.add_subcommand("check", "run the most specific criterion plus the oracle");
    add_input_opts(check);
    check->add_option("--grid", manifest.grid, "initial oracle grid size");

    CLI::App* oracle = app.add_subcommand("oracle", "run only the certified numeric oracle");
    add_input_opts(oracle);
    oracle->add_option("--grid", manifest.grid, "initial oracle grid size");

    CLI::App* table = app.add_subcommand("table", "read 'n x1..xn' from stdin, print the difference table and verdict");
    table->add_flag("--compat", manifest.compat, "reproduce the reference transcript byte for byte");

    CLI::App* sweep = app.add_subcommand("sweep", "random root sets: criterion vs oracle agreement counts");
    sweep->add_option("--seed", manifest.seed, "RNG seed (recorded in the CSV)");
    sweep->add_option("--count", manifest.count, "number of root sets")->required();
    sweep->add_option("--degree", manifest.degree, "polynomial degree (a root at -1 is always included)");
    sweep->add_option("--range", manifest.range, "sampling range for the free roots");
    sweep->add_option("--positive-count", manifest.positive_count, "how many free roots come from --positive-range");
    sweep->add_option("--positive-range", manifest.positive_range, "sampling range for the positive roots");
    sweep->add_option("--out", manifest.sweep_out, "CSV output path");
    sweep->add_option("--tol", manifest.tol, "criterion/oracle tolerance");

    CLI::App* refine = app.add_subcommand("refine", "sample the refinement function's Fourier transform to CSV");
    add_input_opts(refine);
    refine->add_option("--range", manifest.xi_range, "frequency range a b");
    refine->add_option("--grid", manifest.xi_grid, "number of samples");
    refine->add_option("--depth", manifest.depth, "truncation depth J of the infinite product");
    refine->add_option("--out", manifest.refine_out, "CSV output path");
    refine->add_flag("--force", manifest.force, "sample even when the preconditions fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed()) {
            manifest.command = RunManifest::Command::Check;
            return run_check(manifest);
        }
        if (oracle->parsed()) {
            manifest.command = RunManifest::Command::Oracle;
            return run_oracle(manifest);
        }
        if (table->parsed()) {
            manifest.command = RunManifest::Command::Table;
            return run_table(manifest);
        }
        if (sweep->parsed()) {
            manifest.command = RunManifest::Command::Sweep;
            return run_sweep(manifest);
        }
        if (refine->parsed()) {
            manifest.command = RunManifest::Command::Refine;
            return run_refine(manifest);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
