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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "maskcheck/cascade.hpp"
#include "maskcheck/criteria.hpp"
#include "maskcheck/table_format.hpp"
#include "maskcheck/rootfind.hpp"
#include "maskcheck/trig.hpp"

namespace py = pybind11;
using namespace maskcheck;

namespace {

CheckOptions make_options(const std::string& mode, double tol) {
    auto parsed = parse_mode(mode);
    if (!parsed) throw py::value_error("mode must be 'auto', 'exact' or 'float'");
    return CheckOptions{*parsed, tol};
}

std::vector<std::string> sigmas_exact(const std::vector<std::string>& literals) {
    std::vector<Rational> a;
    a.reserve(literals.size());
    for (const auto& text : literals) {
        auto q = parse_rational(text);
        if (!q) throw py::value_error("cannot parse rational literal: '" + text + "'");
        a.push_back(std::move(*q));
    }
    auto sigma = newton_sigmas(a);
    std::vector<std::string> out;
    out.reserve(sigma.size());
    for (const auto& s : sigma) out.push_back(to_string(s));
    return out;
}

}  // namespace

PYBIND11_MODULE(_maskcheck, m) {
    m.doc() = "Sub-QMF refinement-mask validation: exact criteria and a certified numeric oracle";

    py::class_<Verdict>(m, "Verdict")
        .def_property_readonly("status", [](const Verdict& v) { return std::string(to_string(v.status)); })
        .def_readonly("margin", &Verdict::margin)
        .def_readonly("witness_angle", &Verdict::witness_angle)
        .def_readonly("witness_index", &Verdict::witness_index)
        .def_readonly("method", &Verdict::method)
        .def_readonly("boundary", &Verdict::boundary)
        .def_property_readonly("holds", &Verdict::holds)
        .def_property_readonly("fails", &Verdict::fails)
        .def("__repr__", [](const Verdict& v) {
            std::ostringstream os;
            os << "Verdict(" << to_string(v.status) << ", method='" << v.method << "', margin=" << v.margin << ")";
            return os.str();
        });

    py::class_<FactorCoefficients>(m, "FactorCoefficients")
        .def_readonly("f1", &FactorCoefficients::f1)
        .def_readonly("f2", &FactorCoefficients::f2)
        .def_readonly("f3", &FactorCoefficients::f3)
        .def("__repr__", [](const FactorCoefficients& f) {
            std::ostringstream os;
            os << "FactorCoefficients(" << f.f1 << ", " << f.f2 << ", " << f.f3 << ")";
            return os.str();
        });

    py::class_<RootSet>(m, "RootSet")
        .def_static("parse", &RootSet::parse, py::arg("literals"),
                    "Parse rational root literals; keeps exact coordinates.")
        .def_static("from_complex", &RootSet::from_complex, py::arg("roots"))
        .def_property_readonly("roots", [](const RootSet& r) { return r.roots(); })
        .def_property_readonly("degree", &RootSet::degree)
        .def_property_readonly("all_real", &RootSet::all_real)
        .def_property_readonly("has_minus_one", &RootSet::has_minus_one)
        .def_property_readonly("exact", [](const RootSet& r) { return r.exact().has_value(); })
        .def("appended", &RootSet::appended, py::arg("root"));

    py::class_<MaskCoefficients>(m, "MaskCoefficients")
        .def(py::init([](std::vector<Complex> coeffs, int offset) {
                 MaskCoefficients mask;
                 mask.coeffs = std::move(coeffs);
                 mask.offset = offset;
                 return mask;
             }),
             py::arg("coeffs"), py::arg("offset") = 0)
        .def_readonly("coeffs", &MaskCoefficients::coeffs)
        .def_readonly("offset", &MaskCoefficients::offset)
        .def_property_readonly("degree", &MaskCoefficients::degree);

    py::class_<SubQmfPolynomial>(m, "SubQmfPolynomial")
        .def_readonly("cos_coeffs", &SubQmfPolynomial::cos_coeffs)
        .def_readonly("sin_coeffs", &SubQmfPolynomial::sin_coeffs)
        .def("evaluate", &SubQmfPolynomial::evaluate, py::arg("phi"))
        .def("value_at_zero", &SubQmfPolynomial::value_at_zero)
        .def("cosine_only", &SubQmfPolynomial::cosine_only, py::arg("tol") = 1e-12);

    py::class_<CircleMaxCertificate>(m, "CircleMaxCertificate")
        .def_readonly("max_estimate", &CircleMaxCertificate::max_estimate)
        .def_readonly("argmax", &CircleMaxCertificate::argmax)
        .def_readonly("lipschitz_bound", &CircleMaxCertificate::lipschitz_bound)
        .def_readonly("grid_size", &CircleMaxCertificate::grid_size)
        .def_readonly("certified_upper_bound", &CircleMaxCertificate::certified_upper_bound);

    py::class_<OracleRun>(m, "OracleRun")
        .def_readonly("verdict", &OracleRun::verdict)
        .def_readonly("certificate", &OracleRun::certificate)
        .def_readonly("coefficient_bound", &OracleRun::coefficient_bound)
        .def_readonly("bernstein_bound", &OracleRun::bernstein_bound);

    py::class_<PhiHatSamples>(m, "PhiHatSamples")
        .def_readonly("xi_grid", &PhiHatSamples::xi_grid)
        .def_readonly("values", &PhiHatSamples::values)
        .def_readonly("truncation_depth", &PhiHatSamples::truncation_depth);

    py::class_<MallatReport>(m, "MallatReport")
        .def_readonly("normalized", &MallatReport::normalized)
        .def_readonly("decay", &MallatReport::decay)
        .def_readonly("sub_qmf", &MallatReport::sub_qmf)
        .def("passes", &MallatReport::pass);

    m.def("parse_roots", &RootSet::parse, py::arg("literals"));
    m.def("factor_coefficients", &factor_coefficients, py::arg("z0"));
    m.def("alpha_values", &alpha_values, py::arg("roots"));
    m.def("polynomial_from_roots", &polynomial_from_roots, py::arg("roots"));
    m.def("evaluate_mask", &evaluate_mask, py::arg("mask"), py::arg("xi"));
    m.def(
        "newton_sigmas", [](const std::vector<double>& a) { return newton_sigmas(a); }, py::arg("a"));
    m.def("newton_sigmas_exact", &sigmas_exact, py::arg("literals"),
          "Exact-rational sigmas; returns canonical fraction strings.");
    m.def(
        "difference_table", [](const std::vector<double>& rho) { return difference_table(rho); }, py::arg("rho"));

    m.def(
        "theorem_criterion",
        [](const RootSet& roots, const std::string& mode, double tol) {
            return theorem_criterion(roots, make_options(mode, tol));
        },
        py::arg("roots"), py::arg("mode") = "auto", py::arg("tol") = kDefaultTol);
    m.def(
        "corollary_nonpositive",
        [](const RootSet& roots, const std::string& mode, double tol) {
            return corollary_nonpositive(roots, make_options(mode, tol));
        },
        py::arg("roots"), py::arg("mode") = "auto", py::arg("tol") = kDefaultTol);
    m.def(
        "prop1_degree2",
        [](Complex z2, double tol) { return prop1_degree2(z2, CheckOptions{Mode::Float, tol}); }, py::arg("z2"),
        py::arg("tol") = kDefaultTol);
    m.def(
        "prop2_degree3",
        [](Complex z1, Complex z2, double tol) { return prop2_degree3(z1, z2, CheckOptions{Mode::Float, tol}); },
        py::arg("z1"), py::arg("z2"), py::arg("tol") = kDefaultTol);
    m.def(
        "corollary1_degree3_real",
        [](double x1, double x2, double tol) { return corollary1_degree3_real(x1, x2, CheckOptions{Mode::Float, tol}); },
        py::arg("x1"), py::arg("x2"), py::arg("tol") = kDefaultTol);
    m.def(
        "criterion_for",
        [](const RootSet& roots, const std::string& mode, double tol) {
            return criterion_for(roots, make_options(mode, tol));
        },
        py::arg("roots"), py::arg("mode") = "auto", py::arg("tol") = kDefaultTol);

    m.def("autocorrelation", &autocorrelation, py::arg("mask"));
    m.def("build_T", &build_T, py::arg("mask"));
    m.def("expanded_T_real_roots", &expanded_T_real_roots, py::arg("a"));
    m.def("max_on_circle", &max_on_circle, py::arg("T"), py::arg("grid"));
    m.def("coefficient_upper_bound", &coefficient_upper_bound, py::arg("T"));
    m.def("sub_qmf_check", &sub_qmf_check, py::arg("mask"), py::arg("tol") = kDefaultTol);
    m.def("run_sub_qmf_oracle", &run_sub_qmf_oracle, py::arg("mask"), py::arg("tol") = kDefaultTol,
          py::arg("initial_grid") = 0);

    m.def("phi_hat", &phi_hat, py::arg("mask"), py::arg("xi_grid"), py::arg("depth") = kDefaultCascadeDepth,
          py::arg("tol") = kDefaultTol);
    m.def("uniform_grid", &uniform_grid, py::arg("lo"), py::arg("hi"), py::arg("count"));
    m.def("mask_lipschitz_constant", &mask_lipschitz_constant, py::arg("mask"));
    m.def("mallat_preconditions", &mallat_preconditions, py::arg("mask"), py::arg("tol") = kDefaultTol);

    m.def("polynomial_roots", &polynomial_roots, py::arg("coeffs"));
    m.def("roots_from_coefficients", &roots_from_coefficients, py::arg("coeffs"));

    m.def(
        "difference_table_text",
        [](const std::vector<double>& roots, bool compat) {
            return render_difference_table(divided_difference_run(roots), compat);
        },
        py::arg("roots"), py::arg("compat") = false,
        "The table-and-verdict text form, matching the CLI table subcommand.");

#ifdef VERSION_INFO
#define MASKCHECK_STR_INNER(x) #x
#define MASKCHECK_STR(x) MASKCHECK_STR_INNER(x)
    m.attr("__version__") = MASKCHECK_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
