# Copyright 2026 The maskcheck authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Sub-QMF refinement-mask validation.

Decides whether a polynomial refinement mask, given by roots or filter
coefficients, satisfies |m0(xi)|^2 + |m0(xi + 1/2)|^2 <= 1: exact low-degree
criteria, a symmetric-means sufficient condition for arbitrary degree, and
an independent certified numeric oracle, plus refinement-function sampling
by the truncated infinite product.
"""

from ._maskcheck import (
    CircleMaxCertificate,
    FactorCoefficients,
    MallatReport,
    MaskCoefficients,
    OracleRun,
    PhiHatSamples,
    RootSet,
    SubQmfPolynomial,
    Verdict,
    __version__,
    alpha_values,
    autocorrelation,
    build_T,
    coefficient_upper_bound,
    corollary1_degree3_real,
    corollary_nonpositive,
    criterion_for,
    difference_table,
    difference_table_text,
    evaluate_mask,
    expanded_T_real_roots,
    factor_coefficients,
    mallat_preconditions,
    mask_lipschitz_constant,
    max_on_circle,
    newton_sigmas,
    newton_sigmas_exact,
    parse_roots,
    phi_hat,
    polynomial_from_roots,
    polynomial_roots,
    prop1_degree2,
    prop2_degree3,
    roots_from_coefficients,
    run_sub_qmf_oracle,
    sub_qmf_check,
    theorem_criterion,
    uniform_grid,
)

__all__ = [
    "CircleMaxCertificate",
    "FactorCoefficients",
    "MallatReport",
    "MaskCoefficients",
    "OracleRun",
    "PhiHatSamples",
    "RootSet",
    "SubQmfPolynomial",
    "Verdict",
    "__version__",
    "alpha_values",
    "autocorrelation",
    "build_T",
    "coefficient_upper_bound",
    "corollary1_degree3_real",
    "corollary_nonpositive",
    "criterion_for",
    "difference_table",
    "difference_table_text",
    "evaluate_mask",
    "expanded_T_real_roots",
    "factor_coefficients",
    "mallat_preconditions",
    "mask_lipschitz_constant",
    "max_on_circle",
    "newton_sigmas",
    "newton_sigmas_exact",
    "parse_roots",
    "phi_hat",
    "polynomial_from_roots",
    "polynomial_roots",
    "prop1_degree2",
    "prop2_degree3",
    "roots_from_coefficients",
    "run_sub_qmf_oracle",
    "sub_qmf_check",
    "theorem_criterion",
    "uniform_grid",
]
