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

#include <optional>
#include <string>
#include <string_view>

namespace maskcheck {

enum class Status { Holds, Fails, Inconclusive };

std::string_view to_string(Status s);

/// Arithmetic selection for criteria. Auto picks exact when every input root
/// was given as a rational literal, float otherwise.
enum class Mode { Auto, Exact, Float };

std::optional<Mode> parse_mode(std::string_view text);
std::string_view to_string(Mode m);

struct CheckOptions {
    Mode mode = Mode::Auto;
    double tol = 1e-9;  // absolute tolerance on criterion margins in float mode
};

/// Outcome of one criterion or oracle run.
///
/// margin is the signed distance to the decision boundary (>= 0 means the
/// inequality side is satisfied). For the sufficient condition the failure
/// witness is the first violated difference index k*; for the oracle it is
/// the angle phi* where T exceeds 1. boundary marks float-mode decisions
/// whose margin fell inside [-tol, tol].
struct Verdict {
    Status status = Status::Inconclusive;
    double margin = 0.0;
    std::optional<double> witness_angle;
    std::optional<int> witness_index;
    std::string method;
    bool boundary = false;

    bool holds() const { return status == Status::Holds; }
    bool fails() const { return status == Status::Fails; }
};

}  // namespace maskcheck
