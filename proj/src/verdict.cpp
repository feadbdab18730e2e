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

#include "maskcheck/verdict.hpp"

namespace maskcheck {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Holds: return "HOLDS";
        case Status::Fails: return "FAILS";
        case Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "auto") return Mode::Auto;
    if (text == "exact") return Mode::Exact;
    if (text == "float") return Mode::Float;
    return std::nullopt;
}

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::Auto: return "auto";
        case Mode::Exact: return "exact";
        case Mode::Float: return "float";
    }
    return "auto";
}

}  // namespace maskcheck
