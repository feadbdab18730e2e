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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace maskcheck {

/// Exact arithmetic used by the rational criterion path. Criteria decided
/// over Rational carry zero tolerance; everything else runs on double.
using Rational = mpq_class;
using Integer = mpz_class;

/// A point of the complex plane with exact rational coordinates.
struct RationalPoint {
    Rational re;
    Rational im;

    bool is_real() const { return sgn(im) == 0; }
};

/// Parses "3", "-5/4", "0.125", "2.5e-3" into an exact rational.
/// Decimal and scientific literals are converted exactly (no rounding).
std::optional<Rational> parse_rational(std::string_view text);

/// Parses a complex literal: "x", "x+yi", "x-yi", "yi", "i", "-i".
/// Both parts must be rational literals.
std::optional<RationalPoint> parse_rational_complex(std::string_view text);

Integer binomial(unsigned n, unsigned k);

/// n! / (a! b! c!) with a + b + c == n.
Integer multinomial3(unsigned n, unsigned a, unsigned b, unsigned c);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(const Integer& z) { return z.get_d(); }

/// 2^-n as an exact rational.
Rational pow2_inverse(unsigned n);

std::string to_string(const Rational& q);

}  // namespace maskcheck
