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

#include "maskcheck/exact.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace maskcheck {
namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// [+-]?digits[.digits][ (e|E) [+-]?digits ]  ->  exact rational.
std::optional<Rational> parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exp10 = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view etail = s.substr(epos + 1);
        std::string ebuf(etail);
        if (ebuf.empty()) return std::nullopt;
        char* end = nullptr;
        exp10 = std::strtol(ebuf.c_str(), &end, 10);
        if (end == nullptr || *end != '\0') return std::nullopt;
        s = s.substr(0, epos);
    }

    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ipart = s.substr(0, dot);
        std::string_view fpart = s.substr(dot + 1);
        if (ipart.empty() && fpart.empty()) return std::nullopt;
        if (!ipart.empty() && !is_digits(ipart)) return std::nullopt;
        if (!fpart.empty() && !is_digits(fpart)) return std::nullopt;
        digits = std::string(ipart) + std::string(fpart);
        exp10 -= static_cast<long>(fpart.size());
    } else {
        if (!is_digits(s)) return std::nullopt;
        digits = std::string(s);
    }
    if (digits.empty()) return std::nullopt;

    Integer num(digits, 10);
    Rational value(num);
    if (exp10 > 0) {
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10));
        value *= Rational(scale);
    } else if (exp10 < 0) {
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(-exp10));
        value /= Rational(scale);
    }
    if (negative) value = -value;
    value.canonicalize();
    return value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_decimal(text.substr(0, slash));
        auto den = parse_decimal(text.substr(slash + 1));
        if (!num || !den || sgn(*den) == 0) return std::nullopt;
        Rational value = *num / *den;
        value.canonicalize();
        return value;
    }
    return parse_decimal(text);
}

std::optional<RationalPoint> parse_rational_complex(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    if (text.back() == 'i' || text.back() == 'I') {
        std::string_view body = text.substr(0, text.size() - 1);
        // Split at the last +/- that is not a leading sign or an exponent sign.
        std::size_t split = std::string_view::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
            char c = body[k];
            if (c != '+' && c != '-') continue;
            char prev = body[k - 1];
            if (prev == 'e' || prev == 'E' || prev == '/' || prev == '+' || prev == '-') continue;
            split = k;
            break;
        }
        std::string_view re_part, im_part;
        if (split == std::string_view::npos) {
            re_part = std::string_view("0");
            im_part = body;
        } else {
            re_part = body.substr(0, split);
            im_part = body.substr(split);  // keeps the sign
        }
        if (im_part.empty() || im_part == "+" || im_part == "-") {
            // "i", "x+i", "x-i"
            std::string sign(im_part);
            im_part = std::string_view();
            auto re = parse_rational(re_part);
            if (!re) return std::nullopt;
            Rational one(1);
            return RationalPoint{*re, sign == "-" ? Rational(-1) : one};
        }
        auto re = parse_rational(re_part);
        auto im = parse_rational(im_part);
        if (!re || !im) return std::nullopt;
        return RationalPoint{*re, *im};
    }

    auto re = parse_rational(text);
    if (!re) return std::nullopt;
    return RationalPoint{*re, Rational(0)};
}

Integer binomial(unsigned n, unsigned k) {
    Integer out;
    if (k > n) return Integer(0);
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer multinomial3(unsigned n, unsigned a, unsigned b, unsigned c) {
    if (a + b + c != n) throw std::invalid_argument("multinomial3: parts must sum to n");
    Integer out = binomial(n, a);
    out *= binomial(n - a, b);
    return out;
}

Rational pow2_inverse(unsigned n) {
    Integer den = Integer(1) << n;
    Rational q(Integer(1), den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace maskcheck
