// Copyright 2026 The hcqaoa Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "error.hpp"

namespace hcqaoa {

/// Exact fraction over int64 kept in lowest terms with a positive
/// denominator. Intermediate products use 128-bit arithmetic and overflow of
/// the reduced result throws.
class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    [[nodiscard]] constexpr std::int64_t numerator() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t denominator() const noexcept { return den_; }

    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }
    Rational &operator/=(const Rational &o) { return *this = *this / o; }

    friend Rational operator-(const Rational &a) { return make(-wide(a.num_), a.den_); }
    friend Rational operator+(const Rational &a, const Rational &b) {
        return make(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                    wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational &a, const Rational &b) {
        return make(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                    wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational &a, const Rational &b) {
        return make(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.num_ == 0) {
            fail(ErrorKind::InvalidArgument, "rational division by zero");
        }
        return make(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
    }

    friend constexpr bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
        os << r.num_;
        if (r.den_ != 1) {
            os << '/' << r.den_;
        }
        return os;
    }

  private:
    __extension__ typedef __int128 wide_t;

    static constexpr wide_t wide(std::int64_t v) { return v; }

    static wide_t gcd(wide_t a, wide_t b) {
        a = a < 0 ? -a : a;
        b = b < 0 ? -b : b;
        while (b != 0) {
            const wide_t t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(wide_t num, wide_t den) {
        if (den == 0) {
            fail(ErrorKind::InvalidArgument, "zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const wide_t g = gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr wide_t lo = INT64_MIN;
        constexpr wide_t hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) {
            fail(ErrorKind::InvalidArgument, "rational overflow");
        }
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) { *this = make(num, den); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline double to_double(const Rational &r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" +
           std::to_string(r.denominator());
}

/// Parses "3", "-7", "1/2" or a terminating decimal such as "2.5".
inline Rational parse_rational(const std::string &text) {
    try {
        if (const auto slash = text.find('/'); slash != std::string::npos) {
            std::size_t used_num = 0;
            std::size_t used_den = 0;
            const auto num = std::stoll(text.substr(0, slash), &used_num);
            const auto den = std::stoll(text.substr(slash + 1), &used_den);
            if (used_num != slash || used_den != text.size() - slash - 1 ||
                den == 0) {
                fail(ErrorKind::MalformedInput, "bad rational '" + text + "'");
            }
            return {num, den};
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) {
            std::size_t used = 0;
            const auto value = std::stoll(text, &used);
            if (used != text.size()) {
                fail(ErrorKind::MalformedInput, "bad rational '" + text + "'");
            }
            return {value, 1};
        }
        const auto frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 15 ||
            frac.find_first_not_of("0123456789") != std::string::npos) {
            fail(ErrorKind::MalformedInput, "bad decimal '" + text + "'");
        }
        std::string int_part = text.substr(0, dot);
        const bool negative = !int_part.empty() && int_part.front() == '-';
        if (int_part.empty() || int_part == "-" || int_part == "+") {
            int_part += "0";
        }
        std::size_t used = 0;
        const auto whole = std::stoll(int_part, &used);
        if (used != int_part.size()) {
            fail(ErrorKind::MalformedInput, "bad decimal '" + text + "'");
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        const Rational fraction(std::stoll(frac), scale);
        return negative ? Rational(whole) - fraction
                        : Rational(whole) + fraction;
    } catch (const std::logic_error &) {
        fail(ErrorKind::MalformedInput, "bad rational '" + text + "'");
    }
}

} // namespace hcqaoa
