/*
    Copyright 2026 The rbac-sev Authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rbacsev {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Path products over deep trees quickly outgrow 64 bits, so
/// both parts are arbitrary precision.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {} // NOLINT: implicit by design of arithmetic types
    Rational(std::int64_t numerator, std::int64_t denominator);
    Rational(const BigInt& numerator, const BigInt& denominator);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// "n/d", or just "n" when the denominator is 1.
    std::string to_string() const;

    /// Fixed-point rendering with `digits` fractional digits, rounding half to even.
    std::string to_decimal(int digits) const;

    /// Closest double; for presentation and tolerance checks only.
    double to_double() const;

    /// Parses "n", "-n" or "n/d".
    static Rational parse(std::string_view text);

private:
    using Value = boost::multiprecision::cpp_rational;

    explicit Rational(Value value) : value_(std::move(value)) {}

    Value value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace rbacsev
