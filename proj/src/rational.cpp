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

#include "rbacsev/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rbacsev {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = denominator < 0 ? Value(-BigInt(numerator), -BigInt(denominator))
                             : Value(BigInt(numerator), BigInt(denominator));
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = denominator < 0 ? Value(BigInt(-numerator), BigInt(-denominator)) : Value(numerator, denominator);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.value_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (lhs.value_ < rhs.value_) {
        return std::strong_ordering::less;
    }
    if (rhs.value_ < lhs.value_) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    const BigInt num = numerator();
    const BigInt den = denominator();
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) {
        throw std::invalid_argument("negative digit count");
    }
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }

    const BigInt num = numerator();
    const BigInt den = denominator();
    const bool negative = num < 0;
    const BigInt scaled = (negative ? BigInt(-num) : num) * scale;

    BigInt quotient = scaled / den;
    const BigInt twice_remainder = 2 * (scaled % den);
    if (twice_remainder > den || (twice_remainder == den && (quotient & 1) != 0)) {
        ++quotient;
    }

    std::string body = quotient.str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    if (negative && quotient != 0) {
        body.insert(0, 1, '-');
    }
    return body;
}

double Rational::to_double() const {
    return value_.convert_to<double>();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)), BigInt(1));
        }
        return Rational(BigInt(std::string(text.substr(0, slash))), BigInt(std::string(text.substr(slash + 1))));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

} // namespace rbacsev
