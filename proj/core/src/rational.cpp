// Copyright 2026 The ofal Authors
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

#include "ofal/rational.hpp"

#include "ofal/error.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cctype>
#include <iomanip>
#include <sstream>

namespace ofal {

namespace {

bool is_integer_literal(std::string_view text, bool allow_sign)
{
    if (!text.empty() && allow_sign && (text.front() == '-' || text.front() == '+'))
        text.remove_prefix(1);
    if (text.empty())
        return false;
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
        throw ValidationError("malformed rational '" + std::string(text) + "'");

    Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
    Integer d{std::string(den)};
    if (d == 0)
        throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

std::string format_rational(const Rational& value)
{
    const Integer& n = numerator(value);
    const Integer& d = denominator(value);
    if (d == 1)
        return n.str();
    return n.str() + "/" + d.str();
}

std::string format_decimal(const Rational& value, int significant)
{
    using Decimal = boost::multiprecision::cpp_dec_float_50;
    const Decimal q = Decimal(numerator(value)) / Decimal(denominator(value));
    std::ostringstream out;
    out << std::setprecision(significant) << q;
    return out.str();
}

Rational pow2(int exponent)
{
    Integer p = 1;
    p <<= (exponent < 0 ? -exponent : exponent);
    return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace ofal
