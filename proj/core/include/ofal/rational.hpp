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

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace ofal {

// Exact rational over arbitrary-precision integers. Always kept in lowest
// terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q", "p" or "-p/q". Whitespace is not accepted.
/// Throws ValidationError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Decimal rendering with `significant` significant digits. Display only.
std::string format_decimal(const Rational& value, int significant = 10);

inline Rational abs_diff(const Rational& a, const Rational& b)
{
    return a < b ? Rational(b - a) : Rational(a - b);
}

/// 2^exponent for any integer exponent, exact.
Rational pow2(int exponent);

}  // namespace ofal
