/*
 * Copyright 2026 The probex Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PROBEX_RATIONAL_H_
#define PROBEX_RATIONAL_H_

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace probex {

// Exact arbitrary-precision rational, always held in canonical reduced form.
// Expression templates are disabled so the type composes cleanly with Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Parses "p/q" or a bare integer "p". Whitespace, decimals, signs on the
// denominator and zero denominators are rejected with kInvalidInput.
Rational ParseRational(std::string_view text);

// Canonical "p/q" form; integers are written with a unit denominator ("1/1").
std::string ToString(const Rational& value);

double ToDouble(const Rational& value);

// Natural log of a strictly positive rational, accurate for huge
// numerators/denominators where a plain conversion to double would overflow.
double Log(const Rational& value);

}  // namespace probex

#endif  // PROBEX_RATIONAL_H_
