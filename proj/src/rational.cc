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

#include "probex/rational.h"

#include <cctype>
#include <cmath>

#include "probex/errors.h"

namespace probex {

namespace mp = boost::multiprecision;

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kDomainTooLarge: return "DomainTooLarge";
    case ErrorCode::kUndefinedConditional: return "UndefinedConditional";
    case ErrorCode::kBackendMismatch: return "BackendMismatch";
    case ErrorCode::kUnsatisfiable: return "Unsatisfiable";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kRequiresPreprocessing: return "RequiresPreprocessing";
    case ErrorCode::kLoadError: return "LoadError";
  }
  return "Unknown";
}

namespace {

bool IsInteger(std::string_view text, bool allow_sign) {
  if (text.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && text[0] == '-') start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!IsInteger(num, true) || !IsInteger(den, false)) {
    throw Error(ErrorCode::kInvalidInput, "malformed rational '" + std::string(text) + "'");
  }
  const mp::mpz_int p{std::string(num)};
  const mp::mpz_int q{std::string(den)};
  if (q == 0) {
    throw Error(ErrorCode::kInvalidInput, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(p) / Rational(q);
}

std::string ToString(const Rational& value) {
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

double Log(const Rational& value) {
  if (value <= 0) {
    throw Error(ErrorCode::kInvalidInput, "log of non-positive rational " + ToString(value));
  }
  auto log_int = [](const mp::mpz_int& z) {
    const std::size_t bits = mp::msb(z) + 1;
    if (bits < 1000) return std::log(z.convert_to<double>());
    const std::size_t shift = bits - 64;
    const mp::mpz_int top = z >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
  };
  return log_int(mp::numerator(value)) - log_int(mp::denominator(value));
}

}  // namespace probex
