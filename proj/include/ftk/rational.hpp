// Copyright 2026 The ftk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "ftk/error.hpp"

namespace ftk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" with an optional leading '-'. Rejects zero
/// denominators and anything else.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::SchemaError, "bad rational '" + std::string(text) + "': " + why);
  };
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw bad("expected p/q with decimal digits");
  const Integer p(std::string(num).c_str());
  const Integer q(std::string(den).c_str());
  if (q == 0) throw bad("zero denominator");
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

/// "p/q" in lowest terms, or "p" for integers.
inline std::string format_rational(const Rational& r) {
  const Integer p = boost::multiprecision::numerator(r);
  const Integer q = boost::multiprecision::denominator(r);
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

/// Smallest integer ≥ r.
inline Integer ceil_rational(const Rational& r) {
  const Integer p = boost::multiprecision::numerator(r);
  const Integer q = boost::multiprecision::denominator(r);
  Integer fl = p / q;
  if (p % q != 0 && p > 0) fl += 1;
  return fl;
}

}  // namespace ftk
