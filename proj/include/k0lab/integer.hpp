// Copyright 2026 The k0lab Authors
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

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "k0lab/error.hpp"

namespace k0lab {

// Expression templates off: every arithmetic result is a plain Integer.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline Integer abs(const Integer& x) { return x.sign() < 0 ? Integer(-x) : x; }

inline int sign(const Integer& x) { return x.sign(); }

/// Non-negative gcd; gcd(0, 0) == 0.
inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Non-negative lcm; lcm(x, 0) == 0.
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(a) / gcd(a, b) * abs(b);
}

inline Integer pow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// Representative of x mod m in [0, |m|). m must be nonzero.
inline Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r.sign() < 0) r += abs(m);
  return r;
}

/// Extended Euclid: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
inline Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r.sign() < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

inline std::string to_string(const Integer& x) { return x.str(); }

/// Parses an optionally signed decimal integer of any length. Accepts an
/// ASCII '-' or '+' prefix; anything else raises ParseError (line 0).
inline Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw ParseError(0, "expected an integer, got '" + std::string(text) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') throw ParseError(0, "expected an integer, got '" + std::string(text) + "'");
    value *= 10;
    value += c - '0';
  }
  return negative ? Integer(-value) : value;
}

}  // namespace k0lab
