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

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "k0lab/error.hpp"
#include "k0lab/integer.hpp"

namespace k0lab {

/// Polynomial with integer coefficients, lowest degree first. Trailing zeros
/// are stripped; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { trim(); }

  static IntPolynomial monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }
  /// x^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n) {
    std::vector<Integer> v(n + 1);
    v[0] = -1;
    v[n] += 1;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Integer content() const {
    Integer g = 0;
    for (const Integer& c : coeffs_) g = gcd(g, c);
    return g;
  }

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator*(const Integer& k, const IntPolynomial& p) {
    std::vector<Integer> v = p.coeffs_;
    for (auto& c : v) c *= k;
    return IntPolynomial(std::move(v));
  }
  /// Exact division of every coefficient by k; throws if k does not divide.
  IntPolynomial divide_exact(const Integer& k) const {
    std::vector<Integer> v = coeffs_;
    for (auto& c : v) {
      if (!(c % k).is_zero()) throw DomainError("IntPolynomial::divide_exact: not divisible");
      c /= k;
    }
    return IntPolynomial(std::move(v));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// e.g. "1 - x^3 - x^4"
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Integer> coeffs_;
};

inline std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c.is_zero()) continue;
    Integer mag = abs(c);
    if (s.empty())
      s += c.sign() < 0 ? "-" : "";
    else
      s += c.sign() < 0 ? " - " : " + ";
    const bool show_mag = i == 0 || mag != 1;
    if (show_mag) s += mag.str();
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

/// Quotient of num / den in Z[x] when den divides num exactly, else nullopt.
inline std::optional<IntPolynomial> exact_quotient(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw DomainError("exact_quotient: division by the zero polynomial");
  if (num.is_zero()) return IntPolynomial{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<Integer> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i].is_zero()) continue;
    if (!(rem[i] % d[dd]).is_zero()) return std::nullopt;
    Integer q = rem[i] / d[dd];
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d[j];
    quot[i - dd] = std::move(q);
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (!rem[i].is_zero()) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

/// Pseudo-remainder: remainder of lc(b)^(deg a - deg b + 1) * a divided by b.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo_remainder: division by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const Integer& lead = d[db];
  // One multiplication by lc(b) per eliminated degree, deg a - deg b + 1 in all.
  for (std::size_t i = rem.size(); i-- > db;) {
    Integer top = rem[i];
    for (auto& c : rem) c *= lead;
    if (!top.is_zero())
      for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= top * d[j];
  }
  rem.resize(db);
  return IntPolynomial(std::move(rem));
}

/// Resultant Res(a, b) by the subresultant PRS, entirely in Z[x].
/// Convention: Res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r).
inline Integer resultant(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  if (a.degree() == 0 && b.degree() == 0) return Integer(1);
  if (a.degree() == 0) return pow(a.leading(), static_cast<unsigned>(b.degree()));
  if (b.degree() == 0) return pow(b.leading(), static_cast<unsigned>(a.degree()));

  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
  }
  const Integer ca = a.content(), cb = b.content();
  a = a.divide_exact(ca);
  b = b.divide_exact(cb);
  const Integer t = pow(ca, static_cast<unsigned>(b.degree())) * pow(cb, static_cast<unsigned>(a.degree()));
  Integer g = 1, h = 1;

  for (;;) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return Integer(0);
    b = r.divide_exact(g * pow(h, static_cast<unsigned>(delta)));
    g = a.leading();
    // h <- g^delta / h^(delta - 1), exact; unchanged when delta == 0.
    if (delta > 0) h = pow(g, static_cast<unsigned>(delta)) / pow(h, static_cast<unsigned>(delta - 1));
    if (b.degree() == 0) {
      const auto da = static_cast<unsigned>(a.degree());
      return s * t * (pow(b.leading(), da) / pow(h, da - 1));
    }
  }
}

}  // namespace k0lab
