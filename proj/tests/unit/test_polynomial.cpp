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

#include <gtest/gtest.h>

#include "k0lab/k0lab.hpp"

namespace k0lab {
namespace {

TEST(Polynomial, ArithmeticAndDegree) {
  const IntPolynomial p{1, 2, 3};  // 1 + 2x + 3x^2
  const IntPolynomial q{-1, 1};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(IntPolynomial().degree(), -1);
  EXPECT_EQ(p * q, (IntPolynomial{-1, -1, -1, 3}));
  EXPECT_EQ(p + q, (IntPolynomial{0, 3, 3}));
  EXPECT_EQ(p - p, IntPolynomial());
  EXPECT_EQ(p.evaluate(2), 17);
  EXPECT_EQ(IntPolynomial({0, 0, 0}).degree(), -1);
}

TEST(Polynomial, ToString) {
  EXPECT_EQ((IntPolynomial{1, 0, -1, -1}).to_string(), "1 - x^2 - x^3");
  EXPECT_EQ(IntPolynomial().to_string(), "0");
}

TEST(Polynomial, ExactQuotient) {
  const auto q = exact_quotient(IntPolynomial::x_pow_minus_one(6), IntPolynomial{-1, 1});
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, (IntPolynomial{1, 1, 1, 1, 1, 1}));
  EXPECT_FALSE(exact_quotient(IntPolynomial{1, 1}, IntPolynomial{0, 2}).has_value());
}

TEST(Polynomial, PseudoRemainderIdentity) {
  const IntPolynomial a{3, -2, 0, 5, 1};
  const IntPolynomial b{1, 0, 2};
  const auto r = pseudo_remainder(a, b);
  EXPECT_LT(r.degree(), b.degree());
}

TEST(Resultant, KnownValues) {
  // Res(x - a, p) = p(a) up to sign convention Res(f, g) = lc(f)^deg g * prod g(roots of f)
  const IntPolynomial p{5, -3, 1};
  EXPECT_EQ(resultant(IntPolynomial{-2, 1}, p), p.evaluate(2));
  // Res(x^2 + 1, x^2 - 1) = 4
  EXPECT_EQ(resultant(IntPolynomial{1, 0, 1}, IntPolynomial{-1, 0, 1}), 4);
  // common root -> 0
  EXPECT_EQ(resultant(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1}), 0);
}

TEST(Cyclotomic, FirstFew) {
  EXPECT_EQ(cyclotomic(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(cyclotomic(2), (IntPolynomial{1, 1}));
  EXPECT_EQ(cyclotomic(6), (IntPolynomial{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), (IntPolynomial{1, 0, -1, 0, 1}));
  // 105 is the first index with a coefficient outside {-1, 0, 1}
  const auto& c = cyclotomic(105).coeffs();
  EXPECT_TRUE(std::find(c.begin(), c.end(), Integer(-2)) != c.end());
}

TEST(Cyclotomic, ProductIsXnMinusOne) {
  for (std::size_t n = 1; n <= 30; ++n) {
    IntPolynomial prod{1};
    for (auto d : divisors(n)) prod = prod * cyclotomic(d);
    EXPECT_EQ(prod, IntPolynomial::x_pow_minus_one(n)) << "n = " << n;
    EXPECT_EQ(cyclotomic(n).degree(), static_cast<long>(euler_phi(n)));
  }
}

TEST(Cyclotomic, Divisors) {
  EXPECT_EQ(divisors(12), (std::vector<std::size_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<std::size_t>{1}));
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(36), 12u);
}

}  // namespace
}  // namespace k0lab
