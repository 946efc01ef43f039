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

#include <random>
#include <thread>

#include "k0lab/k0lab.hpp"

namespace k0lab {
namespace {

TEST(Circulant, MatrixLayout) {
  const Circulant c(3, {1, 2, 3});
  EXPECT_EQ(c.to_matrix(), (IntMatrix{{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}));
  EXPECT_EQ(Circulant::from_matrix(c.to_matrix()).first_row(), c.first_row());
  EXPECT_THROW(Circulant::from_matrix(IntMatrix{{1, 2}, {1, 2}}), DomainError);
  EXPECT_THROW(Circulant(3, {1, 2}), DomainError);
}

TEST(Circulant, CayleyRepresenter) {
  const auto c = cayley_circulant(make_cyclic_spec(6, {2, 3}));
  EXPECT_EQ(representer(c), (IntPolynomial{1, 0, 0, -1, -1}));  // 1 - x^3 - x^4
  EXPECT_EQ(c.to_matrix(), build_cayley(make_cyclic_spec(6, {2, 3})).i_minus_a_transpose());
  // the loop generator sits on the diagonal
  const auto loop = cayley_circulant(make_cyclic_spec(3, {0, 1}, {2, 1}));
  EXPECT_EQ(loop.first_row()[0], -1);
}

TEST(Circulant, FrozenDeterminants) {
  EXPECT_EQ(circulant_det(cayley_circulant(make_cyclic_spec(6, {2, 3}))), -7);
  EXPECT_EQ(circulant_det(cayley_circulant(make_cyclic_spec(6, {1, 2}, {1, 4}))), 3800);
  EXPECT_EQ(circulant_det(cayley_circulant(make_cyclic_spec(5, {1, 2}))), -11);
  EXPECT_EQ(circulant_det(cayley_circulant(make_cyclic_spec(6, {1, 5}))), 0);
}

TEST(Circulant, ResultantAgreesWithBareiss) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    std::vector<Integer> row(n);
    for (auto& x : row) x = coef(rng);
    const Circulant c(n, row);
    EXPECT_EQ(circulant_det(c), det(c.to_matrix()));
  }
}

TEST(Circulant, NullityMatchesRankDefect) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<Integer> row(n);
    for (auto& x : row) x = coef(rng);
    const Circulant c(n, row);
    EXPECT_EQ(cyclotomic_nullity(representer(c), n), n - rank(c.to_matrix()));
  }
  // C_6(1,5): 1 - x - x^5 vanishes at the primitive 6th roots
  const auto c = cayley_circulant(make_cyclic_spec(6, {1, 5}));
  EXPECT_EQ(singular_cyclotomic_divisors(representer(c), 6), (std::vector<std::size_t>{6}));
  EXPECT_EQ(cyclotomic_nullity(representer(c), 6), 2u);
  EXPECT_EQ(cyclotomic_nullity(IntPolynomial(), 4), 4u);
}

TEST(Circulant, CyclotomicCacheIsThreadSafe) {
  std::vector<std::thread> workers;
  std::vector<IntPolynomial> got(8);
  for (std::size_t t = 0; t < got.size(); ++t)
    workers.emplace_back([&, t] {
      for (std::size_t d = 1; d <= 60; ++d) got[t] = cyclotomic(d + t);
    });
  for (auto& w : workers) w.join();
  for (std::size_t t = 0; t < got.size(); ++t) EXPECT_EQ(got[t], cyclotomic(60 + t));
}

TEST(DetSign, ClosedFormOnGeneratingSets) {
  // S ⊆ {1, ..., n-1}: the formula holds whenever S generates Z_n
  for (std::size_t n = 2; n <= 10; ++n)
    for (std::size_t s1 = 1; s1 < n; ++s1)
      for (std::size_t s2 = s1 + 1; s2 < n; ++s2)
        for (std::uint64_t a = 1; a <= 2; ++a)
          for (std::uint64_t b = 1; b <= 2; ++b) {
            const auto spec = make_cyclic_spec(n, {static_cast<long long>(s1), static_cast<long long>(s2)}, {a, b});
            if (!spec.generates()) continue;
            EXPECT_EQ(det_sign_closed_form(spec), sign(circulant_det(cayley_circulant(spec))))
                << describe(spec) << " w=(" << a << "," << b << ")";
          }
}

TEST(DetSign, LoopGeneratorCounterexample) {
  // With 0 in S the stated sign rule can fail: C_6({0,1,2}, (2,1,1)) is singular.
  const auto spec = make_cyclic_spec(6, {0, 1, 2}, {2, 1, 1});
  EXPECT_EQ(circulant_det(cayley_circulant(spec)), 0);
}

TEST(TwoGenerator, FrozenCases) {
  EXPECT_EQ(two_generator_singularity(6, 1, 5, 1, 1).which, SingularCase::case1);
  EXPECT_TRUE(two_generator_singularity(4, 2, 3, 2, 1).singular);
  EXPECT_EQ(two_generator_singularity(4, 2, 3, 2, 1).which, SingularCase::case2);
  EXPECT_EQ(two_generator_singularity(4, 1, 2, 1, 2).which, SingularCase::case3);
  EXPECT_FALSE(two_generator_singularity(6, 2, 3, 1, 1).singular);
  EXPECT_THROW(two_generator_singularity(6, 3, 2, 1, 1), DomainError);
}

TEST(TwoGenerator, AgreesWithCyclotomicTestOnGeneratingPairs) {
  for (std::size_t n = 2; n <= 24; ++n)
    for (std::size_t s1 = 0; s1 < n; ++s1)
      for (std::size_t s2 = s1 + 1; s2 < n; ++s2)
        for (std::uint64_t a = 1; a <= 3; ++a)
          for (std::uint64_t b = 1; b <= 3; ++b) {
            const auto spec = make_cyclic_spec(n, {static_cast<long long>(s1), static_cast<long long>(s2)}, {a, b});
            if (!spec.generates()) continue;
            const bool singular = cyclotomic_nullity(representer(cayley_circulant(spec)), n) > 0;
            EXPECT_EQ(two_generator_singularity(n, s1, s2, a, b).singular, singular) << describe(spec);
          }
}

}  // namespace
}  // namespace k0lab
