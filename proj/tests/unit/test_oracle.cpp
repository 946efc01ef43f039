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

#include "k0lab/k0lab.hpp"
#include "oracle/oracle.hpp"

// The engine against brute-force references.

namespace k0lab {
namespace {

TEST(Oracle, SelfCheck) {
  EXPECT_EQ(oracle::det_via_cofactor(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), -144);
  EXPECT_EQ(oracle::snf_via_determinant_divisors(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}),
            (std::vector<Integer>{2, 6, 12}));
  EXPECT_THROW(oracle::snf_via_determinant_divisors(IntMatrix(2, 2)), std::domain_error);
  EXPECT_THROW(oracle::det_via_cofactor(IntMatrix(9, 9)), std::invalid_argument);
}

TEST(Oracle, CompleteGraphDeterminantDivisors) {
  const auto k4 = build_complete_graph(4, 1).i_minus_a_transpose();
  EXPECT_EQ(oracle::snf_via_determinant_divisors(k4), (std::vector<Integer>{1, 1, 1, 3}));
  EXPECT_EQ(snf(k4).diag, (std::vector<Integer>{1, 1, 1, 3}));
}

TEST(Oracle, SnfAgreesWithDeterminantDivisors) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> coef(-5, 5);
  int compared = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = coef(rng);
    if (det(m).is_zero()) continue;
    EXPECT_EQ(snf(m).diag, oracle::snf_via_determinant_divisors(m)) << m.to_string();
    ++compared;
  }
  EXPECT_GT(compared, 50);
}

TEST(Oracle, DeterminantThreeWays) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t s1 = 0; s1 < n; ++s1)
      for (std::size_t s2 = s1 + 1; s2 < n; ++s2) {
        const auto spec = make_cyclic_spec(n, {static_cast<long long>(s1), static_cast<long long>(s2)}, {2, 1});
        const auto c = cayley_circulant(spec);
        const Integer cof = oracle::det_via_cofactor(c.to_matrix());
        EXPECT_EQ(det(c.to_matrix()), cof) << describe(spec);
        EXPECT_EQ(circulant_det(c), cof) << describe(spec);
      }
}

TEST(Oracle, IdentityOrderByLatticeMembership) {
  // order of the all-ones class = least d with d * 1 in the column span of I - A^t
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t s1 = 1; s1 < n; ++s1)
      for (std::size_t s2 = s1 + 1; s2 < n; ++s2)
        for (std::uint64_t a = 1; a <= 3; ++a) {
          const auto spec = make_cyclic_spec(n, {static_cast<long long>(s1), static_cast<long long>(s2)}, {a, 1});
          if (!spec.generates()) continue;
          const auto r = analyze(spec, AnalyzeOptions{});
          const IntMatrix m = build_cayley(spec).i_minus_a_transpose();
          const std::vector<Integer> ones(n, Integer(1));
          if (r.identity_order->infinite) {
            for (Integer d = 1; d <= 30; ++d) EXPECT_FALSE(oracle::lattice_membership(m, ones, d)) << describe(spec);
            continue;
          }
          const Integer o = r.identity_order->value;
          EXPECT_TRUE(oracle::lattice_membership(m, ones, o)) << describe(spec);
          for (Integer d = 1; d < o; ++d) EXPECT_FALSE(oracle::lattice_membership(m, ones, d)) << describe(spec);
        }
}

TEST(Oracle, D33AllOnesHasOrderTwo) {
  const IntMatrix m{{1, 0, -3}, {-3, 1, 0}, {0, -3, 1}};
  const std::vector<Integer> ones(3, Integer(1));
  EXPECT_FALSE(oracle::lattice_membership(m, ones, 1));
  EXPECT_TRUE(oracle::lattice_membership(m, ones, 2));
}

}  // namespace
}  // namespace k0lab
