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

// Brute-force reference implementations for the test suite. Deliberately
// naive and independent of the engine's algorithms: only the IntMatrix
// container and Integer helpers are shared.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "k0lab/integer.hpp"
#include "k0lab/zmatrix.hpp"

namespace k0lab::oracle {

namespace detail {

inline Integer cofactor_det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    Integer term = a[0][c] * cofactor_det(minor);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

inline std::vector<std::vector<Integer>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  return a;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Determinant by recursive Laplace expansion along the first row.
inline Integer det_via_cofactor(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_via_cofactor: matrix is not square");
  if (m.rows() > 8) throw std::invalid_argument("det_via_cofactor: n <= 8 only");
  return detail::cofactor_det(detail::to_rows(m));
}

/// Invariant factors s_i = alpha_i / alpha_{i-1}, alpha_i the gcd of all
/// i x i minors.
inline std::vector<Integer> snf_via_determinant_divisors(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("snf_via_determinant_divisors: matrix is not square");
  if (m.rows() > 7) throw std::invalid_argument("snf_via_determinant_divisors: n <= 7 only");
  const std::size_t n = m.rows();
  const auto a = detail::to_rows(m);
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur;
    detail::combinations(n, k, 0, cur, subsets);
    Integer alpha = 0;
    for (const auto& rows : subsets)
      for (const auto& cols : subsets) {
        std::vector<std::vector<Integer>> minor;
        for (auto r : rows) {
          std::vector<Integer> row;
          for (auto c : cols) row.push_back(a[r][c]);
          minor.push_back(std::move(row));
        }
        alpha = gcd(alpha, detail::cofactor_det(minor));
      }
    if (alpha.is_zero()) throw std::domain_error("DDT requires nonzero invariant factors");
    out.push_back(alpha / prev);
    prev = alpha;
  }
  return out;
}

/// True iff m * x = d * v has an integer solution x, decided by reducing the
/// columns of m to lower echelon (column Hermite) form and back-substituting.
inline bool lattice_membership(const IntMatrix& m, const std::vector<Integer>& v, const Integer& d) {
  if (v.size() != m.rows()) throw std::invalid_argument("lattice_membership: vector length mismatch");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> col(cols, std::vector<Integer>(rows));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) col[c][r] = m(r, c);

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column index)
  std::size_t k = 0;
  for (std::size_t r = 0; r < rows && k < cols; ++r) {
    // Euclid across columns k.. on row r until only column k is nonzero there.
    for (;;) {
      std::size_t best = cols;
      for (std::size_t c = k; c < cols; ++c)
        if (!col[c][r].is_zero() && (best == cols || abs(col[c][r]) < abs(col[best][r]))) best = c;
      if (best == cols) break;
      std::swap(col[k], col[best]);
      bool done = true;
      for (std::size_t c = k + 1; c < cols; ++c) {
        if (col[c][r].is_zero()) continue;
        const Integer q = col[c][r] / col[k][r];
        for (std::size_t i = 0; i < rows; ++i) col[c][i] -= q * col[k][i];
        if (!col[c][r].is_zero()) done = false;
      }
      if (done) break;
    }
    if (!col[k][r].is_zero()) pivots.push_back({r, k++});
  }

  std::vector<Integer> t(rows);
  for (std::size_t i = 0; i < rows; ++i) t[i] = d * v[i];
  std::size_t p = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (p < pivots.size() && pivots[p].first == r) {
      const auto& c = col[pivots[p].second];
      if (!(t[r] % c[r]).is_zero()) return false;
      const Integer q = t[r] / c[r];
      for (std::size_t i = 0; i < rows; ++i) t[i] -= q * c[i];
      ++p;
    } else if (!t[r].is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace k0lab::oracle
