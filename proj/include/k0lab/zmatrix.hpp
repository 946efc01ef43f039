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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "k0lab/error.hpp"
#include "k0lab/fin_ab_group.hpp"
#include "k0lab/integer.hpp"

namespace k0lab {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DomainError("IntMatrix: ragged initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(std::span<const Integer> values) {
    IntMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(src, c).is_zero()) (*this)(dst, c) += factor * (*this)(src, c);
  }
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t r = 0; r < rows_; ++r)
      if (!(*this)(r, src).is_zero()) (*this)(r, dst) += factor * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }

  std::vector<Integer> multiply(std::span<const Integer> v) const {
    if (v.size() != cols_) throw DomainError("IntMatrix::multiply: dimension mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("IntMatrix: product dimension mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("IntMatrix: sum dimension mismatch");
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
    return a;
  }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("IntMatrix: difference dimension mismatch");
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] -= b.entries_[i];
    return a;
  }
  friend IntMatrix operator*(const Integer& k, IntMatrix a) {
    for (auto& e : a.entries_) e *= k;
    return a;
  }
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
      os << (r ? ",[" : "[");
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
      os << ']';
    }
    os << ']';
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Smith normal form with unimodular transforms: u * m * v == d.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::vector<Integer> diag;  // s_1 | s_2 | ..., zeros trailing
};

namespace detail {

/// Position of the nonzero entry of least absolute value in the trailing
/// submatrix starting at (t, t).
inline std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(const IntMatrix& m, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      const Integer& x = m(r, c);
      if (x.is_zero()) continue;
      Integer a = abs(x);
      if (!best || a < best_abs) {
        best = {r, c};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace detail

/// Smith normal form by elementary row/column operations. The pivot is always
/// the smallest nonzero entry of the remaining block, which keeps intermediate
/// growth modest. Diagonal entries are non-negative.
inline SnfResult snf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SnfResult out{m, IntMatrix::identity(rows), IntMatrix::identity(cols), {}};
  IntMatrix& d = out.d;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = detail::smallest_nonzero(d, t);
      if (!pivot) break;
      auto [pr, pc] = *pivot;
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d(r, t).is_zero()) continue;
        Integer q = d(r, t) / d(t, t);
        d.add_row_multiple(r, t, -q);
        u.add_row_multiple(r, t, -q);
        if (!d(r, t).is_zero()) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d(t, c).is_zero()) continue;
        Integer q = d(t, c) / d(t, t);
        d.add_col_multiple(c, t, -q);
        v.add_col_multiple(c, t, -q);
        if (!d(t, c).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Row and column t are clear; the pivot must divide the rest.
      std::optional<std::size_t> offender;
      for (std::size_t r = t + 1; r < rows && !offender; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!(d(r, c) % d(t, t)).is_zero()) {
            offender = r;
            break;
          }
      if (!offender) break;
      d.add_row_multiple(t, *offender, Integer(1));
      u.add_row_multiple(t, *offender, Integer(1));
    }
    if (d(t, t).sign() < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  out.diag.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) out.diag.push_back(d(i, i));
  return out;
}

/// Cokernel of m : Z^cols -> Z^rows.
inline FinAbGroup cokernel_from_diagonal(std::span<const Integer> diag, std::size_t rows) {
  std::vector<Integer> torsion;
  std::size_t free_rank = rows > diag.size() ? rows - diag.size() : 0;
  for (const Integer& s : diag) {
    if (s.is_zero())
      ++free_rank;
    else if (s > 1)
      torsion.push_back(s);
  }
  return FinAbGroup(std::move(torsion), free_rank);
}

inline FinAbGroup cokernel(const IntMatrix& m) { return cokernel_from_diagonal(snf(m).diag, m.rows()); }

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer previous = 1;
  int sign_flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a(r, k).is_zero()) ++r;
      if (r == n) return Integer(0);
      a.swap_rows(k, r);
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  Integer result = a(n - 1, n - 1);
  return sign_flip < 0 ? Integer(-result) : result;
}

/// Rank over Q by fraction-free row echelon reduction.
inline std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pivot_row = 0;
  Integer previous = 1;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && a(r, c).is_zero()) ++r;
    if (r == rows) continue;
    a.swap_rows(pivot_row, r);
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a(i, j) = (a(i, j) * a(pivot_row, c) - a(i, c) * a(pivot_row, j)) / previous;
      a(i, c) = 0;
    }
    previous = a(pivot_row, c);
    ++pivot_row;
  }
  return pivot_row;
}

/// m^k by binary exponentiation.
inline IntMatrix mat_pow(const IntMatrix& m, std::uint64_t k) {
  if (!m.is_square()) throw DomainError("mat_pow: matrix is not square");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

/// Order of an element of a finitely generated abelian group; `infinite`
/// is a legitimate answer, not an error.
struct ElementOrder {
  bool infinite = false;
  Integer value = 1;  // meaningful when !infinite

  static ElementOrder finite(Integer v) { return {false, std::move(v)}; }
  static ElementOrder infinite_order() { return {true, Integer(0)}; }

  std::string to_string() const { return infinite ? std::string("infinite") : value.str(); }
  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;
};

/// Coordinates of the class of `vec` in Coker(m), expressed in the invariant
/// factor basis given by `s` (one entry per diag value > 1, reduced into
/// [0, s_i), then one per free summand).
inline std::vector<Integer> cokernel_coordinates(const SnfResult& s, std::span<const Integer> vec) {
  std::vector<Integer> y = s.u.multiply(vec);
  std::vector<Integer> torsion, free;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i >= s.diag.size() || s.diag[i].is_zero())
      free.push_back(y[i]);
    else if (s.diag[i] > 1)
      torsion.push_back(mod_floor(y[i], s.diag[i]));
  }
  torsion.insert(torsion.end(), free.begin(), free.end());
  return torsion;
}

/// Order of vec + Im(m) in Coker(m), computed from a precomputed SNF of m.
inline ElementOrder element_order_in_cokernel(const SnfResult& s, std::span<const Integer> vec) {
  if (vec.size() != s.u.cols()) throw DomainError("element_order_in_cokernel: vector length mismatch");
  std::vector<Integer> y = s.u.multiply(vec);
  Integer order = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const bool free_coordinate = i >= s.diag.size() || s.diag[i].is_zero();
    if (free_coordinate) {
      if (!y[i].is_zero()) return ElementOrder::infinite_order();
      continue;
    }
    order = lcm(order, s.diag[i] / gcd(s.diag[i], y[i]));
  }
  return ElementOrder::finite(order);
}

inline ElementOrder element_order_in_cokernel(const IntMatrix& m, std::span<const Integer> vec) {
  if (vec.size() != m.rows()) throw DomainError("element_order_in_cokernel: vector length mismatch");
  return element_order_in_cokernel(snf(m), vec);
}

/// Reads the text matrix format: "rows cols" on the first line, then one line
/// of space-separated integers per row. Blank lines are not allowed inside the
/// body; trailing blank lines are ignored.
inline IntMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  auto tokens_of = [&](const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream ts(text);
    for (std::string tok; ts >> tok;) tokens.push_back(tok);
    return tokens;
  };
  auto parse_at = [&](const std::string& tok) {
    try {
      return parse_integer(tok);
    } catch (const ParseError& e) {
      throw ParseError(line_no, std::string("invalid integer '") + tok + "'");
    }
  };

  if (!next_line()) throw ParseError(1, "missing header line 'rows cols'");
  auto header = tokens_of(line);
  if (header.size() != 2) throw ParseError(line_no, "header must be 'rows cols'");
  Integer rows_big = parse_at(header[0]);
  Integer cols_big = parse_at(header[1]);
  if (rows_big < 1 || cols_big < 1 || rows_big > 100000 || cols_big > 100000)
    throw ParseError(line_no, "dimensions must be positive");
  const auto rows = rows_big.convert_to<std::size_t>();
  const auto cols = cols_big.convert_to<std::size_t>();

  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!next_line()) throw ParseError(line_no + 1, "expected " + std::to_string(rows) + " rows");
    auto tokens = tokens_of(line);
    if (tokens.size() != cols)
      throw ParseError(line_no, "expected " + std::to_string(cols) + " entries, got " + std::to_string(tokens.size()));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_at(tokens[c]);
  }
  while (next_line())
    if (!tokens_of(line).empty()) throw ParseError(line_no, "unexpected trailing data");
  return m;
}

inline void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

}  // namespace k0lab
