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
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "k0lab/cayley.hpp"
#include "k0lab/error.hpp"
#include "k0lab/integer.hpp"
#include "k0lab/polynomial.hpp"
#include "k0lab/zmatrix.hpp"

namespace k0lab {

/// n x n circulant determined by its first row: entry (i, j) = c[(j - i) mod n].
class Circulant {
 public:
  Circulant(std::size_t n, std::vector<Integer> first_row) : n_(n), row_(std::move(first_row)) {
    if (n_ == 0) throw DomainError("circulant size must be positive");
    if (row_.size() != n_) throw DomainError("circulant first row has the wrong length");
  }

  /// Throws DomainError if `m` is not circulant.
  static Circulant from_matrix(const IntMatrix& m) {
    if (!m.is_square() || m.rows() == 0) throw DomainError("circulant must be a non-empty square matrix");
    const std::size_t n = m.rows();
    std::vector<Integer> row(m.row(0).begin(), m.row(0).end());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j) != row[(j + n - i) % n]) throw DomainError("matrix is not circulant");
    return Circulant(n, std::move(row));
  }

  std::size_t size() const noexcept { return n_; }
  const std::vector<Integer>& first_row() const noexcept { return row_; }

  IntMatrix to_matrix() const {
    IntMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = row_[(j + n_ - i) % n_];
    return m;
  }

 private:
  std::size_t n_;
  std::vector<Integer> row_;
};

/// P_C(x) = sum c_k x^k.
inline IntPolynomial representer(const Circulant& c) { return IntPolynomial(c.first_row()); }

/// Circulant I - A^t of the Cayley graph C_n(S, w).
inline Circulant cayley_circulant(const CayleySpec& spec) {
  if (spec.kind != GroupKind::cyclic) throw DomainError("circulant analysis needs a cyclic group");
  const std::size_t n = spec.parameter;
  std::vector<Integer> row(n);
  row[0] = 1;
  // (I - A^t)(0, j) = -#edges j -> 0 = -w(s) for j = -s mod n.
  for (std::size_t i = 0; i < spec.gens.size(); ++i) row[(n - spec.gens[i]) % n] -= spec.weights[i];
  return Circulant(n, std::move(row));
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

namespace detail {

struct CyclotomicCache {
  std::shared_mutex mutex;
  std::map<std::size_t, IntPolynomial> table;
};

inline CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

}  // namespace detail

/// Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, memoized. Concurrent
/// readers share the lock; inserts take it exclusively.
inline IntPolynomial cyclotomic(std::size_t d) {
  if (d == 0) throw DomainError("cyclotomic index must be positive");
  auto& cache = detail::cyclotomic_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find(d); it != cache.table.end()) return it->second;
  }
  IntPolynomial num = IntPolynomial::x_pow_minus_one(d);
  for (std::size_t e : divisors(d)) {
    if (e == d) break;
    auto q = exact_quotient(num, cyclotomic(e));
    if (!q) throw DomainError("cyclotomic: inexact division");  // unreachable
    num = std::move(*q);
  }
  std::unique_lock lock(cache.mutex);
  return cache.table.try_emplace(d, std::move(num)).first->second;
}

/// Divisors d of n with Phi_d | p in Z[x]. Nonempty iff the circulant with
/// representer p is singular; sum of phi(d) over the result is its nullity.
inline std::vector<std::size_t> singular_cyclotomic_divisors(const IntPolynomial& p, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d : divisors(n))
    if (p.is_zero() || exact_quotient(p, cyclotomic(d))) out.push_back(d);
  return out;
}

inline std::uint64_t cyclotomic_nullity(const IntPolynomial& p, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t d : singular_cyclotomic_divisors(p, n)) total += euler_phi(d);
  return total;
}

/// det(C) = prod_l P(zeta^l) = Res(x^n - 1, P).
inline Integer circulant_det(const Circulant& c) {
  return resultant(IntPolynomial::x_pow_minus_one(c.size()), representer(c));
}

/// Sign of det(I - A^t) for C_n(S, w) without computing it: 0 when
/// singular, +1 iff n is even and 1 + W1 < W0 (W0 / W1 = total weight of
/// even / odd generators), else -1.
inline int det_sign_closed_form(const CayleySpec& spec) {
  const Circulant c = cayley_circulant(spec);
  if (!singular_cyclotomic_divisors(representer(c), c.size()).empty()) return 0;
  std::uint64_t w0 = 0, w1 = 0;
  for (std::size_t i = 0; i < spec.gens.size(); ++i) (spec.gens[i] % 2 == 0 ? w0 : w1) += spec.weights[i];
  return spec.parameter % 2 == 0 && 1 + w1 < w0 ? 1 : -1;
}

enum class SingularCase { none, case1, case2, case3 };

inline const char* to_string(SingularCase c) {
  switch (c) {
    case SingularCase::none: return "none";
    case SingularCase::case1: return "case1";
    case SingularCase::case2: return "case2";
    case SingularCase::case3: return "case3";
  }
  return "?";
}

struct TwoGeneratorVerdict {
  bool singular = false;
  SingularCase which = SingularCase::none;
};

/// Closed-form singularity test for C_n({s1, s2}, (a, b)):
///   case1: a = b = 1, n = 0 (mod 6), s2 = 5 s1 (mod 6)
///   case2: a = b + 1, n and s1 even, s2 odd
///   case3: b = a + 1, n even, s1 odd, s2 even
inline TwoGeneratorVerdict two_generator_singularity(std::uint64_t n, std::uint64_t s1, std::uint64_t s2,
                                                     std::uint64_t a, std::uint64_t b) {
  if (!(s1 < s2 && s2 < n)) throw DomainError("two_generator_singularity needs 0 <= s1 < s2 <= n-1");
  if (a == 0 || b == 0) throw DomainError("weights must be positive");
  if (a == 1 && b == 1 && n % 6 == 0 && (s2 % 6) == (5 * s1) % 6) return {true, SingularCase::case1};
  if (a == b + 1 && n % 2 == 0 && s1 % 2 == 0 && s2 % 2 == 1) return {true, SingularCase::case2};
  if (b == a + 1 && n % 2 == 0 && s1 % 2 == 1 && s2 % 2 == 0) return {true, SingularCase::case3};
  return {};
}

}  // namespace k0lab
