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
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "k0lab/error.hpp"
#include "k0lab/integer.hpp"

namespace k0lab {

/// A finite group given by its multiplication table over element indices
/// 0..order-1.
class FiniteGroupTable {
 public:
  FiniteGroupTable() = default;

  /// Validates the table: latin square, two-sided identity, associativity.
  FiniteGroupTable(std::size_t order, std::vector<std::size_t> mul, std::size_t identity)
      : order_(order), mul_(std::move(mul)), identity_(identity) {
    validate();
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * order_ + b]; }

  std::size_t inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order_; ++b)
      if (mul(a, b) == identity_) return b;
    throw DomainError("FiniteGroupTable: element without inverse");
  }

  /// Subgroup generated by `gens` (closure under right multiplication,
  /// which suffices in a finite group).
  std::vector<bool> generated_subgroup(const std::vector<std::size_t>& gens) const {
    std::vector<bool> seen(order_, false);
    std::vector<std::size_t> stack{identity_};
    seen[identity_] = true;
    while (!stack.empty()) {
      std::size_t g = stack.back();
      stack.pop_back();
      for (std::size_t s : gens) {
        std::size_t h = mul(g, s);
        if (!seen[h]) {
          seen[h] = true;
          stack.push_back(h);
        }
      }
    }
    return seen;
  }

  bool generates(const std::vector<std::size_t>& gens) const {
    for (bool b : generated_subgroup(gens))
      if (!b) return false;
    return true;
  }

  friend bool operator==(const FiniteGroupTable&, const FiniteGroupTable&) = default;

 private:
  void validate() const {
    if (order_ == 0) throw InvalidSpecError("group order must be positive");
    if (mul_.size() != order_ * order_) throw InvalidSpecError("group table has the wrong size");
    if (identity_ >= order_) throw InvalidSpecError("identity index out of range");
    for (std::size_t x : mul_)
      if (x >= order_) throw InvalidSpecError("group table entry out of range");
    for (std::size_t a = 0; a < order_; ++a) {
      std::vector<bool> in_row(order_, false), in_col(order_, false);
      for (std::size_t b = 0; b < order_; ++b) {
        if (in_row[mul(a, b)] || in_col[mul(b, a)]) throw InvalidSpecError("group table is not a latin square");
        in_row[mul(a, b)] = true;
        in_col[mul(b, a)] = true;
      }
      if (mul(identity_, a) != a || mul(a, identity_) != a)
        throw InvalidSpecError("identity element does not act as a two-sided identity");
    }
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        for (std::size_t c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidSpecError("group table is not associative");
  }

  std::size_t order_ = 0;
  std::vector<std::size_t> mul_;
  std::size_t identity_ = 0;
};

/// Z_n under addition; element k is the residue k.
inline FiniteGroupTable build_cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  std::vector<std::size_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  return FiniteGroupTable(n, std::move(mul), 0);
}

struct DihedralGroup {
  FiniteGroupTable table;
  std::size_t r;  // rotation
  std::size_t s;  // reflection
};

/// <r, s | r^n = s^2 = e, rsr = s> of order 2n. Element r^k s^f has index
/// k + f*n, so r = 1 % n (the identity when n == 1) and s = n.
inline DihedralGroup build_dihedral_group(std::size_t n) {
  if (n == 0) throw DomainError("dihedral group parameter must be positive");
  const std::size_t order = 2 * n;
  std::vector<std::size_t> mul(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t ka = a % n, fa = a / n, kb = b % n, fb = b / n;
      // r^ka s^fa r^kb s^fb = r^(ka +- kb) s^(fa + fb), since s r = r^-1 s.
      const std::size_t k = fa == 0 ? (ka + kb) % n : (ka + n - kb) % n;
      mul[a * order + b] = k + ((fa + fb) % 2) * n;
    }
  return {FiniteGroupTable(order, std::move(mul), 0), 1 % n, n};
}

/// Group-table text format: line 1 is the order n, then n lines of n
/// element indices (row g of the table). Element 0 is the identity.
inline FiniteGroupTable read_group_table(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_tokens = [&](std::vector<std::string>& tokens) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream ts(line);
      tokens.clear();
      for (std::string tok; ts >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  };
  auto index_of = [&](const std::string& tok, std::size_t bound) {
    Integer v;
    try {
      v = parse_integer(tok);
    } catch (const ParseError&) {
      throw ParseError(line_no, "invalid element index '" + tok + "'");
    }
    if (v < 0 || v >= bound) throw ParseError(line_no, "element index out of range: " + tok);
    return v.convert_to<std::size_t>();
  };

  std::vector<std::string> tokens;
  if (!next_tokens(tokens)) throw ParseError(1, "missing group order");
  if (tokens.size() != 1) throw ParseError(line_no, "first line must hold only the group order");
  const std::size_t n = index_of(tokens[0], 4097);
  if (n == 0) throw ParseError(line_no, "group order must be positive");
  std::vector<std::size_t> mul;
  mul.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    if (!next_tokens(tokens)) throw ParseError(line_no + 1, "expected " + std::to_string(n) + " table rows");
    if (tokens.size() != n) throw ParseError(line_no, "expected " + std::to_string(n) + " entries");
    for (const auto& tok : tokens) mul.push_back(index_of(tok, n));
  }
  if (next_tokens(tokens)) throw ParseError(line_no, "unexpected trailing data");
  try {
    return FiniteGroupTable(n, std::move(mul), 0);
  } catch (const InvalidSpecError& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace k0lab
