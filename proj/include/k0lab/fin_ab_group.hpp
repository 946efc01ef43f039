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
#include <optional>
#include <string>
#include <vector>

#include "k0lab/error.hpp"
#include "k0lab/integer.hpp"

namespace k0lab {

/// A finitely generated abelian group Z_{t_1} + ... + Z_{t_k} + Z^r in
/// invariant factor form: every t_i >= 2 and t_i | t_{i+1}.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  /// `torsion` must already be a divisibility chain of factors >= 2.
  FinAbGroup(std::vector<Integer> torsion, std::size_t free_rank)
      : torsion_(std::move(torsion)), free_rank_(free_rank) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      if (torsion_[i] < 2) throw DomainError("FinAbGroup: invariant factors must be >= 2");
      if (i > 0 && !(torsion_[i] % torsion_[i - 1]).is_zero())
        throw DomainError("FinAbGroup: invariant factors must form a divisibility chain");
    }
  }

  /// Direct sum of cyclic groups Z_{o} for each o in `orders`; o == 0 stands
  /// for a copy of Z and o == 1 for the trivial group. Any order is accepted.
  static FinAbGroup from_cyclic_orders(std::vector<Integer> orders) {
    std::size_t free_rank = 0;
    std::vector<Integer> finite;
    for (Integer& o : orders) {
      o = abs(o);
      if (o.is_zero())
        ++free_rank;
      else if (o > 1)
        finite.push_back(std::move(o));
    }
    // Pairwise (gcd, lcm) replacement turns any list into a divisibility chain.
    for (std::size_t i = 0; i < finite.size(); ++i)
      for (std::size_t j = i + 1; j < finite.size(); ++j) {
        Integer g = gcd(finite[i], finite[j]);
        Integer l = finite[i] / g * finite[j];
        finite[i] = std::move(g);
        finite[j] = std::move(l);
      }
    std::erase_if(finite, [](const Integer& x) { return x == 1; });
    return FinAbGroup(std::move(finite), free_rank);
  }

  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  std::size_t free_rank() const noexcept { return free_rank_; }

  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_trivial() const noexcept { return torsion_.empty() && free_rank_ == 0; }
  /// Cyclic includes the trivial group and Z.
  bool is_cyclic() const noexcept { return torsion_.size() + free_rank_ <= 1; }

  /// Order, or nullopt when infinite.
  std::optional<Integer> order() const {
    if (!is_finite()) return std::nullopt;
    Integer p = 1;
    for (const Integer& t : torsion_) p *= t;
    return p;
  }

  /// "0", "Z_7", "Z_2 + Z_2", "Z^2", "Z_2 + Z_4 + Z".
  std::string display() const {
    if (is_trivial()) return "0";
    std::string s;
    for (const Integer& t : torsion_) {
      if (!s.empty()) s += " + ";
      s += "Z_" + t.str();
    }
    if (free_rank_ > 0) {
      if (!s.empty()) s += " + ";
      s += free_rank_ == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank_);
    }
    return s;
  }

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<Integer> torsion_;
  std::size_t free_rank_ = 0;
};

}  // namespace k0lab
