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
#include <optional>
#include <string>
#include <vector>

#include "k0lab/error.hpp"
#include "k0lab/graph.hpp"
#include "k0lab/group.hpp"

namespace k0lab {

enum class GroupKind { cyclic, dihedral, table };

inline const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::dihedral: return "dihedral";
    case GroupKind::table: return "table";
  }
  return "?";
}

/// Weighted Cayley graph data: group G, generator set S (element indices,
/// ordered, distinct) and positive weights w(s).
struct CayleySpec {
  GroupKind kind = GroupKind::cyclic;
  /// n for cyclic Z_n and dihedral D_n (order 2n); group order for tables.
  std::size_t parameter = 0;
  FiniteGroupTable group;
  std::vector<std::size_t> gens;
  std::vector<std::uint64_t> weights;
  std::vector<std::string> gen_names;

  std::uint64_t total_weight() const {
    std::uint64_t w = 0;
    for (auto x : weights) w += x;
    return w;
  }
  bool generates() const { return group.generates(gens); }
};

namespace detail {

inline void validate_spec(const CayleySpec& spec) {
  if (spec.gens.empty()) throw InvalidSpecError("generator set S is empty");
  if (spec.weights.size() != spec.gens.size()) throw InvalidSpecError("one weight per generator is required");
  for (std::size_t i = 0; i < spec.gens.size(); ++i) {
    if (spec.gens[i] >= spec.group.order()) throw InvalidSpecError("generator is not a group element");
    if (spec.weights[i] == 0) throw InvalidSpecError("weights must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (spec.gens[j] == spec.gens[i])
        throw InvalidSpecError("duplicate generator " + spec.gen_names[i]);
  }
}

}  // namespace detail

/// C_n(S, w). Generators are reduced mod n (negative values allowed);
/// a repeat after reduction is an error. Empty `weights` means all 1.
inline CayleySpec make_cyclic_spec(std::size_t n, const std::vector<long long>& gens,
                                   std::vector<std::uint64_t> weights = {}) {
  if (n == 0) throw InvalidSpecError("n must be positive");
  if (weights.empty()) weights.assign(gens.size(), 1);
  CayleySpec spec;
  spec.kind = GroupKind::cyclic;
  spec.parameter = n;
  spec.group = build_cyclic_group(n);
  const auto nn = static_cast<long long>(n);
  for (long long g : gens) {
    const auto r = static_cast<std::size_t>(((g % nn) + nn) % nn);
    spec.gens.push_back(r);
    spec.gen_names.push_back(std::to_string(r));
  }
  spec.weights = std::move(weights);
  detail::validate_spec(spec);
  return spec;
}

/// Cay(D_n, {r, s}), optionally weighted (w(r), w(s)).
inline CayleySpec make_dihedral_spec(std::size_t n, std::uint64_t w_r = 1, std::uint64_t w_s = 1) {
  auto d = build_dihedral_group(n);
  CayleySpec spec;
  spec.kind = GroupKind::dihedral;
  spec.parameter = n;
  spec.group = std::move(d.table);
  spec.gens = {d.r, d.s};
  spec.weights = {w_r, w_s};
  spec.gen_names = {"r", "s"};
  detail::validate_spec(spec);
  return spec;
}

inline CayleySpec make_table_spec(FiniteGroupTable group, std::vector<std::size_t> gens,
                                  std::vector<std::uint64_t> weights = {}) {
  if (weights.empty()) weights.assign(gens.size(), 1);
  CayleySpec spec;
  spec.kind = GroupKind::table;
  spec.parameter = group.order();
  spec.group = std::move(group);
  spec.gens = std::move(gens);
  spec.weights = std::move(weights);
  for (auto g : spec.gens) spec.gen_names.push_back(std::to_string(g));
  detail::validate_spec(spec);
  return spec;
}

/// One vertex per element; w(s) parallel edges g -> g*s for each s in S.
inline DirectedMultigraph build_cayley(const CayleySpec& spec) {
  detail::validate_spec(spec);
  const std::size_t order = spec.group.order();
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < order; ++g) labels.push_back("v" + std::to_string(g));
  DirectedMultigraph out(order, std::move(labels));
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t i = 0; i < spec.gens.size(); ++i) out.add_edges(g, spec.group.mul(g, spec.gens[i]), spec.weights[i]);
  return out;
}

/// PIS test for Cayley graphs: L(E) is purely infinite simple iff W >= 2.
inline bool cayley_is_pis(const CayleySpec& spec) {
  detail::validate_spec(spec);
  if (!spec.generates()) throw NotStronglyConnectedError("S does not generate the group; the Cayley graph is not strongly connected");
  return spec.total_weight() >= 2;
}

/// Short human summary, e.g. "C_6(2,3)" or "C_4(1; w=3)" or "D_5(r,s)".
inline std::string describe(const CayleySpec& spec) {
  std::string s;
  switch (spec.kind) {
    case GroupKind::cyclic: s = "C_" + std::to_string(spec.parameter) + "("; break;
    case GroupKind::dihedral: s = "D_" + std::to_string(spec.parameter) + "("; break;
    case GroupKind::table: s = "Cay_" + std::to_string(spec.parameter) + "("; break;
  }
  bool weighted = false;
  for (std::size_t i = 0; i < spec.gens.size(); ++i) {
    if (i) s += ",";
    s += spec.gen_names[i];
    weighted |= spec.weights[i] != 1;
  }
  if (weighted) {
    s += "; w=";
    for (std::size_t i = 0; i < spec.weights.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(spec.weights[i]);
    }
  }
  return s + ")";
}

}  // namespace k0lab
