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
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k0lab/cayley.hpp"
#include "k0lab/circulant.hpp"
#include "k0lab/error.hpp"
#include "k0lab/fin_ab_group.hpp"
#include "k0lab/graph.hpp"
#include "k0lab/integer.hpp"
#include "k0lab/zmatrix.hpp"

namespace k0lab {

/// s_k x s_k companion matrix of p(S, w, t) = t^{s_k} - sum_j w(s_j) t^{s_k - s_j}.
struct CompanionMatrix {
  std::size_t size = 0;
  IntMatrix matrix;
};

inline CompanionMatrix companion_matrix(const CayleySpec& spec) {
  if (spec.kind != GroupKind::cyclic) throw DomainError("companion reduction needs a cyclic group");
  if (spec.gens.empty()) throw InvalidSpecError("generator set S is empty");
  std::size_t sk = 0;
  for (std::size_t s : spec.gens) {
    if (s == 0) throw DomainError("companion reduction requires 0 not in S; use the full SNF path");
    sk = std::max(sk, s);
  }
  IntMatrix t(sk, sk);
  for (std::size_t i = 1; i < sk; ++i) t(i, i - 1) = 1;
  for (std::size_t j = 0; j < spec.gens.size(); ++j) t(sk - spec.gens[j], sk - 1) += spec.weights[j];
  return {sk, std::move(t)};
}

/// Coker(T^n - I_{s_k}), which is K0 of C_n(S, w) for generating S, 0 not in S, W >= 2.
inline FinAbGroup k0_via_companion(const CayleySpec& spec) {
  if (!spec.generates()) throw NotStronglyConnectedError("S does not generate Z_" + std::to_string(spec.parameter));
  if (spec.total_weight() < 2) throw NotPurelyInfiniteSimpleError("K0 formula requires purely infinite simple (W >= 2)");
  const auto t = companion_matrix(spec);
  return cokernel(mat_pow(t.matrix, spec.parameter) - IntMatrix::identity(t.size));
}

/// Coker(I - A^t) for a purely infinite simple graph.
inline FinAbGroup k0_via_full_snf(const DirectedMultigraph& g) {
  if (!is_purely_infinite_simple(g)) throw NotPurelyInfiniteSimpleError("K0 formula requires purely infinite simple");
  return cokernel(g.i_minus_a_transpose());
}

enum class Method { automatic, full_snf, companion_reduction, both };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::full_snf: return "full_snf";
    case Method::companion_reduction: return "companion_reduction";
    case Method::both: return "both";
  }
  return "?";
}

struct AnalyzeOptions {
  Method method = Method::automatic;
  /// In automatic mode both methods run (and must agree) up to this order.
  std::size_t crosscheck_limit = 24;

  /// Defaults, with K0LAB_CROSSCHECK_LIMIT overriding the cross-check bound.
  static AnalyzeOptions from_environment() {
    AnalyzeOptions o;
    if (const char* env = std::getenv("K0LAB_CROSSCHECK_LIMIT")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0') o.crosscheck_limit = static_cast<std::size_t>(v);
    }
    return o;
  }
};

struct K0Report {
  std::optional<CayleySpec> spec;
  std::string summary;
  std::size_t vertex_count = 0;
  std::optional<std::uint64_t> total_weight;
  bool pis = false;
  /// W = 1 Cayley graph / bare cycle: L(E) is M_n(K[x, x^-1]).
  bool single_cycle = false;
  Integer det_value;
  int det_sign = 0;
  std::optional<FinAbGroup> k0;
  /// Order of [L(E)] = sum of the vertex classes.
  std::optional<ElementOrder> identity_order;
  /// Coordinates of [L(E)] in the invariant-factor basis of the SNF used
  /// (torsion coordinates, then free); absent in companion-only runs.
  std::optional<std::vector<Integer>> identity_class;
  std::vector<Integer> snf_diag;
  Method method = Method::full_snf;
};

namespace detail {

inline bool is_single_cycle(const DirectedMultigraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) != 1 || g.in_degree(v) != 1) return false;
  return is_strongly_connected(g);
}

struct FullRun {
  FinAbGroup k0;
  ElementOrder order;
  std::vector<Integer> coords;
  std::vector<Integer> diag;
};

inline FullRun run_full(const DirectedMultigraph& g) {
  const IntMatrix m = g.i_minus_a_transpose();
  const SnfResult s = snf(m);
  const std::vector<Integer> ones(g.vertex_count(), Integer(1));
  return {cokernel_from_diagonal(s.diag, m.rows()), element_order_in_cokernel(s, ones), cokernel_coordinates(s, ones),
          s.diag};
}

}  // namespace detail

/// Generic analysis: PIS test, det(I - A^t) by Bareiss, K0 and the order of
/// [L(E)] by SNF.
inline K0Report analyze(const DirectedMultigraph& g, const AnalyzeOptions& = AnalyzeOptions::from_environment()) {
  K0Report r;
  r.summary = "graph(" + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.total_edges()) + " edges)";
  r.vertex_count = g.vertex_count();
  r.pis = is_purely_infinite_simple(g);
  r.det_value = det(g.i_minus_a_transpose());
  r.det_sign = sign(r.det_value);
  r.method = Method::full_snf;
  if (r.pis) {
    auto full = detail::run_full(g);
    r.k0 = std::move(full.k0);
    r.identity_order = std::move(full.order);
    r.identity_class = std::move(full.coords);
    r.snf_diag = std::move(full.diag);
  } else {
    r.single_cycle = detail::is_single_cycle(g);
  }
  return r;
}

/// Analysis of a weighted Cayley graph. For cyclic groups with 0 not in S
/// the companion reduction is used; both methods run and must agree up to
/// the cross-check limit. Throws NotStronglyConnectedError if S does not
/// generate G.
inline K0Report analyze(const CayleySpec& spec, const AnalyzeOptions& opts = AnalyzeOptions::from_environment()) {
  detail::validate_spec(spec);
  if (!spec.generates())
    throw NotStronglyConnectedError("S does not generate " +
                                    std::string(spec.kind == GroupKind::cyclic ? "Z_" : "the group of order ") +
                                    std::to_string(spec.kind == GroupKind::cyclic ? spec.parameter : spec.group.order()));
  K0Report r;
  r.spec = spec;
  r.summary = describe(spec);
  r.vertex_count = spec.group.order();
  const std::uint64_t w = spec.total_weight();
  r.total_weight = w;
  r.pis = w >= 2;

  const bool cyclic = spec.kind == GroupKind::cyclic;
  bool zero_in_s = false;
  for (auto s : spec.gens) zero_in_s |= s == 0;
  const bool companion_ok = cyclic && !zero_in_s;

  // det(I - A^t): resultant for circulants, Bareiss otherwise.
  std::optional<DirectedMultigraph> graph;
  auto get_graph = [&]() -> const DirectedMultigraph& {
    if (!graph) graph = build_cayley(spec);
    return *graph;
  };
  r.det_value = cyclic ? circulant_det(cayley_circulant(spec)) : det(get_graph().i_minus_a_transpose());
  r.det_sign = sign(r.det_value);

  if (!r.pis) {
    r.single_cycle = true;  // generating S with W = 1: one cycle through all of G
    r.method = Method::full_snf;
    return r;
  }

  Method m = opts.method;
  if (m == Method::automatic) m = !companion_ok ? Method::full_snf : (r.vertex_count <= opts.crosscheck_limit ? Method::both : Method::companion_reduction);
  if (!companion_ok) m = Method::full_snf;
  r.method = m;

  std::optional<detail::FullRun> full;
  if (m == Method::full_snf || m == Method::both) {
    full = detail::run_full(get_graph());
    if (cyclic && det(get_graph().i_minus_a_transpose()) != r.det_value)
      throw std::logic_error("analyze: resultant and Bareiss determinants disagree for " + r.summary);
  }
  if (m == Method::companion_reduction || m == Method::both) {
    const auto t = companion_matrix(spec);
    const SnfResult s = snf(mat_pow(t.matrix, spec.parameter) - IntMatrix::identity(t.size));
    FinAbGroup k0 = cokernel_from_diagonal(s.diag, t.size);
    if (full && !(full->k0 == k0))
      throw std::logic_error("analyze: companion reduction disagrees with full SNF for " + r.summary);
    if (!full) {
      r.k0 = std::move(k0);
      r.snf_diag = s.diag;
      // (I - A^t) 1 = (1 - W) 1, so for nonsingular I - A^t the class of
      // [L(E)] has order exactly W - 1. Singular cases need the full lattice.
      if (!r.det_value.is_zero())
        r.identity_order = ElementOrder::finite(Integer(w - 1));
      else
        r.identity_order = detail::run_full(get_graph()).order;
      return r;
    }
  }
  r.k0 = std::move(full->k0);
  r.identity_order = std::move(full->order);
  r.identity_class = std::move(full->coords);
  r.snf_diag = std::move(full->diag);
  return r;
}

/// K0 of C_n({0, 1}, (a, b)): with d = gcd(a - 1, b),
/// (Z_d)^{n-1} + Z when a = b + 1 and n is even, else
/// (Z_d)^{n-1} + Z_{|(1-a)^n - b^n| / d^{n-1}}.
inline FinAbGroup closed_form_S01(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  if (n == 0 || a == 0 || b == 0 || a + b < 2) throw DomainError("closed_form_S01 needs n, a, b >= 1 and a + b >= 2");
  const Integer d = gcd(Integer(a - 1), Integer(b));
  std::vector<Integer> orders(n - 1, d);
  if (a == b + 1 && n % 2 == 0) {
    orders.push_back(0);
  } else {
    const auto e = static_cast<unsigned>(n);
    orders.push_back(abs(pow(Integer(1) - Integer(a), e) - pow(Integer(b), e)) / pow(d, e - 1));
  }
  return FinAbGroup::from_cyclic_orders(std::move(orders));
}

/// F_(j,k)(1..upto): F(n) = [n == k-1] for n <= k, F(n) = F(n-j) + F(n-k) after.
inline std::vector<Integer> f_sequence(std::size_t j, std::size_t k, std::size_t upto) {
  if (!(1 <= j && j < k)) throw DomainError("f_sequence needs 1 <= j < k");
  std::vector<Integer> f(upto + 1);
  for (std::size_t n = 1; n <= upto; ++n) f[n] = n <= k ? Integer(n == k - 1 ? 1 : 0) : f[n - j] + f[n - k];
  return {f.begin() + 1, f.end()};
}

/// Checks T^n for S = {d1, d2} (unweighted) against the closed pattern:
/// with G = F_(d1,d2) extended to t <= 0 by G(t) = G(t + d2) - G(t + d2 - d1),
/// T^n(i, c) = G(n + o_i + c) for 1-based rows i and 0-based columns c, where
/// o_i = -i for i <= d2 - d1 and o_i = d2 - i below.
inline bool verify_Tn_structure(std::size_t d1, std::size_t d2, std::size_t n) {
  if (!(1 < d1 && d1 < d2) || gcd(Integer(d1), Integer(d2)) != 1)
    throw DomainError("verify_Tn_structure needs 1 < d1 < d2 with gcd(d1, d2) = 1");
  if (n == 0) throw DomainError("verify_Tn_structure needs n >= 1");
  const auto lo = -static_cast<long long>(d2);
  const auto hi = static_cast<long long>(n + 2 * d2);
  std::vector<Integer> g(static_cast<std::size_t>(hi - lo + 1));
  auto at = [&](long long t) -> Integer& { return g[static_cast<std::size_t>(t - lo)]; };
  const auto fwd = f_sequence(d1, d2, static_cast<std::size_t>(hi));
  for (long long t = 1; t <= hi; ++t) at(t) = fwd[static_cast<std::size_t>(t - 1)];
  for (long long t = 0; t >= lo; --t) at(t) = at(t + static_cast<long long>(d2)) - at(t + static_cast<long long>(d2 - d1));

  const auto t = companion_matrix(make_cyclic_spec(d2 + 1, {static_cast<long long>(d1), static_cast<long long>(d2)}));
  const IntMatrix p = mat_pow(t.matrix, n);
  const std::size_t k = d2 - d1;
  for (std::size_t i = 1; i <= d2; ++i) {
    const long long o = i <= k ? -static_cast<long long>(i) : static_cast<long long>(d2 - i);
    for (std::size_t c = 0; c < d2; ++c)
      if (p(i - 1, c) != at(static_cast<long long>(n) + o + static_cast<long long>(c))) return false;
  }
  return true;
}

}  // namespace k0lab
