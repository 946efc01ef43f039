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
#include <optional>
#include <string>
#include <vector>

#include "k0lab/error.hpp"
#include "k0lab/fin_ab_group.hpp"
#include "k0lab/graph.hpp"
#include "k0lab/integer.hpp"
#include "k0lab/k0.hpp"
#include "k0lab/zmatrix.hpp"

namespace k0lab {

enum class AlgebraKind { leavitt, mat_leavitt, mat_laurent, complete_two_loops, unclassified };

/// Named Leavitt path algebra from the catalog:
///   leavitt             L(1,m)
///   mat_leavitt         M_d(L(1,m)), d the canonical representative in [1, m-1]
///   mat_laurent         M_n(K[x,x^-1])
///   complete_two_loops  L(K_n^(2))
struct AlgebraClass {
  AlgebraKind kind = AlgebraKind::unclassified;
  Integer d, m, n;
  std::optional<FinAbGroup> witness;

  static AlgebraClass leavitt(Integer m) { return {AlgebraKind::leavitt, 1, std::move(m), 0, {}}; }
  static AlgebraClass mat_leavitt(Integer d, Integer m) {
    if (d == 1) return leavitt(std::move(m));
    return {AlgebraKind::mat_leavitt, std::move(d), std::move(m), 0, {}};
  }
  static AlgebraClass mat_laurent(Integer n) { return {AlgebraKind::mat_laurent, 0, 0, std::move(n), {}}; }
  static AlgebraClass complete_two_loops(Integer n) { return {AlgebraKind::complete_two_loops, 0, 0, std::move(n), {}}; }
  static AlgebraClass unclassified(std::optional<FinAbGroup> w = std::nullopt) {
    return {AlgebraKind::unclassified, 0, 0, 0, std::move(w)};
  }

  std::string display() const {
    switch (kind) {
      case AlgebraKind::leavitt: return "L(1," + m.str() + ")";
      case AlgebraKind::mat_leavitt: return "M_" + d.str() + "(L(1," + m.str() + "))";
      case AlgebraKind::mat_laurent: return "M_" + n.str() + "(K[x,x^-1])";
      case AlgebraKind::complete_two_loops: return "L(K_" + n.str() + "^(2))";
      case AlgebraKind::unclassified: return "unclassified";
    }
    return "unclassified";
  }

  friend bool operator==(const AlgebraClass& a, const AlgebraClass& b) {
    return a.kind == b.kind && a.d == b.d && a.m == b.m && a.n == b.n;
  }
};

/// Names L(E) from its K0 data:
///   not PIS, one cycle on n vertices            -> M_n(K[x,x^-1])
///   K0 = Z_{m-1} (or 0), det <= 0, [L(E)] of order o -> M_d(L(1,m)), d = (m-1)/o
///   K0 = Z^r, det = 0, [L(E)] = 0               -> L(K_{r+1}^(2))
/// Any class of order o in Z_{m-1} is an automorphic image of d = (m-1)/o,
/// so d is the canonical representative.
inline AlgebraClass classify(const K0Report& r) {
  if (!r.pis) {
    if (r.single_cycle) return AlgebraClass::mat_laurent(Integer(r.vertex_count));
    return AlgebraClass::unclassified();
  }
  if (!r.k0 || !r.identity_order) return AlgebraClass::unclassified();
  const FinAbGroup& g = *r.k0;
  const ElementOrder& o = *r.identity_order;
  if (g.is_finite() && g.is_cyclic() && r.det_sign <= 0 && !o.infinite) {
    const Integer order = *g.order();
    return AlgebraClass::mat_leavitt(order / o.value, order + 1);
  }
  if (g.torsion().empty() && g.free_rank() > 0 && r.det_sign == 0 && !o.infinite && o.value == 1)
    return AlgebraClass::complete_two_loops(Integer(g.free_rank() + 1));
  return AlgebraClass::unclassified(g);
}

enum class KpVerdict { isomorphic, not_by_this_criterion };

inline const char* to_string(KpVerdict v) {
  return v == KpVerdict::isomorphic ? "isomorphic" : "not_by_this_criterion";
}

struct KpComparison {
  KpVerdict verdict = KpVerdict::not_by_this_criterion;
  std::string reason;
  /// For cyclic K0 = Z_m: marker representatives and the unit u with u*a = b (mod m).
  std::optional<Integer> modulus, marker_a, marker_b, multiplier;
};

namespace detail {

/// Marker [L(E)] as an element of Z_m: its coordinate when known, else the
/// canonical element m / order (same automorphism orbit).
inline Integer cyclic_marker(const K0Report& r, const Integer& m) {
  if (r.identity_class && r.identity_class->size() == 1) return mod_floor((*r.identity_class)[0], m);
  return mod_floor(m / r.identity_order->value, m);
}

/// A unit u mod m with u*a = b (mod m), or nullopt when gcd(a, m) != gcd(b, m).
inline std::optional<Integer> unit_multiplier(const Integer& a, const Integer& b, const Integer& m) {
  const Integer g = gcd(a, m);
  if (g != gcd(b, m)) return std::nullopt;
  const Integer mp = m / g;
  // u0 = (b/g) * (a/g)^{-1} mod m'
  Integer u0 = 0;
  if (mp > 1) {
    Integer x, y;
    extended_gcd(mod_floor(a / g, mp), mp, x, y);
    u0 = mod_floor(mod_floor(b / g, mp) * x, mp);
  }
  // Lift u0 to a unit mod m: add m' times the part of m coprime to u0.
  Integer c = m;
  for (Integer h = gcd(c, u0); h > 1; h = gcd(c, u0)) c /= h;
  return mod_floor(u0 + mp * c, m);
}

}  // namespace detail

/// Restricted algebraic KP comparison: isomorphic when det signs agree and an
/// explicit isomorphism of K0 carrying [L(E)] to [L(F)] is constructed and
/// checked. Covers cyclic K0, free K0 with zero markers, and equal marker
/// coordinates in identical invariant-factor groups; anything else is
/// not_by_this_criterion (which is not a proof of non-isomorphism).
inline KpComparison kp_compare(const K0Report& a, const K0Report& b) {
  if (!a.pis || !b.pis || !a.k0 || !b.k0 || !a.identity_order || !b.identity_order)
    throw NotPurelyInfiniteSimpleError("kp_compare requires purely infinite simple graphs");
  KpComparison out;
  if (a.det_sign != b.det_sign) {
    out.reason = "det signs differ";
    return out;
  }
  if (!(*a.k0 == *b.k0)) {
    out.reason = "K0 groups differ: " + a.k0->display() + " vs " + b.k0->display();
    return out;
  }
  const FinAbGroup& g = *a.k0;
  if (g.is_trivial()) {
    out.verdict = KpVerdict::isomorphic;
    out.reason = "both K0 trivial";
    return out;
  }
  if (g.is_finite() && g.is_cyclic()) {
    const Integer m = g.torsion()[0];
    const Integer ma = detail::cyclic_marker(a, m), mb = detail::cyclic_marker(b, m);
    out.modulus = m;
    out.marker_a = ma;
    out.marker_b = mb;
    const auto u = detail::unit_multiplier(ma, mb, m);
    if (!u) {
      out.reason = "no automorphism of Z_" + m.str() + " maps " + ma.str() + " to " + mb.str();
      return out;
    }
    if (gcd(*u, m) != 1 || mod_floor(*u * ma - mb, m) != 0)
      throw std::logic_error("kp_compare: constructed multiplier failed verification");
    out.multiplier = *u;
    out.verdict = KpVerdict::isomorphic;
    out.reason = "x -> " + u->str() + "x on Z_" + m.str();
    return out;
  }
  const bool zero_a = !a.identity_order->infinite && a.identity_order->value == 1;
  const bool zero_b = !b.identity_order->infinite && b.identity_order->value == 1;
  if (g.torsion().empty() && zero_a && zero_b) {
    out.verdict = KpVerdict::isomorphic;
    out.reason = "identity map on " + g.display() + " (both markers zero)";
    return out;
  }
  if (a.identity_class && b.identity_class && *a.identity_class == *b.identity_class) {
    out.verdict = KpVerdict::isomorphic;
    out.reason = "identity map in invariant-factor coordinates";
    return out;
  }
  out.reason = "marked-isomorphism decision not implemented for " + g.display();
  return out;
}

/// Flow equivalence of PIS source-free graphs: det(I - A) and Coker(I - A) agree.
inline bool flow_equivalent(const DirectedMultigraph& g1, const DirectedMultigraph& g2) {
  for (const auto* g : {&g1, &g2}) {
    if (g->has_source()) throw DomainError("flow_equivalent requires graphs without sources");
    if (!is_purely_infinite_simple(*g)) throw NotPurelyInfiniteSimpleError("flow_equivalent requires purely infinite simple graphs");
  }
  const IntMatrix m1 = g1.i_minus_a(), m2 = g2.i_minus_a();
  return det(m1) == det(m2) && cokernel(m1) == cokernel(m2);
}

struct DihedralRow {
  FinAbGroup k0;
  std::optional<AlgebraClass> algebra;  // none for n = 3 (mod 6): group only
};

/// Expected K0 and algebra for Cay(D_n, {r, s}) by n mod 6.
inline DihedralRow dihedral_theorem_row(std::size_t n) {
  if (n == 0) throw DomainError("dihedral_theorem_row needs n >= 1");
  switch (n % 6) {
    case 1:
    case 5: return {FinAbGroup(), AlgebraClass::leavitt(2)};
    case 2:
    case 4: return {FinAbGroup({3}, 0), AlgebraClass::mat_leavitt(3, 4)};
    case 3: return {FinAbGroup({2, 2}, 0), std::nullopt};
    default: return {FinAbGroup({}, 2), AlgebraClass::complete_two_loops(3)};
  }
}

}  // namespace k0lab
