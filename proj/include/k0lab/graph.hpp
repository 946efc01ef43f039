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
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "k0lab/error.hpp"
#include "k0lab/zmatrix.hpp"

namespace k0lab {

/// Finite directed multigraph stored by its adjacency-count matrix:
/// edges(v, w) is the number of edges v -> w.
class DirectedMultigraph {
 public:
  DirectedMultigraph() = default;
  explicit DirectedMultigraph(std::size_t vertex_count, std::vector<std::string> labels = {})
      : n_(vertex_count), adj_(vertex_count * vertex_count, 0), labels_(std::move(labels)) {
    if (n_ == 0) throw DomainError("a graph needs at least one vertex");
    if (labels_.empty())
      for (std::size_t v = 0; v < n_; ++v) labels_.push_back("v" + std::to_string(v));
    if (labels_.size() != n_) throw DomainError("vertex label count mismatch");
  }

  static DirectedMultigraph from_adjacency(const std::vector<std::vector<std::uint64_t>>& rows) {
    DirectedMultigraph g(rows.size());
    for (std::size_t v = 0; v < rows.size(); ++v) {
      if (rows[v].size() != rows.size()) throw DomainError("adjacency matrix must be square");
      for (std::size_t w = 0; w < rows.size(); ++w) g.set_edges(v, w, rows[v][w]);
    }
    return g;
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::uint64_t edges(std::size_t v, std::size_t w) const { return adj_[v * n_ + w]; }
  void set_edges(std::size_t v, std::size_t w, std::uint64_t count) { adj_[v * n_ + w] = count; }
  void add_edges(std::size_t v, std::size_t w, std::uint64_t count) { adj_[v * n_ + w] += count; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::uint64_t out_degree(std::size_t v) const {
    std::uint64_t d = 0;
    for (std::size_t w = 0; w < n_; ++w) d += edges(v, w);
    return d;
  }
  std::uint64_t in_degree(std::size_t w) const {
    std::uint64_t d = 0;
    for (std::size_t v = 0; v < n_; ++v) d += edges(v, w);
    return d;
  }
  std::uint64_t total_edges() const {
    std::uint64_t d = 0;
    for (auto x : adj_) d += x;
    return d;
  }

  IntMatrix adjacency_matrix() const {
    IntMatrix a(n_, n_);
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t w = 0; w < n_; ++w) a(v, w) = edges(v, w);
    return a;
  }

  /// I - A^t, whose cokernel is K0 in the purely infinite simple case.
  IntMatrix i_minus_a_transpose() const {
    IntMatrix m = IntMatrix::identity(n_);
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t w = 0; w < n_; ++w)
        if (edges(v, w)) m(w, v) -= edges(v, w);
    return m;
  }
  /// I - A, the matrix of the flow-equivalence invariants.
  IntMatrix i_minus_a() const { return i_minus_a_transpose().transpose(); }

  bool has_sink() const {
    for (std::size_t v = 0; v < n_; ++v)
      if (out_degree(v) == 0) return true;
    return false;
  }
  bool has_source() const {
    for (std::size_t v = 0; v < n_; ++v)
      if (in_degree(v) == 0) return true;
    return false;
  }

  /// Graphviz rendering; edge multiplicity k > 1 is shown as label "(k)".
  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph G {\n";
    for (std::size_t v = 0; v < n_; ++v) os << "  n" << v << " [label=\"" << labels_[v] << "\"];\n";
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t w = 0; w < n_; ++w) {
        const auto k = edges(v, w);
        if (k == 0) continue;
        os << "  n" << v << " -> n" << w;
        if (k > 1) os << " [label=\"(" << k << ")\"]";
        os << ";\n";
      }
    os << "}\n";
    return os.str();
  }

  friend bool operator==(const DirectedMultigraph& a, const DirectedMultigraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::string> labels_;
};

namespace detail {

inline std::vector<bool> reachable_from(const DirectedMultigraph& g, std::size_t start, bool forward) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      const bool edge = forward ? g.edges(v, w) > 0 : g.edges(w, v) > 0;
      if (edge && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

/// Strongly connected component id per vertex (Kosaraju on the dense matrix).
inline std::vector<std::size_t> scc_ids(const DirectedMultigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    // iterative post-order DFS
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    seen[root] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      while (next < n && (g.edges(v, next) == 0 || seen[next])) ++next;
      if (next == n) {
        order.push_back(v);
        stack.pop_back();
      } else {
        std::size_t w = next++;
        seen[w] = true;
        stack.push_back({w, 0});
      }
    }
  }
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unassigned);
  std::size_t next_id = 0;
  for (std::size_t i = n; i-- > 0;) {
    std::size_t root = order[i];
    if (comp[root] != unassigned) continue;
    std::vector<std::size_t> stack{root};
    comp[root] = next_id;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (g.edges(w, v) > 0 && comp[w] == unassigned) {
          comp[w] = next_id;
          stack.push_back(w);
        }
    }
    ++next_id;
  }
  return comp;
}

}  // namespace detail

inline bool is_strongly_connected(const DirectedMultigraph& g) {
  for (bool b : detail::reachable_from(g, 0, true))
    if (!b) return false;
  for (bool b : detail::reachable_from(g, 0, false))
    if (!b) return false;
  return true;
}

/// Smallest hereditary and saturated vertex set containing `seed`.
inline std::vector<bool> hereditary_saturated_closure(const DirectedMultigraph& g, const std::vector<bool>& seed) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> h = seed;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!h[v]) continue;
      for (std::size_t w = 0; w < n; ++w)
        if (g.edges(v, w) > 0 && !h[w]) {
          h[w] = true;
          changed = true;
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (h[v] || g.out_degree(v) == 0) continue;
      bool all_in = true;
      for (std::size_t w = 0; w < n && all_in; ++w)
        if (g.edges(v, w) > 0 && !h[w]) all_in = false;
      if (all_in) {
        h[v] = true;
        changed = true;
      }
    }
  }
  return h;
}

/// True iff some cycle has an exit-free traversal, i.e. Condition (L) fails.
/// A cycle without exits is a cyclic SCC in which every vertex emits exactly
/// one edge.
inline bool has_cycle_without_exit(const DirectedMultigraph& g) {
  const auto comp = detail::scc_ids(g);
  const std::size_t n = g.vertex_count();
  std::size_t comps = 0;
  for (auto c : comp) comps = std::max(comps, c + 1);
  for (std::size_t c = 0; c < comps; ++c) {
    std::size_t size = 0;
    bool cyclic = false, all_degree_one = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (comp[v] != c) continue;
      ++size;
      if (g.edges(v, v) > 0) cyclic = true;
      if (g.out_degree(v) != 1) all_degree_one = false;
    }
    if (size > 1) cyclic = true;
    if (cyclic && all_degree_one) return true;
  }
  return false;
}

inline bool has_cycle(const DirectedMultigraph& g) {
  const auto comp = detail::scc_ids(g);
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    if (g.edges(v, v) > 0) return true;
    for (std::size_t w = 0; w < n; ++w)
      if (w != v && comp[w] == comp[v]) return true;
  }
  return false;
}

/// Graph criterion for L(E) purely infinite simple: at least one cycle, every
/// cycle has an exit, and every vertex connects to every cycle (the
/// hereditary saturated closure of each single vertex is all of E^0). Sinks
/// are excluded explicitly.
inline bool is_purely_infinite_simple(const DirectedMultigraph& g) {
  if (g.has_sink() || !has_cycle(g) || has_cycle_without_exit(g)) return false;
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<bool> seed(n, false);
    seed[v] = true;
    for (bool b : hereditary_saturated_closure(g, seed))
      if (!b) return false;
  }
  return true;
}

/// One edge of a multigraph; parallel edges are distinguished by `copy`.
struct Edge {
  std::size_t source;
  std::size_t range;
  std::uint64_t copy;
};

/// Edges in canonical order: by source, then range, then copy.
inline std::vector<Edge> edge_list(const DirectedMultigraph& g) {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (std::size_t w = 0; w < g.vertex_count(); ++w)
      for (std::uint64_t k = 0; k < g.edges(v, w); ++k) out.push_back({v, w, k});
  return out;
}

/// Partition of each r^{-1}(v) for in-splitting: class_of[e] is the class
/// (0-based, local to the range vertex) of edge e in edge_list order.
struct InSplitPartition {
  std::vector<std::size_t> class_of;
};

/// Every edge in its own class.
inline InSplitPartition singleton_partition(const DirectedMultigraph& g) {
  const auto edges = edge_list(g);
  std::vector<std::size_t> next(g.vertex_count(), 0);
  InSplitPartition p;
  for (const auto& e : edges) p.class_of.push_back(next[e.range]++);
  return p;
}

/// One class per vertex; the in-split graph is isomorphic to the input.
inline InSplitPartition trivial_partition(const DirectedMultigraph& g) {
  return InSplitPartition{std::vector<std::size_t>(edge_list(g).size(), 0)};
}

/// In-split graph E_r(P): vertex v with m(v) classes becomes v_1..v_m(v)
/// (sources stay single); each edge e is copied once per copy of s(e) and
/// every copy ends at r(e)_i where i is the class of e.
inline DirectedMultigraph in_split(const DirectedMultigraph& g, const InSplitPartition& p) {
  const auto edges = edge_list(g);
  const std::size_t n = g.vertex_count();
  if (p.class_of.size() != edges.size()) throw DomainError("in_split: partition does not cover every edge");

  std::vector<std::size_t> classes(n, 0);
  for (std::size_t e = 0; e < edges.size(); ++e)
    classes[edges[e].range] = std::max(classes[edges[e].range], p.class_of[e] + 1);
  std::vector<std::vector<bool>> used(n);
  for (std::size_t v = 0; v < n; ++v) used[v].assign(classes[v], false);
  for (std::size_t e = 0; e < edges.size(); ++e) used[edges[e].range][p.class_of[e]] = true;
  for (std::size_t v = 0; v < n; ++v)
    for (bool b : used[v])
      if (!b) throw DomainError("in_split: partition has an empty class at vertex " + std::to_string(v));

  // Vertex numbering: v's copies are consecutive; a source keeps one vertex.
  std::vector<std::size_t> first(n + 1, 0);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t copies = classes[v] == 0 ? 1 : classes[v];
    first[v + 1] = first[v] + copies;
    if (classes[v] == 0)
      labels.push_back(g.labels()[v]);
    else
      for (std::size_t i = 0; i < copies; ++i) labels.push_back(g.labels()[v] + "_" + std::to_string(i + 1));
  }
  DirectedMultigraph out(first[n], std::move(labels));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    const std::size_t target = first[edge.range] + p.class_of[e];
    for (std::size_t src = first[edge.source]; src < first[edge.source + 1]; ++src) out.add_edges(src, target, 1);
  }
  return out;
}

/// K_n^(l): one edge v_i -> v_j for every i != j and `loops` loops per vertex.
inline DirectedMultigraph build_complete_graph(std::size_t n, std::uint64_t loops) {
  if (n == 0) throw DomainError("complete graph needs n >= 1");
  DirectedMultigraph g(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) g.set_edges(v, w, v == w ? loops : 1);
  return g;
}

/// R_m^d: v1 emits d-1 edges to v2, which carries m loops. L(R_m^d) is
/// M_d(L(1,m)); for d == 1 use the one-vertex rose instead.
inline DirectedMultigraph build_matrix_leavitt_graph(std::uint64_t d, std::uint64_t m) {
  if (d < 1 || m < 2) throw DomainError("R_m^d needs d >= 1 and m >= 2");
  if (d == 1) {
    DirectedMultigraph rose(1);
    rose.set_edges(0, 0, m);
    return rose;
  }
  DirectedMultigraph g(2);
  g.set_edges(0, 1, d - 1);
  g.set_edges(1, 1, m);
  return g;
}

}  // namespace k0lab
