#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dicolor/error.hpp"
#include "dicolor/half_int.hpp"

namespace dicolor {

using Vertex = std::size_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite digraph on vertices 0..n-1 with sorted out- and in-adjacency.
///
/// Immutable once built. Self-loops and parallel edges are rejected at
/// construction; digons (u->v and v->u) are allowed and detected by
/// is_oriented().
class Digraph {
 public:
  Digraph() = default;

  /// Builds a digraph from an edge list. Edge order does not matter.
  static Digraph from_edge_list(std::size_t n, std::span<const Edge> edges) {
    Digraph d;
    d.out_.resize(n);
    d.in_.resize(n);
    for (const Edge& e : edges) {
      if (e.from >= n || e.to >= n) {
        throw Error(ErrorCode::vertex_out_of_range,
                    "edge (" + std::to_string(e.from) + "," +
                        std::to_string(e.to) + ") has a vertex outside 0.." +
                        std::to_string(n == 0 ? 0 : n - 1));
      }
      if (e.from == e.to) {
        throw Error(ErrorCode::self_loop,
                    "self-loop at vertex " + std::to_string(e.from));
      }
      d.out_[e.from].push_back(e.to);
      d.in_[e.to].push_back(e.from);
    }
    for (Vertex v = 0; v < n; ++v) {
      auto& out = d.out_[v];
      std::sort(out.begin(), out.end());
      if (auto dup = std::adjacent_find(out.begin(), out.end());
          dup != out.end()) {
        throw Error(ErrorCode::duplicate_edge,
                    "duplicate edge (" + std::to_string(v) + "," +
                        std::to_string(*dup) + ")");
      }
      std::sort(d.in_[v].begin(), d.in_[v].end());
    }
    d.edge_count_ = edges.size();
    return d;
  }

  static Digraph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return out_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

  /// (d+(v) + d-(v)) / 2
  HalfInt avg_degree(Vertex v) const {
    return HalfInt::from_twice(
        static_cast<std::int64_t>(out_[v].size() + in_[v].size()));
  }

  bool has_edge(Vertex u, Vertex v) const {
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
  }

  /// All edges sorted by (from, to).
  std::vector<Edge> edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : out_[u]) result.push_back({u, v});
    return result;
  }

  /// Full scan of the structural invariants; used by tests.
  bool check_invariants() const {
    std::size_t mirrored = 0;
    for (Vertex v = 0; v < order(); ++v) {
      if (!std::is_sorted(out_[v].begin(), out_[v].end()) ||
          std::adjacent_find(out_[v].begin(), out_[v].end()) != out_[v].end())
        return false;
      for (Vertex w : out_[v]) {
        if (w == v || w >= order()) return false;
        if (!std::binary_search(in_[w].begin(), in_[w].end(), v)) return false;
      }
      mirrored += in_[v].size();
    }
    return mirrored == edge_count_;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t edge_count_ = 0;
};

struct DegreeStats {
  HalfInt max_avg;                 // max over v of (d+ + d-)/2
  std::int64_t max_geom_sq = 0;    // max over v of d+ * d-
  std::vector<std::pair<std::size_t, std::size_t>> per_vertex;  // (d+, d-)

  // Display only; comparisons use max_geom_sq.
  double max_geom() const { return std::sqrt(static_cast<double>(max_geom_sq)); }
};

inline DegreeStats degree_stats(const Digraph& d) {
  DegreeStats stats;
  stats.per_vertex.reserve(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    std::size_t out = d.out_degree(v), in = d.in_degree(v);
    stats.per_vertex.emplace_back(out, in);
    stats.max_avg = std::max(stats.max_avg, d.avg_degree(v));
    stats.max_geom_sq =
        std::max(stats.max_geom_sq, static_cast<std::int64_t>(out * in));
  }
  return stats;
}

/// Δ̄(D) without the per-vertex table.
inline HalfInt max_avg_degree(const Digraph& d) {
  HalfInt best;
  for (Vertex v = 0; v < d.order(); ++v) best = std::max(best, d.avg_degree(v));
  return best;
}

inline bool is_oriented(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v : d.out(u))
      if (v > u && d.has_edge(v, u)) return false;
  return true;
}

/// Induced subgraph plus the index maps in both directions.
struct InducedSubgraph {
  Digraph graph;
  std::vector<Vertex> original;  // new index -> old index
  std::vector<Vertex> local;     // old index -> new index, kNoVertex if absent
};

/// Subgraph induced by `vertices` (duplicates ignored). New indices follow
/// increasing old index.
inline InducedSubgraph induced_subgraph(const Digraph& d,
                                        std::span<const Vertex> vertices) {
  InducedSubgraph result;
  result.local.assign(d.order(), kNoVertex);
  for (Vertex v : vertices) {
    if (v >= d.order()) {
      throw Error(ErrorCode::vertex_out_of_range,
                  "vertex " + std::to_string(v) + " not in digraph of order " +
                      std::to_string(d.order()));
    }
    result.local[v] = 0;
  }
  for (Vertex v = 0; v < d.order(); ++v) {
    if (result.local[v] != kNoVertex) {
      result.local[v] = result.original.size();
      result.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex u : result.original)
    for (Vertex w : d.out(u))
      if (result.local[w] != kNoVertex)
        edges.push_back({result.local[u], result.local[w]});
  result.graph = Digraph::from_edge_list(result.original.size(), edges);
  return result;
}

inline InducedSubgraph induced_subgraph(const Digraph& d,
                                        std::initializer_list<Vertex> vertices) {
  return induced_subgraph(d, std::span<const Vertex>(vertices.begin(), vertices.size()));
}

/// D - v
inline InducedSubgraph remove_vertex(const Digraph& d, Vertex v) {
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < d.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(d, keep);
}

/// Weakly connected components, each sorted, listed by smallest member.
inline std::vector<std::vector<Vertex>> weak_components(const Digraph& d) {
  std::vector<std::vector<Vertex>> parts;
  std::vector<bool> seen(d.order(), false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < d.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> part;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      auto visit = [&](Vertex w) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      };
      for (Vertex w : d.out(v)) visit(w);
      for (Vertex w : d.in(v)) visit(w);
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

/// Vertex-disjoint union; vertices of `b` are shifted by a.order().
inline Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  std::vector<Edge> edges = a.edges();
  for (Edge e : b.edges()) edges.push_back({e.from + a.order(), e.to + a.order()});
  return Digraph::from_edge_list(a.order() + b.order(), edges);
}

/// Relabels vertex v as perm[v].
inline Digraph relabel(const Digraph& d, std::span<const Vertex> perm) {
  if (perm.size() != d.order())
    throw Error(ErrorCode::length_mismatch, "permutation length differs from order");
  std::vector<Edge> edges;
  for (Edge e : d.edges()) edges.push_back({perm[e.from], perm[e.to]});
  return Digraph::from_edge_list(d.order(), edges);
}

}  // namespace dicolor
