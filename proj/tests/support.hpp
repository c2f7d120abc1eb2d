#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dicolor/dicolor.hpp"

namespace testing_support {

using dicolor::Digraph;
using dicolor::Edge;
using dicolor::Vertex;

// splitmix64; small, fast and independent of the library's generator.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Modulo bias is irrelevant at test sizes.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  bool chance(unsigned percent) { return below(100) < percent; }

  std::vector<Vertex> permutation(std::size_t n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return p;
  }

 private:
  std::uint64_t state_;
};

// Arbitrary digraph (digons allowed), each ordered pair kept with `percent`.
inline Digraph random_digraph(TestRng& rng, std::size_t n, unsigned percent) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng.chance(percent)) edges.push_back({u, v});
  return Digraph::from_edge_list(n, edges);
}

// Oriented graph: each unordered pair gets no edge or one random direction.
inline Digraph random_oriented_graph(TestRng& rng, std::size_t n, unsigned percent) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(percent)) edges.push_back(rng.chance(50) ? Edge{u, v} : Edge{v, u});
  return Digraph::from_edge_list(n, edges);
}

// The digraph on n vertices whose edges are the set bits of `code` over the
// n(n-1) ordered pairs (u, v), u != v, in lexicographic order.
inline Digraph digraph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (code >> bit & 1) edges.push_back({u, v});
      ++bit;
    }
  return Digraph::from_edge_list(n, edges);
}

// max over v of d+(v) + d-(v), counted from the edge list alone.
inline std::int64_t twice_max_avg_by_count(const Digraph& d) {
  std::vector<std::int64_t> total(d.order(), 0);
  for (Edge e : d.edges()) {
    ++total[e.from];
    ++total[e.to];
  }
  std::int64_t best = 0;
  for (auto t : total) best = std::max(best, t);
  return best;
}

// Vertex-disjoint directed cycles of the given lengths.
inline Digraph cycle_union(const std::vector<std::size_t>& lengths) {
  std::vector<Edge> edges;
  std::size_t base = 0;
  for (std::size_t len : lengths) {
    for (std::size_t i = 0; i < len; ++i) edges.push_back({base + i, base + (i + 1) % len});
    base += len;
  }
  return Digraph::from_edge_list(base, edges);
}

// Is the subgraph induced on `s` isomorphic to the 4-vertex pattern `p`?
// Tries all 24 bijections directly.
inline bool induces_pattern(const Digraph& d, const std::array<Vertex, 4>& s,
                            const Digraph& p) {
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  do {
    bool same = true;
    for (std::size_t i = 0; i < 4 && same; ++i)
      for (std::size_t j = 0; j < 4 && same; ++j)
        if (i != j && d.has_edge(s[perm[i]], s[perm[j]]) != p.has_edge(i, j)) same = false;
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every 4-subset checked by induces_pattern.
inline bool contains_pattern_slow(const Digraph& d, const Digraph& p) {
  const std::size_t n = d.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex e = c + 1; e < n; ++e)
          if (induces_pattern(d, {a, b, c, e}, p)) return true;
  return false;
}

inline Digraph c3() { return Digraph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline Digraph digon() { return Digraph::from_edge_list(2, {{0, 1}, {1, 0}}); }
inline Digraph r5() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, (i + 2) % 5});
  }
  return Digraph::from_edge_list(5, edges);
}

}  // namespace testing_support
