#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dicolor/digraph.hpp"
#include "dicolor/error.hpp"

namespace dicolor {

/// The four forbidden 4-vertex digraphs. Pattern vertices are a, b, c, d
/// (indices 0..3). F1 is two directed a->c paths of length two; F2 adds the
/// chord b->d; G1 and G2 close F1 and F2 with c->a.
enum class PatternId { F1, F2, G1, G2 };

struct Pattern {
  PatternId id;
  const char* name;
  std::vector<Edge> edges;
};

namespace detail {

inline constexpr Vertex A = 0, B = 1, C = 2, D = 3;

// 4-vertex digraphs as 12-bit masks; bit index of the ordered pair (i, j).
constexpr unsigned pair_bit(unsigned i, unsigned j) { return i * 4 + j; }

inline std::uint16_t encode(std::span<const Edge> edges) {
  std::uint16_t mask = 0;
  for (Edge e : edges) mask |= std::uint16_t(1u << pair_bit(e.from, e.to));
  return mask;
}

inline std::uint16_t permute_mask(std::uint16_t mask, const std::array<unsigned, 4>& p) {
  std::uint16_t result = 0;
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j)
      if (i != j && (mask >> pair_bit(i, j) & 1u))
        result |= std::uint16_t(1u << pair_bit(p[i], p[j]));
  return result;
}

inline const std::vector<std::array<unsigned, 4>>& all_permutations() {
  static const auto perms = [] {
    std::vector<std::array<unsigned, 4>> out;
    std::array<unsigned, 4> p{0, 1, 2, 3};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

// Minimum mask over the 24 relabellings.
inline const std::array<std::uint16_t, 1u << 16>& canonical_table() {
  static const auto table = [] {
    std::array<std::uint16_t, 1u << 16> t{};
    for (unsigned mask = 0; mask < (1u << 16); ++mask) {
      bool loops = false;
      for (unsigned i = 0; i < 4; ++i) loops |= (mask >> pair_bit(i, i) & 1u) != 0;
      if (loops) continue;
      std::uint16_t best = 0xFFFF;
      for (const auto& p : all_permutations())
        best = std::min(best, permute_mask(std::uint16_t(mask), p));
      t[mask] = best;
    }
    return t;
  }();
  return table;
}

}  // namespace detail

inline const std::array<Pattern, 4>& all_patterns() {
  using namespace detail;
  static const std::array<Pattern, 4> patterns{{
      {PatternId::F1, "F1", {{A, B}, {B, C}, {A, D}, {D, C}}},
      {PatternId::F2, "F2", {{A, B}, {B, C}, {A, D}, {D, C}, {B, D}}},
      {PatternId::G1, "G1", {{A, B}, {B, C}, {A, D}, {D, C}, {C, A}}},
      {PatternId::G2, "G2", {{A, B}, {B, C}, {A, D}, {D, C}, {B, D}, {C, A}}},
  }};
  return patterns;
}

inline const Pattern& pattern(PatternId id) {
  return all_patterns()[static_cast<std::size_t>(id)];
}

/// The pattern itself as a digraph on vertices 0..3.
inline Digraph pattern_digraph(PatternId id) {
  return Digraph::from_edge_list(4, pattern(id).edges);
}

struct PatternMatch {
  PatternId id;
  std::array<Vertex, 4> vertices;  // the matched subset, increasing
  std::array<Vertex, 4> roles;     // vertex playing a, b, c, d

  std::string describe() const {
    std::string s = std::string(pattern(id).name) + " at {";
    for (std::size_t i = 0; i < 4; ++i) {
      if (i) s += ",";
      s += std::to_string(vertices[i]);
    }
    return s + "}";
  }
};

namespace detail {

// Adjacency oracle for the subset scan: a dense bit matrix when it fits,
// binary search otherwise.
class AdjacencyBits {
 public:
  explicit AdjacencyBits(const Digraph& d) : d_(d) {
    if (d.order() <= kDenseLimit) {
      words_ = (d.order() + 63) / 64;
      bits_.assign(d.order() * words_, 0);
      for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v : d.out(u)) bits_[u * words_ + v / 64] |= 1ull << (v % 64);
    }
  }

  bool operator()(Vertex u, Vertex v) const {
    if (words_ == 0) return d_.has_edge(u, v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1ull;
  }

 private:
  static constexpr std::size_t kDenseLimit = 8192;
  const Digraph& d_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline std::uint16_t subset_mask(const AdjacencyBits& adj, const std::array<Vertex, 4>& s) {
  std::uint16_t mask = 0;
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j)
      if (i != j && adj(s[i], s[j])) mask |= std::uint16_t(1u << pair_bit(i, j));
  return mask;
}

inline std::array<Vertex, 4> assign_roles(PatternId id, std::uint16_t subset,
                                          const std::array<Vertex, 4>& vertices) {
  std::uint16_t target = encode(pattern(id).edges);
  // p maps pattern vertex -> subset position.
  for (const auto& p : all_permutations()) {
    if (permute_mask(target, p) == subset) {
      return {vertices[p[0]], vertices[p[1]], vertices[p[2]], vertices[p[3]]};
    }
  }
  return vertices;  // unreachable when canonical forms agree
}

inline std::optional<PatternMatch> match_subset(const AdjacencyBits& adj,
                                                const std::array<Vertex, 4>& s,
                                                std::span<const PatternId> ids,
                                                std::span<const std::uint16_t> wanted) {
  std::uint16_t mask = subset_mask(adj, s);
  std::uint16_t form = canonical_table()[mask];
  for (std::size_t k = 0; k < ids.size(); ++k)
    if (form == wanted[k]) return PatternMatch{ids[k], s, assign_roles(ids[k], mask, s)};
  return std::nullopt;
}

// All 4-subsets in lexicographic order.
inline std::optional<PatternMatch> scan_all(const Digraph& d, const AdjacencyBits& adj,
                                            std::span<const PatternId> ids,
                                            std::span<const std::uint16_t> wanted) {
  auto adjacent = [&](Vertex u, Vertex v) { return adj(u, v) || adj(v, u); };
  const std::size_t n = d.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        // Every 3-subset of every pattern spans at least two adjacent pairs.
        int pairs = adjacent(a, b) + adjacent(a, c) + adjacent(b, c);
        if (pairs < 2) continue;
        for (Vertex x = c + 1; x < n; ++x)
          if (auto m = match_subset(adj, {a, b, c, x}, ids, wanted)) return m;
      }
    }
  }
  return std::nullopt;
}

// Every pattern's underlying graph is a 4-cycle, so the smallest vertex a of
// a match has two larger neighbours p, q, and the last vertex is adjacent to
// one of a, p, q. Enumerates those candidates per a and keeps the
// lexicographically smallest match, so the result equals scan_all's.
inline std::optional<PatternMatch> scan_neighbourhoods(
    const std::vector<std::vector<Vertex>>& nbr, const AdjacencyBits& adj,
    std::span<const PatternId> ids, std::span<const std::uint16_t> wanted) {
  std::vector<Vertex> candidates;
  for (Vertex a = 0; a < nbr.size(); ++a) {
    auto first_above = [a](const std::vector<Vertex>& list) {
      return std::upper_bound(list.begin(), list.end(), a);
    };
    std::vector<Vertex> up(first_above(nbr[a]), nbr[a].end());
    std::optional<PatternMatch> best;
    for (std::size_t i = 0; i < up.size(); ++i) {
      for (std::size_t j = i + 1; j < up.size(); ++j) {
        const Vertex p = up[i], q = up[j];
        candidates.assign(up.begin(), up.end());
        candidates.insert(candidates.end(), first_above(nbr[p]), nbr[p].end());
        candidates.insert(candidates.end(), first_above(nbr[q]), nbr[q].end());
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (Vertex y : candidates) {
          if (y == p || y == q) continue;
          std::array<Vertex, 4> s{a, p, q, y};
          std::sort(s.begin(), s.end());
          if (best && s >= best->vertices) continue;
          if (auto m = match_subset(adj, s, ids, wanted)) best = m;
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

inline std::vector<std::vector<Vertex>> underlying_neighbours(const Digraph& d) {
  std::vector<std::vector<Vertex>> nbr(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    std::merge(d.out(v).begin(), d.out(v).end(), d.in(v).begin(), d.in(v).end(),
               std::back_inserter(nbr[v]));
    nbr[v].erase(std::unique(nbr[v].begin(), nbr[v].end()), nbr[v].end());
  }
  return nbr;
}

enum class ScanStrategy { automatic, all_subsets, neighbourhoods };

// Returns the lexicographically first 4-subset whose induced subdigraph
// matches any of `ids` (earlier ids win on the same subset). The automatic
// strategy picks whichever enumeration has the smaller estimated cost.
inline std::optional<PatternMatch> scan(const Digraph& d, std::span<const PatternId> ids,
                                        ScanStrategy strategy = ScanStrategy::automatic) {
  std::vector<std::uint16_t> wanted;
  for (PatternId id : ids) wanted.push_back(canonical_table()[encode(pattern(id).edges)]);
  AdjacencyBits adj(d);
  auto nbr = underlying_neighbours(d);

  if (strategy == ScanStrategy::automatic) {
    const double n = static_cast<double>(d.order());
    double max_deg = 0, local = 0;
    for (const auto& list : nbr) max_deg = std::max(max_deg, static_cast<double>(list.size()));
    for (const auto& list : nbr) {
      double k = static_cast<double>(list.size());
      local += k * k / 2 * (k + 2 * max_deg) * 4;  // sorting candidates adds a small factor
    }
    double all = n * n * n * n / 24;
    strategy = local < all ? ScanStrategy::neighbourhoods : ScanStrategy::all_subsets;
  }
  if (strategy == ScanStrategy::all_subsets) return scan_all(d, adj, ids, wanted);
  return scan_neighbourhoods(nbr, adj, ids, wanted);
}

}  // namespace detail

/// Lexicographically first 4-subset inducing a copy of `id`, if any.
inline std::optional<PatternMatch> contains_induced(const Digraph& d, PatternId id) {
  std::array<PatternId, 1> ids{id};
  return detail::scan(d, ids);
}

inline bool avoids_F(const Digraph& d) {
  std::array<PatternId, 2> ids{PatternId::F1, PatternId::F2};
  return !detail::scan(d, ids);
}

inline bool avoids_G(const Digraph& d) {
  std::array<PatternId, 2> ids{PatternId::G1, PatternId::G2};
  return !detail::scan(d, ids);
}

/// Raised when an operation requires F- and G-avoidance and a pattern is found.
class PatternViolation : public Error {
 public:
  explicit PatternViolation(const PatternMatch& match)
      : Error(ErrorCode::pattern_found, "contains " + match.describe()),
        match_(match) {}

  const PatternMatch& match() const noexcept { return match_; }

 private:
  PatternMatch match_;
};

/// First forbidden pattern found, checking F1, F2, G1, G2 in that order.
inline std::optional<PatternMatch> find_forbidden(const Digraph& d) {
  for (const Pattern& p : all_patterns())
    if (auto m = contains_induced(d, p.id)) return m;
  return std::nullopt;
}

inline void require_avoids_F_and_G(const Digraph& d) {
  if (auto m = find_forbidden(d)) throw PatternViolation(*m);
}

}  // namespace dicolor
