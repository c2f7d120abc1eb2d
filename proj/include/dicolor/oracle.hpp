#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dicolor/degeneracy.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/error.hpp"

// Brute-force ground truth. Everything here works on 64-bit vertex masks and
// deliberately shares no code with the peeling in degeneracy.hpp, so the two
// can be checked against each other.

namespace dicolor {

inline constexpr std::size_t kBruteforceDegeneracyCap = 20;
inline constexpr std::size_t kDefaultExactCap = 12;

namespace detail {

struct MaskGraph {
  std::vector<std::uint64_t> out, in;

  explicit MaskGraph(const Digraph& d) : out(d.order(), 0), in(d.order(), 0) {
    for (Vertex u = 0; u < d.order(); ++u)
      for (Vertex v : d.out(u)) {
        out[u] |= 1ull << v;
        in[v] |= 1ull << u;
      }
  }

  bool deficient(unsigned v, std::uint64_t set, std::size_t m) const {
    return static_cast<std::size_t>(std::popcount(out[v] & set)) < m ||
           static_cast<std::size_t>(std::popcount(in[v] & set)) < m;
  }

  // Greedy removal of deficient vertices; true iff nothing survives.
  bool degenerate(std::uint64_t set, std::size_t m) const {
    bool removed = true;
    while (set && removed) {
      removed = false;
      for (std::uint64_t rest = set; rest; rest &= rest - 1) {
        unsigned v = static_cast<unsigned>(std::countr_zero(rest));
        if (deficient(v, set, m)) {
          set &= ~(1ull << v);
          removed = true;
        }
      }
    }
    return set == 0;
  }
};

inline void require_cap(const Digraph& d, std::size_t cap, const char* what) {
  if (d.order() > cap || d.order() > 64)
    throw Error(ErrorCode::size_cap,
                std::string(what) + ": digraph has " + std::to_string(d.order()) +
                    " vertices, cap is " + std::to_string(std::min<std::size_t>(cap, 64)));
}

}  // namespace detail

/// Definitional check: every nonempty vertex subset has a vertex with fewer
/// than m out-neighbours or fewer than m in-neighbours inside the subset.
inline bool weak_degeneracy_bruteforce(const Digraph& d, std::size_t m) {
  detail::require_positive_m(m);
  detail::require_cap(d, kBruteforceDegeneracyCap, "weak_degeneracy_bruteforce");
  detail::MaskGraph g(d);
  const std::uint64_t limit = 1ull << d.order();
  for (std::uint64_t set = 1; set < limit; ++set) {
    bool has_deficient = false;
    for (std::uint64_t rest = set; rest && !has_deficient; rest &= rest - 1)
      has_deficient = g.deficient(static_cast<unsigned>(std::countr_zero(rest)), set, m);
    if (!has_deficient) return false;
  }
  return true;
}

/// Exhaustive search for a coloring with at most k weakly m-degenerate
/// classes. Vertices are assigned in `order` (index order when empty); a
/// fresh color is only opened as the next unused index. At most 64 vertices.
inline std::optional<Coloring> find_coloring(const Digraph& d, std::size_t m,
                                             std::size_t k,
                                             std::span<const Vertex> order = {}) {
  detail::require_positive_m(m);
  detail::require_cap(d, 64, "find_coloring");
  const std::size_t n = d.order();
  if (n == 0) return Coloring{};
  if (k == 0) return std::nullopt;

  std::vector<Vertex> seq(order.begin(), order.end());
  if (seq.empty())
    for (Vertex v = 0; v < n; ++v) seq.push_back(v);
  if (seq.size() != n)
    throw Error(ErrorCode::length_mismatch, "search order must list every vertex");

  detail::MaskGraph g(d);
  std::vector<std::uint64_t> classes(k, 0);
  std::vector<Color> assignment(n, 0);

  auto search = [&](auto& self, std::size_t pos, std::size_t used) -> bool {
    if (pos == n) return true;
    Vertex v = seq[pos];
    std::size_t options = std::min(k, used + 1);
    for (std::size_t c = 0; c < options; ++c) {
      classes[c] |= 1ull << v;
      // Weak degeneracy is hereditary, so a bad partial class stays bad.
      if (g.degenerate(classes[c], m)) {
        assignment[v] = c;
        if (self(self, pos + 1, std::max(used, c + 1))) return true;
      }
      classes[c] &= ~(1ull << v);
    }
    return false;
  };
  if (!search(search, 0, 0)) return std::nullopt;
  return Coloring::from_assignment(std::move(assignment));
}

struct ExactResult {
  std::size_t chi = 0;
  Coloring witness;
  bool certificate_checked = false;
};

/// Smallest k admitting a (k, m)-degenerate coloring, by increasing k.
/// The empty digraph has chi 0.
inline ExactResult exact_chi_m(const Digraph& d, std::size_t m,
                               std::size_t max_n = kDefaultExactCap) {
  detail::require_positive_m(m);
  detail::require_cap(d, max_n, "exact_chi_m");
  ExactResult result;
  for (std::size_t k = 0; k <= d.order(); ++k) {
    if (auto c = find_coloring(d, m, k)) {
      result.chi = k;
      result.witness = std::move(*c);
      result.certificate_checked =
          d.order() == 0 || verify_coloring(d, result.witness, m).valid;
      return result;
    }
  }
  throw Error(ErrorCode::fallback_exhausted, "no coloring found with n colors");
}

/// chi_m(D) = k and chi_m(D - v) < k for every vertex v.
inline bool is_km_critical(const Digraph& d, std::size_t k, std::size_t m,
                           std::size_t max_n = kDefaultExactCap) {
  if (exact_chi_m(d, m, max_n).chi != k) return false;
  for (Vertex v = 0; v < d.order(); ++v)
    if (exact_chi_m(remove_vertex(d, v).graph, m, max_n).chi >= k) return false;
  return true;
}

}  // namespace dicolor
