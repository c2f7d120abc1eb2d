#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "dicolor/decomposition.hpp"
#include "dicolor/degeneracy.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/error.hpp"
#include "dicolor/half_int.hpp"
#include "dicolor/oracle.hpp"
#include "dicolor/patterns.hpp"

namespace dicolor {

/// floor(Δ̄/m) + 1: what greedy_coloring never exceeds.
inline std::int64_t greedy_bound(HalfInt delta_bar, std::size_t m) {
  return floor_div(delta_bar.twice(), 2 * static_cast<std::int64_t>(m)) + 1;
}

/// Parameters of the split used by fracdelta_coloring: s classes with
/// ceiling 2m and, when r >= 1/2, a remainder class with ceiling r - 1/2.
struct FracDeltaPlan {
  std::size_t m = 1;
  HalfInt delta_bar;
  std::int64_t s = 0;          // floor((Δ̄ + 1/2) / (2m + 1/2))
  HalfInt r;                   // Δ̄ + 1/2 - s (2m + 1/2)
  std::vector<HalfInt> targets;
  std::int64_t bound = 0;      // floor((Δ̄ - s/2) / m) + 1

  static FracDeltaPlan make(std::size_t m, HalfInt delta_bar) {
    detail::require_positive_m(m);
    FracDeltaPlan p;
    p.m = m;
    p.delta_bar = delta_bar;
    const auto mm = static_cast<std::int64_t>(m);
    // In units of 1/2: (2Δ̄ + 1) / (4m + 1).
    p.s = floor_div(delta_bar.twice() + 1, 4 * mm + 1);
    p.r = HalfInt::from_twice(delta_bar.twice() + 1 - p.s * (4 * mm + 1));
    p.targets.assign(static_cast<std::size_t>(p.s), HalfInt(2 * mm));
    if (p.has_remainder()) p.targets.push_back(p.r - kHalf);
    p.bound = floor_div(delta_bar.twice() - p.s, 2 * mm) + 1;
    return p;
  }

  bool has_remainder() const { return r >= kHalf; }
};

/// Split used by improved_acyclic_coloring: s unit classes and, when
/// r >= 1/2, a remainder class with ceiling r - 1/2.
struct ImprovedPlan {
  HalfInt delta_bar;
  std::int64_t s = 0;          // floor((Δ̄ + 1) / (3/2))
  HalfInt r;                   // Δ̄ + 1 - (3/2) s
  std::vector<HalfInt> targets;
  std::int64_t bound = 0;      // floor((2/3) Δ̄ + 1/2) + 1

  static ImprovedPlan make(HalfInt delta_bar) {
    ImprovedPlan p;
    p.delta_bar = delta_bar;
    p.s = floor_div(delta_bar.twice() + 2, 3);
    p.r = HalfInt::from_twice(delta_bar.twice() + 2 - 3 * p.s);
    p.targets.assign(static_cast<std::size_t>(p.s), HalfInt(1));
    if (p.has_remainder()) p.targets.push_back(p.r - kHalf);
    p.bound = floor_div(2 * delta_bar.twice() + 3, 6) + 1;
    return p;
  }

  bool has_remainder() const { return r >= kHalf; }
};

namespace detail {

inline constexpr Color kUncolored = kNoVertex;

// Extends a partial coloring one vertex at a time. A vertex takes the lowest
// color (below `limit`) held by fewer than m of its already-colored
// neighbours on one side. The side with fewer colored neighbours is tried
// first (ties: out), then the other.
class GreedyPainter {
 public:
  GreedyPainter(const Digraph& d, std::size_t m, std::size_t limit,
                std::vector<Color>& colors)
      : d_(d), m_(m), limit_(limit), colors_(colors) {}

  bool paint(Vertex v) {
    std::size_t colored_out = 0, colored_in = 0;
    for (Vertex w : d_.out(v)) colored_out += colors_[w] != kUncolored;
    for (Vertex w : d_.in(v)) colored_in += colors_[w] != kUncolored;
    Side first = colored_out <= colored_in ? Side::out : Side::in;
    Side second = first == Side::out ? Side::in : Side::out;
    for (Side side : {first, second}) {
      if (auto c = lowest_sparse_color(side == Side::out ? d_.out(v) : d_.in(v))) {
        colors_[v] = *c;
        return true;
      }
    }
    return false;
  }

 private:
  std::optional<Color> lowest_sparse_color(std::span<const Vertex> neighbours) {
    tally_.assign(std::min(limit_, neighbours.size() + 1), 0);
    for (Vertex w : neighbours) {
      Color c = colors_[w];
      if (c != kUncolored && c < tally_.size()) ++tally_[c];
    }
    for (Color c = 0; c < tally_.size(); ++c)
      if (tally_[c] < m_) return c;
    return std::nullopt;
  }

  const Digraph& d_;
  std::size_t m_;
  std::size_t limit_;
  std::vector<Color>& colors_;
  std::vector<std::size_t> tally_;
};

inline Coloring finish(std::vector<Color> colors) {
  return Coloring::from_assignment(std::move(colors));
}

}  // namespace detail

/// Greedy (Δ̄/m)-bound coloring in vertex-index order. Uses at most
/// floor(Δ̄(D)/m) + 1 colors.
inline Coloring greedy_coloring(const Digraph& d, std::size_t m) {
  detail::require_positive_m(m);
  std::vector<Color> colors(d.order(), detail::kUncolored);
  detail::GreedyPainter painter(d, m, d.order() + 1, colors);
  for (Vertex v = 0; v < d.order(); ++v) painter.paint(v);
  return detail::finish(std::move(colors));
}

/// Which route bounded_coloring took, per weak component.
struct BoundedColoringStats {
  std::size_t components = 0;
  std::size_t peeled_empty = 0;     // core vanished, reverse peel order sufficed
  std::size_t constructed = 0;      // regular core colored via u_n and m+1 neighbours
  std::size_t fallback = 0;         // exhaustive search on the core
};

namespace detail {

// Colors a core (every vertex with d+ = d- = km) by the linear-ordering
// construction: m+1 same-side neighbours S of some u_n share color 0, the
// rest follow in reverse breadth-first order from a root in each component
// of core - S, and the roots come last.
class RegularCoreColorer {
 public:
  RegularCoreColorer(const Digraph& core, std::size_t m, std::size_t k)
      : core_(core), m_(m), k_(k) {}

  std::optional<std::vector<Color>> run() {
    const std::size_t n = core_.order();
    if (n <= m_ + 1) return std::nullopt;
    // First pass: the removal must leave core - S weakly connected.
    // Second pass: accept disconnected remainders when each component has a
    // usable root.
    for (bool require_connected : {true, false}) {
      for (Vertex un = 0; un < n; ++un) {
        for (Side side : {Side::out, Side::in}) {
          auto nbrs = side == Side::out ? core_.out(un) : core_.in(un);
          if (nbrs.size() < m_ + 1) continue;
          std::vector<std::size_t> pick(m_ + 1);
          for (std::size_t i = 0; i <= m_; ++i) pick[i] = i;
          do {
            std::vector<Vertex> separator;
            for (std::size_t i : pick) separator.push_back(nbrs[i]);
            if (auto colors = attempt(un, separator, require_connected)) return colors;
          } while (next_combination(pick, nbrs.size()));
        }
      }
    }
    return std::nullopt;
  }

 private:
  static bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t r = idx.size();
    for (std::size_t i = r; i-- > 0;) {
      if (idx[i] < n - r + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  std::optional<std::vector<Color>> attempt(Vertex un, const std::vector<Vertex>& separator,
                                            bool require_connected) {
    const std::size_t n = core_.order();
    std::vector<bool> removed(n, false);
    for (Vertex u : separator) removed[u] = true;

    // Components of core - S, the one holding u_n first.
    std::vector<std::size_t> comp(n, kNoVertex);
    std::vector<std::vector<Vertex>> members;
    auto flood = [&](Vertex root) {
      std::vector<Vertex> part{root}, stack{root};
      comp[root] = members.size();
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        auto visit = [&](Vertex w) {
          if (!removed[w] && comp[w] == kNoVertex) {
            comp[w] = members.size();
            part.push_back(w);
            stack.push_back(w);
          }
        };
        for (Vertex w : core_.out(v)) visit(w);
        for (Vertex w : core_.in(v)) visit(w);
      }
      members.push_back(std::move(part));
    };
    flood(un);
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && comp[v] == kNoVertex) flood(v);
    if (require_connected && members.size() > 1) return std::nullopt;
    if (!require_connected && members.size() == 1) return std::nullopt;  // tried already

    std::vector<Vertex> roots{un};
    for (std::size_t c = 1; c < members.size(); ++c) roots.push_back(root_for(members[c], removed));

    std::vector<Color> colors(n, kUncolored);
    for (Vertex u : separator) colors[u] = 0;
    GreedyPainter painter(core_, m_, k_, colors);
    for (Vertex root : roots) {
      auto order = bfs_order(root, removed);
      for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (!painter.paint(*it)) return std::nullopt;
    }
    return colors;
  }

  // A vertex with m+1 separator neighbours on one side is guaranteed a color
  // when it is painted last; otherwise the smallest vertex is tried.
  Vertex root_for(const std::vector<Vertex>& part, const std::vector<bool>& in_separator) const {
    for (Vertex v : part) {
      std::size_t out = 0, in = 0;
      for (Vertex w : core_.out(v)) out += in_separator[w];
      for (Vertex w : core_.in(v)) in += in_separator[w];
      if (out > m_ || in > m_) return v;
    }
    return *std::min_element(part.begin(), part.end());
  }

  std::vector<Vertex> bfs_order(Vertex root, const std::vector<bool>& removed) const {
    std::vector<Vertex> order{root};
    std::vector<bool> seen(core_.order(), false);
    seen[root] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      Vertex v = order[head];
      auto visit = [&](Vertex w) {
        if (!removed[w] && !seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      };
      for (Vertex w : core_.out(v)) visit(w);
      for (Vertex w : core_.in(v)) visit(w);
    }
    return order;
  }

  const Digraph& core_;
  std::size_t m_, k_;
};

inline std::vector<Vertex> bfs_order_all(const Digraph& d) {
  std::vector<Vertex> order;
  std::vector<bool> seen(d.order(), false);
  for (Vertex root = 0; root < d.order(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::size_t head = order.size();
    order.push_back(root);
    for (; head < order.size(); ++head) {
      Vertex v = order[head];
      for (auto nbrs : {d.out(v), d.in(v)})
        for (Vertex w : nbrs)
          if (!seen[w]) {
            seen[w] = true;
            order.push_back(w);
          }
    }
  }
  return order;
}

// One weakly connected component.
inline std::vector<Color> bounded_component(const Digraph& g, std::size_t m, std::size_t k,
                                            BoundedColoringStats& stats) {
  const std::size_t threshold = k * m;
  PeelResult peeled = peel(g, threshold);
  std::vector<Color> colors(g.order(), kUncolored);

  if (peeled.core.empty()) {
    ++stats.peeled_empty;
  } else {
    auto core = induced_subgraph(g, peeled.core);
    bool regular = true;
    for (Vertex v = 0; v < core.graph.order(); ++v)
      regular &= core.graph.out_degree(v) == threshold && core.graph.in_degree(v) == threshold;

    std::optional<std::vector<Color>> core_colors;
    if (regular) {
      // Components of a regular core are handled separately.
      core_colors.emplace(core.graph.order(), kUncolored);
      for (const auto& part : weak_components(core.graph)) {
        auto sub = induced_subgraph(core.graph, part);
        auto piece = RegularCoreColorer(sub.graph, m, k).run();
        if (!piece) {
          core_colors.reset();
          break;
        }
        for (Vertex v = 0; v < sub.graph.order(); ++v)
          (*core_colors)[sub.original[v]] = (*piece)[v];
      }
    }
    if (core_colors) {
      ++stats.constructed;
    } else {
      ++stats.fallback;
      if (core.graph.order() > 64)
        throw Error(ErrorCode::fallback_exhausted,
                    "core of " + std::to_string(core.graph.order()) +
                        " vertices is too large for the exhaustive fallback");
      auto order = bfs_order_all(core.graph);
      auto found = find_coloring(core.graph, m, k, order);
      if (!found)
        throw Error(ErrorCode::fallback_exhausted,
                    "no " + std::to_string(k) + "-coloring of the core exists");
      core_colors = found->assignment;
    }
    for (Vertex v = 0; v < core.graph.order(); ++v)
      colors[core.original[v]] = (*core_colors)[v];
  }

  // Each peeled vertex had fewer than km neighbours on one side among the
  // vertices still present, all of which are colored before it.
  GreedyPainter painter(g, m, k, colors);
  for (auto it = peeled.order.rbegin(); it != peeled.order.rend(); ++it) {
    if (!painter.paint(it->vertex))
      throw Error(ErrorCode::fallback_exhausted,
                  "no color left for peeled vertex " + std::to_string(it->vertex));
  }
  return colors;
}

}  // namespace detail

/// Coloring with at most k weakly m-degenerate classes for an oriented
/// digraph with Δ̄(D) <= km and k >= 2.
inline Coloring bounded_coloring(const Digraph& d, std::size_t m, std::size_t k,
                                 BoundedColoringStats* stats = nullptr) {
  detail::require_positive_m(m);
  if (k < 2) throw Error(ErrorCode::invalid_argument, "bounded coloring requires k >= 2");
  if (!is_oriented(d))
    throw Error(ErrorCode::precondition, "digraph has a directed 2-cycle");
  HalfInt delta_bar = max_avg_degree(d);
  if (delta_bar > HalfInt(static_cast<std::int64_t>(k * m)))
    throw Error(ErrorCode::precondition,
                "deltabar " + delta_bar.to_string() + " exceeds km = " +
                    std::to_string(k * m));

  BoundedColoringStats local;
  std::vector<Color> colors(d.order(), detail::kUncolored);
  for (const auto& part : weak_components(d)) {
    ++local.components;
    auto sub = induced_subgraph(d, part);
    auto piece = detail::bounded_component(sub.graph, m, k, local);
    for (Vertex v = 0; v < sub.graph.order(); ++v) colors[sub.original[v]] = piece[v];
  }
  if (stats) *stats = local;
  return detail::finish(std::move(colors));
}

namespace detail {

// Places a part's coloring into the global palette at `offset`.
inline void place(std::vector<Color>& colors, const InducedSubgraph& part,
                  const Coloring& c, std::size_t offset) {
  for (Vertex v = 0; v < part.original.size(); ++v)
    colors[part.original[v]] = c.assignment[v] + offset;
}

}  // namespace detail

template <typename Plan>
struct PipelineResult {
  Coloring coloring;                      // compacted
  Plan plan;
  std::size_t palette_before_compaction = 0;
  Partition partition;
};

using FracDeltaResult = PipelineResult<FracDeltaPlan>;
using ImprovedResult = PipelineResult<ImprovedPlan>;

/// Oriented D with Δ̄(D) >= 2m: split into s classes with Δ̄ <= 2m (two colors
/// each) plus a remainder class colored greedily.
inline FracDeltaResult fracdelta_coloring(const Digraph& d, std::size_t m) {
  detail::require_positive_m(m);
  if (!is_oriented(d))
    throw Error(ErrorCode::precondition, "digraph has a directed 2-cycle");
  HalfInt delta_bar = max_avg_degree(d);
  if (delta_bar < HalfInt(2 * static_cast<std::int64_t>(m)))
    throw Error(ErrorCode::precondition,
                "deltabar " + delta_bar.to_string() + " is below 2m = " +
                    std::to_string(2 * m));

  FracDeltaResult result;
  result.plan = FracDeltaPlan::make(m, delta_bar);
  PartitionTargets targets{result.plan.targets};
  result.partition = lovasz_partition(d, targets);

  std::vector<Color> colors(d.order(), detail::kUncolored);
  std::size_t offset = 0;
  auto classes = result.partition.classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto part = induced_subgraph(d, classes[i]);
    bool remainder = result.plan.has_remainder() && i + 1 == classes.size();
    Coloring c = remainder ? greedy_coloring(part.graph, m)
                           : bounded_coloring(part.graph, m, 2);
    detail::place(colors, part, c, offset);
    offset += c.num_colors;
  }
  result.palette_before_compaction = offset;
  result.coloring = compact(Coloring::from_assignment(std::move(colors)));
  return result;
}

/// Oriented D avoiding F1, F2, G1, G2: s acyclic classes (one color each)
/// plus a remainder class colored greedily. Uses at most
/// floor((2/3) Δ̄ + 1/2) + 1 colors.
inline ImprovedResult improved_acyclic_coloring(const Digraph& d,
                                                SearchTrace* trace = nullptr) {
  if (!is_oriented(d))
    throw Error(ErrorCode::precondition, "digraph has a directed 2-cycle");
  require_avoids_F_and_G(d);

  ImprovedResult result;
  result.plan = ImprovedPlan::make(max_avg_degree(d));
  PartitionTargets targets{result.plan.targets};
  result.partition = detail::modlov_partition_unchecked_patterns(d, targets, trace);

  std::vector<Color> colors(d.order(), detail::kUncolored);
  std::size_t offset = 0;
  auto classes = result.partition.classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) continue;
    auto part = induced_subgraph(d, classes[i]);
    bool remainder = result.plan.has_remainder() && i + 1 == classes.size();
    Coloring c;
    if (remainder) {
      c = greedy_coloring(part.graph, 1);
    } else {
      if (!is_acyclic(part.graph))
        throw Error(ErrorCode::iteration_cap, "unit class " + std::to_string(i) +
                                                  " still contains a directed cycle");
      c = Coloring::from_assignment(std::vector<Color>(part.graph.order(), 0));
    }
    detail::place(colors, part, c, offset);
    offset += c.num_colors;
  }
  result.palette_before_compaction = offset;
  result.coloring = compact(Coloring::from_assignment(std::move(colors)));
  return result;
}

}  // namespace dicolor
