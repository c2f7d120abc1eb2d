#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "dicolor/digraph.hpp"
#include "dicolor/error.hpp"

namespace dicolor {

using Color = std::size_t;

/// Vertex -> color assignment. num_colors is always 1 + the largest color
/// used (0 for the empty digraph).
struct Coloring {
  std::vector<Color> assignment;
  std::size_t num_colors = 0;

  static Coloring from_assignment(std::vector<Color> assignment) {
    Coloring c;
    for (Color col : assignment) c.num_colors = std::max(c.num_colors, col + 1);
    c.assignment = std::move(assignment);
    return c;
  }

  std::vector<std::vector<Vertex>> classes() const {
    std::vector<std::vector<Vertex>> result(num_colors);
    for (Vertex v = 0; v < assignment.size(); ++v)
      result[assignment[v]].push_back(v);
    return result;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Renumbers colors by first appearance in vertex order; drops empty classes.
inline Coloring compact(const Coloring& c) {
  std::vector<Color> remap(c.num_colors, kNoVertex);
  std::vector<Color> out(c.assignment.size());
  Color next = 0;
  for (Vertex v = 0; v < c.assignment.size(); ++v) {
    Color& slot = remap[c.assignment[v]];
    if (slot == kNoVertex) slot = next++;
    out[v] = slot;
  }
  return Coloring::from_assignment(std::move(out));
}

enum class Side { out, in };

struct PeelStep {
  Vertex vertex = 0;
  Side deficient = Side::out;  // which degree was below the threshold

  friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

struct PeelResult {
  std::vector<PeelStep> order;  // removal sequence
  std::vector<Vertex> core;     // sorted; empty iff weakly m-degenerate
};

namespace detail {
inline void require_positive_m(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::invalid_argument, "m must be at least 1");
}
}  // namespace detail

/// Repeatedly removes the lowest-indexed vertex whose out-degree or in-degree
/// in the remaining graph is below m. What is left is the maximal induced
/// subgraph with minimum out- and in-degree at least m.
inline PeelResult peel(const Digraph& d, std::size_t m) {
  detail::require_positive_m(m);
  const std::size_t n = d.order();
  std::vector<std::size_t> out_deg(n), in_deg(n);
  std::vector<bool> queued(n, false), removed(n, false);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> deficient;

  auto enqueue_if_deficient = [&](Vertex v) {
    if (!queued[v] && (out_deg[v] < m || in_deg[v] < m)) {
      queued[v] = true;
      deficient.push(v);
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    out_deg[v] = d.out_degree(v);
    in_deg[v] = d.in_degree(v);
    enqueue_if_deficient(v);
  }

  PeelResult result;
  while (!deficient.empty()) {
    Vertex v = deficient.top();
    deficient.pop();
    removed[v] = true;
    result.order.push_back({v, out_deg[v] < m ? Side::out : Side::in});
    for (Vertex w : d.out(v)) {
      if (removed[w]) continue;
      --in_deg[w];
      enqueue_if_deficient(w);
    }
    for (Vertex w : d.in(v)) {
      if (removed[w]) continue;
      --out_deg[w];
      enqueue_if_deficient(w);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) result.core.push_back(v);
  return result;
}

inline bool is_weakly_m_degenerate(const Digraph& d, std::size_t m) {
  return peel(d, m).core.empty();
}

inline bool is_acyclic(const Digraph& d) { return is_weakly_m_degenerate(d, 1); }

/// Iterative three-colour depth-first search; independent of peeling.
inline bool has_directed_cycle(const Digraph& d) {
  enum : unsigned char { white, grey, black };
  std::vector<unsigned char> state(d.order(), white);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root = 0; root < d.order(); ++root) {
    if (state[root] != white) continue;
    state[root] = grey;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto succ = d.out(v);
      if (next == succ.size()) {
        state[v] = black;
        stack.pop_back();
        continue;
      }
      Vertex w = succ[next++];
      if (state[w] == grey) return true;
      if (state[w] == white) {
        state[w] = grey;
        stack.push_back({w, 0});
      }
    }
  }
  return false;
}

struct ColoringCheck {
  bool valid = true;
  Color failed_class = 0;             // first class that is not degenerate
  std::vector<Vertex> witness_core;   // its nonempty core, original indices

  explicit operator bool() const { return valid; }
};

/// Checks that every color class induces a weakly m-degenerate digraph.
inline ColoringCheck verify_coloring(const Digraph& d, const Coloring& c,
                                     std::size_t m) {
  detail::require_positive_m(m);
  if (c.assignment.size() != d.order()) {
    throw Error(ErrorCode::length_mismatch,
                "coloring covers " + std::to_string(c.assignment.size()) +
                    " vertices, digraph has " + std::to_string(d.order()));
  }
  for (Color col : c.assignment) {
    if (col >= c.num_colors)
      throw Error(ErrorCode::invalid_argument,
                  "color " + std::to_string(col) + " outside palette of size " +
                      std::to_string(c.num_colors));
  }
  auto classes = c.classes();
  for (Color col = 0; col < classes.size(); ++col) {
    if (classes[col].empty()) continue;
    auto sub = induced_subgraph(d, classes[col]);
    auto peeled = peel(sub.graph, m);
    if (!peeled.core.empty()) {
      ColoringCheck check;
      check.valid = false;
      check.failed_class = col;
      for (Vertex v : peeled.core) check.witness_core.push_back(sub.original[v]);
      return check;
    }
  }
  return {};
}

}  // namespace dicolor
