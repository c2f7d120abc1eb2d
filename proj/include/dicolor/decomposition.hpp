#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dicolor/digraph.hpp"
#include "dicolor/error.hpp"
#include "dicolor/half_int.hpp"
#include "dicolor/patterns.hpp"

namespace dicolor {

/// Ceilings on Δ̄ for each class of a vertex partition.
struct PartitionTargets {
  std::vector<HalfInt> targets;

  std::size_t size() const { return targets.size(); }
  HalfInt sum() const {
    return std::accumulate(targets.begin(), targets.end(), HalfInt{});
  }

  void validate() const {
    if (targets.empty())
      throw Error(ErrorCode::invalid_argument, "at least one target is required");
    for (HalfInt t : targets)
      if (t < HalfInt{0})
        throw Error(ErrorCode::invalid_argument,
                    "negative target " + t.to_string());
  }
};

/// Which form of the degree budget a decomposition requires:
///   lovasz:  Δ̄(D) <= (s-1)/2 + Σ targets
///   modlov:  Δ̄(D) <= (s-2)/2 + Σ targets
enum class SlackKind { lovasz, modlov };

/// Budget minus Δ̄(D); the precondition holds iff this is >= 0.
inline HalfInt precondition_slack(const Digraph& d, const PartitionTargets& t,
                                  SlackKind kind) {
  auto s = static_cast<std::int64_t>(t.size());
  HalfInt budget = HalfInt::from_twice(s - (kind == SlackKind::lovasz ? 1 : 2)) + t.sum();
  return budget - max_avg_degree(d);
}

struct Partition {
  std::vector<std::size_t> class_of;
  std::size_t num_classes = 0;

  std::vector<std::vector<Vertex>> classes() const {
    std::vector<std::vector<Vertex>> out(num_classes);
    for (Vertex v = 0; v < class_of.size(); ++v) out[class_of[v]].push_back(v);
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

namespace detail {
inline void check_partition(const Digraph& d, const Partition& p,
                            const PartitionTargets& t) {
  if (p.class_of.size() != d.order())
    throw Error(ErrorCode::length_mismatch, "partition does not cover the digraph");
  if (p.num_classes != t.size())
    throw Error(ErrorCode::length_mismatch,
                "partition has " + std::to_string(p.num_classes) +
                    " classes but there are " + std::to_string(t.size()) +
                    " targets");
  for (std::size_t c : p.class_of)
    if (c >= p.num_classes)
      throw Error(ErrorCode::invalid_argument,
                  "class index " + std::to_string(c) + " out of range");
}
}  // namespace detail

/// f = Σ_i target_i |V_i| + (number of edges between different classes) / 2
inline HalfInt f_objective(const Digraph& d, const Partition& p,
                           const PartitionTargets& t) {
  detail::check_partition(d, p, t);
  std::int64_t twice = 0;
  for (Vertex v = 0; v < d.order(); ++v) twice += t.targets[p.class_of[v]].twice();
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex w : d.out(u))
      if (p.class_of[u] != p.class_of[w]) ++twice;
  return HalfInt::from_twice(twice);
}

/// Per-run record of the local search, for tests and diagnostics.
struct SearchTrace {
  enum class Phase { improve, brooks };
  struct Move {
    Phase phase;
    Vertex vertex;
    std::size_t from, to;
    HalfInt f_after;
  };
  HalfInt f_initial;
  std::vector<Move> moves;
  std::size_t improve_moves = 0;
  std::size_t brooks_moves = 0;
};

namespace detail {

// Local search on f over single-vertex moves. Classes are processed in a
// canonical order (target descending, then original index) so the outcome
// depends only on the multiset pairing of targets, and is mapped back to the
// caller's class numbering at the end.
class PartitionSearch {
 public:
  PartitionSearch(const Digraph& d, const PartitionTargets& t, SearchTrace* trace)
      : d_(d), s_(t.size()), trace_(trace) {
    order_.resize(s_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return t.targets[a] > t.targets[b];
    });
    for (std::size_t k = 0; k < s_; ++k) twice_target_.push_back(t.targets[order_[k]].twice());

    const std::size_t n = d.order();
    class_of_.resize(n);
    counts_.assign(n * s_, 0);
    for (Vertex v = 0; v < n; ++v) class_of_[v] = v % s_;
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : d.out(v)) ++count(v, class_of_[w]);
      for (Vertex w : d.in(v)) ++count(v, class_of_[w]);
    }
    std::int64_t twice_f = 0;
    for (Vertex v = 0; v < n; ++v) {
      twice_f += twice_target_[class_of_[v]];
      for (Vertex w : d.out(v))
        if (class_of_[v] != class_of_[w]) ++twice_f;
    }
    f_ = HalfInt::from_twice(twice_f);
    if (trace_) trace_->f_initial = f_;
  }

  // First-improvement: the lowest vertex with an improving move takes the
  // lowest improving destination; repeat until no move improves f.
  void improve() {
    std::set<Vertex> candidates;
    for (Vertex v = 0; v < d_.order(); ++v)
      if (best_improving(v)) candidates.insert(v);
    while (!candidates.empty()) {
      Vertex v = *candidates.begin();
      auto j = best_improving(v);
      if (!j) {
        candidates.erase(candidates.begin());
        continue;
      }
      move(v, *j, SearchTrace::Phase::improve);
      auto refresh = [&](Vertex w) {
        if (best_improving(w)) candidates.insert(w);
        else candidates.erase(w);
      };
      refresh(v);
      for (Vertex w : d_.out(v)) refresh(w);
      for (Vertex w : d_.in(v)) refresh(w);
    }
  }

  // Removes Brooks cycles from unit-target classes by moving one cycle vertex
  // to a class where it fits under the ceiling, re-optimising after each move.
  void eliminate_brooks_cycles() {
    const std::size_t cap = 4 * d_.order() * s_;
    std::size_t moves = 0;
    Vertex last_moved = kNoVertex;
    while (auto found = first_brooks_cycle()) {
      auto [k, cycle] = *found;
      std::sort(cycle.begin(), cycle.end());
      std::optional<std::pair<Vertex, std::size_t>> pick;
      // Prefer not to immediately move the vertex that was just moved back.
      for (int pass = 0; pass < 2 && !pick; ++pass) {
        for (Vertex v : cycle) {
          if (pass == 0 && v == last_moved) continue;
          if (auto j = admissible_destination(v, k)) {
            pick = {v, *j};
            break;
          }
        }
      }
      if (!pick) {
        throw Error(ErrorCode::precondition,
                    "Brooks cycle with no admissible destination; the degree "
                    "budget does not hold");
      }
      if (++moves > cap) {
        throw Error(ErrorCode::iteration_cap,
                    "Brooks-cycle elimination exceeded " + std::to_string(cap) +
                        " moves");
      }
      move(pick->first, pick->second, SearchTrace::Phase::brooks);
      last_moved = pick->first;
      improve();
    }
  }

  Partition result() const {
    Partition p;
    p.num_classes = s_;
    p.class_of.resize(class_of_.size());
    for (Vertex v = 0; v < class_of_.size(); ++v) p.class_of[v] = order_[class_of_[v]];
    return p;
  }

 private:
  int& count(Vertex v, std::size_t k) { return counts_[v * s_ + k]; }
  int count(Vertex v, std::size_t k) const { return counts_[v * s_ + k]; }

  // Twice the change in f from moving v into class j.
  std::int64_t twice_gain(Vertex v, std::size_t j) const {
    std::size_t i = class_of_[v];
    return twice_target_[j] - twice_target_[i] + count(v, i) - count(v, j);
  }

  std::optional<std::size_t> best_improving(Vertex v) const {
    for (std::size_t j = 0; j < s_; ++j)
      if (j != class_of_[v] && twice_gain(v, j) > 0) return j;
    return std::nullopt;
  }

  // Lowest class j != k with d̄_{V_j}(v) <= target_j.
  std::optional<std::size_t> admissible_destination(Vertex v, std::size_t k) const {
    for (std::size_t j = 0; j < s_; ++j)
      if (j != k && count(v, j) <= twice_target_[j]) return j;
    return std::nullopt;
  }

  void move(Vertex v, std::size_t j, SearchTrace::Phase phase) {
    std::size_t i = class_of_[v];
    f_ += HalfInt::from_twice(twice_gain(v, j));
    class_of_[v] = j;
    for (Vertex w : d_.out(v)) { --count(w, i); ++count(w, j); }
    for (Vertex w : d_.in(v)) { --count(w, i); ++count(w, j); }
    if (trace_) {
      trace_->moves.push_back({phase, v, order_[i], order_[j], f_});
      (phase == SearchTrace::Phase::improve ? trace_->improve_moves
                                            : trace_->brooks_moves)++;
    }
  }

  // First directed cycle forming a whole weak component of a unit class,
  // scanning classes in canonical order and components by smallest vertex.
  std::optional<std::pair<std::size_t, std::vector<Vertex>>> first_brooks_cycle() const {
    for (std::size_t k = 0; k < s_; ++k) {
      if (twice_target_[k] != 2) continue;
      std::vector<Vertex> members;
      for (Vertex v = 0; v < class_of_.size(); ++v)
        if (class_of_[v] == k) members.push_back(v);
      if (auto cycle = cycle_component(d_, class_of_, k, members)) return {{k, *cycle}};
    }
    return std::nullopt;
  }

 public:
  // Scans the weak components of class k (given its members in increasing
  // order) and returns the first that is a directed cycle, listed from its
  // smallest vertex along out-edges.
  static std::optional<std::vector<Vertex>> cycle_component(
      const Digraph& d, const std::vector<std::size_t>& class_of, std::size_t k,
      const std::vector<Vertex>& members) {
    std::vector<bool> seen(d.order(), false);
    for (Vertex root : members) {
      if (seen[root]) continue;
      std::vector<Vertex> comp{root}, stack{root};
      seen[root] = true;
      bool is_cycle = true;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        std::size_t out = 0, in = 0;
        auto visit = [&](Vertex w, std::size_t& deg) {
          if (class_of[w] != k) return;
          ++deg;
          if (!seen[w]) {
            seen[w] = true;
            comp.push_back(w);
            stack.push_back(w);
          }
        };
        for (Vertex w : d.out(v)) visit(w, out);
        for (Vertex w : d.in(v)) visit(w, in);
        if (out != 1 || in != 1) is_cycle = false;
      }
      if (!is_cycle) continue;
      std::vector<Vertex> cycle{*std::min_element(comp.begin(), comp.end())};
      for (;;) {
        Vertex next = kNoVertex;
        for (Vertex w : d.out(cycle.back()))
          if (class_of[w] == k) next = w;
        if (next == cycle.front()) break;
        cycle.push_back(next);
      }
      return cycle;
    }
    return std::nullopt;
  }

 private:
  const Digraph& d_;
  std::size_t s_;
  SearchTrace* trace_;
  std::vector<std::size_t> order_;            // canonical -> caller class
  std::vector<std::int64_t> twice_target_;    // by canonical class
  std::vector<std::size_t> class_of_;         // canonical class per vertex
  std::vector<int> counts_;                   // neighbours of v in class k
  HalfInt f_;
};

inline void require_budget(const Digraph& d, const PartitionTargets& t, SlackKind kind) {
  HalfInt slack = precondition_slack(d, t, kind);
  if (slack < HalfInt{0}) {
    HalfInt budget = slack + max_avg_degree(d);
    throw Error(ErrorCode::precondition,
                "deltabar " + max_avg_degree(d).to_string() + " exceeds " +
                    (kind == SlackKind::lovasz ? "(s-1)/2" : "(s-2)/2") +
                    " + sum(targets) = " + budget.to_string() + " (slack " +
                    slack.to_string() + ")");
  }
}

}  // namespace detail

/// Partition with Δ̄(class i) <= targets[i] for every i, found as a local
/// maximum of f under single-vertex moves.
inline Partition lovasz_partition(const Digraph& d, const PartitionTargets& t,
                                  SearchTrace* trace = nullptr) {
  t.validate();
  detail::require_budget(d, t, SlackKind::lovasz);
  detail::PartitionSearch search(d, t, trace);
  search.improve();
  return search.result();
}

/// A directed cycle that is an entire weak component of class i, if any.
/// Only meaningful for classes whose target is exactly 1.
inline std::optional<std::vector<Vertex>> find_brooks_cycle(
    const Digraph& d, const Partition& p, const PartitionTargets& t, std::size_t i) {
  detail::check_partition(d, p, t);
  if (i >= t.size())
    throw Error(ErrorCode::invalid_argument, "class index out of range");
  if (t.targets[i] != HalfInt{1})
    throw Error(ErrorCode::invalid_argument,
                "Brooks cycles are defined for unit-target classes; class " +
                    std::to_string(i) + " has target " + t.targets[i].to_string());
  std::vector<Vertex> members;
  for (Vertex v = 0; v < d.order(); ++v)
    if (p.class_of[v] == i) members.push_back(v);
  return detail::PartitionSearch::cycle_component(d, p.class_of, i, members);
}

namespace detail {
inline Partition modlov_partition_unchecked_patterns(const Digraph& d,
                                                     const PartitionTargets& t,
                                                     SearchTrace* trace) {
  t.validate();
  if (!is_oriented(d))
    throw Error(ErrorCode::precondition, "digraph has a directed 2-cycle");
  require_budget(d, t, SlackKind::modlov);
  PartitionSearch search(d, t, trace);
  search.improve();
  search.eliminate_brooks_cycles();
  return search.result();
}
}  // namespace detail

/// Like lovasz_partition under the tighter budget, and additionally every
/// class with target 1 is acyclic. Requires an oriented digraph that avoids
/// F1, F2, G1 and G2 (throws PatternViolation otherwise).
inline Partition modlov_partition(const Digraph& d, const PartitionTargets& t,
                                  SearchTrace* trace = nullptr) {
  require_avoids_F_and_G(d);
  return detail::modlov_partition_unchecked_patterns(d, t, trace);
}

}  // namespace dicolor
