#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dicolor/digraph.hpp"
#include "dicolor/error.hpp"
#include "dicolor/half_int.hpp"

// Seeded instance families. Randomness comes from std::mt19937_64 (whose
// output sequence is fixed by the standard) and only two derived operations,
// both defined here rather than taken from <random> distributions, whose
// algorithms vary between standard libraries:
//   below(n): draw x; reject while x >= 2^64 - (2^64 mod n); return x mod n
//   shuffle:  Fisher-Yates from the back, j = below(i + 1)
// The same seed and parameters therefore give the same digraph everywhere.

namespace dicolor {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "below(0)");
    const std::uint64_t rem = (std::uint64_t(0) - n) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t x = engine_();
      if (x <= ~std::uint64_t(0) - rem) return x % n;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// 0 -> 1 -> ... -> n-1 -> 0
inline Digraph directed_cycle(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "a directed cycle needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Digraph::from_edge_list(n, edges);
}

/// Odd n; i -> i+1, ..., i+(n-1)/2 (mod n). Every vertex has d+ = d- = (n-1)/2.
inline Digraph rotational_tournament(std::size_t n) {
  if (n == 0 || n % 2 == 0)
    throw Error(ErrorCode::invalid_argument, "rotational tournament needs odd n");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t step = 1; step <= (n - 1) / 2; ++step) edges.push_back({v, (v + step) % n});
  return Digraph::from_edge_list(n, edges);
}

/// Oriented graph with Δ̄ <= max_avg. Unordered pairs are visited in a
/// shuffled order; each is kept with probability edge_probability, given a
/// random direction, and added if neither endpoint's total degree would
/// exceed 2 * max_avg.
inline Digraph random_oriented(std::size_t n, HalfInt max_avg, std::uint64_t seed,
                               double edge_probability = 1.0) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be at least 1");
  if (max_avg < HalfInt{0}) throw Error(ErrorCode::invalid_argument, "max_avg must be >= 0");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
    throw Error(ErrorCode::invalid_argument, "edge probability must lie in [0, 1]");
  SeededRng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  rng.shuffle(pairs);

  constexpr std::uint64_t kScale = 1'000'000;
  const auto keep_below = static_cast<std::uint64_t>(edge_probability * kScale);
  const auto cap = static_cast<std::size_t>(max_avg.twice());
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    bool keep = rng.below(kScale) < keep_below;
    bool forward = rng.below(2) == 0;
    if (!keep || degree[u] + 1 > cap || degree[v] + 1 > cap) continue;
    ++degree[u];
    ++degree[v];
    edges.push_back(forward ? Edge{u, v} : Edge{v, u});
  }
  return Digraph::from_edge_list(n, edges);
}

/// Every vertex has out-degree exactly 1 and there are no digons (n >= 3).
inline Digraph random_functional(std::size_t n, std::uint64_t seed) {
  if (n < 3)
    throw Error(ErrorCode::invalid_argument,
                "an oriented functional digraph needs n >= 3");
  SeededRng rng(seed);
  std::vector<Vertex> target;
  std::vector<Vertex> candidates;
  // A vertex that every other vertex already points at has no legal target;
  // start over when that happens.
  for (bool done = false; !done;) {
    target.assign(n, kNoVertex);
    done = true;
    for (Vertex v = 0; v < n && done; ++v) {
      candidates.clear();
      for (Vertex t = 0; t < n; ++t)
        if (t != v && target[t] != v) candidates.push_back(t);
      if (candidates.empty()) {
        done = false;
        break;
      }
      target[v] = candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
    }
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, target[v]});
  return Digraph::from_edge_list(n, edges);
}

/// Oriented digraph with d+ = d- = d everywhere: the union of d random
/// permutations v -> sigma(v). A permutation that would create a self-loop,
/// digon or repeated edge is repaired by random transpositions, and
/// resampled when repair stalls; after a bounded number of restarts a
/// relabelled circulant is returned.
inline Digraph random_regular_digraph(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be at least 1");
  if (2 * d + 1 > n)
    throw Error(ErrorCode::invalid_argument,
                "an oriented d-regular digraph needs n >= 2d + 1");
  SeededRng rng(seed);
  constexpr int kRestarts = 50, kResamples = 20;

  for (int restart = 0; restart < kRestarts; ++restart) {
    std::vector<std::vector<Vertex>> adj(n);  // undirected neighbour lists
    auto usable = [&](Vertex v, Vertex t) {
      return t != v && std::find(adj[v].begin(), adj[v].end(), t) == adj[v].end();
    };
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t round = 0; round < d && ok; ++round) {
      bool placed = false;
      for (int attempt = 0; attempt < kResamples && !placed; ++attempt) {
        std::vector<Vertex> sigma(n);
        for (Vertex v = 0; v < n; ++v) sigma[v] = v;
        rng.shuffle(sigma);
        // A position is bad if its edge clashes with earlier rounds or
        // closes a 2-cycle inside this permutation. A swap only touches the
        // edges out of v and w, so checking those two suffices.
        auto bad = [&](Vertex v) {
          return !usable(v, sigma[v]) || sigma[sigma[v]] == v;
        };
        std::size_t budget = 100 * n;
        for (bool dirty = true; dirty && budget > 0;) {
          dirty = false;
          for (Vertex v = 0; v < n && budget > 0; ++v) {
            if (!bad(v)) continue;
            dirty = true;
            --budget;
            auto w = static_cast<Vertex>(rng.below(n));
            std::swap(sigma[v], sigma[w]);
            if (bad(v) || bad(w)) std::swap(sigma[v], sigma[w]);
          }
        }
        bool clean = true;
        for (Vertex v = 0; v < n; ++v) clean &= !bad(v);
        if (!clean) continue;
        for (Vertex v = 0; v < n; ++v) {
          edges.push_back({v, sigma[v]});
          adj[v].push_back(sigma[v]);
          adj[sigma[v]].push_back(v);
        }
        placed = true;
      }
      ok = placed;
    }
    if (ok) return Digraph::from_edge_list(n, edges);
  }
  // Dense cases (n close to 2d + 1) rarely succeed above: use the circulant
  // v -> v+1, ..., v+d under a random relabelling instead.
  std::vector<Vertex> label(n);
  for (Vertex v = 0; v < n; ++v) label[v] = v;
  rng.shuffle(label);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t j = 1; j <= d; ++j) edges.push_back({label[v], label[(v + j) % n]});
  return Digraph::from_edge_list(n, edges);
}

}  // namespace dicolor
