#include <gtest/gtest.h>

#include "dicolor/coloring.hpp"
#include "dicolor/generators.hpp"
#include "dicolor/oracle.hpp"
#include "support.hpp"

using namespace dicolor;
using namespace testing_support;

namespace {

// Smallest k with a (k, m)-coloring by trying every assignment outright.
// Only for n <= 7.
std::size_t chi_by_enumeration(const Digraph& d, std::size_t m) {
  const std::size_t n = d.order();
  if (n == 0) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Color> a(n, 0);
    for (;;) {
      Coloring c;
      c.assignment = a;
      c.num_colors = k;
      if (verify_coloring(d, c, m).valid) return k;
      std::size_t i = 0;
      while (i < n && ++a[i] == k) a[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

}  // namespace

TEST(BruteForceDegeneracy, Examples) {
  EXPECT_FALSE(weak_degeneracy_bruteforce(c3(), 1));
  EXPECT_TRUE(weak_degeneracy_bruteforce(c3(), 2));
  Digraph dag = Digraph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}});
  EXPECT_TRUE(weak_degeneracy_bruteforce(dag, 1));
}

TEST(BruteForceDegeneracy, EnforcesCap) {
  try {
    weak_degeneracy_bruteforce(directed_cycle(kBruteforceDegeneracyCap + 1), 1);
    ADD_FAILURE() << "cap not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size_cap);
  }
}

TEST(Exact, Examples) {
  for (std::size_t n = 2; n <= 10; ++n) {
    auto r = exact_chi_m(directed_cycle(n), 1);
    EXPECT_EQ(r.chi, 2u) << "C" << n;
    EXPECT_TRUE(r.certificate_checked);
  }
  auto r = exact_chi_m(r5(), 1);
  EXPECT_EQ(r.chi, 2u);
  EXPECT_TRUE(verify_coloring(r5(), r.witness, 1).valid);
  EXPECT_EQ(exact_chi_m(digon(), 1).chi, 2u);
  EXPECT_EQ(exact_chi_m(Digraph{}, 1).chi, 0u);
  EXPECT_EQ(exact_chi_m(Digraph::from_edge_list(3, {}), 2).chi, 1u);
}

TEST(Exact, EnforcesCap) {
  try {
    exact_chi_m(directed_cycle(13), 1);
    ADD_FAILURE() << "cap not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size_cap);
  }
  EXPECT_EQ(exact_chi_m(directed_cycle(13), 1, 13).chi, 2u);
}

TEST(Exact, MatchesFullEnumeration) {
  TestRng rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    Digraph d = random_digraph(rng, 1 + rng.below(7), 20 + static_cast<unsigned>(rng.below(70)));
    for (std::size_t m = 1; m <= 2; ++m) {
      auto r = exact_chi_m(d, m);
      ASSERT_EQ(r.chi, chi_by_enumeration(d, m));
      EXPECT_TRUE(r.certificate_checked);
      EXPECT_EQ(r.witness.num_colors, r.chi);
    }
  }
}

TEST(Exact, CompleteDigraphNeedsManyColors) {
  // In the complete digraph on n vertices every class of size > m has all
  // degrees >= m, so chi_m = ceil(n / m).
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v) edges.push_back({u, v});
    Digraph d = Digraph::from_edge_list(n, edges);
    for (std::size_t m = 1; m <= 3; ++m) EXPECT_EQ(exact_chi_m(d, m).chi, (n + m - 1) / m);
  }
}

TEST(FindColoring, HonoursOrderAndLimit) {
  std::vector<Vertex> order{4, 3, 2, 1, 0};
  auto c = find_coloring(r5(), 1, 2, order);
  ASSERT_TRUE(c);
  EXPECT_TRUE(verify_coloring(r5(), *c, 1).valid);
  EXPECT_FALSE(find_coloring(r5(), 1, 1));
  std::vector<Vertex> short_order{0, 1};
  EXPECT_THROW(find_coloring(r5(), 1, 2, short_order), Error);
}

TEST(Critical, Examples) {
  EXPECT_TRUE(is_km_critical(c3(), 2, 1));
  EXPECT_FALSE(is_km_critical(disjoint_union(c3(), Digraph::from_edge_list(1, {})), 2, 1));
  EXPECT_TRUE(is_km_critical(directed_cycle(5), 2, 1));
  EXPECT_FALSE(is_km_critical(directed_cycle(5), 3, 1));
}

TEST(Oracle, DisjointUnionTakesTheMaximum) {
  TestRng rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph a = random_digraph(rng, 1 + rng.below(5), 30 + static_cast<unsigned>(rng.below(60)));
    Digraph b = random_digraph(rng, 1 + rng.below(5), 30 + static_cast<unsigned>(rng.below(60)));
    std::size_t m = 1 + rng.below(2);
    EXPECT_EQ(exact_chi_m(disjoint_union(a, b), m).chi,
              std::max(exact_chi_m(a, m).chi, exact_chi_m(b, m).chi));
  }
}

TEST(Oracle, NeverAbovePipelines) {
  TestRng rng(63);
  int fracdelta_runs = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t m = 1 + rng.below(2);
    Digraph d = random_oriented(2 + rng.below(9), HalfInt(1 + rng.below(5)), rng.next());
    std::size_t chi = exact_chi_m(d, m).chi;
    EXPECT_LE(chi, greedy_coloring(d, m).num_colors);
    HalfInt delta_bar = max_avg_degree(d);
    if (delta_bar >= HalfInt(2 * static_cast<std::int64_t>(m))) {
      auto k = static_cast<std::size_t>(
          -floor_div(-delta_bar.twice(), 2 * static_cast<std::int64_t>(m)));
      EXPECT_LE(chi, bounded_coloring(d, m, k).num_colors);
      EXPECT_LE(chi, fracdelta_coloring(d, m).coloring.num_colors);
      ++fracdelta_runs;
    }
  }
  EXPECT_GT(fracdelta_runs, 30);
}
