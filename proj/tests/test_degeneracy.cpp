#include <gtest/gtest.h>

#include "dicolor/degeneracy.hpp"
#include "dicolor/oracle.hpp"
#include "support.hpp"

using namespace dicolor;
using namespace testing_support;

namespace {

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Digraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Digraph::from_edge_list(n, edges);
}

}  // namespace

TEST(Peel, DagEmptiesCompletely) {
  Digraph dag = Digraph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {0, 4}});
  auto r = peel(dag, 1);
  EXPECT_TRUE(r.core.empty());
  EXPECT_EQ(r.order.size(), 5u);
}

TEST(Peel, TriangleIsItsOwnCore) {
  auto r = peel(c3(), 1);
  EXPECT_TRUE(r.order.empty());
  EXPECT_EQ(sorted(r.core), (std::vector<Vertex>{0, 1, 2}));
}

TEST(Peel, PendantVertexIsRemoved) {
  Digraph d = Digraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  auto r = peel(d, 1);
  ASSERT_EQ(r.order.size(), 1u);
  EXPECT_EQ(r.order[0].vertex, 3u);
  EXPECT_EQ(r.order[0].deficient, Side::out);
  EXPECT_EQ(sorted(r.core), (std::vector<Vertex>{0, 1, 2}));
}

TEST(Peel, ResultRespectsItsInvariants) {
  TestRng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    Digraph d = random_digraph(rng, 1 + rng.below(14), 10 + static_cast<unsigned>(rng.below(40)));
    std::size_t m = 1 + rng.below(3);
    auto r = peel(d, m);
    std::vector<bool> alive(d.order(), true);
    std::vector<int> seen(d.order(), 0);
    for (const auto& step : r.order) {
      std::size_t out = 0, in = 0;
      for (Vertex w : d.out(step.vertex)) out += alive[w];
      for (Vertex w : d.in(step.vertex)) in += alive[w];
      bool deficient = step.deficient == Side::out ? out < m : in < m;
      EXPECT_TRUE(deficient) << "vertex " << step.vertex;
      alive[step.vertex] = false;
      ++seen[step.vertex];
    }
    for (Vertex v : r.core) {
      ++seen[v];
      std::size_t out = 0, in = 0;
      for (Vertex w : d.out(v)) out += alive[w];
      for (Vertex w : d.in(v)) in += alive[w];
      EXPECT_GE(out, m);
      EXPECT_GE(in, m);
    }
    for (Vertex v = 0; v < d.order(); ++v) EXPECT_EQ(seen[v], 1);
  }
}

TEST(Peel, RejectsZeroM) {
  EXPECT_THROW(peel(c3(), 0), Error);
}

TEST(WeakDegeneracy, Examples) {
  EXPECT_FALSE(is_weakly_m_degenerate(c3(), 1));
  EXPECT_TRUE(is_weakly_m_degenerate(c3(), 2));
  // Every vertex of R5 has d+ = d- = 2, so peeling at m = 2 removes nothing.
  Digraph d = r5();
  for (Vertex v = 0; v < 5; ++v) ASSERT_EQ(d.out_degree(v) + d.in_degree(v), 4u);
  EXPECT_FALSE(is_weakly_m_degenerate(d, 2));
  EXPECT_FALSE(weak_degeneracy_bruteforce(d, 2));
}

TEST(Acyclic, Examples) {
  EXPECT_FALSE(is_acyclic(c3()));
  auto transitive = induced_subgraph(r5(), {0, 1, 2}).graph;
  EXPECT_EQ(transitive, Digraph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(is_acyclic(transitive));
  EXPECT_TRUE(is_acyclic(Digraph{}));
  EXPECT_TRUE(is_acyclic(path(6)));
}

TEST(Acyclic, AgreesWithDepthFirstSearch) {
  TestRng rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    Digraph d = random_digraph(rng, rng.below(16), 3 + static_cast<unsigned>(rng.below(20)));
    EXPECT_EQ(is_acyclic(d), !has_directed_cycle(d));
  }
}

TEST(VerifyColoring, Examples) {
  auto one = verify_coloring(c3(), Coloring::from_assignment({0, 0, 0}), 1);
  EXPECT_FALSE(one.valid);
  EXPECT_EQ(one.failed_class, 0u);
  EXPECT_EQ(sorted(one.witness_core), (std::vector<Vertex>{0, 1, 2}));

  EXPECT_TRUE(verify_coloring(c3(), Coloring::from_assignment({1, 0, 0}), 1).valid);
  EXPECT_TRUE(verify_coloring(r5(), Coloring::from_assignment({0, 0, 0, 1, 1}), 1).valid);
}

TEST(VerifyColoring, WitnessCoreUsesOriginalIndices) {
  // Vertices 0 and 4 are alone; class 0 = {1,2,3} is a triangle.
  Digraph d = Digraph::from_edge_list(5, {{1, 2}, {2, 3}, {3, 1}, {0, 1}, {3, 4}});
  auto check = verify_coloring(d, Coloring::from_assignment({1, 0, 0, 0, 1}), 1);
  EXPECT_FALSE(check.valid);
  EXPECT_EQ(sorted(check.witness_core), (std::vector<Vertex>{1, 2, 3}));
}

TEST(VerifyColoring, RejectsMalformedColorings) {
  EXPECT_THROW(verify_coloring(c3(), Coloring::from_assignment({0, 0}), 1), Error);
  Coloring bad;
  bad.assignment = {0, 5, 0};
  bad.num_colors = 2;
  EXPECT_THROW(verify_coloring(c3(), bad, 1), Error);
}

TEST(VerifyColoring, MonotoneInM) {
  TestRng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    Digraph d = random_digraph(rng, 1 + rng.below(12), 35);
    std::size_t k = 1 + rng.below(3);
    std::vector<Color> a(d.order());
    for (auto& c : a) c = rng.below(k);
    Coloring c = Coloring::from_assignment(a);
    for (std::size_t m = 1; m <= 4; ++m)
      if (verify_coloring(d, c, m).valid) {
        EXPECT_TRUE(verify_coloring(d, c, m + 1).valid);
      }
  }
}

TEST(VerifyColoring, SingletonClassesAlwaysPass) {
  TestRng rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph d = random_digraph(rng, 1 + rng.below(10), 60);
    std::vector<Color> a(d.order());
    std::iota(a.begin(), a.end(), Color{0});
    for (std::size_t m = 1; m <= 3; ++m)
      EXPECT_TRUE(verify_coloring(d, Coloring::from_assignment(a), m).valid);
  }
}

TEST(WeakDegeneracy, MatchesBruteForceOnAllSmallDigraphs) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint64_t codes = 1ull << (n * (n - 1));
    for (std::uint64_t code = 0; code < codes; ++code) {
      Digraph d = digraph_from_code(n, code);
      for (std::size_t m = 1; m <= 3; ++m)
        ASSERT_EQ(is_weakly_m_degenerate(d, m), weak_degeneracy_bruteforce(d, m))
            << "n=" << n << " code=" << code << " m=" << m;
    }
  }
}

TEST(WeakDegeneracy, MatchesBruteForceOnRandomDigraphs) {
  TestRng rng(25);
  for (int trial = 0; trial < 600; ++trial) {
    Digraph d = random_digraph(rng, 1 + rng.below(8), 20 + static_cast<unsigned>(rng.below(70)));
    for (std::size_t m = 1; m <= 3; ++m)
      ASSERT_EQ(is_weakly_m_degenerate(d, m), weak_degeneracy_bruteforce(d, m));
  }
}

TEST(Coloring, FromAssignmentAndCompact) {
  Coloring c = Coloring::from_assignment({3, 1, 3, 0});
  EXPECT_EQ(c.num_colors, 4u);
  auto classes = c.classes();
  ASSERT_EQ(classes.size(), 4u);
  EXPECT_TRUE(classes[2].empty());
  Coloring k = compact(c);
  EXPECT_EQ(k.assignment, (std::vector<Color>{0, 1, 0, 2}));
  EXPECT_EQ(k.num_colors, 3u);
}
