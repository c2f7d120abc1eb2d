#include <gtest/gtest.h>

#include "dicolor/generators.hpp"
#include "dicolor/patterns.hpp"
#include "support.hpp"

using namespace dicolor;
using namespace testing_support;

namespace {

constexpr std::array<PatternId, 4> kAll{PatternId::F1, PatternId::F2, PatternId::G1,
                                        PatternId::G2};

// Roles must realise the pattern exactly: edges where it has edges, and no
// edge anywhere else among the four vertices.
void expect_roles_realise(const Digraph& d, const PatternMatch& match) {
  Digraph p = pattern_digraph(match.id);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) {
        EXPECT_EQ(d.has_edge(match.roles[i], match.roles[j]), p.has_edge(i, j))
            << match.describe() << " pair " << i << "," << j;
      }
}

std::vector<std::size_t> out_degrees(const Digraph& d) {
  std::vector<std::size_t> degs;
  for (Vertex v = 0; v < d.order(); ++v) degs.push_back(d.out_degree(v));
  return degs;
}

}  // namespace

TEST(Patterns, EdgeListsAsDrawn) {
  using E = std::vector<Edge>;
  EXPECT_EQ(pattern_digraph(PatternId::F1).edges(), (E{{0, 1}, {0, 3}, {1, 2}, {3, 2}}));
  EXPECT_EQ(pattern_digraph(PatternId::F2).edges(), (E{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {3, 2}}));
  EXPECT_EQ(pattern_digraph(PatternId::G1).edges(), (E{{0, 1}, {0, 3}, {1, 2}, {2, 0}, {3, 2}}));
  EXPECT_EQ(pattern_digraph(PatternId::G2).edges(),
            (E{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 0}, {3, 2}}));
  EXPECT_EQ(out_degrees(pattern_digraph(PatternId::F1)), (std::vector<std::size_t>{2, 1, 0, 1}));
  EXPECT_EQ(out_degrees(pattern_digraph(PatternId::G2)), (std::vector<std::size_t>{2, 2, 1, 1}));
}

TEST(Patterns, FAreAcyclicAndGAreNot) {
  EXPECT_FALSE(has_directed_cycle(pattern_digraph(PatternId::F1)));
  EXPECT_FALSE(has_directed_cycle(pattern_digraph(PatternId::F2)));
  EXPECT_TRUE(has_directed_cycle(pattern_digraph(PatternId::G1)));
  EXPECT_TRUE(has_directed_cycle(pattern_digraph(PatternId::G2)));
}

TEST(Patterns, EachPatternContainsOnlyItself) {
  for (PatternId id : kAll) {
    Digraph p = pattern_digraph(id);
    for (PatternId other : kAll) {
      auto match = contains_induced(p, other);
      EXPECT_EQ(match.has_value(), id == other);
    }
    auto self = contains_induced(p, id);
    ASSERT_TRUE(self);
    EXPECT_EQ(self->vertices, (std::array<Vertex, 4>{0, 1, 2, 3}));
    expect_roles_realise(p, *self);
  }
}

TEST(Patterns, CycleOnFiveContainsNoF1) {
  EXPECT_FALSE(contains_induced(directed_cycle(5), PatternId::F1));
}

TEST(Patterns, R5ContainsG2) {
  Digraph d = r5();
  // The subset {1,2,3,4} realises G2 with a=1, b=2, c=4, d=3.
  EXPECT_TRUE(induces_pattern(d, {1, 2, 3, 4}, pattern_digraph(PatternId::G2)));
  auto match = contains_induced(d, PatternId::G2);
  ASSERT_TRUE(match);
  EXPECT_EQ(match->describe(), "G2 at {0,1,2,3}");
  expect_roles_realise(d, *match);
  EXPECT_FALSE(avoids_G(d));
  EXPECT_TRUE(avoids_F(d));

  auto forbidden = find_forbidden(d);
  ASSERT_TRUE(forbidden);
  EXPECT_EQ(forbidden->id, PatternId::G2);
  try {
    require_avoids_F_and_G(d);
    ADD_FAILURE() << "no violation raised";
  } catch (const PatternViolation& e) {
    EXPECT_EQ(e.code(), ErrorCode::pattern_found);
    EXPECT_EQ(std::string(e.what()), "contains G2 at {0,1,2,3}");
  }
}

TEST(Patterns, CyclesAvoidEverything) {
  for (std::size_t n = 3; n <= 12; ++n) {
    EXPECT_TRUE(avoids_F(directed_cycle(n)));
    EXPECT_TRUE(avoids_G(directed_cycle(n)));
  }
}

TEST(Patterns, OutDegreeAtMostOneAvoidsEverything) {
  TestRng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph d = random_functional(3 + rng.below(30), rng.next());
    EXPECT_TRUE(avoids_F(d));
    EXPECT_TRUE(avoids_G(d));
    // Dropping edges keeps out-degree <= 1.
    std::vector<Edge> kept;
    for (Edge e : d.edges())
      if (rng.chance(70)) kept.push_back(e);
    Digraph sparse = Digraph::from_edge_list(d.order(), kept);
    EXPECT_TRUE(avoids_F(sparse));
    EXPECT_TRUE(avoids_G(sparse));
  }
}

TEST(Patterns, WitnessesAreInducedCopies) {
  TestRng rng(32);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Digraph d = random_digraph(rng, 4 + rng.below(6), 20 + static_cast<unsigned>(rng.below(40)));
    for (PatternId id : kAll) {
      auto match = contains_induced(d, id);
      bool slow = contains_pattern_slow(d, pattern_digraph(id));
      ASSERT_EQ(match.has_value(), slow) << pattern(id).name;
      if (!match) continue;
      ++found;
      EXPECT_TRUE(induces_pattern(d, match->vertices, pattern_digraph(id)));
      EXPECT_TRUE(std::is_sorted(match->vertices.begin(), match->vertices.end()));
      expect_roles_realise(d, *match);
    }
  }
  EXPECT_GT(found, 100);
}

TEST(Patterns, DetectionIgnoresLabels) {
  TestRng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    Digraph d = random_oriented_graph(rng, 4 + rng.below(8), 25 + static_cast<unsigned>(rng.below(30)));
    Digraph r = relabel(d, rng.permutation(d.order()));
    EXPECT_EQ(avoids_F(d), avoids_F(r));
    EXPECT_EQ(avoids_G(d), avoids_G(r));
    for (PatternId id : kAll)
      EXPECT_EQ(contains_induced(d, id).has_value(), contains_induced(r, id).has_value());
  }
}

TEST(Patterns, LexicographicallyFirstSubset) {
  // Two disjoint copies of F1; the scan must report the lower one.
  Digraph f1 = pattern_digraph(PatternId::F1);
  Digraph twice = disjoint_union(f1, f1);
  auto match = contains_induced(twice, PatternId::F1);
  ASSERT_TRUE(match);
  EXPECT_EQ(match->vertices, (std::array<Vertex, 4>{0, 1, 2, 3}));

  std::vector<Vertex> swap_halves{4, 5, 6, 7, 0, 1, 2, 3};
  auto swapped = contains_induced(relabel(twice, swap_halves), PatternId::F1);
  ASSERT_TRUE(swapped);
  EXPECT_EQ(swapped->vertices, (std::array<Vertex, 4>{0, 1, 2, 3}));
}

TEST(Patterns, LargeSparseInputUsesSortedLookup) {
  // Above the dense-matrix limit; cycles of length 5 with one F1 appended.
  std::vector<std::size_t> lengths(1700, 5);
  Digraph cycles = cycle_union(lengths);
  EXPECT_TRUE(avoids_F(cycles));
  Digraph with_f1 = disjoint_union(cycles, pattern_digraph(PatternId::F1));
  auto match = contains_induced(with_f1, PatternId::F1);
  ASSERT_TRUE(match);
  EXPECT_EQ(match->vertices[0], 8500u);
}

TEST(Patterns, ScanStrategiesAgree) {
  TestRng rng(34);
  std::array<PatternId, 2> f{PatternId::F1, PatternId::F2};
  std::array<PatternId, 2> g{PatternId::G1, PatternId::G2};
  for (int trial = 0; trial < 300; ++trial) {
    Digraph d = random_digraph(rng, 4 + rng.below(14), 3 + static_cast<unsigned>(rng.below(30)));
    for (auto ids : {std::span<const PatternId>(f), std::span<const PatternId>(g),
                     std::span<const PatternId>(kAll)}) {
      auto all = detail::scan(d, ids, detail::ScanStrategy::all_subsets);
      auto local = detail::scan(d, ids, detail::ScanStrategy::neighbourhoods);
      ASSERT_EQ(all.has_value(), local.has_value());
      if (!all) continue;
      EXPECT_EQ(all->vertices, local->vertices);
      EXPECT_EQ(all->id, local->id);
      EXPECT_EQ(all->roles, local->roles);
    }
  }
}
