#include "ramsey/coloring.h"

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "test_util.h"

namespace ramsey {
namespace {

TEST(Dist, MatchesMinorArc) {
  EXPECT_EQ(dist(43, 0, 22), 21);
  EXPECT_EQ(dist(43, 0, 23), 20);
  EXPECT_EQ(dist(43, 7, 8), 1);
  EXPECT_EQ(dist(43, 8, 7), 1);
  EXPECT_EQ(dist(43, 0, 42), 1);
}

TEST(Dist, EqualVerticesRejected) {
  EXPECT_THROW(dist(43, 5, 5), std::invalid_argument);
  EXPECT_THROW(dist(43, 0, 43), std::invalid_argument);
}

TEST(Build, Cyc43BaseColors) {
  const Coloring c = build(preset(Preset::Cyc43));
  EXPECT_EQ(c.color(1, 2), EdgeColor::Red);
  EXPECT_EQ(c.color(1, 4), EdgeColor::Blue);
  EXPECT_EQ(c.active_count(), 43);
}

TEST(Build, Exoo42FlipsAndDeletion) {
  const Coloring c = build(preset(Preset::Exoo42));
  EXPECT_EQ(c.color(4, 5), EdgeColor::Blue);
  EXPECT_EQ(c.color(11, 32), EdgeColor::Blue);
  EXPECT_EQ(c.color(1, 2), EdgeColor::Red);
  EXPECT_EQ(c.active_count(), 42);
  EXPECT_FALSE(c.is_active(0));
}

TEST(Build, RejectsBadSpecs) {
  ColoringSpec spec = preset(Preset::Cyc43);
  spec.flips.emplace_back(3, 3);
  EXPECT_THROW(build(spec), SpecError);

  spec = preset(Preset::Cyc43);
  spec.flips.emplace_back(3, 43);
  EXPECT_THROW(build(spec), SpecError);

  spec = preset(Preset::Cyc43);
  spec.flips.emplace_back(3, 4);
  spec.flips.emplace_back(4, 3);
  EXPECT_THROW(build(spec), SpecError);

  spec = preset(Preset::Cyc43);
  spec.blue_lengths.insert(22);
  EXPECT_THROW(build(spec), SpecError);

  spec.blue_lengths = {0};
  EXPECT_THROW(build(spec), SpecError);

  spec = preset(Preset::Cyc43);
  spec.order = 65;
  EXPECT_THROW(build(spec), SpecError);
}

TEST(Preset, ExactRecipes) {
  const std::set<int> blue = {3, 4, 5, 6, 8, 9, 11, 15, 17, 19};
  for (Preset p : {Preset::Cyc43, Preset::Exoo42, Preset::VariantA, Preset::VariantB}) {
    EXPECT_EQ(preset(p).order, 43);
    EXPECT_EQ(preset(p).blue_lengths, blue);
  }
  const ColoringSpec exoo = preset(Preset::Exoo42);
  EXPECT_EQ(exoo.flips.size(), 16u);
  EXPECT_EQ(exoo.deletions, std::set<Vertex>{0});
  const std::set<Edge> listed = {
      {4, 5},   {13, 14}, {23, 24}, {39, 40}, {5, 6},   {14, 15},
      {24, 25}, {40, 41}, {6, 7},   {15, 16}, {30, 31}, {41, 42},
      {7, 8},   {16, 17}, {33, 34}, {11, 32}};
  EXPECT_EQ(std::set<Edge>(exoo.flips.begin(), exoo.flips.end()), listed);

  const ColoringSpec a = preset(Preset::VariantA);
  EXPECT_EQ(a.flips, exoo.flips);
  EXPECT_TRUE(a.deletions.empty());

  ColoringSpec b = preset(Preset::VariantB);
  ASSERT_EQ(b.flips.size(), 17u);
  EXPECT_EQ(b.flips.back(), Edge(21, 22));
  b.flips.pop_back();
  EXPECT_EQ(b.flips, a.flips);

  EXPECT_EQ(preset("exoo42"), exoo);
  EXPECT_THROW(preset("exoo43"), std::invalid_argument);
}

TEST(FlipEdge, TogglesOneEdgeAndLeavesInputAlone) {
  const Coloring cyc = build(preset(Preset::Cyc43));
  const Coloring f = flip_edge(cyc, 4, 5);
  EXPECT_EQ(f.color(4, 5), EdgeColor::Blue);
  EXPECT_EQ(cyc.color(4, 5), EdgeColor::Red);
  EXPECT_EQ(flip_edge(cyc, 1, 4).color(1, 4), EdgeColor::Red);
  int differing = 0;
  for (Vertex u = 0; u < 43; ++u) {
    for (Vertex v = u + 1; v < 43; ++v) differing += f.color(u, v) != cyc.color(u, v);
  }
  EXPECT_EQ(differing, 1);
  EXPECT_EQ(flip_edge(f, 5, 4), cyc);
  EXPECT_EQ(flip_edge(f, 5, 4).spec(), cyc.spec());
}

TEST(FlipEdge, ErrorsOnInvalidEdges) {
  const Coloring exoo = build(preset(Preset::Exoo42));
  EXPECT_THROW(flip_edge(exoo, 3, 3), std::invalid_argument);
  EXPECT_THROW(flip_edge(exoo, 0, 3), std::invalid_argument);
}

TEST(FlipEdge, RecordedSpecReproducesColoring) {
  std::mt19937_64 rng(11);
  Coloring c = build(preset(Preset::Exoo42));
  std::uniform_int_distribution<int> pick(1, 42);
  for (int i = 0; i < 60; ++i) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    c = flip_edge(c, a, b);
    ASSERT_EQ(build(c.spec()), c);
  }
}

TEST(DeleteVertex, MasksWithoutRelabeling) {
  const Coloring cyc = build(preset(Preset::Cyc43));
  const Coloring d = delete_vertex(cyc, 0);
  EXPECT_EQ(d.active_count(), 42);
  EXPECT_EQ(d.blue_mask(1) & bit(0), 0u);
  EXPECT_EQ(d.red_mask(1) & bit(0), 0u);
  EXPECT_EQ(d.color(1, 4), EdgeColor::Blue);
  EXPECT_THROW(delete_vertex(d, 0), std::invalid_argument);
  EXPECT_THROW(d.color(0, 1), std::invalid_argument);
  EXPECT_EQ(restore_deleted(d), cyc);
}

TEST(ColoringProperty, PartitionIsExclusiveExhaustiveSymmetric) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 63);
    const Coloring c = build(testing::random_spec(n, rng));
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_EQ(c.blue_mask(u) & bit(u), 0u);
      EXPECT_EQ(c.red_mask(u) & bit(u), 0u);
      EXPECT_EQ((c.blue_mask(u) | c.red_mask(u)) & ~c.active(), 0u);
      if (!c.is_active(u)) {
        EXPECT_EQ(c.blue_mask(u) | c.red_mask(u), 0u);
        continue;
      }
      EXPECT_EQ(c.blue_mask(u) & c.red_mask(u), 0u);
      EXPECT_EQ(c.blue_mask(u) | c.red_mask(u), c.active() & ~bit(u));
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || !c.is_active(v)) continue;
        EXPECT_EQ((c.blue_mask(u) >> v) & 1, (c.blue_mask(v) >> u) & 1);
      }
    }
  }
}

TEST(ColoringProperty, CirculantBaseIsRotationInvariant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 62);
    const Coloring c = build(testing::random_circulant(n, rng));
    const int t = 1 + static_cast<int>(rng() % (n - 1));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        ASSERT_EQ(c.color(u, v), c.color((u + t) % n, (v + t) % n));
      }
    }
  }
}

TEST(ColoringProperty, Cyc43BlueDifferenceCharacterization) {
  const std::set<int> blue_diffs = {3,  4,  5,  6,  8,  9,  11, 15, 17, 19,
                                    24, 26, 28, 32, 34, 35, 37, 38, 39, 40};
  const Coloring c = build(preset(Preset::Cyc43));
  for (Vertex a = 0; a < 43; ++a) {
    for (Vertex b = a + 1; b < 43; ++b) {
      EXPECT_EQ(c.color(a, b) == EdgeColor::Blue, blue_diffs.count(b - a) == 1)
          << a << "," << b;
    }
  }
}

TEST(ColoringProperty, Exoo42DiffersFromCyc43InSixteenRedToBlueEdges) {
  const Coloring cyc = build(preset(Preset::Cyc43));
  const Coloring exoo = build(preset(Preset::Exoo42));
  int changed = 0;
  int length_one = 0;
  int length_21 = 0;
  for (Vertex a = 1; a < 43; ++a) {
    for (Vertex b = a + 1; b < 43; ++b) {
      if (cyc.color(a, b) == exoo.color(a, b)) continue;
      ++changed;
      EXPECT_EQ(cyc.color(a, b), EdgeColor::Red);
      EXPECT_EQ(exoo.color(a, b), EdgeColor::Blue);
      length_one += dist(43, a, b) == 1;
      length_21 += dist(43, a, b) == 21;
    }
  }
  EXPECT_EQ(changed, 16);
  EXPECT_EQ(length_one, 15);
  EXPECT_EQ(length_21, 1);
}

TEST(Color, NamesRoundTrip) {
  EXPECT_EQ(parse_color("red"), EdgeColor::Red);
  EXPECT_EQ(parse_color("Blue"), EdgeColor::Blue);
  EXPECT_EQ(color_name(EdgeColor::Blue), "blue");
  EXPECT_THROW(parse_color("green"), std::invalid_argument);
}

}  // namespace
}  // namespace ramsey
