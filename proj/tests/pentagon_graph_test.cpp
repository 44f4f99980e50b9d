// Copyright 2026 The penta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "penta/pentagon_graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "penta/errors.hpp"
#include "test_support.hpp"

namespace penta {
namespace {

TEST(PentagonGraphTest, GenerationZeroIsFiveCycle) {
  const PentagonGraph g = Build(0);
  EXPECT_EQ(g.node_count(), 5u);
  EXPECT_EQ(g.edge_count(), 5u);
  for (NodeId v = 0; v < 5; ++v) {
    EXPECT_EQ(g.degree(v), 2u);
  }
  const auto d = testing::AllPairs(g);
  EXPECT_EQ(d[g.corner(1)][g.corner(2)], 1);
  EXPECT_EQ(d[g.corner(1)][g.corner(3)], 2);
}

TEST(PentagonGraphTest, CountsMatchClosedExpressions) {
  for (int t = 0; t <= 8; ++t) {
    const PentagonGraph g = Build(t);
    std::uint64_t pow5 = 1;
    for (int i = 0; i <= t; ++i) pow5 *= 5;
    EXPECT_EQ(g.node_count(), (3 * pow5 + 5) / 4) << "t=" << t;
    EXPECT_EQ(g.edge_count(), pow5) << "t=" << t;
    EXPECT_EQ(ExpectedNodeCount(t), g.node_count());
    EXPECT_EQ(ExpectedEdgeCount(t), g.edge_count());
  }
}

TEST(PentagonGraphTest, KnownSmallCounts) {
  EXPECT_EQ(Build(1).node_count(), 20u);
  EXPECT_EQ(Build(1).edge_count(), 25u);
  const PentagonGraph g2 = Build(2);
  EXPECT_EQ(g2.node_count(), 95u);
  EXPECT_EQ(g2.edge_count(), 125u);
  std::size_t deg4 = 0;
  for (NodeId v = 0; v < g2.node_count(); ++v) deg4 += g2.degree(v) == 4;
  EXPECT_EQ(deg4, 30u);
}

TEST(PentagonGraphTest, DegreeHistogram) {
  for (int t = 0; t <= 6; ++t) {
    const PentagonGraph g = Build(t);
    std::map<std::size_t, std::uint64_t> hist;
    for (NodeId v = 0; v < g.node_count(); ++v) ++hist[g.degree(v)];
    std::uint64_t pow5 = 1;
    for (int i = 0; i <= t; ++i) pow5 *= 5;
    const std::uint64_t deg4 = (pow5 - 5) / 4;
    EXPECT_EQ(hist.size(), t == 0 ? 1u : 2u);
    EXPECT_EQ(hist[4], deg4) << "t=" << t;
    EXPECT_EQ(hist[2], g.node_count() - deg4) << "t=" << t;
    for (NodeId c : g.corners()) EXPECT_EQ(g.degree(c), 2u);
  }
}

TEST(PentagonGraphTest, AdjacencyIsSymmetricSimpleAndConnected) {
  for (int t = 0; t <= 4; ++t) {
    const PentagonGraph g = Build(t);
    std::set<std::pair<NodeId, NodeId>> seen;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      const auto nb = g.neighbors(u);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
      for (NodeId v : nb) {
        EXPECT_NE(u, v);
        const auto back = g.neighbors(v);
        EXPECT_TRUE(std::binary_search(back.begin(), back.end(), u));
        seen.insert({std::min(u, v), std::max(u, v)});
      }
    }
    EXPECT_EQ(seen.size(), g.edge_count());
    const auto d = testing::Distances(testing::AdjacencyFromEdges(g), 0);
    EXPECT_TRUE(std::none_of(d.begin(), d.end(), [](std::int64_t x) { return x < 0; }));
  }
}

TEST(PentagonGraphTest, CornerDistancesMatchBoundaryRecurrence) {
  for (int t = 0; t <= 5; ++t) {
    const PentagonGraph g = Build(t);
    const auto adj = testing::AdjacencyFromEdges(g);
    for (int a = 1; a <= 5; ++a) {
      const auto d = testing::Distances(adj, g.corner(a));
      for (int b = 1; b <= 5; ++b) {
        if (a == b) continue;
        const int gap = (b - a + 5) % 5;
        const std::int64_t want = (gap == 1 || gap == 4) ? testing::D12(t) : testing::D13(t);
        EXPECT_EQ(d[g.corner(b)], want) << "t=" << t << " corners " << a << "," << b;
      }
    }
  }
}

// Each corner sees the same sorted list of distances, i.e. the five corners
// are equivalent under the graph's rotational symmetry.
TEST(PentagonGraphTest, CornerDistanceListsAgree) {
  for (int t = 0; t <= 5; ++t) {
    const PentagonGraph g = Build(t);
    const auto adj = testing::AdjacencyFromEdges(g);
    auto ref = testing::Distances(adj, g.corner(1));
    std::sort(ref.begin(), ref.end());
    for (int c = 2; c <= 5; ++c) {
      auto d = testing::Distances(adj, g.corner(c));
      std::sort(d.begin(), d.end());
      EXPECT_EQ(d, ref) << "t=" << t << " corner " << c;
    }
  }
}

TEST(PentagonGraphTest, BuildIsDeterministic) {
  EXPECT_EQ(Build(5), Build(5));
  EXPECT_EQ(Build(3).edges(), Build(3).edges());
}

TEST(PentagonGraphTest, GenerationAboveCeilingIsResourceLimit) {
  try {
    Build(9);
    FAIL() << "expected ResourceLimitError";
  } catch (const ResourceLimitError& e) {
    EXPECT_EQ(e.bound(), kDefaultMaxGeneration);
    EXPECT_NE(std::string(e.what()).find('8'), std::string::npos);
  }
  EXPECT_THROW(Build(4, {.max_generation = 3}), ResourceLimitError);
  EXPECT_THROW(Build(-1), std::invalid_argument);
}

TEST(PentagonGraphTest, ConstructorRejectsMalformedInput) {
  const std::array<NodeId, 5> corners{0, 1, 2, 3, 4};
  EXPECT_THROW(PentagonGraph(0, 5, {{0, 0}}, corners), std::invalid_argument);
  EXPECT_THROW(PentagonGraph(0, 5, {{0, 1}, {1, 0}}, corners), std::invalid_argument);
  EXPECT_THROW(PentagonGraph(0, 5, {{0, 7}}, corners), std::invalid_argument);
  EXPECT_THROW(PentagonGraph(0, 5, {{0, 1}}, {0, 1, 2, 3, 9}), std::invalid_argument);
}

TEST(DecomposeTest, BranchInvariants) {
  for (int t = 1; t <= 5; ++t) {
    const PentagonGraph g = Build(t);
    const BranchDecomposition parts = Decompose(g);
    EXPECT_EQ(parts.branch_generation, t - 1);
    std::vector<int> membership(g.node_count(), 0);
    for (int k = 0; k < 5; ++k) {
      EXPECT_EQ(parts.branch_sets[k].size(), ExpectedNodeCount(t - 1));
      for (NodeId v : parts.branch_sets[k]) ++membership[v];
      EXPECT_EQ(parts.outer_corner_of_branch[k], g.corner(k + 1));
      EXPECT_EQ(parts.local_corner_map[k][0], g.corner(k + 1));
      EXPECT_EQ(parts.local_corner_map[k][2], parts.junctions[k]);
      EXPECT_EQ(parts.local_corner_map[k][3], parts.junctions[(k + 4) % 5]);
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const bool junction = std::find(parts.junctions.begin(), parts.junctions.end(), v) != parts.junctions.end();
      EXPECT_EQ(membership[v], junction ? 2 : 1) << "node " << v;
    }
    for (int k = 0; k < 5; ++k) {
      const auto& a = parts.branch_sets[k];
      const auto& b = parts.branch_sets[(k + 1) % 5];
      EXPECT_TRUE(std::binary_search(a.begin(), a.end(), parts.junctions[k]));
      EXPECT_TRUE(std::binary_search(b.begin(), b.end(), parts.junctions[k]));
    }
  }
}

// node_in_branch must be a graph embedding of G(t) whose image is the branch.
TEST(DecomposeTest, BranchesAreCopiesOfThePreviousGeneration) {
  const PentagonGraph g = Build(3);
  const PentagonGraph prev = Build(2);
  const BranchDecomposition parts = Decompose(g);
  for (int k = 0; k < 5; ++k) {
    const auto& map = parts.node_in_branch[k];
    ASSERT_EQ(map.size(), prev.node_count());
    for (const auto& [u, v] : prev.edges()) {
      const auto nb = g.neighbors(map[u]);
      EXPECT_TRUE(std::binary_search(nb.begin(), nb.end(), map[v]));
    }
    for (int r = 1; r <= 5; ++r) {
      EXPECT_EQ(parts.local_corner_map[k][r - 1], map[prev.corner((k + r - 1) % 5 + 1)]);
    }
  }
}

TEST(DecomposeTest, RejectsGenerationZeroAndForeignGluing) {
  EXPECT_THROW(Decompose(Build(0)), std::invalid_argument);
  const PentagonGraph skewed = Build(2, {.gluing = Gluing::kSkewed});
  EXPECT_THROW(Decompose(skewed, Gluing::kStandard), std::invalid_argument);
}

TEST(GluingTest, SkewedControlBreaksOrientation) {
  const PentagonGraph g = Build(1, {.gluing = Gluing::kSkewed});
  EXPECT_EQ(g.node_count(), 20u);
  const auto d = testing::Distances(testing::AdjacencyFromEdges(g), g.corner(1));
  EXPECT_EQ(d[g.corner(2)], 3);
}

TEST(SerializationTest, RoundTrip) {
  for (int t = 0; t <= 4; ++t) {
    const PentagonGraph g = Build(t);
    const std::string doc = Serialize(g);
    const PentagonGraph back = Deserialize(doc);
    EXPECT_EQ(back, g);
    EXPECT_EQ(Serialize(back), doc);
  }
}

TEST(SerializationTest, GenerationZeroDocument) {
  EXPECT_EQ(Serialize(Build(0)),
            R"({"corners":[0,1,2,3,4],"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]],"generation":0,"n":5})");
}

TEST(SerializationTest, MalformedDocumentsReportOffsets) {
  try {
    Deserialize(R"({"corners":[0,1,2,3,4],"edges":[[0,1)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.offset(), 0u);
  }
  EXPECT_THROW(Deserialize(R"({"corners":[0,1,2],"edges":[],"generation":0,"n":5})"), ParseError);
  EXPECT_THROW(Deserialize(R"({"corners":[0,1,2,3,4],"edges":[[0,9]],"generation":0,"n":5})"), ParseError);
  EXPECT_THROW(Deserialize("[]"), ParseError);
}

}  // namespace
}  // namespace penta
