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

#include "penta/omega.hpp"

#include <gtest/gtest.h>

#include "penta/bfs_oracle.hpp"
#include "penta/errors.hpp"
#include "penta/pentagon_graph.hpp"
#include "penta/recurrence.hpp"
#include "test_support.hpp"

namespace penta {
namespace {

// Quadratic reference for the overcount: every ordered pair of distinct
// a-values, weighted by both multiplicities.
BigInt QuadraticDelta(const std::map<std::int64_t, std::uint64_t>& a, std::int64_t d12) {
  BigInt total = 0;
  for (const auto& [x, mx] : a) {
    for (const auto& [y, my] : a) {
      const std::int64_t over = x + y - d12;
      if (over > 0) total += BigInt(static_cast<unsigned long>(mx)) * static_cast<unsigned long>(my) * over;
    }
  }
  return total;
}

TEST(OmegaTest, InitialMultisetIsTheFiveCycle) {
  // Corners 1..5 of the 5-cycle give (d3-d4, d2-d4) = (0,-1), (-1,-2),
  // (-1,0), (1,2), (1,1).
  OmegaMultiset want(0);
  for (OmegaPair p : {OmegaPair{0, -1}, {-1, -2}, {-1, 0}, {1, 2}, {1, 1}}) want.Add(p);
  EXPECT_EQ(OmegaInit(), want);
  EXPECT_EQ(OmegaInit().a_marginal(), (std::map<std::int64_t, std::uint64_t>{{-1, 2}, {0, 1}, {1, 2}}));
}

TEST(OmegaTest, ProfileChainEqualsBfsProfiles) {
  const std::vector<CornerProfileMultiset> chain = OmegaChain(7);
  const std::size_t distinct[] = {5, 20, 75, 300, 1095, 3840, 13035, 43260};
  for (int t = 0; t <= 7; ++t) {
    const PentagonGraph g = Build(t);
    EXPECT_EQ(chain[t], oracle::ProfilesDirect(g)) << "t=" << t;
    EXPECT_EQ(chain[t].Omega(), oracle::OmegaDirect(g)) << "t=" << t;
    EXPECT_EQ(chain[t].distinct(), distinct[t]) << "t=" << t;
  }
}

TEST(OmegaTest, Invariants) {
  const std::vector<CornerProfileMultiset> chain = OmegaChain(8);
  const DistanceSequences d = DistSeq(8);
  for (int t = 0; t <= 8; ++t) {
    const OmegaMultiset omega = chain[t].Omega();
    EXPECT_EQ(BigInt(static_cast<unsigned long>(omega.cardinality())), NodeCount(t));
    const auto a = omega.a_marginal();
    const long d12 = d.d12[t].get_si();
    const long d13 = d.d13[t].get_si();
    for (const auto& [x, m] : a) {
      EXPECT_LE(std::abs(x), d12);
      auto it = a.find(-x);
      ASSERT_NE(it, a.end()) << "t=" << t << " a=" << x;
      EXPECT_EQ(it->second, m);
    }
    EXPECT_EQ(a.begin()->first, -d12);
    EXPECT_EQ(a.rbegin()->first, d12);
    for (const auto& [y, m] : omega.b_marginal()) EXPECT_LE(std::abs(y), d13);
  }
}

TEST(OmegaTest, MarginalChainMatchesProfileChain) {
  const std::vector<CornerProfileMultiset> chain = OmegaChain(8);
  const DistanceSequences d = DistSeq(8);
  OmegaMarginals m = MarginalsInit();
  for (int t = 0; t <= 8; ++t) {
    const OmegaMultiset omega = chain[t].Omega();
    EXPECT_EQ(m.a, DenseHistogram::FromMap(omega.a_marginal())) << "t=" << t;
    EXPECT_EQ(m.b, DenseHistogram::FromMap(omega.b_marginal())) << "t=" << t;
    if (t < 8) m = MarginalStep(m, d.d12[t].get_si(), d.d13[t].get_si());
  }
}

TEST(OmegaTest, DeltaSweepMatchesQuadraticReference) {
  const DistanceSequences d = DistSeq(9);
  OmegaMarginals m = MarginalsInit();
  const std::size_t distinct_a[] = {3, 9, 21, 57, 153, 417, 1137, 3105, 8481, 23169};
  for (int t = 0; t <= 9; ++t) {
    const auto a = m.a.ToMap();
    EXPECT_EQ(a.size(), distinct_a[t]);
    const BigInt want = QuadraticDelta(a, d.d12[t].get_si());
    EXPECT_EQ(Delta(m.a, d.d12[t].get_si(), DeltaConvention::kInclusive), want) << "t=" << t;
    if (t < 9) m = MarginalStep(m, d.d12[t].get_si(), d.d13[t].get_si());
  }
}

TEST(OmegaTest, ConventionsAgree) {
  const std::vector<CornerProfileMultiset> chain = OmegaChain(5);
  const DistanceSequences d = DistSeq(5);
  for (int t = 0; t <= 5; ++t) {
    const OmegaMultiset omega = chain[t].Omega();
    EXPECT_EQ(Delta(omega, d.d12[t].get_si(), DeltaConvention::kInclusive),
              Delta(omega, d.d12[t].get_si(), DeltaConvention::kExclusive));
  }
}

TEST(OmegaTest, DeltaSmallValues) {
  EXPECT_EQ(Delta(OmegaInit(), 1, DeltaConvention::kInclusive), 4);
  OmegaMultiset single;
  single.Add({3, 0}, 2);
  // Four ordered pairs of value 3 each exceed d12 = 2 by 4.
  EXPECT_EQ(Delta(single, 2, DeltaConvention::kInclusive), 16);
  EXPECT_EQ(Delta(OmegaMultiset{}, 1, DeltaConvention::kInclusive), 0);
}

TEST(OmegaTest, JunctionSkeleton) {
  const JunctionDistances j = JunctionCornerDistances(1, 2);
  // In G(1), junction 0 joins branches 0 and 1.
  EXPECT_EQ(j[0][0], 2);
  EXPECT_EQ(j[0][1], 2);
  EXPECT_EQ(j[0][2], 3);
  EXPECT_EQ(j[0][4], 3);
  EXPECT_EQ(j[0][3], 4);
  const PentagonGraph g = Build(1);
  const BranchDecomposition parts = Decompose(g);
  for (int k = 0; k < 5; ++k) {
    const auto dist = oracle::Sssp(g, parts.junctions[k]).dist;
    for (int m = 0; m < 5; ++m) EXPECT_EQ(dist[g.corner(m + 1)], j[k][m]);
  }
}

TEST(DenseHistogramTest, Operations) {
  DenseHistogram h(-2, 2);
  h.Add(-2);
  h.Add(1, 3);
  EXPECT_EQ(h.total(), 4u);
  EXPECT_EQ(h.count(1), 3u);
  EXPECT_EQ(h.count(7), 0u);
  h.Remove(1);
  EXPECT_EQ(h.count(1), 2u);
  EXPECT_THROW(h.Add(3), InternalConsistencyError);
  EXPECT_THROW(h.Remove(0), InternalConsistencyError);

  DenseHistogram wide(-10, 10);
  wide.AddShifted(h, 5, true);  // -x + 5
  EXPECT_EQ(wide.count(7), 1u);
  EXPECT_EQ(wide.count(4), 2u);
  EXPECT_THROW(wide.AddShifted(h, 20), InternalConsistencyError);
  EXPECT_EQ(DenseHistogram::FromMap(h.ToMap()), h);
}

TEST(CornerProfileTest, RoundTripAndOverflow) {
  const CornerProfile p = CornerProfile::FromDistances({7, 3, 5, 4, 9});
  EXPECT_EQ(p.rel, (std::array<std::int32_t, 4>{3, -1, 1, 5}));
  EXPECT_EQ(p.omega(), (OmegaPair{1, -1}));
  EXPECT_EQ(p.Distances(), (std::array<std::int64_t, 5>{3, -1, 1, 0, 5}));
  EXPECT_THROW(CornerProfile::FromDistances({std::int64_t{1} << 40, 0, 0, 0, 0}), std::overflow_error);
  CornerProfileMultiset s;
  EXPECT_THROW(s.RemoveOne(p), InternalConsistencyError);
}

}  // namespace
}  // namespace penta
