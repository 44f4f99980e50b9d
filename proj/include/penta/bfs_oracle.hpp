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

#ifndef PENTA_BFS_ORACLE_HPP_
#define PENTA_BFS_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "penta/numeric.hpp"
#include "penta/omega.hpp"
#include "penta/pentagon_graph.hpp"

// Ground truth by breadth-first search on explicit graphs. Nothing here uses
// the recurrences.
namespace penta::oracle {

struct DistanceVector {
  NodeId source = 0;
  std::vector<std::uint32_t> dist;
};

// Throws std::invalid_argument when `src` is not a node of `g`.
DistanceVector Sssp(const PentagonGraph& g, NodeId src);

// `threads` = 0 picks std::thread::hardware_concurrency(). The result does
// not depend on the thread count.
struct AllPairsOptions {
  unsigned threads = 0;
};

// D_t = Σ_{i<j} d_ij, from one BFS per source with the ordered sum halved.
BigInt TotalDistance(const PentagonGraph& g, const AllPairsOptions& options = {});
std::uint32_t Diameter(const PentagonGraph& g, const AllPairsOptions& options = {});

// Σ_i d(i, corner) for corner label 1..5.
BigInt CornerSum(const PentagonGraph& g, int corner_label = 1);
// F(t) = Σ_i min(d(i, corner 3), d(i, corner 4)).
BigInt MinCornerSum(const PentagonGraph& g);

// Σ d_uv over u in branch i, v in branch j of G(t+1) (0-based branch
// indices). For adjacent branches both endpoints skip the shared junction;
// for non-adjacent branches u skips the junction next to the middle branch on
// i's side and v the one on j's side. Throws std::invalid_argument if i == j.
BigInt BranchCrossSum(const PentagonGraph& g, const BranchDecomposition& parts, int i, int j,
                      const AllPairsOptions& options = {});

// Σ d_uv over unordered pairs of G(t+1) that share no branch, so that
// D_{t+1} = 5 D_t + CrossingDistance.
BigInt CrossingDistance(const PentagonGraph& g, const BranchDecomposition& parts,
                        const AllPairsOptions& options = {});

// (d_i3 - d_i4, d_i2 - d_i4) for every node, from BFS at corners 2, 3, 4.
OmegaMultiset OmegaDirect(const PentagonGraph& g);
// Full corner profiles, from BFS at all five corners.
CornerProfileMultiset ProfilesDirect(const PentagonGraph& g);

}  // namespace penta::oracle

#endif  // PENTA_BFS_ORACLE_HPP_
