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

#ifndef PENTA_PENTAGON_GRAPH_HPP_
#define PENTA_PENTAGON_GRAPH_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace penta {

using NodeId = std::uint32_t;

inline constexpr int kCornerCount = 5;
inline constexpr int kDefaultMaxGeneration = 8;

// How copy k of G(t) is glued to copy k+1 when forming G(t+1).
//
// kStandard: copy k's corner k+2 is identified with copy k+1's corner k+4
// (indices mod 5). Each copy keeps its own corner k as the outer corner k of
// G(t+1), so its two junctions are the adjacent corner pair {k+2, k+3}.
//
// kSkewed is a deliberately broken gluing (copy k's corner k+1 with copy
// k+1's corner k+4) used as a negative control by the verification suite.
enum class Gluing { kStandard, kSkewed };

struct BuildOptions {
  int max_generation = kDefaultMaxGeneration;
  Gluing gluing = Gluing::kStandard;
};

// Undirected, unweighted, immutable adjacency structure of G(t) in CSR form.
// Neighbor lists are sorted.
class PentagonGraph {
 public:
  PentagonGraph(int generation, std::size_t node_count,
                std::vector<std::pair<NodeId, NodeId>> edges,
                std::array<NodeId, kCornerCount> corners);

  int generation() const noexcept { return generation_; }
  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  // Generation-0 nodes in cyclic order; index 0 holds corner 1.
  const std::array<NodeId, kCornerCount>& corners() const noexcept { return corners_; }
  // `label` is 1-based (1..5).
  NodeId corner(int label) const;

  // Every edge once with u < v, sorted lexicographically.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  bool operator==(const PentagonGraph&) const = default;

 private:
  int generation_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::array<NodeId, kCornerCount> corners_;
};

// Exact node/edge counts of G(t) for small t (t <= 25 fits in 64 bits).
std::uint64_t ExpectedNodeCount(int t);
std::uint64_t ExpectedEdgeCount(int t);

// Throws ResourceLimitError when t > options.max_generation and
// std::invalid_argument when t < 0.
PentagonGraph Build(int t, const BuildOptions& options = {});

// The five copies of G(t) inside G(t+1). Branch k (0-based) is the copy whose
// local corner 1 is outer corner k+1 of G(t+1). Junction k is the node shared
// by branches k and k+1 (mod 5).
struct BranchDecomposition {
  int branch_generation = 0;  // t, where the decomposed graph is G(t+1)
  std::array<std::vector<NodeId>, kCornerCount> branch_sets;  // sorted ids
  std::array<NodeId, kCornerCount> junctions{};
  std::array<NodeId, kCornerCount> outer_corner_of_branch{};
  // local_corner_map[k][r-1] is the node of branch k that plays local role r.
  // Role 1 is the outer corner, roles 3 and 4 are the branch's junctions
  // (role 3 faces branch k+1, role 4 faces branch k-1).
  std::array<std::array<NodeId, kCornerCount>, kCornerCount> local_corner_map{};
  // node_in_branch[k][v] is the id in G(t+1) of node v of the G(t) copy.
  std::array<std::vector<NodeId>, kCornerCount> node_in_branch;
};

// Recovers the branch structure by replaying the deterministic construction
// and checking it reproduces `g`. Throws std::invalid_argument when
// g.generation() == 0 or `g` is not the graph Build(g.generation(), gluing)
// produces.
BranchDecomposition Decompose(const PentagonGraph& g, Gluing gluing = Gluing::kStandard);

// Graph document: {"corners":[...],"edges":[[u,v],...],"generation":t,"n":N}
// with keys in that order and no whitespace.
std::string Serialize(const PentagonGraph& g);
// Throws ParseError on malformed JSON or a document violating the schema.
PentagonGraph Deserialize(std::string_view document);

}  // namespace penta

#endif  // PENTA_PENTAGON_GRAPH_HPP_
