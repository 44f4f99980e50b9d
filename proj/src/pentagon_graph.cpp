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

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "penta/errors.hpp"

namespace penta {
namespace {

struct GlueResult {
  std::size_t node_count = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::array<NodeId, kCornerCount> corners{};
  std::array<std::vector<NodeId>, kCornerCount> maps;
};

// Local corner index of copy k that is identified with copy k+1.
int ForwardCorner(int k, Gluing gluing) {
  return gluing == Gluing::kStandard ? (k + 2) % kCornerCount : (k + 1) % kCornerCount;
}
constexpr int BackwardCornerOfNext(int k) { return (k + 4) % kCornerCount; }

GlueResult Glue(const PentagonGraph& g, Gluing gluing) {
  const std::size_t n = g.node_count();
  const auto& c = g.corners();

  // Pre-merge id of node v in copy k is k*n + v; the higher id of each glued
  // pair aliases the lower one.
  std::vector<std::size_t> alias(kCornerCount * n);
  for (std::size_t p = 0; p < alias.size(); ++p) alias[p] = p;
  for (int k = 0; k < kCornerCount; ++k) {
    const int next = (k + 1) % kCornerCount;
    const std::size_t u = k * n + c[ForwardCorner(k, gluing)];
    const std::size_t w = next * n + c[BackwardCornerOfNext(k)];
    alias[std::max(u, w)] = std::min(u, w);
  }

  GlueResult out;
  std::vector<NodeId> compact(alias.size());
  NodeId next_id = 0;
  for (std::size_t p = 0; p < alias.size(); ++p) {
    if (alias[p] == p) compact[p] = next_id++;
  }
  for (std::size_t p = 0; p < alias.size(); ++p) compact[p] = compact[alias[p]];
  out.node_count = next_id;

  for (int k = 0; k < kCornerCount; ++k) {
    out.maps[k].assign(compact.begin() + k * n, compact.begin() + (k + 1) * n);
    out.corners[k] = out.maps[k][c[k]];
  }
  const auto base_edges = g.edges();
  out.edges.reserve(kCornerCount * base_edges.size());
  for (int k = 0; k < kCornerCount; ++k) {
    for (const auto& [u, v] : base_edges) out.edges.emplace_back(out.maps[k][u], out.maps[k][v]);
  }
  return out;
}

PentagonGraph Cycle() {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < kCornerCount; ++i) edges.emplace_back(i, (i + 1) % kCornerCount);
  return PentagonGraph(0, kCornerCount, std::move(edges), {0, 1, 2, 3, 4});
}

}  // namespace

PentagonGraph::PentagonGraph(int generation, std::size_t node_count,
                             std::vector<std::pair<NodeId, NodeId>> edges,
                             std::array<NodeId, kCornerCount> corners)
    : generation_(generation), corners_(corners) {
  if (generation < 0) throw std::invalid_argument("generation must be non-negative");
  for (auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  for (NodeId c : corners) {
    if (c >= node_count) throw std::invalid_argument("corner out of range");
  }

  offsets_.assign(node_count + 1, 0);
  for (const auto& [u, v] : edges) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) offsets_[i + 1] += offsets_[i];
  targets_.resize(2 * edges.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    targets_[fill[u]++] = v;
    targets_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < node_count; ++i) {
    std::sort(targets_.begin() + offsets_[i], targets_.begin() + offsets_[i + 1]);
  }
}

NodeId PentagonGraph::corner(int label) const {
  if (label < 1 || label > kCornerCount) throw std::invalid_argument("corner label must be in 1..5");
  return corners_[label - 1];
}

std::vector<std::pair<NodeId, NodeId>> PentagonGraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t ExpectedNodeCount(int t) {
  std::uint64_t p = 1;
  for (int i = 0; i <= t; ++i) p *= 5;
  return (3 * p + 5) / 4;
}

std::uint64_t ExpectedEdgeCount(int t) {
  std::uint64_t p = 1;
  for (int i = 0; i <= t; ++i) p *= 5;
  return p;
}

PentagonGraph Build(int t, const BuildOptions& options) {
  if (t < 0) throw std::invalid_argument("generation must be non-negative");
  if (t > options.max_generation) {
    throw ResourceLimitError("generation " + std::to_string(t) + " exceeds the explicit-graph ceiling of " +
                                 std::to_string(options.max_generation),
                             options.max_generation);
  }
  PentagonGraph g = Cycle();
  for (int level = 1; level <= t; ++level) {
    GlueResult glued = Glue(g, options.gluing);
    g = PentagonGraph(level, glued.node_count, std::move(glued.edges), glued.corners);
  }
  return g;
}

BranchDecomposition Decompose(const PentagonGraph& g, Gluing gluing) {
  if (g.generation() == 0) throw std::invalid_argument("G(0) has no branch decomposition");
  BuildOptions options;
  options.max_generation = std::max(options.max_generation, g.generation());
  options.gluing = gluing;
  const PentagonGraph base = Build(g.generation() - 1, options);
  GlueResult glued = Glue(base, gluing);
  if (PentagonGraph(g.generation(), glued.node_count, glued.edges, glued.corners) != g) {
    throw std::invalid_argument("graph does not match the G(" + std::to_string(g.generation()) +
                                ") construction");
  }

  BranchDecomposition out;
  out.branch_generation = base.generation();
  const auto& c = base.corners();
  for (int k = 0; k < kCornerCount; ++k) {
    out.branch_sets[k] = glued.maps[k];
    std::sort(out.branch_sets[k].begin(), out.branch_sets[k].end());
    out.junctions[k] = glued.maps[k][c[ForwardCorner(k, gluing)]];
    out.outer_corner_of_branch[k] = glued.corners[k];
    for (int role = 1; role <= kCornerCount; ++role) {
      out.local_corner_map[k][role - 1] = glued.maps[k][c[(k + role - 1) % kCornerCount]];
    }
    out.node_in_branch[k] = std::move(glued.maps[k]);
  }
  return out;
}

std::string Serialize(const PentagonGraph& g) {
  nlohmann::ordered_json doc;
  doc["corners"] = g.corners();
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  doc["generation"] = g.generation();
  doc["n"] = g.node_count();
  return doc.dump();
}

PentagonGraph Deserialize(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  const std::size_t end = document.size();
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'", end);
    return doc.at(key);
  };
  try {
    const auto& generation = require("generation");
    const auto& n = require("n");
    const auto& edges = require("edges");
    const auto& corners = require("corners");
    if (!generation.is_number_integer() || !n.is_number_unsigned() || !edges.is_array() ||
        !corners.is_array() || corners.size() != kCornerCount) {
      throw ParseError("field has the wrong type or shape", end);
    }
    std::vector<std::pair<NodeId, NodeId>> edge_list;
    edge_list.reserve(edges.size());
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        throw ParseError("edge must be a pair of node ids", end);
      }
      edge_list.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
    }
    std::array<NodeId, kCornerCount> corner_ids{};
    for (int i = 0; i < kCornerCount; ++i) {
      if (!corners[i].is_number_unsigned()) throw ParseError("corner must be a node id", end);
      corner_ids[i] = corners[i].get<NodeId>();
    }
    return PentagonGraph(generation.get<int>(), n.get<std::size_t>(), std::move(edge_list), corner_ids);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), end);
  }
}

}  // namespace penta
