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

#include "penta/bfs_oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <thread>

namespace penta::oracle {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Reusable BFS buffers; one per worker.
class Bfs {
 public:
  explicit Bfs(const PentagonGraph& g) : g_(g), dist_(g.node_count()), queue_(g.node_count()) {}

  const std::vector<std::uint32_t>& Run(NodeId src) {
    std::fill(dist_.begin(), dist_.end(), kUnreached);
    std::size_t head = 0;
    std::size_t tail = 0;
    dist_[src] = 0;
    queue_[tail++] = src;
    while (head < tail) {
      const NodeId u = queue_[head++];
      const std::uint32_t next = dist_[u] + 1;
      for (NodeId v : g_.neighbors(u)) {
        if (dist_[v] == kUnreached) {
          dist_[v] = next;
          queue_[tail++] = v;
        }
      }
    }
    if (tail != dist_.size()) throw std::logic_error("graph is disconnected");
    return dist_;
  }

 private:
  const PentagonGraph& g_;
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> queue_;
};

unsigned ResolveThreads(unsigned requested, std::size_t work) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, work)));
}

// Runs `visit(worker_bfs, source_index)` for every source and reduces the
// per-source results with `combine`. Sources are split into contiguous
// blocks so each worker's partial depends only on its block.
template <typename Partial, typename Visit, typename Combine>
Partial ForEachSource(const PentagonGraph& g, const std::vector<NodeId>& sources, unsigned threads, Partial init,
                      Visit visit, Combine combine) {
  const unsigned workers = ResolveThreads(threads, sources.size());
  std::vector<Partial> partial(workers, init);
  auto run = [&](unsigned w) {
    Bfs bfs(g);
    const std::size_t begin = sources.size() * w / workers;
    const std::size_t end = sources.size() * (w + 1) / workers;
    for (std::size_t s = begin; s < end; ++s) partial[w] = combine(partial[w], visit(bfs, sources[s]));
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  Partial out = init;
  for (const Partial& p : partial) out = combine(out, p);
  return out;
}

std::vector<NodeId> AllNodes(const PentagonGraph& g) {
  std::vector<NodeId> v(g.node_count());
  for (NodeId i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

BigInt ToBig(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace

DistanceVector Sssp(const PentagonGraph& g, NodeId src) {
  if (src >= g.node_count()) throw std::invalid_argument("source " + std::to_string(src) + " is not a node");
  Bfs bfs(g);
  return {src, bfs.Run(src)};
}

BigInt TotalDistance(const PentagonGraph& g, const AllPairsOptions& options) {
  // Per-source sums fit in 64 bits (N * diameter); the total may not.
  auto visit = [](Bfs& bfs, NodeId s) {
    const auto& d = bfs.Run(s);
    std::uint64_t sum = 0;
    for (std::uint32_t x : d) sum += x;
    return ToBig(sum);
  };
  const BigInt ordered = ForEachSource(g, AllNodes(g), options.threads, BigInt(0), visit,
                                       [](const BigInt& a, const BigInt& b) { return BigInt(a + b); });
  return ordered / 2;
}

std::uint32_t Diameter(const PentagonGraph& g, const AllPairsOptions& options) {
  auto visit = [](Bfs& bfs, NodeId s) {
    const auto& d = bfs.Run(s);
    return *std::max_element(d.begin(), d.end());
  };
  return ForEachSource(g, AllNodes(g), options.threads, std::uint32_t{0}, visit,
                       [](std::uint32_t a, std::uint32_t b) { return std::max(a, b); });
}

BigInt CornerSum(const PentagonGraph& g, int corner_label) {
  const auto d = Sssp(g, g.corner(corner_label)).dist;
  std::uint64_t sum = 0;
  for (std::uint32_t x : d) sum += x;
  return ToBig(sum);
}

BigInt MinCornerSum(const PentagonGraph& g) {
  const auto d3 = Sssp(g, g.corner(3)).dist;
  const auto d4 = Sssp(g, g.corner(4)).dist;
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < d3.size(); ++i) sum += std::min(d3[i], d4[i]);
  return ToBig(sum);
}

BigInt BranchCrossSum(const PentagonGraph& g, const BranchDecomposition& parts, int i, int j,
                      const AllPairsOptions& options) {
  if (i == j) throw std::invalid_argument("branch cross sum needs two distinct branches");
  if (i < 0 || i >= 5 || j < 0 || j >= 5) throw std::invalid_argument("branch index must be in 0..4");

  NodeId skip_i = 0;
  NodeId skip_j = 0;
  const int gap = ((j - i) % 5 + 5) % 5;
  if (gap == 1) {
    skip_i = skip_j = parts.junctions[i];
  } else if (gap == 4) {
    skip_i = skip_j = parts.junctions[j];
  } else if (gap == 2) {  // i, i+1, j: junctions i and i+1
    skip_i = parts.junctions[i];
    skip_j = parts.junctions[(i + 1) % 5];
  } else {  // j, j+1, i: junctions i-1 and j
    skip_i = parts.junctions[(i + 4) % 5];
    skip_j = parts.junctions[j];
  }

  std::vector<NodeId> sources;
  for (NodeId u : parts.branch_sets[i]) {
    if (u != skip_i) sources.push_back(u);
  }
  std::vector<NodeId> targets;
  for (NodeId v : parts.branch_sets[j]) {
    if (v != skip_j) targets.push_back(v);
  }
  auto visit = [&targets](Bfs& bfs, NodeId s) {
    const auto& d = bfs.Run(s);
    std::uint64_t sum = 0;
    for (NodeId v : targets) sum += d[v];
    return ToBig(sum);
  };
  return ForEachSource(g, sources, options.threads, BigInt(0), visit,
                       [](const BigInt& a, const BigInt& b) { return BigInt(a + b); });
}

BigInt CrossingDistance(const PentagonGraph& g, const BranchDecomposition& parts,
                        const AllPairsOptions& options) {
  // Bit k of member[v] is set when v lies in branch k.
  std::vector<std::uint8_t> member(g.node_count(), 0);
  for (int k = 0; k < 5; ++k) {
    for (NodeId v : parts.branch_sets[k]) member[v] |= static_cast<std::uint8_t>(1u << k);
  }
  std::vector<NodeId> sources(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) sources[v] = v;
  auto visit = [&member](Bfs& bfs, NodeId s) {
    const auto& d = bfs.Run(s);
    std::uint64_t sum = 0;
    for (NodeId v = 0; v < d.size(); ++v) {
      if ((member[s] & member[v]) == 0) sum += d[v];
    }
    return ToBig(sum);
  };
  const BigInt ordered = ForEachSource(g, sources, options.threads, BigInt(0), visit,
                                       [](const BigInt& a, const BigInt& b) { return BigInt(a + b); });
  return ordered / 2;
}

OmegaMultiset OmegaDirect(const PentagonGraph& g) {
  const auto d2 = Sssp(g, g.corner(2)).dist;
  const auto d3 = Sssp(g, g.corner(3)).dist;
  const auto d4 = Sssp(g, g.corner(4)).dist;
  OmegaMultiset out(g.generation());
  for (std::size_t i = 0; i < d2.size(); ++i) {
    out.Add({static_cast<std::int64_t>(d3[i]) - d4[i], static_cast<std::int64_t>(d2[i]) - d4[i]});
  }
  return out;
}

CornerProfileMultiset ProfilesDirect(const PentagonGraph& g) {
  std::array<std::vector<std::uint32_t>, 5> d;
  for (int c = 0; c < 5; ++c) d[c] = Sssp(g, g.corner(c + 1)).dist;
  CornerProfileMultiset out(g.generation());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    out.Add(CornerProfile::FromDistances({d[0][i], d[1][i], d[2][i], d[3][i], d[4][i]}));
  }
  return out;
}

}  // namespace penta::oracle
