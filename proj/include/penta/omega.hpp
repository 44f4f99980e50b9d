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

#ifndef PENTA_OMEGA_HPP_
#define PENTA_OMEGA_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "penta/numeric.hpp"

namespace penta {

// Per-node distance differences to the outer corners of G(t):
//   a = d(i, corner 3) - d(i, corner 4)
//   b = d(i, corner 2) - d(i, corner 4)
struct OmegaPair {
  std::int64_t a = 0;
  std::int64_t b = 0;
  auto operator<=>(const OmegaPair&) const = default;
};

class OmegaMultiset {
 public:
  OmegaMultiset() = default;
  explicit OmegaMultiset(int generation) : generation_(generation) {}

  void Add(OmegaPair pair, std::uint64_t multiplicity = 1);

  int generation() const noexcept { return generation_; }
  const std::map<OmegaPair, std::uint64_t>& entries() const noexcept { return entries_; }
  std::uint64_t cardinality() const;
  std::map<std::int64_t, std::uint64_t> a_marginal() const;
  std::map<std::int64_t, std::uint64_t> b_marginal() const;

  bool operator==(const OmegaMultiset&) const = default;

 private:
  int generation_ = 0;
  std::map<OmegaPair, std::uint64_t> entries_;
};

// A node's distances to the five outer corners, stored relative to the
// distance to corner 4: rel = (x1-x4, x2-x4, x3-x4, x5-x4). The (a,b) pair is
// (rel[2], rel[1]).
struct CornerProfile {
  std::array<std::int32_t, 4> rel{};

  static CornerProfile FromDistances(const std::array<std::int64_t, 5>& x);
  // Distances with x4 pinned to zero.
  std::array<std::int64_t, 5> Distances() const;
  OmegaPair omega() const { return {rel[2], rel[1]}; }

  bool operator==(const CornerProfile&) const = default;
};

struct CornerProfileHash {
  std::size_t operator()(const CornerProfile& p) const noexcept;
};

// Multiset of corner profiles of all nodes of G(t). This is the state the
// Ω recursion runs on; the (a,b) multiset is its projection.
class CornerProfileMultiset {
 public:
  CornerProfileMultiset() = default;
  explicit CornerProfileMultiset(int generation) : generation_(generation) {}

  void Add(const CornerProfile& p, std::uint64_t multiplicity = 1);
  // Throws InternalConsistencyError if `p` is not present.
  void RemoveOne(const CornerProfile& p);

  int generation() const noexcept { return generation_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  std::uint64_t cardinality() const;
  const std::unordered_map<CornerProfile, std::uint64_t, CornerProfileHash>& entries() const noexcept {
    return entries_;
  }
  OmegaMultiset Omega() const;

  bool operator==(const CornerProfileMultiset&) const = default;

 private:
  int generation_ = 0;
  std::unordered_map<CornerProfile, std::uint64_t, CornerProfileHash> entries_;
};

// Multiset of integers stored densely over [lo, hi].
class DenseHistogram {
 public:
  DenseHistogram() = default;
  DenseHistogram(std::int64_t lo, std::int64_t hi);

  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return lo_ + static_cast<std::int64_t>(counts_.size()) - 1; }
  std::uint64_t count(std::int64_t value) const;
  std::uint64_t total() const;

  // Out-of-range values throw InternalConsistencyError.
  void Add(std::int64_t value, std::uint64_t multiplicity = 1);
  void Remove(std::int64_t value, std::uint64_t multiplicity = 1);
  // Adds every element x of `other` as (negate ? -x : x) + shift.
  void AddShifted(const DenseHistogram& other, std::int64_t shift, bool negate = false);

  std::map<std::int64_t, std::uint64_t> ToMap() const;
  static DenseHistogram FromMap(const std::map<std::int64_t, std::uint64_t>& m);

  // Content equality; storage ranges may differ.
  bool operator==(const DenseHistogram& other) const { return ToMap() == other.ToMap(); }

 private:
  std::int64_t lo_ = 0;
  std::vector<std::uint64_t> counts_;
};

// a- and b-marginals of Ω(t).
struct OmegaMarginals {
  int generation = 0;
  DenseHistogram a;
  DenseHistogram b;
};

// Distances in G(t+1) from junction g (shared by branches g and g+1) to outer
// corner m, given the corner distances d12(t), d13(t) of the branches.
using JunctionDistances = std::array<std::array<std::int64_t, 5>, 5>;
JunctionDistances JunctionCornerDistances(std::int64_t d12, std::int64_t d13);

OmegaMultiset OmegaInit();
CornerProfileMultiset ProfilesInit();
OmegaMarginals MarginalsInit();

// Ω(t) -> Ω(t+1). Every node of branch k reaches an outer corner of another
// branch through one of its two junctions; taking the shorter route per
// corner gives its new profile. The five junctions are produced by two
// branches each; both images are checked against the junction skeleton and
// one copy is dropped. d12/d13 are those of G(t).
CornerProfileMultiset OmegaStep(const CornerProfileMultiset& omega, std::int64_t d12, std::int64_t d13);

// The same step on the marginals only. Per branch of G(t+1):
//   branch 1: a' = a            b' = a - d12
//   branch 2: a' = -d12         b' = b - d12 - d13
//   branch 3: a' = b - d13      b' = -a
//   branch 4: a' = b + d13      b' = b + d12 + d13
//   branch 5: a' = d12          b' = a + d12
// Branch 3's b' and branch 5's b' are distributional: they are differences
// between adjacent corners, which are distributed like a by symmetry.
OmegaMarginals MarginalStep(const OmegaMarginals& omega, std::int64_t d12, std::int64_t d13);

// Which node pairs the overcount sum ranges over. kExclusive drops the
// junction A from the i-side and B from the j-side, mirroring the pair domain
// of the non-adjacent cross sum.
enum class DeltaConvention { kInclusive, kExclusive };

// Δ_t = sum over ordered (i, j) of max(0, a_i + a_j - d12), with a drawn from
// the a-marginal of Ω(t). O(range) sweep.
BigInt Delta(const DenseHistogram& a_marginal, std::int64_t d12, DeltaConvention convention);
BigInt Delta(const OmegaMultiset& omega, std::int64_t d12, DeltaConvention convention);

}  // namespace penta

#endif  // PENTA_OMEGA_HPP_
