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

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "penta/errors.hpp"

namespace penta {

void OmegaMultiset::Add(OmegaPair pair, std::uint64_t multiplicity) {
  if (multiplicity != 0) entries_[pair] += multiplicity;
}

std::uint64_t OmegaMultiset::cardinality() const {
  std::uint64_t n = 0;
  for (const auto& [pair, m] : entries_) n += m;
  return n;
}

std::map<std::int64_t, std::uint64_t> OmegaMultiset::a_marginal() const {
  std::map<std::int64_t, std::uint64_t> out;
  for (const auto& [pair, m] : entries_) out[pair.a] += m;
  return out;
}

std::map<std::int64_t, std::uint64_t> OmegaMultiset::b_marginal() const {
  std::map<std::int64_t, std::uint64_t> out;
  for (const auto& [pair, m] : entries_) out[pair.b] += m;
  return out;
}

CornerProfile CornerProfile::FromDistances(const std::array<std::int64_t, 5>& x) {
  CornerProfile p;
  const std::int64_t base = x[3];
  const std::array<int, 4> order = {0, 1, 2, 4};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::int64_t d = x[order[i]] - base;
    if (d < std::numeric_limits<std::int32_t>::min() || d > std::numeric_limits<std::int32_t>::max()) {
      throw std::overflow_error("corner profile difference exceeds 32 bits");
    }
    p.rel[i] = static_cast<std::int32_t>(d);
  }
  return p;
}

std::array<std::int64_t, 5> CornerProfile::Distances() const {
  return {rel[0], rel[1], rel[2], 0, rel[3]};
}

std::size_t CornerProfileHash::operator()(const CornerProfile& p) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (std::int32_t v : p.rel) {
    h ^= static_cast<std::uint32_t>(v) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void CornerProfileMultiset::Add(const CornerProfile& p, std::uint64_t multiplicity) {
  if (multiplicity != 0) entries_[p] += multiplicity;
}

void CornerProfileMultiset::RemoveOne(const CornerProfile& p) {
  auto it = entries_.find(p);
  if (it == entries_.end()) throw InternalConsistencyError("removing a corner profile that is not present");
  if (--it->second == 0) entries_.erase(it);
}

std::uint64_t CornerProfileMultiset::cardinality() const {
  std::uint64_t n = 0;
  for (const auto& [p, m] : entries_) n += m;
  return n;
}

OmegaMultiset CornerProfileMultiset::Omega() const {
  OmegaMultiset out(generation_);
  for (const auto& [p, m] : entries_) out.Add(p.omega(), m);
  return out;
}

DenseHistogram::DenseHistogram(std::int64_t lo, std::int64_t hi) : lo_(lo) {
  if (hi < lo) throw std::invalid_argument("histogram range is empty");
  counts_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
}

std::uint64_t DenseHistogram::count(std::int64_t value) const {
  if (value < lo_ || value > hi()) return 0;
  return counts_[static_cast<std::size_t>(value - lo_)];
}

std::uint64_t DenseHistogram::total() const {
  std::uint64_t n = 0;
  for (std::uint64_t c : counts_) n += c;
  return n;
}

void DenseHistogram::Add(std::int64_t value, std::uint64_t multiplicity) {
  if (value < lo_ || value > hi()) {
    throw InternalConsistencyError("histogram value " + std::to_string(value) + " outside [" +
                                   std::to_string(lo_) + ", " + std::to_string(hi()) + "]");
  }
  counts_[static_cast<std::size_t>(value - lo_)] += multiplicity;
}

void DenseHistogram::Remove(std::int64_t value, std::uint64_t multiplicity) {
  if (count(value) < multiplicity) {
    throw InternalConsistencyError("histogram has fewer than " + std::to_string(multiplicity) +
                                   " copies of " + std::to_string(value));
  }
  counts_[static_cast<std::size_t>(value - lo_)] -= multiplicity;
}

void DenseHistogram::AddShifted(const DenseHistogram& other, std::int64_t shift, bool negate) {
  if (other.counts_.empty()) return;
  const std::int64_t first = negate ? -other.hi() + shift : other.lo() + shift;
  const std::int64_t last = negate ? -other.lo() + shift : other.hi() + shift;
  if (first < lo_ || last > hi()) {
    throw InternalConsistencyError("shifted histogram does not fit the target range");
  }
  const std::size_t n = other.counts_.size();
  std::uint64_t* dst = counts_.data() + (first - lo_);
  if (negate) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += other.counts_[n - 1 - i];
  } else {
    for (std::size_t i = 0; i < n; ++i) dst[i] += other.counts_[i];
  }
}

std::map<std::int64_t, std::uint64_t> DenseHistogram::ToMap() const {
  std::map<std::int64_t, std::uint64_t> out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] != 0) out.emplace(lo_ + static_cast<std::int64_t>(i), counts_[i]);
  }
  return out;
}

DenseHistogram DenseHistogram::FromMap(const std::map<std::int64_t, std::uint64_t>& m) {
  if (m.empty()) return DenseHistogram(0, 0);
  DenseHistogram h(m.begin()->first, m.rbegin()->first);
  for (const auto& [v, c] : m) h.Add(v, c);
  return h;
}

JunctionDistances JunctionCornerDistances(std::int64_t d12, std::int64_t d13) {
  JunctionDistances out{};
  for (int g = 0; g < 5; ++g) {
    for (int m = 0; m < 5; ++m) {
      if (m == g || m == (g + 1) % 5) {
        out[g][m] = d13;
        continue;
      }
      // Walk the junction ring forward (g+1, ..., m-1) or backward (g-1, ..., m)
      // and finish inside branch m.
      const int forward = ((m - 1 - g) % 5 + 5) % 5;
      const int backward = ((g - m) % 5 + 5) % 5;
      out[g][m] = std::min(forward, backward) * d12 + d13;
    }
  }
  return out;
}

namespace {

std::array<std::int64_t, 5> CycleDistances(int from) {
  std::array<std::int64_t, 5> x{};
  for (int k = 0; k < 5; ++k) {
    const int gap = ((k - from) % 5 + 5) % 5;
    x[k] = std::min(gap, 5 - gap);
  }
  return x;
}

// Corner distances of corner `c` within G(t).
std::array<std::int64_t, 5> CornerToCorners(int c, std::int64_t d12, std::int64_t d13) {
  std::array<std::int64_t, 5> x{};
  for (int k = 0; k < 5; ++k) {
    const int gap = ((k - c) % 5 + 5) % 5;
    x[k] = gap == 0 ? 0 : (gap == 1 || gap == 4) ? d12 : d13;
  }
  return x;
}

}  // namespace

OmegaMultiset OmegaInit() { return ProfilesInit().Omega(); }

CornerProfileMultiset ProfilesInit() {
  CornerProfileMultiset out(0);
  for (int v = 0; v < 5; ++v) out.Add(CornerProfile::FromDistances(CycleDistances(v)));
  return out;
}

OmegaMarginals MarginalsInit() {
  const OmegaMultiset omega = OmegaInit();
  return {0, DenseHistogram::FromMap(omega.a_marginal()), DenseHistogram::FromMap(omega.b_marginal())};
}

CornerProfileMultiset OmegaStep(const CornerProfileMultiset& omega, std::int64_t d12, std::int64_t d13) {
  const JunctionDistances junction = JunctionCornerDistances(d12, d13);
  CornerProfileMultiset out(omega.generation() + 1);

  for (int branch = 0; branch < 5; ++branch) {
    // Local corner 'forward' is junction `branch`; 'backward' is junction branch-1.
    const int forward = (branch + 2) % 5;
    const int backward = (branch + 3) % 5;
    const int forward_junction = branch;
    const int backward_junction = (branch + 4) % 5;

    auto image = [&](const std::array<std::int64_t, 5>& x) {
      std::array<std::int64_t, 5> y{};
      for (int m = 0; m < 5; ++m) {
        y[m] = std::min(x[forward] + junction[forward_junction][m], x[backward] + junction[backward_junction][m]);
      }
      y[branch] = std::min(y[branch], x[branch]);
      return CornerProfile::FromDistances(y);
    };

    for (const auto& [profile, m] : omega.entries()) out.Add(image(profile.Distances()), m);

    for (const auto& [local, global] : {std::pair{forward, forward_junction}, std::pair{backward, backward_junction}}) {
      const CornerProfile produced = image(CornerToCorners(local, d12, d13));
      const CornerProfile expected = CornerProfile::FromDistances(junction[global]);
      if (produced != expected) {
        throw InternalConsistencyError("junction " + std::to_string(global) + " image from branch " +
                                       std::to_string(branch) + " disagrees with the junction skeleton");
      }
    }
  }
  for (int g = 0; g < 5; ++g) out.RemoveOne(CornerProfile::FromDistances(junction[g]));

  const std::uint64_t expected = 5 * omega.cardinality() - 5;
  if (out.cardinality() != expected) {
    throw InternalConsistencyError("Ω cardinality " + std::to_string(out.cardinality()) + " != " +
                                   std::to_string(expected));
  }
  return out;
}

OmegaMarginals MarginalStep(const OmegaMarginals& omega, std::int64_t d12, std::int64_t d13) {
  const std::int64_t next_d12 = 2 * d13;
  const std::int64_t next_d13 = 2 * d13 + d12;
  const std::uint64_t n = omega.a.total();

  OmegaMarginals out{omega.generation + 1, DenseHistogram(-next_d12, next_d12), DenseHistogram(-next_d13, next_d13)};

  out.a.AddShifted(omega.a, 0);
  out.a.Add(-d12, n);
  out.a.AddShifted(omega.b, -d13);
  out.a.AddShifted(omega.b, d13);
  out.a.Add(d12, n);

  out.b.AddShifted(omega.a, -d12);
  out.b.AddShifted(omega.b, -d12 - d13);
  out.b.AddShifted(omega.a, 0, /*negate=*/true);
  out.b.AddShifted(omega.b, d12 + d13);
  out.b.AddShifted(omega.a, d12);

  const JunctionDistances junction = JunctionCornerDistances(d12, d13);
  for (const auto& x : junction) {
    out.a.Remove(x[2] - x[3]);
    out.b.Remove(x[1] - x[3]);
  }
  return out;
}

namespace {

__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

Wide CheckedAdd(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Δ accumulator overflow");
  return r;
}

Wide CheckedMul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Δ accumulator overflow");
  return r;
}

BigInt FromWide(Wide v) {
  const bool negative = v < 0;
  UWide u = negative ? -static_cast<UWide>(v) : static_cast<UWide>(v);
  BigInt hi(static_cast<unsigned long>(u >> 64));
  BigInt lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
  BigInt out = (hi << 64) + lo;
  return negative ? BigInt(-out) : out;
}

// Σ_x Σ_y m_x n_y max(0, x + y - threshold). As x grows the admissible
// y >= threshold - x + 1 only gain members, so one sweep maintains the
// suffix sums.
BigInt OvercountSum(const DenseHistogram& left, const DenseHistogram& right, std::int64_t threshold) {
  Wide count = 0;   // Σ n_y over y >= cut
  Wide weight = 0;  // Σ n_y * y over y >= cut
  std::int64_t cut = right.hi() + 1;
  Wide sum = 0;
  for (std::int64_t x = left.lo(); x <= left.hi(); ++x) {
    const std::int64_t want = std::max(threshold - x + 1, right.lo());
    while (cut > want) {
      --cut;
      const Wide c = right.count(cut);
      count += c;
      weight = CheckedAdd(weight, CheckedMul(c, cut));
    }
    const std::uint64_t m = left.count(x);
    if (m == 0 || cut > right.hi()) continue;
    const Wide per_pair = CheckedAdd(weight, CheckedMul(static_cast<Wide>(x - threshold), count));
    sum = CheckedAdd(sum, CheckedMul(static_cast<Wide>(m), per_pair));
  }
  return FromWide(sum);
}

}  // namespace

BigInt Delta(const DenseHistogram& a_marginal, std::int64_t d12, DeltaConvention convention) {
  if (convention == DeltaConvention::kInclusive) return OvercountSum(a_marginal, a_marginal, d12);
  // Junction A seen from G_1 and junction B seen from G_3 both sit at a = -d12.
  DenseHistogram trimmed = a_marginal;
  trimmed.Remove(-d12);
  return OvercountSum(trimmed, trimmed, d12);
}

BigInt Delta(const OmegaMultiset& omega, std::int64_t d12, DeltaConvention convention) {
  return Delta(DenseHistogram::FromMap(omega.a_marginal()), d12, convention);
}

}  // namespace penta
