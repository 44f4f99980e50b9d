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

#ifndef PENTA_RECURRENCE_HPP_
#define PENTA_RECURRENCE_HPP_

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "penta/numeric.hpp"
#include "penta/omega.hpp"

namespace penta {

BigInt NodeCount(int t);  // (3 * 5^{t+1} + 5) / 4
BigInt EdgeCount(int t);  // 5^{t+1}

struct DistanceSequences {
  std::vector<BigInt> d12;  // adjacent outer corners
  std::vector<BigInt> d13;  // non-adjacent outer corners (the diameter)
};

// y_t = 2 y_{t-1} + 2 y_{t-2}, seeds d12 = (1, 4), d13 = (2, 5).
DistanceSequences DistSeq(int t_max);

// S_t: total distance from an outer corner, S_t = 5 S_{t-1} + f(t-1) with
// f(t) = (2N(t) - 4) d12(t) + (4N(t) - 5) d13(t), S_0 = 6.
std::vector<BigInt> SSeq(int t_max);

// F(t) = Σ_i min(d_i3, d_i4), F_0 = 4.
std::vector<BigInt> FSeq(int t_max);

// Exact Δ_t for t = 0..t_max from the marginal chain. Memory grows like
// d13(t_max) (about 100 MB at t = 15).
std::vector<BigInt> DeltaSeq(int t_max, DeltaConvention convention = DeltaConvention::kInclusive);

// Exact Ω(t) (joint corner profiles) for t = 0..t_max; distinct profiles grow
// about 3.2x per generation, so keep t_max small (<= 10).
std::vector<CornerProfileMultiset> OmegaChain(int t_max);

struct MetricsRow {
  int t = 0;
  BigInt n;
  BigInt e;
  BigInt d12;
  BigInt d13;
  BigInt s;
  BigInt f;
  BigInt delta;
  BigInt a12;       // adjacent-branch cross sum inside G(t+1)
  BigInt d1c;       // far-hub sum counted by two non-adjacent branch pairs
  BigInt lambda13;  // non-adjacent-branch cross sum inside G(t+1)
  BigInt a_cross;   // crossing distance: D_{t+1} = 5 D_t + a_cross
  BigInt d_total;
  Rational apl;
  bool delta_exact = true;  // false when delta came from `delta_tail`
  bool d_exact = true;      // false when any earlier delta was not exact
};

struct AssembleOptions {
  // Rows with t <= exact_delta_max get Δ from the marginal chain.
  int exact_delta_max = 14;
  DeltaConvention convention = DeltaConvention::kInclusive;
  // Supplies Δ_t for t > exact_delta_max (e.g. a fitted model, rounded).
  // Required when t_max > exact_delta_max.
  std::function<BigInt(int)> delta_tail;
  // Use the published hub term 2 N d12 + F, which counts one far-hub pair per
  // branch twice. Only for comparing against the published decimal forms.
  bool published_hub_term = false;
};

std::vector<MetricsRow> Assemble(int t_max, const AssembleOptions& options = {});

// Columns: t,N,E,d12,d13,S,F,delta,a12,d1c,lambda13,a_cross,D,apl_num,apl_den,
// apl,delta_exact,d_exact. Integers in full decimal; apl to 15 significant
// digits.
void WriteMetricsCsv(std::ostream& out, std::span<const MetricsRow> rows);

}  // namespace penta

#endif  // PENTA_RECURRENCE_HPP_
