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

#include "penta/recurrence.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace penta {
namespace {

void RequireNonNegative(int t_max) {
  if (t_max < 0) throw std::invalid_argument("t_max must be non-negative");
}

}  // namespace

BigInt NodeCount(int t) { return (3 * Pow(5, t + 1) + 5) / 4; }

BigInt EdgeCount(int t) { return Pow(5, t + 1); }

DistanceSequences DistSeq(int t_max) {
  RequireNonNegative(t_max);
  DistanceSequences out;
  out.d12 = {1, 4};
  out.d13 = {2, 5};
  for (int t = 2; t <= t_max; ++t) {
    out.d12.push_back(2 * out.d12[t - 1] + 2 * out.d12[t - 2]);
    out.d13.push_back(2 * out.d13[t - 1] + 2 * out.d13[t - 2]);
  }
  out.d12.resize(t_max + 1);
  out.d13.resize(t_max + 1);
  return out;
}

std::vector<BigInt> SSeq(int t_max) {
  const auto dist = DistSeq(t_max);
  std::vector<BigInt> s = {6};
  for (int t = 1; t <= t_max; ++t) {
    const BigInt n = NodeCount(t - 1);
    s.push_back(5 * s[t - 1] + (2 * n - 4) * dist.d12[t - 1] + (4 * n - 5) * dist.d13[t - 1]);
  }
  return s;
}

std::vector<BigInt> FSeq(int t_max) {
  const auto dist = DistSeq(t_max);
  const auto s = SSeq(t_max);
  std::vector<BigInt> f = {4};
  for (int t = 1; t <= t_max; ++t) {
    const BigInt n = NodeCount(t - 1);
    f.push_back(4 * s[t - 1] + (3 * n - 5) * dist.d13[t - 1] + (n - 2) * dist.d12[t - 1] + f[t - 1]);
  }
  return f;
}

std::vector<BigInt> DeltaSeq(int t_max, DeltaConvention convention) {
  RequireNonNegative(t_max);
  const auto dist = DistSeq(t_max);
  std::vector<BigInt> out;
  OmegaMarginals omega = MarginalsInit();
  for (int t = 0; t <= t_max; ++t) {
    const std::int64_t d12 = ToInt64(dist.d12[t]);
    out.push_back(Delta(omega.a, d12, convention));
    if (t < t_max) omega = MarginalStep(omega, d12, ToInt64(dist.d13[t]));
  }
  return out;
}

std::vector<CornerProfileMultiset> OmegaChain(int t_max) {
  RequireNonNegative(t_max);
  const auto dist = DistSeq(t_max);
  std::vector<CornerProfileMultiset> out = {ProfilesInit()};
  for (int t = 0; t < t_max; ++t) {
    out.push_back(OmegaStep(out.back(), ToInt64(dist.d12[t]), ToInt64(dist.d13[t])));
  }
  return out;
}

std::vector<MetricsRow> Assemble(int t_max, const AssembleOptions& options) {
  RequireNonNegative(t_max);
  if (t_max > options.exact_delta_max && !options.delta_tail) {
    throw std::invalid_argument("t_max " + std::to_string(t_max) + " exceeds exact_delta_max " +
                                std::to_string(options.exact_delta_max) + " and no delta_tail was given");
  }
  const auto dist = DistSeq(t_max);
  const auto s = SSeq(t_max);
  const auto f = FSeq(t_max);
  const int exact_max = std::min(t_max, options.exact_delta_max);
  const auto delta = exact_max >= 0 ? DeltaSeq(exact_max, options.convention) : std::vector<BigInt>{};

  std::vector<MetricsRow> rows;
  BigInt d_total = 15;
  bool d_exact = true;
  for (int t = 0; t <= t_max; ++t) {
    MetricsRow r;
    r.t = t;
    r.n = NodeCount(t);
    r.e = EdgeCount(t);
    r.d12 = dist.d12[t];
    r.d13 = dist.d13[t];
    r.s = s[t];
    r.f = f[t];
    r.delta_exact = t <= exact_max;
    r.delta = r.delta_exact ? delta[t] : options.delta_tail(t);
    r.a12 = 2 * (r.n - 1) * r.s;
    // The pairs counted by both non-adjacent sums join a far hub to the N - 1
    // nodes of a branch other than the hub on the far side of that branch,
    // which sits 2 d12 from it.
    r.d1c = 2 * (options.published_hub_term ? r.n : r.n - 1) * r.d12 + r.f;
    r.lambda13 = 2 * (r.n - 1) * r.s + (r.n - 1) * (r.n - 1) * r.d12 - r.delta;
    r.a_cross = 5 * r.a12 + 5 * r.lambda13 - 5 * r.d1c;
    r.d_total = d_total;
    r.d_exact = d_exact;
    r.apl = Rational(2 * r.d_total, r.n * (r.n - 1));
    r.apl.canonicalize();
    d_total = 5 * d_total + r.a_cross;
    d_exact = d_exact && r.delta_exact;
    rows.push_back(std::move(r));
  }
  return rows;
}

void WriteMetricsCsv(std::ostream& out, std::span<const MetricsRow> rows) {
  out << "t,N,E,d12,d13,S,F,delta,a12,d1c,lambda13,a_cross,D,apl_num,apl_den,apl,delta_exact,d_exact\n";
  for (const MetricsRow& r : rows) {
    out << r.t << ',' << r.n << ',' << r.e << ',' << r.d12 << ',' << r.d13 << ',' << r.s << ',' << r.f << ','
        << r.delta << ',' << r.a12 << ',' << r.d1c << ',' << r.lambda13 << ',' << r.a_cross << ',' << r.d_total
        << ',' << r.apl.get_num() << ',' << r.apl.get_den() << ',' << FormatSig(ToDecimal(r.apl), 15) << ','
        << (r.delta_exact ? 1 : 0) << ',' << (r.d_exact ? 1 : 0) << '\n';
  }
}

}  // namespace penta
