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

// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion.
//
//   penta_acceptance                 run all criteria
//   penta_acceptance --criterion N   run criterion N only
//
// Exit status is 0 iff every criterion that ran passed.

#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "penta/bfs_oracle.hpp"
#include "penta/closed_form.hpp"
#include "penta/delta_fit.hpp"
#include "penta/numeric.hpp"
#include "penta/pentagon_graph.hpp"
#include "penta/recurrence.hpp"
#include "penta/scaling.hpp"

namespace {

using namespace penta;

// Pinned tolerances and ranges.
constexpr int kCountMax = 8;
constexpr int kDiameterMax = 5;
constexpr int kTotalMax = 4;
constexpr int kTableExactMax = 8;
constexpr int kTableMax = 11;
constexpr int kCrossMax = 3;
constexpr int kClosedFormMax = 30;
constexpr int kFitEnd = 7;
constexpr const char* kFitBound = "1e-7";
constexpr int kScalingLo = 10;
constexpr int kScalingHi = 20;
constexpr const char* kAplSlopeTolerance = "1e-2";
constexpr const char* kDiameterSlopeTolerance = "1e-3";
constexpr const char* kQuotedExponent = "0.624537";
constexpr int kPropertyMax = 8;
constexpr int kSerializationMax = 6;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void Fail(const std::string& why) {
    if (!passed) detail << "; ";
    else detail.str("");
    passed = false;
    detail << why;
  }
};

template <typename A, typename B>
std::string Diff(const std::string& what, int t, const A& got, const B& want) {
  std::ostringstream os;
  os << what << " t=" << t << " got " << got << " want " << want;
  return os.str();
}

void Counts(Outcome& o) {
  for (int t = 0; t <= kCountMax; ++t) {
    const PentagonGraph g = Build(t);
    const BigInt n = NodeCount(t);
    const BigInt e = Pow(BigInt(5), t + 1);
    if (BigInt(static_cast<unsigned long>(g.node_count())) != n) o.Fail(Diff("N", t, g.node_count(), n));
    if (BigInt(static_cast<unsigned long>(g.edge_count())) != e) o.Fail(Diff("E", t, g.edge_count(), e));
  }
  if (o.passed) o.detail << "N(t) = (3*5^(t+1)+5)/4 and E(t) = 5^(t+1) for t=0.." << kCountMax;
}

void Diameter(Outcome& o) {
  const long want[] = {2, 5, 14, 38, 104, 284};
  const DistanceSequences d = DistSeq(kDiameterMax);
  std::ostringstream values;
  for (int t = 0; t <= kDiameterMax; ++t) {
    const std::uint32_t got = oracle::Diameter(Build(t));
    values << (t ? "," : "") << got;
    if (d.d13[t] != want[t]) o.Fail(Diff("recurrence d13", t, d.d13[t], want[t]));
    if (BigInt(got) != d.d13[t]) o.Fail(Diff("BFS diameter", t, got, d.d13[t]));
  }
  if (o.passed) o.detail << "BFS diameter = d13(t) for t=0.." << kDiameterMax << " (" << values.str() << ")";
}

void TotalDistance(Outcome& o) {
  const std::vector<MetricsRow> rows = Assemble(kTotalMax);
  std::vector<BigInt> bfs;
  for (int t = 0; t <= kTotalMax; ++t) {
    bfs.push_back(oracle::TotalDistance(Build(t)));
    if (bfs[t] != rows[t].d_total) o.Fail(Diff("BFS vs recurrence D", t, bfs[t], rows[t].d_total));
  }
  const std::string agreement = o.passed ? "BFS D_t = recurrence D_t for t=0.." + std::to_string(kTotalMax) : "";
  if (o.passed) o.detail << agreement;
  if (rows[0].d_total != 15) o.Fail(Diff("D", 0, rows[0].d_total, 15));
  if (rows[1].d_total != 545) {
    o.Fail(Diff("D", 1, rows[1].d_total, 545) + " (BFS gives " + bfs[1].get_str() + ")");
    if (!agreement.empty()) o.detail << "; " << agreement;
  }
}

void DeltaTable(Outcome& o) {
  const std::vector<BigInt> delta = DeltaSeq(kTableMax);
  for (const PublishedDelta& row : PublishedDeltaTable()) {
    const bool exact_row = row.t <= kTableExactMax;
    const bool ok = exact_row ? delta[row.t] == BigInt(row.printed) : MatchesPublished(delta[row.t], row);
    if (!ok) o.Fail(Diff("delta", row.t, delta[row.t], row.printed));
  }
  if (o.passed) o.detail << "delta chain reproduces the table for t=0.." << kTableMax;
}

void CrossSums(Outcome& o) {
  const std::vector<MetricsRow> rows = Assemble(kCrossMax);
  for (int t = 0; t <= kCrossMax; ++t) {
    const PentagonGraph g = Build(t + 1);
    const BranchDecomposition parts = Decompose(g);
    for (int i = 0; i < 5; ++i) {
      const BigInt got = oracle::BranchCrossSum(g, parts, i, (i + 2) % 5);
      if (got != rows[t].lambda13) {
        o.Fail(Diff("non-adjacent cross sum (branch " + std::to_string(i) + ")", t, got, rows[t].lambda13));
      }
    }
  }
  if (o.passed) o.detail << "2(N-1)S + (N-1)^2 d12 - delta = BFS cross sum, all 5 non-adjacent pairs, t=0.." << kCrossMax;
}

void ClosedForms(Outcome& o) {
  const DistanceSequences d = DistSeq(kClosedFormMax);
  const std::vector<BigInt> s = SSeq(kClosedFormMax);
  const std::vector<BigInt> f = FSeq(kClosedFormMax);
  const std::vector<std::pair<const ClosedForm*, const std::vector<BigInt>*>> checks = {
      {&D12Form(), &d.d12}, {&D13Form(), &d.d13}, {&D13ShiftedForm(), &d.d13}, {&SForm(), &s}, {&FForm(), &f}};
  for (int t = 0; t <= kClosedFormMax; ++t) {
    for (const auto& [form, seq] : checks) {
      const Rad3 v = form->Evaluate(t);
      if (v.radical_part() != 0) o.Fail(Diff(form->name + " sqrt3 part", t, v.radical_part(), 0));
      else if (!v.is_integer() || v.to_integer() != (*seq)[t]) o.Fail(Diff(form->name, t, v, (*seq)[t]));
    }
  }
  if (o.passed) o.detail << "d12, d13 (both forms), S, F exact in Q(sqrt3) for t=0.." << kClosedFormMax;
}

void FitReproduction(Outcome& o) {
  const std::vector<BigInt> delta = DeltaSeq(kTableMax);
  const std::vector<FitPoint> table = ToFitPoints(delta, 0, kTableMax);
  const FitResult fit = Fit(ToFitPoints(delta, 0, kFitEnd), FitBasis::Standard(false));
  const ValidationReport v = Validate(fit, table);
  const std::vector<Decimal> published = PublishedCoefficients();
  std::ostringstream coeffs;
  for (std::size_t k = 0; k < published.size(); ++k) {
    coeffs << (k ? ", " : "") << fit.basis.terms[k].label << "=" << FormatSig(fit.coefficients[k], 15) << " (published "
           << FormatSig(published[k], 15) << ")";
  }
  const std::string summary = "max relative error " + FormatSci(v.max_relative_error, 3) + " at t=" +
                              std::to_string(v.worst_t) + ", bound " + kFitBound + "; " + coeffs.str();
  if (v.max_relative_error < Decimal(kFitBound)) o.detail << summary;
  else o.Fail(summary);
}

void Scaling(Outcome& o) {
  const std::vector<MetricsRow> rows = AssembleExtended(kScalingHi);
  const ScalingSlopes s = FitScaling(ScalingSeries(rows), kScalingLo, kScalingHi);
  const Decimal exponent = Exponent();
  const Decimal apl_gap = abs(s.apl.slope - exponent);
  const Decimal diam_gap = abs(s.diameter.slope - exponent);
  std::ostringstream os;
  os << "t=" << kScalingLo << ".." << kScalingHi << " APL slope " << FormatSig(s.apl.slope, 10) << ", diameter slope "
     << FormatSig(s.diameter.slope, 10) << ", ln(1+sqrt3)/ln5 = " << FormatSig(exponent, 10) << " (quoted "
     << kQuotedExponent << ", APL slope off it by " << FormatSci(abs(s.apl.slope - Decimal(kQuotedExponent)), 2) << ")";
  if (apl_gap >= Decimal(kAplSlopeTolerance)) o.Fail("APL slope off by " + FormatSci(apl_gap, 3) + "; " + os.str());
  if (diam_gap >= Decimal(kDiameterSlopeTolerance)) o.Fail("diameter slope off by " + FormatSci(diam_gap, 3));
  if (o.passed) o.detail << os.str();
}

void Properties(Outcome& o) {
  const std::vector<CornerProfileMultiset> chain = OmegaChain(kPropertyMax);
  const DistanceSequences d = DistSeq(kPropertyMax);
  for (int t = 0; t <= kPropertyMax; ++t) {
    const OmegaMultiset omega = chain[t].Omega();
    if (BigInt(static_cast<unsigned long>(omega.cardinality())) != NodeCount(t)) {
      o.Fail(Diff("omega cardinality", t, omega.cardinality(), NodeCount(t)));
    }
    const auto a = omega.a_marginal();
    const long d12 = d.d12[t].get_si();
    const long d13 = d.d13[t].get_si();
    for (const auto& [x, m] : a) {
      const auto it = a.find(-x);
      if (it == a.end() || it->second != m) o.Fail(Diff("a-marginal symmetry at a=" + std::to_string(x), t, "", ""));
      if (std::abs(x) > d12) o.Fail(Diff("a range", t, x, d12));
    }
    for (const auto& [y, m] : omega.b_marginal()) {
      if (std::abs(y) > d13) o.Fail(Diff("b range", t, y, d13));
    }

    const PentagonGraph g = Build(t);
    std::map<std::size_t, std::uint64_t> hist;
    for (NodeId v = 0; v < g.node_count(); ++v) ++hist[g.degree(v)];
    const std::uint64_t deg4 = (ExpectedEdgeCount(t) - 5) / 4;
    const bool degrees_ok = hist.size() <= 2 && hist.count(4) == (t > 0 ? 1u : 0u) &&
                            (t == 0 || hist.at(4) == deg4) && hist.at(2) == g.node_count() - deg4;
    if (!degrees_ok) o.Fail(Diff("degree histogram", t, "", ""));
    if (t <= kSerializationMax && !(Deserialize(Serialize(g)) == g)) o.Fail(Diff("serialization round trip", t, "", ""));
  }
  if (o.passed) {
    o.detail << "omega cardinality/symmetry/ranges and degree histogram for t=0.." << kPropertyMax
             << ", serialization round trip for t=0.." << kSerializationMax;
  }
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> all = {
      {1, "counts", Counts},           {2, "diameter", Diameter},       {3, "total distance", TotalDistance},
      {4, "delta table", DeltaTable},  {5, "cross sums", CrossSums},    {6, "closed forms", ClosedForms},
      {7, "fit reproduction", FitReproduction}, {8, "scaling law", Scaling}, {9, "property suite", Properties}};
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  InitPrecisionFromEnv();
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    only = std::atoi(argv[2]);
  } else if (argc != 1) {
    std::cerr << "usage: penta_acceptance [--criterion N]\n";
    return 2;
  }
  bool all_passed = true;
  bool ran = false;
  for (const Criterion& c : Criteria()) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    all_passed = all_passed && o.passed;
    std::cout << "criterion " << c.id << " (" << c.name << "): " << (o.passed ? "PASS" : "FAIL") << ": "
              << o.detail.str() << std::endl;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all_passed ? 0 : 1;
}
