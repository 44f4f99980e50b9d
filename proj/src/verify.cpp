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

#include "penta/verify.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "penta/bfs_oracle.hpp"
#include "penta/closed_form.hpp"
#include "penta/delta_fit.hpp"
#include "penta/recurrence.hpp"

namespace penta {
namespace {

using Check = std::function<std::string()>;  // returns "" on success, else a reason

std::string Mismatch(const std::string& what, int t, const auto& got, const auto& want) {
  std::ostringstream os;
  os << what << " at t=" << t << ": got " << got << ", expected " << want;
  return os.str();
}

GateResult Run(const std::string& name, const std::string& scope, const Check& check) {
  GateResult r{name, false, {}};
  try {
    const std::string failure = check();
    r.passed = failure.empty();
    r.detail = r.passed ? scope : failure;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::string Range(int lo, int hi) { return "t=" + std::to_string(lo) + ".." + std::to_string(hi); }

}  // namespace

DeltaConvention ParseDeltaConvention(std::string_view name) {
  if (name == "auto" || name == "inclusive") return DeltaConvention::kInclusive;
  if (name == "exclusive") return DeltaConvention::kExclusive;
  throw std::invalid_argument("unknown delta convention '" + std::string(name) + "'");
}

std::string_view ToString(DeltaConvention convention) {
  return convention == DeltaConvention::kInclusive ? "inclusive" : "exclusive";
}

bool VerifyReport::all_passed() const {
  return std::all_of(gates.begin(), gates.end(), [](const GateResult& g) { return g.passed; });
}

VerifyReport RunVerify(const VerifyOptions& o, const std::function<void(const GateResult&)>& progress) {
  if (o.oracle_max < 1) throw std::invalid_argument("oracle ceiling must be at least 1");
  const BuildOptions build{std::max(o.count_max, o.oracle_max), o.gluing};
  VerifyReport report;
  const auto add = [&](GateResult g) {
    if (progress) progress(g);
    report.gates.push_back(std::move(g));
  };

  const int table_max = 11;
  const int rows_max = std::max(o.oracle_max, table_max);
  AssembleOptions assemble;
  assemble.convention = o.convention;
  const std::vector<MetricsRow> rows = Assemble(rows_max, assemble);
  const DistanceSequences dist = DistSeq(std::max(o.closed_form_max, rows_max));
  std::vector<PentagonGraph> graphs;
  for (int t = 0; t <= o.oracle_max; ++t) graphs.push_back(Build(t, build));

  add(Run("counts", Range(0, o.count_max), [&]() -> std::string {
    for (int t = 0; t <= o.count_max; ++t) {
      const PentagonGraph g = t <= o.oracle_max ? graphs[t] : Build(t, build);
      if (g.node_count() != ExpectedNodeCount(t)) return Mismatch("N", t, g.node_count(), ExpectedNodeCount(t));
      if (g.edge_count() != ExpectedEdgeCount(t)) return Mismatch("E", t, g.edge_count(), ExpectedEdgeCount(t));
    }
    return "";
  }));

  add(Run("orientation", "G(1) corner distances", [&]() -> std::string {
    const PentagonGraph& g = graphs[1];
    for (int a = 1; a <= kCornerCount; ++a) {
      const auto d = oracle::Sssp(g, g.corner(a)).dist;
      for (int b = a + 1; b <= kCornerCount; ++b) {
        const bool adjacent = (b - a) == 1 || (b - a) == kCornerCount - 1;
        const std::uint32_t want = adjacent ? 4 : 5;
        const std::uint32_t got = d[g.corner(b)];
        if (got != want) {
          return "corners " + std::to_string(a) + "," + std::to_string(b) + ": distance " +
                 std::to_string(got) + ", expected " + std::to_string(want);
        }
      }
    }
    return "";
  }));

  add(Run("decompose", Range(1, o.oracle_max), [&]() -> std::string {
    for (int t = 1; t <= o.oracle_max; ++t) {
      const BranchDecomposition parts = Decompose(graphs[t], Gluing::kStandard);
      for (int k = 0; k < kCornerCount; ++k) {
        if (parts.local_corner_map[k][0] != graphs[t].corner(k + 1)) return Mismatch("outer corner of branch", t, k, "global corner");
        const NodeId j3 = parts.local_corner_map[k][2];
        const NodeId j4 = parts.local_corner_map[k][3];
        const NodeId left = parts.junctions[(k + kCornerCount - 1) % kCornerCount];
        const NodeId right = parts.junctions[k];
        if (!((j3 == right && j4 == left) || (j3 == left && j4 == right))) {
          return "t=" + std::to_string(t) + ": local corners 3,4 of branch " + std::to_string(k + 1) +
                 " are not its junctions";
        }
      }
    }
    return "";
  }));

  add(Run("diameter", Range(0, o.oracle_max), [&]() -> std::string {
    for (int t = 0; t <= o.oracle_max; ++t) {
      const BigInt got = oracle::Diameter(graphs[t]);
      if (got != dist.d13[t]) return Mismatch("diameter", t, got, dist.d13[t]);
    }
    return "";
  }));

  add(Run("total_distance", Range(0, o.oracle_max), [&]() -> std::string {
    for (int t = 0; t <= o.oracle_max; ++t) {
      const BigInt got = oracle::TotalDistance(graphs[t]);
      if (got != rows[t].d_total) return Mismatch("D", t, got, rows[t].d_total);
    }
    return "";
  }));

  add(Run("corner_sums", Range(0, o.oracle_max), [&]() -> std::string {
    for (int t = 0; t <= o.oracle_max; ++t) {
      for (int c = 1; c <= kCornerCount; ++c) {
        const BigInt got = oracle::CornerSum(graphs[t], c);
        if (got != rows[t].s) return Mismatch("S (corner " + std::to_string(c) + ")", t, got, rows[t].s);
      }
      const BigInt f = oracle::MinCornerSum(graphs[t]);
      if (f != rows[t].f) return Mismatch("F", t, f, rows[t].f);
    }
    return "";
  }));

  add(Run("cross_sums", Range(0, o.oracle_max - 1), [&]() -> std::string {
    for (int t = 0; t + 1 <= o.oracle_max; ++t) {
      const BranchDecomposition parts = Decompose(graphs[t + 1], Gluing::kStandard);
      const BigInt adj = oracle::BranchCrossSum(graphs[t + 1], parts, 0, 1);
      if (adj != rows[t].a12) return Mismatch("adjacent cross sum", t, adj, rows[t].a12);
      const BigInt far = oracle::BranchCrossSum(graphs[t + 1], parts, 0, 2);
      if (far != rows[t].lambda13) return Mismatch("non-adjacent cross sum", t, far, rows[t].lambda13);
      const BigInt crossing = oracle::CrossingDistance(graphs[t + 1], parts);
      if (crossing != rows[t].a_cross) return Mismatch("crossing distance", t, crossing, rows[t].a_cross);
    }
    return "";
  }));

  add(Run("omega", Range(0, o.oracle_max), [&]() -> std::string {
    const std::vector<CornerProfileMultiset> chain = OmegaChain(o.oracle_max);
    for (int t = 0; t <= o.oracle_max; ++t) {
      if (!(oracle::ProfilesDirect(graphs[t]) == chain[t])) {
        return "t=" + std::to_string(t) + ": profile chain differs from BFS profiles";
      }
      if (!(oracle::OmegaDirect(graphs[t]) == chain[t].Omega())) {
        return "t=" + std::to_string(t) + ": omega pairs differ from BFS";
      }
    }
    return "";
  }));

  add(Run("delta_table", Range(0, table_max), [&]() -> std::string {
    std::string failures;
    for (const PublishedDelta& row : PublishedDeltaTable()) {
      if (!MatchesPublished(rows[row.t].delta, row)) {
        if (!failures.empty()) failures += "; ";
        failures += Mismatch("delta", row.t, rows[row.t].delta, row.printed);
      }
    }
    return failures;
  }));

  add(Run("closed_forms", Range(0, o.closed_form_max), [&]() -> std::string {
    const std::vector<BigInt> s = SSeq(o.closed_form_max);
    const std::vector<BigInt> f = FSeq(o.closed_form_max);
    for (int t = 0; t <= o.closed_form_max; ++t) {
      if (D12Closed(t) != dist.d12[t]) return Mismatch("d12 closed", t, D12Closed(t), dist.d12[t]);
      if (D13Closed(t) != dist.d13[t]) return Mismatch("d13 closed", t, D13Closed(t), dist.d13[t]);
      const BigInt d13b = D13ShiftedForm().EvaluateInteger(t);
      if (d13b != dist.d13[t]) return Mismatch("d13 shifted closed", t, d13b, dist.d13[t]);
      if (SClosed(t) != s[t]) return Mismatch("S closed", t, SClosed(t), s[t]);
      if (FClosed(t) != f[t]) return Mismatch("F closed", t, FClosed(t), f[t]);
    }
    return "";
  }));

  add(Run("fit", "8-term fit on t=0.." + std::to_string(o.fit_end) + ", checked on t=0..11",
          [&]() -> std::string {
            std::vector<BigInt> delta;
            for (const MetricsRow& r : rows) delta.push_back(r.delta);
            const std::vector<FitPoint> table = ToFitPoints(delta, 0, table_max);
            const std::vector<FitPoint> train(table.begin(), table.begin() + o.fit_end + 1);
            const FitResult fit = Fit(train, FitBasis::Standard(false));
            const ValidationReport v = Validate(fit, table);
            if (v.max_relative_error < kFitRelativeErrorBound) return "";
            return "max relative error " + FormatSci(v.max_relative_error, 3) + " at t=" +
                   std::to_string(v.worst_t) + " (bound 1e-07)";
          }));

  return report;
}

void PrintReport(std::ostream& out, const VerifyReport& report) {
  for (const GateResult& g : report.gates) {
    out << (g.passed ? "PASS " : "FAIL ") << g.name << ": " << g.detail << "\n";
  }
  const auto failed = std::count_if(report.gates.begin(), report.gates.end(),
                                    [](const GateResult& g) { return !g.passed; });
  out << (failed == 0 ? "all gates passed" : std::to_string(failed) + " gate(s) failed") << "\n";
}

}  // namespace penta
