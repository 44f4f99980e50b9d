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

#ifndef PENTA_VERIFY_HPP_
#define PENTA_VERIFY_HPP_

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "penta/omega.hpp"
#include "penta/pentagon_graph.hpp"

namespace penta {

// "auto" resolves to inclusive: the junction entries the exclusive variant
// drops all contribute zero overcount.
DeltaConvention ParseDeltaConvention(std::string_view name);
std::string_view ToString(DeltaConvention convention);

// Relative error bound for the 8-term fit over the published table.
inline constexpr double kFitRelativeErrorBound = 1e-7;

struct VerifyOptions {
  int oracle_max = 4;      // BFS gates run on G(0)..G(oracle_max)
  int count_max = 8;       // node/edge count gate
  int closed_form_max = 30;
  int fit_end = 7;         // 8-term fit on t = 0..fit_end, checked on 0..11
  DeltaConvention convention = DeltaConvention::kInclusive;
  Gluing gluing = Gluing::kStandard;  // construction used for the explicit graphs
};

struct GateResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<GateResult> gates;
  bool all_passed() const;
};

// Rebuilds everything from t = 0. `progress` (optional) receives each gate as
// it finishes.
VerifyReport RunVerify(const VerifyOptions& options,
                       const std::function<void(const GateResult&)>& progress = {});

void PrintReport(std::ostream& out, const VerifyReport& report);

}  // namespace penta

#endif  // PENTA_VERIFY_HPP_
