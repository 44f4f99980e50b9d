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

#ifndef PENTA_DELTA_FIT_HPP_
#define PENTA_DELTA_FIT_HPP_

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "penta/closed_form.hpp"
#include "penta/numeric.hpp"

namespace penta {

struct BasisFunction {
  std::string label;  // a1 .. a9
  int five_power = 0;
  RadicalBase base = RadicalBase::kOne;

  Decimal operator()(int t) const { return BasisValue(five_power, base, false, t); }
};

// Φ(t) = a1 5^{2t}(1+√3)^t + a2 5^{2t}(1-√3)^t + a3 5^t(1+√3)^t
//      + a4 5^t(1-√3)^t + a5 (1+√3)^t + a6 (1-√3)^t + a7 5^{2t} + a8 5^t + a9
struct FitBasis {
  std::vector<BasisFunction> terms;
  bool include_a7 = false;

  static FitBasis Standard(bool include_a7);
  std::size_t size() const { return terms.size(); }
  std::string name() const;
};

enum class Weighting {
  kRelative,    // minimise Σ (Φ(t)/Δ_t - 1)^2
  kUnweighted,  // minimise Σ (Φ(t) - Δ_t)^2
};

struct FitPoint {
  int t = 0;
  Decimal value;
};

struct FitResult {
  FitBasis basis;
  Weighting weighting = Weighting::kRelative;
  std::vector<int> window;
  std::vector<Decimal> coefficients;
  Decimal residual;                     // squared 2-norm of the solved system's residual
  std::vector<Decimal> relative_errors;  // on the training points, in window order
  Decimal max_relative_error;
};

// Throws std::invalid_argument when there are fewer points than terms (or a
// zero value under relative weighting) and SingularityError when two columns
// are numerically dependent.
FitResult Fit(std::span<const FitPoint> data, const FitBasis& basis,
              Weighting weighting = Weighting::kRelative);

Decimal Predict(const FitResult& result, int t);
Decimal Predict(const FitBasis& basis, std::span<const Decimal> coefficients, int t);

struct ValidationReport {
  std::vector<int> t;
  std::vector<Decimal> relative_errors;
  Decimal max_relative_error;
  int worst_t = -1;
};

ValidationReport Validate(const FitResult& result, std::span<const FitPoint> table);
ValidationReport Validate(const FitBasis& basis, std::span<const Decimal> coefficients,
                          std::span<const FitPoint> table);

// {basis, window, coefficients[], residual, relative_errors[], max_relative_error}
nlohmann::ordered_json ToJson(const FitResult& result);

std::vector<FitPoint> ToFitPoints(std::span<const BigInt> delta, int t_first, int t_last);

// Values as printed in the published Δ_t table, t = 0..11. Rows with
// significant_digits == 0 are printed exactly; the rest are rounded.
struct PublishedDelta {
  int t;
  const char* printed;
  int significant_digits;
};
std::span<const PublishedDelta> PublishedDeltaTable();

// True when `value` equals an exact row, or rounds to a rounded row's printed
// significant digits.
bool MatchesPublished(const BigInt& value, const PublishedDelta& row);

// The published 8-term coefficients a1..a6, a8, a9.
std::vector<Decimal> PublishedCoefficients();

// Fits the 8-term basis on t = 0..k for each k in [first_end, last_end] and
// validates every fit against all of `table`.
struct WindowRun {
  FitResult fit;
  ValidationReport validation;
};
std::vector<WindowRun> WindowExperiment(std::span<const FitPoint> table, int first_end, int last_end,
                                        bool include_a7 = false);

// Scales Δ_{target_t} by (1 + factor) before fitting the 8-term basis on
// t = 0..fit_end, then validates against the unperturbed table.
ValidationReport SensitivityRun(std::span<const FitPoint> table, int fit_end, int target_t,
                                const Decimal& factor);

}  // namespace penta

#endif  // PENTA_DELTA_FIT_HPP_
