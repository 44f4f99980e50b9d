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

#ifndef PENTA_SCALING_HPP_
#define PENTA_SCALING_HPP_

#include <span>
#include <vector>

#include "penta/numeric.hpp"
#include "penta/recurrence.hpp"

namespace penta {

struct ScalingPoint {
  int t = 0;
  Decimal n;
  Decimal apl;
  Decimal diameter;
};

std::vector<ScalingPoint> ScalingSeries(std::span<const MetricsRow> rows);

struct LineFit {
  Decimal slope;
  Decimal intercept;
  std::size_t points = 0;
};

// Ordinary least squares of log y on log x. Throws std::invalid_argument for
// fewer than two points, non-positive values or a constant x.
LineFit LogLogFit(std::span<const Decimal> x, std::span<const Decimal> y);

struct ScalingSlopes {
  LineFit apl;
  LineFit diameter;
};

// Fits both series over rows with t_lo <= t <= t_hi.
ScalingSlopes FitScaling(std::span<const ScalingPoint> series, int t_lo, int t_hi);

// Rows 0..t_max. Δ is exact up to min(t_max, exact_max); later rows use the
// relative-weighted 8-term fit over t = 0..exact_max, rounded to an integer.
std::vector<MetricsRow> AssembleExtended(int t_max, int exact_max = 14);

}  // namespace penta

#endif  // PENTA_SCALING_HPP_
