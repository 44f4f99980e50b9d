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

#include "penta/scaling.hpp"

#include <stdexcept>

#include "penta/delta_fit.hpp"

namespace penta {

std::vector<ScalingPoint> ScalingSeries(std::span<const MetricsRow> rows) {
  std::vector<ScalingPoint> out;
  out.reserve(rows.size());
  for (const MetricsRow& r : rows) {
    out.push_back({r.t, ToDecimal(r.n), ToDecimal(r.apl), ToDecimal(r.d13)});
  }
  return out;
}

LineFit LogLogFit(std::span<const Decimal> x, std::span<const Decimal> y) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in length");
  if (x.size() < 2) throw std::invalid_argument("slope needs at least two points");
  const std::size_t m = x.size();
  std::vector<Decimal> lx(m), ly(m);
  Decimal mx = 0, my = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw std::invalid_argument("log-log fit needs positive values");
    lx[i] = log(x[i]);
    ly[i] = log(y[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= m;
  my /= m;
  Decimal sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("x values are all equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = m;
  return fit;
}

ScalingSlopes FitScaling(std::span<const ScalingPoint> series, int t_lo, int t_hi) {
  std::vector<Decimal> n, apl, diam;
  for (const ScalingPoint& p : series) {
    if (p.t < t_lo || p.t > t_hi) continue;
    n.push_back(p.n);
    apl.push_back(p.apl);
    diam.push_back(p.diameter);
  }
  return {LogLogFit(n, apl), LogLogFit(n, diam)};
}

std::vector<MetricsRow> AssembleExtended(int t_max, int exact_max) {
  AssembleOptions options;
  options.exact_delta_max = exact_max;
  if (t_max > exact_max) {
    const std::vector<BigInt> exact = DeltaSeq(exact_max);
    const std::vector<FitPoint> points = ToFitPoints(exact, 0, exact_max);
    const FitResult fit = Fit(points, FitBasis::Standard(false));
    options.delta_tail = [fit](int t) {
      return RoundToBigInt(Predict(fit, t));
    };
  }
  return Assemble(t_max, options);
}

}  // namespace penta
