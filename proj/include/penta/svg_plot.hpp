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

#ifndef PENTA_SVG_PLOT_HPP_
#define PENTA_SVG_PLOT_HPP_

#include <iosfwd>
#include <span>
#include <string>

#include "penta/scaling.hpp"

namespace penta {

struct PlotOptions {
  int width = 720;
  int height = 480;
  std::string title = "Sierpinski pentagon: APL and diameter vs order";
  // Slopes are fitted over t >= fit_from; a negative value means half the
  // largest plotted t.
  int fit_from = -1;
};

// Log-log scatter of APL and diameter against N with the reference slope
// ln(1+√3)/ln 5 and the fitted slopes annotated. Fewer than three points
// produce a plot carrying a warning annotation.
void WriteScalingSvg(std::ostream& out, std::span<const ScalingPoint> series,
                     const PlotOptions& options = {});

}  // namespace penta

#endif  // PENTA_SVG_PLOT_HPP_
