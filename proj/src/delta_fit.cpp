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

#include "penta/delta_fit.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <boost/multiprecision/mpfr.hpp>

#include "penta/errors.hpp"

namespace penta {
namespace {

using Matrix = std::vector<std::vector<Decimal>>;  // column-major: m[col][row]

Decimal Norm(const std::vector<Decimal>& v) {
  Decimal s = 0;
  for (const Decimal& x : v) s += x * x;
  return boost::multiprecision::sqrt(s);
}

Decimal Dot(const std::vector<Decimal>& a, const std::vector<Decimal>& b) {
  Decimal s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// The pair of columns with the largest |cos| between them, preferring pairs
// that involve `suspect`.
std::pair<std::size_t, std::size_t> MostCollinear(const Matrix& cols, std::size_t suspect) {
  std::pair<std::size_t, std::size_t> best{0, 1};
  Decimal best_cos = -1;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i == suspect) continue;
    const Decimal c = abs(Dot(cols[i], cols[suspect]));
    if (c > best_cos) {
      best_cos = c;
      best = {std::min(i, suspect), std::max(i, suspect)};
    }
  }
  return best;
}

Decimal Tolerance() {
  const unsigned digits = WorkingPrecision();
  return boost::multiprecision::pow(Decimal(10), -static_cast<int>(digits * 3 / 4));
}

// Solves min ||A x - b|| by Householder QR; columns of A must have unit norm.
std::vector<Decimal> SolveLeastSquares(Matrix a, std::vector<Decimal> b, const Matrix& original,
                                       const FitBasis& basis) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const Decimal tol = Tolerance();
  for (std::size_t k = 0; k < n; ++k) {
    Decimal alpha = 0;
    for (std::size_t i = k; i < m; ++i) alpha += a[k][i] * a[k][i];
    alpha = boost::multiprecision::sqrt(alpha);
    if (alpha <= tol) {
      const auto [ca, cb] = MostCollinear(original, k);
      throw SingularityError("design matrix is rank deficient: columns " + basis.terms[ca].label +
                                 " and " + basis.terms[cb].label + " are numerically dependent",
                             ca, cb);
    }
    if (a[k][k] > 0) alpha = -alpha;
    std::vector<Decimal> v(m, Decimal(0));
    for (std::size_t i = k; i < m; ++i) v[i] = a[k][i];
    v[k] -= alpha;
    const Decimal vv = Dot(v, v);
    if (vv == 0) continue;
    for (std::size_t j = k; j < n; ++j) {
      const Decimal f = 2 * Dot(v, a[j]) / vv;
      for (std::size_t i = k; i < m; ++i) a[j][i] -= f * v[i];
    }
    const Decimal f = 2 * Dot(v, b) / vv;
    for (std::size_t i = k; i < m; ++i) b[i] -= f * v[i];
  }
  std::vector<Decimal> x(n, Decimal(0));
  for (std::size_t k = n; k-- > 0;) {
    Decimal s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[j][k] * x[j];
    x[k] = s / a[k][k];
  }
  return x;
}

}  // namespace

FitBasis FitBasis::Standard(bool include_a7) {
  using RB = RadicalBase;
  FitBasis basis;
  basis.include_a7 = include_a7;
  basis.terms = {{"a1", 2, RB::kPlus}, {"a2", 2, RB::kMinus}, {"a3", 1, RB::kPlus},
                 {"a4", 1, RB::kMinus}, {"a5", 0, RB::kPlus}, {"a6", 0, RB::kMinus}};
  if (include_a7) basis.terms.push_back({"a7", 2, RB::kOne});
  basis.terms.push_back({"a8", 1, RB::kOne});
  basis.terms.push_back({"a9", 0, RB::kOne});
  return basis;
}

std::string FitBasis::name() const {
  return std::to_string(size()) + "-term" + (include_a7 ? " (with a7)" : " (without a7)");
}

FitResult Fit(std::span<const FitPoint> data, const FitBasis& basis, Weighting weighting) {
  const std::size_t m = data.size();
  const std::size_t n = basis.size();
  if (n == 0) throw std::invalid_argument("empty basis");
  if (m < n) {
    throw std::invalid_argument("fit needs at least " + std::to_string(n) + " points, got " +
                                std::to_string(m));
  }
  std::vector<Decimal> weight(m, Decimal(1));
  if (weighting == Weighting::kRelative) {
    for (std::size_t i = 0; i < m; ++i) {
      if (data[i].value == 0) throw std::invalid_argument("relative weighting needs non-zero data");
      weight[i] = abs(data[i].value);
    }
  }

  Matrix cols(n, std::vector<Decimal>(m));
  std::vector<Decimal> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = basis.terms[j](data[i].t) / weight[i];
    rhs[i] = data[i].value / weight[i];
  }
  std::vector<Decimal> scale(n);
  for (std::size_t j = 0; j < n; ++j) {
    scale[j] = Norm(cols[j]);
    if (scale[j] == 0) throw SingularityError("column " + basis.terms[j].label + " is zero", j, j);
    for (Decimal& x : cols[j]) x /= scale[j];
  }

  std::vector<Decimal> y = SolveLeastSquares(cols, rhs, cols, basis);

  FitResult result;
  result.basis = basis;
  result.weighting = weighting;
  result.coefficients.resize(n);
  for (std::size_t j = 0; j < n; ++j) result.coefficients[j] = y[j] / scale[j];

  result.residual = 0;
  result.max_relative_error = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Decimal fitted = 0;
    for (std::size_t j = 0; j < n; ++j) fitted += cols[j][i] * y[j];
    const Decimal r = fitted - rhs[i];
    result.residual += r * r;
    result.window.push_back(data[i].t);
    const Decimal rel = abs(Predict(result, data[i].t) / data[i].value - 1);
    result.relative_errors.push_back(rel);
    result.max_relative_error = std::max(result.max_relative_error, rel);
  }
  return result;
}

Decimal Predict(const FitBasis& basis, std::span<const Decimal> coefficients, int t) {
  if (coefficients.size() != basis.size()) throw std::invalid_argument("coefficient count mismatch");
  Decimal sum = 0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coefficients[j] != 0) sum += coefficients[j] * basis.terms[j](t);
  }
  return sum;
}

Decimal Predict(const FitResult& result, int t) { return Predict(result.basis, result.coefficients, t); }

ValidationReport Validate(const FitBasis& basis, std::span<const Decimal> coefficients,
                          std::span<const FitPoint> table) {
  ValidationReport report;
  report.max_relative_error = 0;
  for (const FitPoint& p : table) {
    const Decimal rel = abs(Predict(basis, coefficients, p.t) / p.value - 1);
    report.t.push_back(p.t);
    report.relative_errors.push_back(rel);
    if (report.worst_t < 0 || rel > report.max_relative_error) {
      report.max_relative_error = rel;
      report.worst_t = p.t;
    }
  }
  return report;
}

ValidationReport Validate(const FitResult& result, std::span<const FitPoint> table) {
  return Validate(result.basis, result.coefficients, table);
}

nlohmann::ordered_json ToJson(const FitResult& result) {
  const int digits = static_cast<int>(WorkingPrecision());
  nlohmann::ordered_json j;
  j["basis"] = result.basis.name();
  j["weighting"] = result.weighting == Weighting::kRelative ? "relative" : "unweighted";
  j["window"] = result.window;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < result.coefficients.size(); ++k) {
    coeffs.push_back({{"term", result.basis.terms[k].label},
                      {"value", FormatSci(result.coefficients[k], digits)}});
  }
  j["coefficients"] = coeffs;
  j["residual"] = FormatSci(result.residual, 6);
  nlohmann::ordered_json rel = nlohmann::ordered_json::array();
  for (const Decimal& e : result.relative_errors) rel.push_back(FormatSci(e, 6));
  j["relative_errors"] = rel;
  j["max_relative_error"] = FormatSci(result.max_relative_error, 6);
  return j;
}

std::vector<FitPoint> ToFitPoints(std::span<const BigInt> delta, int t_first, int t_last) {
  if (t_first < 0 || t_last >= static_cast<int>(delta.size()) || t_first > t_last) {
    throw std::out_of_range("fit window outside available data");
  }
  std::vector<FitPoint> out;
  for (int t = t_first; t <= t_last; ++t) out.push_back({t, ToDecimal(delta[t])});
  return out;
}

std::span<const PublishedDelta> PublishedDeltaTable() {
  static constexpr std::array<PublishedDelta, 12> kTable{{
      {0, "4", 0},
      {1, "30", 0},
      {2, "1002", 0},
      {3, "56540", 0},
      {4, "3697330", 0},
      {5, "251032868", 0},
      {6, "171140501308", 0},
      {7, "1168705606692", 0},
      {8, "79817184975658", 0},
      {9, "5.45159641e15", 9},
      {10, "3.72349326e17", 9},
      {11, "2.54319349e19", 9},
  }};
  return kTable;
}

bool MatchesPublished(const BigInt& value, const PublishedDelta& row) {
  if (row.significant_digits == 0) return value == BigInt(row.printed);
  const Decimal printed(row.printed);
  const Decimal exponent = floor(log10(abs(printed)));
  const Decimal half_ulp = boost::multiprecision::pow(Decimal(10), exponent - (row.significant_digits - 1)) / 2;
  return abs(ToDecimal(value) - printed) <= half_ulp;
}

std::vector<Decimal> PublishedCoefficients() {
  return {Decimal("0.168524328052979"), Decimal("-0.0396624946437528"),
          Decimal("0.935344610079585"), Decimal("0.951717329999713"),
          Decimal("-4.00947432595951"), Decimal("-1.49385494978489"),
          Decimal("2.71082171547275"),  Decimal("4.7765837996533")};
}

std::vector<WindowRun> WindowExperiment(std::span<const FitPoint> table, int first_end, int last_end,
                                        bool include_a7) {
  const FitBasis basis = FitBasis::Standard(include_a7);
  std::vector<WindowRun> runs;
  for (int end = first_end; end <= last_end; ++end) {
    std::vector<FitPoint> window;
    for (const FitPoint& p : table) {
      if (p.t <= end) window.push_back(p);
    }
    WindowRun run{Fit(window, basis), {}};
    run.validation = Validate(run.fit, table);
    runs.push_back(std::move(run));
  }
  return runs;
}

ValidationReport SensitivityRun(std::span<const FitPoint> table, int fit_end, int target_t,
                                const Decimal& factor) {
  std::vector<FitPoint> window;
  for (const FitPoint& p : table) {
    if (p.t > fit_end) continue;
    window.push_back(p);
    if (p.t == target_t) window.back().value *= 1 + factor;
  }
  return Validate(Fit(window, FitBasis::Standard(false)), table);
}

}  // namespace penta
