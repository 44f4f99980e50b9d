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

// penta: command-line front end for the Sierpinski pentagon library.
//
// Exit codes: 0 success, 1 gate failure or runtime error, 2 usage error,
// 3 resource limit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "penta/delta_fit.hpp"
#include "penta/errors.hpp"
#include "penta/numeric.hpp"
#include "penta/pentagon_graph.hpp"
#include "penta/recurrence.hpp"
#include "penta/scaling.hpp"
#include "penta/svg_plot.hpp"
#include "penta/verify.hpp"

namespace {

constexpr int kExitGateFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
  int t = 0;
  int t_max = 11;
  int oracle_max = 4;
  int exact_max = 14;
  std::string convention = "auto";
  std::string gluing = "standard";
  std::string fit_window = "0..7";
  int validate_max = 11;
  bool with_a7 = false;
  std::string weighting = "relative";
  std::string format;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, else to stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool to_stdout() const { return !file_; }
  void Close(const std::string& path) {
    if (!file_) return;
    file_->close();
    if (!*file_) throw std::runtime_error("failed writing '" + path + "'");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::ostream& Log() { return std::cerr; }

void LogConstants(const RunConfig& c) {
  const penta::DeltaConvention conv = penta::ParseDeltaConvention(c.convention);
  Log() << "[penta] delta-convention=" << penta::ToString(conv) << " (requested " << c.convention
        << "), gluing=" << c.gluing << ", precision=" << penta::WorkingPrecision() << " digits\n";
}

penta::Gluing ParseGluing(const std::string& s) {
  if (s == "standard") return penta::Gluing::kStandard;
  if (s == "skewed") return penta::Gluing::kSkewed;
  throw UsageError("unknown gluing '" + s + "'");
}

std::pair<int, int> ParseWindow(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) return {0, std::stoi(s)};
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("fit window must look like 0..7, got '" + s + "'");
  }
}

int CmdGenerate(const RunConfig& c) {
  const penta::PentagonGraph g = penta::Build(c.t);
  Output out(c.out);
  out.stream() << penta::Serialize(g) << "\n";
  out.Close(c.out);
  (out.to_stdout() ? Log() : std::cout) << "N=" << g.node_count() << " E=" << g.edge_count() << "\n";
  return 0;
}

int CmdTable(const RunConfig& c) {
  const std::vector<penta::MetricsRow> rows = [&] {
    if (c.t_max <= c.exact_max) {
      penta::AssembleOptions opts;
      opts.exact_delta_max = c.exact_max;
      opts.convention = penta::ParseDeltaConvention(c.convention);
      return penta::Assemble(c.t_max, opts);
    }
    return penta::AssembleExtended(c.t_max, c.exact_max);
  }();
  Output out(c.out);
  if (c.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const penta::MetricsRow& r : rows) {
      j.push_back({{"t", r.t},
                   {"N", r.n.get_str()},
                   {"E", r.e.get_str()},
                   {"d12", r.d12.get_str()},
                   {"d13", r.d13.get_str()},
                   {"S", r.s.get_str()},
                   {"F", r.f.get_str()},
                   {"delta", r.delta.get_str()},
                   {"D", r.d_total.get_str()},
                   {"apl", r.apl.get_str()},
                   {"delta_exact", r.delta_exact}});
    }
    out.stream() << j.dump(2) << "\n";
  } else {
    penta::WriteMetricsCsv(out.stream(), rows);
  }
  out.Close(c.out);
  return 0;
}

int CmdVerify(const RunConfig& c) {
  penta::VerifyOptions opts;
  opts.oracle_max = c.oracle_max;
  opts.convention = penta::ParseDeltaConvention(c.convention);
  opts.gluing = ParseGluing(c.gluing);
  const penta::VerifyReport report = penta::RunVerify(opts, [&](const penta::GateResult& g) {
    if (c.format != "json") Log() << "[penta] gate " << g.name << (g.passed ? " ok" : " FAILED") << "\n";
  });
  Output out(c.out);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["passed"] = report.all_passed();
    for (const penta::GateResult& g : report.gates) {
      j["gates"].push_back({{"name", g.name}, {"passed", g.passed}, {"detail", g.detail}});
    }
    out.stream() << j.dump(2) << "\n";
  } else {
    penta::PrintReport(out.stream(), report);
  }
  out.Close(c.out);
  return report.all_passed() ? 0 : kExitGateFailure;
}

int CmdPlot(const RunConfig& c) {
  const auto rows = penta::AssembleExtended(c.t_max, std::min(c.exact_max, c.t_max));
  const auto series = penta::ScalingSeries(rows);
  Output out(c.out);
  penta::WriteScalingSvg(out.stream(), series);
  out.Close(c.out);
  if (c.t_max - c.t_max / 2 >= 1) {
    const penta::ScalingSlopes s = penta::FitScaling(series, c.t_max / 2, c.t_max);
    Log() << "[penta] fitted slopes over t=" << c.t_max / 2 << ".." << c.t_max << ": apl=" << penta::FormatSig(s.apl.slope, 8)
          << " diameter=" << penta::FormatSig(s.diameter.slope, 8) << "\n";
  }
  return 0;
}

int CmdFit(const RunConfig& c) {
  const auto [lo, hi] = ParseWindow(c.fit_window);
  const int last = std::max(hi, c.validate_max);
  if (lo < 0 || hi < lo) throw UsageError("empty fit window");
  if (last > c.exact_max) {
    throw penta::ResourceLimitError("fit data limited to exact rows t<=" + std::to_string(c.exact_max),
                                    c.exact_max);
  }
  const std::vector<penta::BigInt> delta =
      penta::DeltaSeq(last, penta::ParseDeltaConvention(c.convention));
  const auto table = penta::ToFitPoints(delta, 0, last);
  const auto train = penta::ToFitPoints(delta, lo, hi);
  const penta::Weighting w =
      c.weighting == "unweighted" ? penta::Weighting::kUnweighted : penta::Weighting::kRelative;
  const penta::FitResult fit = penta::Fit(train, penta::FitBasis::Standard(c.with_a7), w);
  const penta::ValidationReport v = penta::Validate(fit, table);

  nlohmann::ordered_json j = penta::ToJson(fit);
  nlohmann::ordered_json val;
  val["t"] = v.t;
  nlohmann::ordered_json errs = nlohmann::ordered_json::array();
  for (const auto& e : v.relative_errors) errs.push_back(penta::FormatSci(e, 6));
  val["relative_errors"] = errs;
  val["max_relative_error"] = penta::FormatSci(v.max_relative_error, 6);
  val["worst_t"] = v.worst_t;
  j["validation"] = val;
  if (!c.with_a7) {
    nlohmann::ordered_json ref = nlohmann::ordered_json::array();
    for (const auto& a : penta::PublishedCoefficients()) ref.push_back(penta::FormatSig(a, 15));
    j["published_coefficients"] = ref;
  }
  Output out(c.out);
  out.stream() << j.dump(2) << "\n";
  out.Close(c.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    penta::InitPrecisionFromEnv();
  } catch (const std::exception& e) {
    std::cerr << "penta: " << e.what() << "\n";
    return kExitUsage;
  }

  RunConfig cfg;
  CLI::App app{"Sierpinski pentagon: graphs, exact distance sums, closed forms and the overcount fit"};
  app.require_subcommand(1);
  app.add_option("--delta-convention", cfg.convention, "Junction exclusion for the overcount sum")
      ->check(CLI::IsMember({"auto", "inclusive", "exclusive"}))
      ->capture_default_str();

  CLI::App* gen = app.add_subcommand("generate", "Write the graph G(t) as JSON");
  gen->add_option("--t", cfg.t, "Generation")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--out", cfg.out, "Output path (default stdout)");

  CLI::App* table = app.add_subcommand("table", "Exact metrics for t = 0..t_max");
  table->add_option("--t-max,--t", cfg.t_max, "Last generation")->capture_default_str()->check(CLI::Range(0, 200));
  table->add_option("--exact-max", cfg.exact_max, "Last generation with an exact overcount")
      ->capture_default_str()->check(CLI::Range(0, 16));
  table->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", cfg.out, "Output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Cross-validate oracle, recurrences, closed forms and fit");
  verify->add_option("--oracle-max", cfg.oracle_max, "Largest t checked by BFS")->capture_default_str()->check(CLI::Range(1, 8));
  verify->add_option("--gluing", cfg.gluing, "Construction for the explicit graphs")
      ->check(CLI::IsMember({"standard", "skewed"}))->capture_default_str();
  verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", cfg.out, "Output path (default stdout)");

  CLI::App* plot = app.add_subcommand("plot", "Log-log SVG of APL and diameter against N");
  plot->add_option("--t-max,--t", cfg.t_max, "Last generation")->required()->check(CLI::Range(1, 200));
  plot->add_option("--exact-max", cfg.exact_max, "Last generation with an exact overcount")
      ->capture_default_str()->check(CLI::Range(0, 16));
  plot->add_option("--out", cfg.out, "Output path (default stdout)");

  CLI::App* fit = app.add_subcommand("fit", "Least-squares fit of the overcount model");
  fit->add_option("--fit-window", cfg.fit_window, "Training rows, e.g. 0..7")->capture_default_str();
  fit->add_option("--validate-max", cfg.validate_max, "Validate on t = 0..N")->capture_default_str();
  fit->add_flag("--with-a7", cfg.with_a7, "Keep the 5^{2t} term");
  fit->add_option("--weighting", cfg.weighting, "relative or unweighted")
      ->check(CLI::IsMember({"relative", "unweighted"}))->capture_default_str();
  fit->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));
  fit->add_option("--out", cfg.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    LogConstants(cfg);
    if (*gen) return CmdGenerate(cfg);
    if (*table) return CmdTable(cfg);
    if (*verify) return CmdVerify(cfg);
    if (*plot) return CmdPlot(cfg);
    if (*fit) return CmdFit(cfg);
  } catch (const UsageError& e) {
    std::cerr << "penta: " << e.what() << "\n";
    return kExitUsage;
  } catch (const penta::ResourceLimitError& e) {
    std::cerr << "penta: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "penta: " << e.what() << "\n";
    return kExitGateFailure;
  }
  return kExitUsage;
}
