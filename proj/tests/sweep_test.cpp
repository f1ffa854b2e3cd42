// Copyright 2026 The optsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Sweep, plot and report plumbing behind the CLI.

#include "optsep/sweep.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "optsep/plot.hpp"
#include "optsep/report.hpp"

namespace optsep {
namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t c = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++c;
  return c;
}

SweepOptions small_sweep() {
  SweepOptions opt;
  opt.n_min = 1;
  opt.n_max = 7;
  return opt;
}

TEST(SweepTest, RowsMatchDirectRuns) {
  const auto rows = run_sweep(small_sweep());
  ASSERT_EQ(rows.size(), 7u);
  for (const auto& row : rows) {
    const Dataset d = gen_eq2(row.n);
    const RunResult p = perceptron_run(d, default_max_passes(row.n));
    const RunResult o = run(d, 1'000'000);
    EXPECT_EQ(row.perceptron_ops, p.total_ops);
    EXPECT_EQ(row.perceptron_mistakes, *p.mistakes);
    EXPECT_EQ(row.perceptron_passes, p.rounds);
    EXPECT_EQ(row.optsep_ops, o.total_ops);
    EXPECT_EQ(row.optsep_rounds, o.rounds);
    EXPECT_TRUE(row.perceptron_converged);
    EXPECT_TRUE(row.optsep_converged);
    EXPECT_EQ(row.gamma, brute_force_margin(d));
    EXPECT_EQ(row.optsep_ops, row.n + row.optsep_rounds * (2 * row.n + 2));
  }
  EXPECT_EQ(rows[0].perceptron_ops, 3u);
}

TEST(SweepTest, CapsAreFlagged) {
  SweepOptions opt = small_sweep();
  opt.n_min = 6;
  opt.max_passes = 3;
  opt.max_rounds = 2;
  const auto rows = run_sweep(opt);
  for (const auto& r : rows) {
    EXPECT_FALSE(r.perceptron_converged);
    EXPECT_EQ(r.perceptron_passes, 3u);
    EXPECT_FALSE(r.optsep_converged);
    EXPECT_EQ(r.optsep_rounds, 2u);
  }
}

TEST(SweepTest, BadRange) {
  SweepOptions opt;
  opt.n_min = 5;
  opt.n_max = 4;
  EXPECT_THROW(run_sweep(opt), std::invalid_argument);
  opt.n_min = 0;
  EXPECT_THROW(run_sweep(opt), std::invalid_argument);
}

TEST(SweepTest, DeterministicAndOrderIndependent) {
  SweepOptions opt = small_sweep();
  const std::string a = sweep_csv(run_sweep(opt));
  const std::string b = sweep_csv(run_sweep(opt));
  opt.parallel = true;
  const std::string c = sweep_csv(run_sweep(opt));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(SweepTest, RandomKind) {
  SweepOptions opt;
  opt.kind = DatasetKind::kRandomSeparable;
  opt.n_min = 3;
  opt.n_max = 6;
  opt.d = 3;
  opt.margin_target = 0.2;
  const auto rows = run_sweep(opt);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.optsep_converged);
    EXPECT_GE(r.gamma, 0.2 - 1e-8);
  }
}

TEST(SweepCsvTest, RoundTrip) {
  const auto rows = run_sweep(small_sweep());
  std::istringstream in(sweep_csv(rows));
  EXPECT_EQ(read_sweep_csv(in), rows);
}

TEST(SweepCsvTest, RejectsGarbage) {
  std::istringstream wrong_header("a,b,c\n");
  EXPECT_THROW(read_sweep_csv(wrong_header), CsvError);
  std::istringstream short_row(std::string(kSweepHeader) + "\n1,2,3\n");
  EXPECT_THROW(read_sweep_csv(short_row), CsvError);
  std::istringstream bad_number(std::string(kSweepHeader) + "\n1,x,3,1,2,1,5,1,1\n");
  EXPECT_THROW(read_sweep_csv(bad_number), CsvError);
}

TEST(PlotTest, TwoPolylinesWithOnePointPerRow) {
  const auto rows = run_sweep(small_sweep());
  const std::string svg = render_svg(plot_data(rows, false));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(svg, "<polyline"), 2u);
  EXPECT_EQ(count(svg, "<circle"), 2 * rows.size());
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(PlotTest, LogValuesAreNaturalLogs) {
  const auto rows = run_sweep(small_sweep());
  const PlotData lin = plot_data(rows, false);
  const PlotData lg = plot_data(rows, true);
  for (std::size_t s = 0; s < lin.series.size(); ++s) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      EXPECT_DOUBLE_EQ(lg.series[s].y[k], std::log(lin.series[s].y[k]));
    }
  }
}

TEST(PlotTest, SingleRowIsMarkersOnly) {
  SweepOptions opt;
  opt.n_min = opt.n_max = 3;
  const std::string svg = render_svg(plot_data(run_sweep(opt), true));
  EXPECT_EQ(count(svg, "<polyline"), 0u);
  EXPECT_EQ(count(svg, "<circle"), 2u);
}

TEST(PlotTest, EmptyInputThrows) {
  EXPECT_THROW(plot_data({}, false), std::invalid_argument);
}

TEST(PlotTest, DatSidecarListsPlottedNumbers) {
  const auto rows = run_sweep(small_sweep());
  const PlotData pd = plot_data(rows, false);
  std::istringstream dat(render_dat(pd));
  std::string header;
  std::getline(dat, header);
  EXPECT_EQ(header.rfind("# n perceptron optsep", 0), 0u);
  for (const auto& r : rows) {
    double n, p, o;
    dat >> n >> p >> o;
    EXPECT_EQ(n, static_cast<double>(r.n));
    EXPECT_EQ(p, static_cast<double>(r.perceptron_ops));
    EXPECT_EQ(o, static_cast<double>(r.optsep_ops));
  }
}

TEST(ReportTest, SchemaForBothAlgorithms) {
  const Dataset d = gen_eq2(1);
  const auto o = run_report(run(d, 10), "optsep");
  EXPECT_EQ(o["algorithm"], "optsep");
  EXPECT_EQ(o["converged"], true);
  EXPECT_EQ(o["rounds"], 1);
  EXPECT_TRUE(o["mistakes"].is_null());
  EXPECT_EQ(o["total_ops"], 5);
  EXPECT_EQ(o["final_margin"], 1.0);

  const auto p = run_report(perceptron_run(d, 10), "perceptron");
  EXPECT_EQ(p["converged"], true);
  EXPECT_EQ(p["mistakes"], 1);
  EXPECT_EQ(p["total_ops"], 3);
  for (const char* key :
       {"algorithm", "converged", "rounds", "mistakes", "total_ops", "final_margin", "separator"}) {
    EXPECT_TRUE(o.contains(key)) << key;
    EXPECT_TRUE(p.contains(key)) << key;
  }

  const Dataset bad({{Vector{1.0}, Label::positive()}, {Vector{1.0}, Label::negative()}});
  const auto nc = run_report(run(bad, 5), "optsep");
  EXPECT_EQ(nc["converged"], false);
  EXPECT_TRUE(nc["final_margin"].is_null());
}

TEST(ReportTest, TraceSurvivesJsonAndRevalidates) {
  const Dataset d = gen_eq2(6);
  const double gamma = brute_force_margin(d);
  const RunResult r = run(d, 10'000, {.record_trace = true});
  const nlohmann::json j = nlohmann::json::parse(trace_json(*r.trace, d, gamma).dump());
  ASSERT_EQ(j["rounds"].size(), r.rounds);
  const RunTrace back = trace_from_json(j);
  ASSERT_EQ(back.rounds.size(), r.trace->rounds.size());
  for (std::size_t k = 0; k < back.rounds.size(); ++k) {
    EXPECT_EQ(back.rounds[k].p, r.trace->rounds[k].p);
    EXPECT_EQ(back.rounds[k].margins, r.trace->rounds[k].margins);
    EXPECT_EQ(back.rounds[k].ops, r.trace->rounds[k].ops);
  }
  for (const auto& b : bound_reports(back, d, gamma)) EXPECT_TRUE(b.all_hold()) << b.T;
  const auto& last = j["rounds"].back()["bounds"];
  EXPECT_LE(last["gap_lhs"].get<double>(), last["gap_rhs"].get<double>());
}

TEST(ReportTest, MalformedTrace) {
  EXPECT_THROW(trace_from_json(nlohmann::json::parse(R"({"radius": 1})")), std::runtime_error);
}

}  // namespace
}  // namespace optsep
