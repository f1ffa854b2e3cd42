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

// optsep: benchmark harness for the optimistic perceptron.
//
//   optsep generate --kind eq2 --n 5 --out d.csv
//   optsep run --data d.csv --algo optsep --trace trace.json
//   optsep sweep --kind eq2 --n-min 1 --n-max 15 --out sweep.csv
//   optsep plot --in sweep.csv --out fig.svg [--log]
//   optsep check-trace --data d.csv --trace trace.json
//
// Algorithmic non-convergence is reported in the output with exit code 0;
// bad input or I/O failures exit with 1.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "optsep/optsep.hpp"

namespace {

using optsep::Dataset;

optsep::DatasetKind parse_kind(const std::string& kind) {
  if (kind == "eq2") return optsep::DatasetKind::kEq2;
  if (kind == "random") return optsep::DatasetKind::kRandomSeparable;
  throw std::invalid_argument("unknown dataset kind '" + kind + "' (expected eq2 or random)");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

struct GenerateArgs {
  std::string kind = "eq2";
  int n = 1;
  int d = 0;
  double margin = 0.1;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  if (a.n < 1) throw std::invalid_argument("--n must be at least 1");
  optsep::DatasetSpec spec;
  spec.kind = parse_kind(a.kind);
  spec.n = static_cast<std::size_t>(a.n);
  spec.d = a.d > 0 ? static_cast<std::size_t>(a.d) : spec.n;
  if (spec.kind == optsep::DatasetKind::kRandomSeparable && a.d < 1) {
    throw std::invalid_argument("--d is required for random datasets");
  }
  spec.margin_target = a.margin;
  spec.seed = a.seed;
  const Dataset data = optsep::generate(spec);
  if (a.out.empty()) {
    optsep::write_csv(data, std::cout);
  } else {
    optsep::write_csv(data, a.out);
  }
  return 0;
}

struct RunArgs {
  std::string data;
  bool header = false;
  std::string algo = "optsep";
  std::uint64_t max_rounds = 0;
  std::string trace;
};

int cmd_run(const RunArgs& a) {
  if (a.algo != "optsep" && a.algo != "perceptron") {
    throw std::invalid_argument("--algo must be optsep or perceptron");
  }
  if (!a.trace.empty() && a.algo != "optsep") {
    throw std::invalid_argument("--trace is only available for --algo optsep");
  }
  const Dataset data = optsep::read_csv(a.data, a.header);
  const double gamma = optsep::brute_force_margin(data);

  optsep::RunResult result;
  if (a.algo == "optsep") {
    const std::uint64_t cap =
        a.max_rounds ? a.max_rounds : optsep::default_max_rounds(data, gamma);
    result = optsep::run(data, cap, {.record_trace = !a.trace.empty()});
  } else {
    std::uint64_t cap = a.max_rounds;
    if (cap == 0) {
      // the classical mistake bound plus the clean pass, when it is known
      const double r = data.radius();
      cap = gamma > 0.0 ? static_cast<std::uint64_t>(std::ceil((r / gamma) * (r / gamma))) + 2
                        : 1000;
    }
    result = optsep::perceptron_run(data, cap);
  }

  std::cout << optsep::run_report(result, a.algo).dump() << '\n';
  if (result.trace) write_text(a.trace, optsep::trace_json(*result.trace, data, gamma).dump() + "\n");
  return 0;
}

struct SweepArgs {
  std::string kind = "eq2";
  int n_min = 1;
  int n_max = 15;
  int d = 2;
  double margin = 0.1;
  std::uint64_t seed = 0;
  std::uint64_t max_passes = 0;
  std::uint64_t max_rounds = 0;
  bool parallel = false;
  std::string out;
};

int cmd_sweep(const SweepArgs& a) {
  if (a.n_min < 1 || a.n_min > a.n_max) {
    throw std::invalid_argument("need 1 <= --n-min <= --n-max");
  }
  optsep::SweepOptions opt;
  opt.kind = parse_kind(a.kind);
  opt.n_min = static_cast<std::size_t>(a.n_min);
  opt.n_max = static_cast<std::size_t>(a.n_max);
  opt.d = static_cast<std::size_t>(a.d);
  opt.margin_target = a.margin;
  opt.seed = a.seed;
  opt.max_passes = a.max_passes;
  opt.max_rounds = a.max_rounds;
  opt.parallel = a.parallel;
  const auto rows = optsep::run_sweep(opt);
  for (const auto& r : rows) {
    if (!r.perceptron_converged) {
      std::cerr << "warning: perceptron hit the pass cap at n = " << r.n << '\n';
    }
    if (!r.optsep_converged) {
      std::cerr << "warning: optsep hit the round cap at n = " << r.n << '\n';
    }
  }
  const std::string csv = optsep::sweep_csv(rows);
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    write_text(a.out, csv);
  }
  return 0;
}

struct PlotArgs {
  std::string in;
  std::string out;
  bool log = false;
};

int cmd_plot(const PlotArgs& a) {
  std::ifstream in(a.in, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + a.in);
  const auto rows = optsep::read_sweep_csv(in);
  if (rows.empty()) throw std::invalid_argument("sweep file has no rows: " + a.in);
  const optsep::PlotData pd = optsep::plot_data(rows, a.log);
  write_text(a.out, optsep::render_svg(pd));
  write_text(std::filesystem::path(a.out).replace_extension(".dat").string(),
             optsep::render_dat(pd));
  return 0;
}

struct CheckArgs {
  std::string data;
  bool header = false;
  std::string trace;
};

int cmd_check_trace(const CheckArgs& a) {
  const Dataset data = optsep::read_csv(a.data, a.header);
  std::ifstream in(a.trace, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + a.trace);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("cannot parse trace: ") + e.what());
  }
  const optsep::RunTrace trace = optsep::trace_from_json(j);
  const double gamma = optsep::brute_force_margin(data);
  std::uint64_t learner = 0, data_side = 0, gap = 0;
  for (const auto& b : optsep::bound_reports(trace, data, gamma)) {
    learner += b.learner_lhs > b.learner_rhs + optsep::kBoundSlack;
    data_side += b.data_lhs > b.data_rhs + optsep::kBoundSlack;
    gap += b.gap_lhs > b.gap_rhs + optsep::kBoundSlack;
  }
  nlohmann::json report = {{"rounds", trace.rounds.size()},
                           {"gamma", gamma},
                           {"learner_violations", learner},
                           {"data_violations", data_side},
                           {"gap_violations", gap}};
  std::cout << report.dump() << '\n';
  return learner + data_side + gap == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimistic perceptron benchmark harness"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a dataset as CSV");
  g->add_option("--kind", gen.kind, "eq2 | random")->capture_default_str();
  g->add_option("--n", gen.n, "number of points")->required();
  g->add_option("--d", gen.d, "dimension (random only; eq2 uses d = n)");
  g->add_option("--margin", gen.margin, "margin target in (0, 1) (random only)")
      ->capture_default_str();
  g->add_option("--seed", gen.seed, "RNG seed (random only)")->capture_default_str();
  g->add_option("--out", gen.out, "output file (default: stdout)");

  RunArgs run;
  auto* r = app.add_subcommand("run", "Run one algorithm on a CSV dataset");
  r->add_option("--data", run.data, "dataset CSV")->required();
  r->add_flag("--header", run.header, "skip the first CSV line");
  r->add_option("--algo", run.algo, "optsep | perceptron")->capture_default_str();
  r->add_option("--max-rounds", run.max_rounds, "round (or pass) cap; 0 picks a default");
  r->add_option("--trace", run.trace, "write the per-round trace as JSON");

  SweepArgs sw;
  auto* s = app.add_subcommand("sweep", "Compare both algorithms over a range of n");
  s->add_option("--kind", sw.kind, "eq2 | random")->capture_default_str();
  s->add_option("--n-min", sw.n_min)->capture_default_str();
  s->add_option("--n-max", sw.n_max)->capture_default_str();
  s->add_option("--d", sw.d, "dimension (random only)")->capture_default_str();
  s->add_option("--margin", sw.margin, "margin target (random only)")->capture_default_str();
  s->add_option("--seed", sw.seed, "base seed (random only)")->capture_default_str();
  s->add_option("--max-passes", sw.max_passes, "Perceptron pass cap; 0 picks 4^(n+1)");
  s->add_option("--max-rounds", sw.max_rounds, "optsep round cap; 0 picks 4x the guarantee");
  s->add_flag("--parallel", sw.parallel, "compute rows concurrently");
  s->add_option("--out", sw.out, "output CSV (default: stdout)");

  PlotArgs pl;
  auto* p = app.add_subcommand("plot", "Render a sweep CSV as SVG plus a .dat sidecar");
  p->add_option("--in", pl.in, "sweep CSV")->required();
  p->add_option("--out", pl.out, "output SVG")->required();
  p->add_flag("--log", pl.log, "plot the natural log of the counts");

  CheckArgs ck;
  auto* c = app.add_subcommand("check-trace", "Re-validate the regret bounds of a trace");
  c->add_option("--data", ck.data, "dataset CSV the trace was produced from")->required();
  c->add_flag("--header", ck.header, "skip the first CSV line");
  c->add_option("--trace", ck.trace, "trace JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return cmd_generate(gen);
    if (r->parsed()) return cmd_run(run);
    if (s->parsed()) return cmd_sweep(sw);
    if (p->parsed()) return cmd_plot(pl);
    if (c->parsed()) return cmd_check_trace(ck);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
