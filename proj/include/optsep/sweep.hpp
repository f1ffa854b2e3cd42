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

// n-sweeps comparing Perceptron and the optimistic solver on identical data.

#ifndef OPTSEP_SWEEP_HPP
#define OPTSEP_SWEEP_HPP

#include <cmath>
#include <cstdint>
#include <future>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "optsep/datagen.hpp"
#include "optsep/optimistic.hpp"
#include "optsep/perceptron.hpp"
#include "optsep/regret.hpp"

namespace optsep {

struct SweepRow {
  std::size_t n = 0;
  double gamma = 0.0;
  std::uint64_t perceptron_ops = 0;
  std::uint64_t perceptron_mistakes = 0;
  std::uint64_t perceptron_passes = 0;
  bool perceptron_converged = false;
  std::uint64_t optsep_ops = 0;
  std::uint64_t optsep_rounds = 0;
  bool optsep_converged = false;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepOptions {
  DatasetKind kind = DatasetKind::kEq2;
  std::size_t n_min = 1;
  std::size_t n_max = 15;
  // random datasets only
  std::size_t d = 2;
  double margin_target = 0.1;
  std::uint64_t seed = 0;
  // overrides; 0 selects the defaults below
  std::uint64_t max_passes = 0;
  std::uint64_t max_rounds = 0;
  bool parallel = false;
};

// 4^{n+1}: Perceptron on the eq2 family needs (4^n - 1)/3 updates.
inline std::uint64_t default_max_passes(std::size_t n) {
  if (n >= 31) return UINT64_MAX;
  return std::uint64_t{1} << (2 * (n + 1));
}

// Four times the guaranteed round count, so a failing guarantee shows up as
// a non-converged row instead of a silent long run.
inline std::uint64_t default_max_rounds(const Dataset& data, double gamma) {
  if (!(gamma > 0.0)) return 1'000'000;
  const double b = (1.0 + 2.0 * std::log(static_cast<double>(data.size())) * data.radius() *
                              data.radius()) /
                   (2.0 * gamma);
  return static_cast<std::uint64_t>(std::ceil(b)) * 4;
}

inline Dataset sweep_dataset(const SweepOptions& opt, std::size_t n) {
  if (opt.kind == DatasetKind::kEq2) return gen_eq2(n);
  if (opt.kind == DatasetKind::kRandomSeparable) {
    return gen_random_separable(n, opt.d, opt.margin_target, opt.seed + n);
  }
  throw std::invalid_argument("sweep supports eq2 and random datasets");
}

inline SweepRow sweep_row(const SweepOptions& opt, std::size_t n) {
  const Dataset data = sweep_dataset(opt, n);
  SweepRow row;
  row.n = n;
  row.gamma = brute_force_margin(data);

  const RunResult perc =
      perceptron_run(data, opt.max_passes ? opt.max_passes : default_max_passes(n));
  row.perceptron_ops = perc.total_ops;
  row.perceptron_mistakes = perc.mistakes.value_or(0);
  row.perceptron_passes = perc.rounds;
  row.perceptron_converged = perc.converged;

  const RunResult opt_run =
      run(data, opt.max_rounds ? opt.max_rounds : default_max_rounds(data, row.gamma));
  row.optsep_ops = opt_run.total_ops;
  row.optsep_rounds = opt_run.rounds;
  row.optsep_converged = opt_run.converged;
  return row;
}

// Rows come back ordered by n whether or not they were computed in parallel.
inline std::vector<SweepRow> run_sweep(const SweepOptions& opt) {
  if (opt.n_min < 1 || opt.n_min > opt.n_max) {
    throw std::invalid_argument("sweep needs 1 <= n-min <= n-max");
  }
  std::vector<SweepRow> rows;
  if (opt.parallel) {
    std::vector<std::future<SweepRow>> pending;
    for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) {
      pending.push_back(std::async(std::launch::async, [&opt, n] { return sweep_row(opt, n); }));
    }
    for (auto& f : pending) rows.push_back(f.get());
  } else {
    for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) rows.push_back(sweep_row(opt, n));
  }
  return rows;
}

inline constexpr const char* kSweepHeader =
    "n,gamma,perceptron_ops,perceptron_mistakes,perceptron_passes,perceptron_converged,"
    "optsep_ops,optsep_rounds,optsep_converged";

inline void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << format_double(r.gamma) << ',' << r.perceptron_ops << ','
        << r.perceptron_mistakes << ',' << r.perceptron_passes << ','
        << (r.perceptron_converged ? 1 : 0) << ',' << r.optsep_ops << ',' << r.optsep_rounds
        << ',' << (r.optsep_converged ? 1 : 0) << '\n';
  }
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_sweep_csv(rows, out);
  return out.str();
}

inline std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::vector<SweepRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != kSweepHeader) throw CsvError("unexpected sweep header", line_no);
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 9) throw CsvError("expected 9 columns", line_no);
    try {
      SweepRow r;
      r.n = std::stoull(f[0]);
      r.gamma = std::stod(f[1]);
      r.perceptron_ops = std::stoull(f[2]);
      r.perceptron_mistakes = std::stoull(f[3]);
      r.perceptron_passes = std::stoull(f[4]);
      r.perceptron_converged = f[5] == "1";
      r.optsep_ops = std::stoull(f[6]);
      r.optsep_rounds = std::stoull(f[7]);
      r.optsep_converged = f[8] == "1";
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw CsvError("invalid number", line_no);
    }
  }
  return rows;
}

}  // namespace optsep

#endif  // OPTSEP_SWEEP_HPP
