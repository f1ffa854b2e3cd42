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

// JSON run reports and traces.
//
// Report (both algorithms, every key always present):
//   {"algorithm": "optsep" | "perceptron", "converged": bool, "rounds": int,
//    "mistakes": int | null, "total_ops": int, "final_margin": number | null,
//    "separator": [number, ...]}
// "rounds" counts passes for Perceptron; "mistakes" is null for optsep.
//
// Trace (optsep only):
//   {"radius", "eta", "lambda", "H", "gamma", "p0": [...],
//    "rounds": [{"t", "p", "margins", "p_step_l1", "min_avg_margin",
//                "ops": {"inner_products", "additions", "total"},
//                "bounds": {"learner_lhs", "learner_rhs", "data_lhs",
//                           "data_rhs", "gap_lhs", "gap_rhs"}}, ...]}

#ifndef OPTSEP_REPORT_HPP
#define OPTSEP_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "optsep/optimistic.hpp"
#include "optsep/regret.hpp"

namespace optsep {

inline nlohmann::json run_report(const RunResult& r, const std::string& algorithm) {
  nlohmann::json j;
  j["algorithm"] = algorithm;
  j["converged"] = r.converged;
  j["rounds"] = r.rounds;
  j["mistakes"] = r.mistakes ? nlohmann::json(*r.mistakes) : nlohmann::json(nullptr);
  j["total_ops"] = r.total_ops;
  j["final_margin"] = r.final_margin ? nlohmann::json(*r.final_margin) : nlohmann::json(nullptr);
  j["separator"] = r.separator.coords();
  return j;
}

inline nlohmann::json trace_json(const RunTrace& trace, const Dataset& data, double gamma) {
  const std::vector<BoundReport> bounds = bound_reports(trace, data, gamma);
  const GameConstants g = game_constants(data);
  nlohmann::json j;
  j["radius"] = trace.radius;
  j["eta"] = g.eta;
  j["lambda"] = g.lambda;
  j["H"] = g.H;
  j["gamma"] = gamma;
  j["p0"] = trace.p0;
  nlohmann::json rounds = nlohmann::json::array();
  for (std::size_t k = 0; k < trace.rounds.size(); ++k) {
    const RoundRecord& rec = trace.rounds[k];
    const BoundReport& b = bounds[k];
    rounds.push_back({
        {"t", rec.t},
        {"p", rec.p},
        {"margins", rec.margins},
        {"p_step_l1", rec.p_step_l1},
        {"min_avg_margin", rec.min_avg_margin},
        {"ops",
         {{"inner_products", rec.ops.inner_products},
          {"additions", rec.ops.additions},
          {"total", rec.ops.total()}}},
        {"bounds",
         {{"learner_lhs", b.learner_lhs},
          {"learner_rhs", b.learner_rhs},
          {"data_lhs", b.data_lhs},
          {"data_rhs", b.data_rhs},
          {"gap_lhs", b.gap_lhs},
          {"gap_rhs", b.gap_rhs}}},
    });
  }
  j["rounds"] = std::move(rounds);
  return j;
}

// Rebuilds the raw iterates of a trace; the recorded bound values are
// ignored so that offline checks recompute them.
inline RunTrace trace_from_json(const nlohmann::json& j) {
  RunTrace t;
  try {
    t.radius = j.at("radius").get<double>();
    t.p0 = j.at("p0").get<std::vector<double>>();
    for (const auto& r : j.at("rounds")) {
      RoundRecord rec;
      rec.t = r.at("t").get<std::uint64_t>();
      rec.p = r.at("p").get<std::vector<double>>();
      rec.margins = r.at("margins").get<std::vector<double>>();
      rec.p_step_l1 = r.at("p_step_l1").get<double>();
      rec.min_avg_margin = r.at("min_avg_margin").get<double>();
      rec.ops.inner_products = r.at("ops").at("inner_products").get<std::uint64_t>();
      rec.ops.additions = r.at("ops").at("additions").get<std::uint64_t>();
      t.rounds.push_back(std::move(rec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed trace: ") + e.what());
  }
  return t;
}

}  // namespace optsep

#endif  // OPTSEP_REPORT_HPP
