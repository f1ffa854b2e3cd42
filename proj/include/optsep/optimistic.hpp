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

// Optimistic Perceptron.
//
// Each round t the learner plays the optimistic update
//
//   w_t = w_{t-1} + 2 x~_{t-1} - x~_{t-2},
//
// the data answers with exponential weights over the examples
//
//   p_t,i  ∝  p_{t-1,i} exp(-y_i <w_t, x_i> / r^2),
//
// and the new pseudoexample x~_t = sum_i p_t,i y_i x_i is formed. The
// average of the w_t separates the data once every coordinate of the
// cumulative margin vector is positive.
//
// Per-round cost is 2n + 2 counted units: two additions for w_t, n inner
// products for M_{w_t}, n additions for x~_t. Initialization costs n more.

#ifndef OPTSEP_OPTIMISTIC_HPP
#define OPTSEP_OPTIMISTIC_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "optsep/core.hpp"

namespace optsep {

struct SolverState {
  std::uint64_t t = 0;
  Vector w;       // w_t
  Vector w_sum;   // sum_{s<=t} w_s
  SimplexWeights p = SimplexWeights::uniform(1);       // p_t
  SimplexWeights p_prev = SimplexWeights::uniform(1);  // p_{t-1}
  // Pseudoexamples as seen by the next round: x_prev = x~_t, x_prev2 = x~_{t-1}.
  Vector x_prev;
  Vector x_prev2;
  MarginVector last_margins;             // M_{w_t}
  std::vector<double> cumulative_margins;  // sum_{s<=t} M_{w_s}
  std::vector<double> p_history_sum;       // sum_{s<=t} p_s
  OpCounter counter;
};

// One round of a recorded run.
struct RoundRecord {
  std::uint64_t t = 0;
  std::vector<double> p;        // p_t
  std::vector<double> margins;  // M_{w_t}
  double p_step_l1 = 0.0;       // ||p_t - p_{t-1}||_1
  double min_avg_margin = 0.0;  // min_i cumulative_margins_i / t
  OpCounter ops;                // counter after the round
};

struct RunTrace {
  double radius = 0.0;
  std::vector<double> p0;
  std::vector<RoundRecord> rounds;
};

struct RunConfig {
  bool record_trace = false;
  // When false, always play max_rounds (fixed horizon); `converged` then
  // reports whether the final average separates.
  bool stop_at_separation = true;
};

struct RunResult {
  Vector separator;
  std::uint64_t rounds = 0;  // rounds for the optimistic solver, passes for Perceptron
  std::uint64_t total_ops = 0;
  bool converged = false;
  std::optional<double> final_margin;   // empty when the separator is zero
  std::optional<std::uint64_t> mistakes;  // Perceptron only
  std::optional<RunTrace> trace;
};

inline double step_size(const Dataset& data) {
  return 1.0 / (data.radius() * data.radius());
}

inline SolverState init(const Dataset& data) {
  SolverState s;
  const std::size_t n = data.size();
  s.p = SimplexWeights::uniform(n);
  s.p_prev = s.p;
  s.x_prev = pseudoexample(s.p, data, s.counter);
  s.x_prev2 = s.x_prev;
  s.w = Vector::zeros(data.dim());
  s.w_sum = Vector::zeros(data.dim());
  s.cumulative_margins.assign(n, 0.0);
  s.p_history_sum.assign(n, 0.0);
  return s;
}

// Exponential-weights posterior p_i ∝ p_prev,i exp(-eta M_i), evaluated in
// linear space with the smallest loss shifted to zero. This is the
// closed-form minimizer of eta <p, M> + KL(p || p_prev) over the simplex.
inline SimplexWeights md_update_reference(const SimplexWeights& p_prev,
                                          const MarginVector& m, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
  detail::require_same_dim(p_prev.size(), m.size(), "md_update_reference");
  const double shift = m.min();
  std::vector<double> q(m.size());
  double z = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = p_prev[i] * std::exp(-eta * (m[i] - shift));
    z += q[i];
  }
  for (double& v : q) v /= z;
  return SimplexWeights::from_probs(q);
}

// Advances the state by one round in place.
inline void step(SolverState& s, const Dataset& data) {
  detail::require_same_dim(s.p.size(), data.size(), "step");
  detail::require_same_dim(s.w.size(), data.dim(), "step");

  // optimistic linear update
  axpy_inplace(2.0, s.x_prev, s.w, s.counter);
  axpy_inplace(-1.0, s.x_prev2, s.w, s.counter);

  s.last_margins = margin_vector(s.w, data, s.counter);

  // example weights
  const double eta = step_size(data);
  std::vector<double> logs = s.p.log_probs();
  for (std::size_t i = 0; i < logs.size(); ++i) {
    logs[i] -= eta * s.last_margins[i];
  }
  s.p_prev = std::move(s.p);
  s.p = SimplexWeights::from_log_weights(std::move(logs));

  s.x_prev2 = std::move(s.x_prev);
  s.x_prev = pseudoexample(s.p, data, s.counter);

  for (std::size_t i = 0; i < data.size(); ++i) {
    s.cumulative_margins[i] += s.last_margins[i];
    s.p_history_sum[i] += s.p[i];
  }
  detail::add_scaled(s.w_sum, 1.0, s.w);  // bookkeeping for the average, uncounted
  ++s.t;
}

// FTRL form of the learner's move for the current round:
//   w_t = [(p_{t-1} + sum_{s=1}^{t-1} p_s) ⊙ y]^T X.
// Reference path only; it does not touch the state's counter.
inline Vector closed_form_w(const SolverState& s, const Dataset& data) {
  if (s.t == 0) throw std::logic_error("closed_form_w needs at least one round");
  detail::require_same_dim(s.p.size(), data.size(), "closed_form_w");
  Vector w = Vector::zeros(data.dim());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double coef = s.p_prev[i] + (s.p_history_sum[i] - s.p[i]);
    detail::add_scaled(w, coef * data[i].y.sign(), data[i].x);
  }
  return w;
}

inline Vector average_iterate(const SolverState& s) {
  Vector avg = s.w_sum;
  if (s.t > 0) {
    const double inv = 1.0 / static_cast<double>(s.t);
    for (std::size_t j = 0; j < avg.size(); ++j) avg[j] *= inv;
  }
  return avg;
}

inline double min_of(const std::vector<double>& v) {
  return *std::min_element(v.begin(), v.end());
}

inline double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

// Runs until the averaged iterate strictly separates the data (min_i of the
// cumulative margins > 0, which needs no extra vector work), or until
// max_rounds. Non-convergence is reported in the result, not thrown.
inline RunResult run(const Dataset& data, std::uint64_t max_rounds,
                     const RunConfig& config = {}) {
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be at least 1");
  SolverState s = init(data);

  std::optional<RunTrace> trace;
  if (config.record_trace) {
    trace.emplace();
    trace->radius = data.radius();
    trace->p0 = s.p.probs();
  }

  bool converged = false;
  while (s.t < max_rounds) {
    step(s, data);
    const double min_cum = min_of(s.cumulative_margins);
    if (trace) {
      RoundRecord rec;
      rec.t = s.t;
      rec.p = s.p.probs();
      rec.margins = s.last_margins.values;
      rec.p_step_l1 = l1_distance(s.p.probs(), s.p_prev.probs());
      rec.min_avg_margin = min_cum / static_cast<double>(s.t);
      rec.ops = s.counter;
      trace->rounds.push_back(std::move(rec));
    }
    converged = min_cum > 0.0;
    if (converged && config.stop_at_separation) break;
  }

  RunResult result;
  result.separator = average_iterate(s);
  result.rounds = s.t;
  result.total_ops = s.counter.total();
  result.converged = converged;
  if (!result.separator.is_zero()) result.final_margin = margin_of(result.separator, data);
  result.trace = std::move(trace);
  return result;
}

}  // namespace optsep

#endif  // OPTSEP_OPTIMISTIC_HPP
