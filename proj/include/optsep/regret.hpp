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

// Runtime checks of the regret guarantees behind the optimistic solver,
// viewed as a zero-sum game where the learner maximizes p^T M_w over w and
// the data minimizes it over the simplex:
//
//   learner (OFTRL):  (sum_t p_t)^T M_u - sum_t p_t^T M_{w_t}
//                         <= 1/2 + sum_t (r^2/2) ||p_t - p_{t-1}||_1^2
//   data (MD, KL):    sum_t p_t^T M_{w_t} - min_p p^T (sum_t M_{w_t})
//                         <= H/eta - sum_t (lambda/(2 eta)) ||p_t - p_{t-1}||_1^2
//   duality gap:      gamma - min_i (1/T) sum_t M_{w_t},i
//                         <= (lambda + 2 H r^2) / (2 lambda T)
//
// for every unit comparator u. Constants: lambda = 1 (negative entropy is
// 1-strongly convex in l1 on the simplex), eta = 1/r^2, H = ln n (KL to the
// uniform start is at most ln n).
//
// Also provides the max-margin oracle used to obtain gamma.

#ifndef OPTSEP_REGRET_HPP
#define OPTSEP_REGRET_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "optsep/core.hpp"
#include "optsep/optimistic.hpp"

namespace optsep {

inline constexpr double kBoundSlack = 1e-9;

struct BoundPair {
  double lhs = 0.0;
  double rhs = 0.0;

  bool holds(double slack = kBoundSlack) const { return lhs <= rhs + slack; }
};

struct BoundReport {
  double learner_lhs = 0.0;
  double learner_rhs = 0.0;
  double data_lhs = 0.0;
  double data_rhs = 0.0;
  double gap_lhs = 0.0;
  double gap_rhs = 0.0;
  std::uint64_t T = 0;
  double H = 0.0;
  double lambda = 1.0;
  double eta = 0.0;

  bool all_hold(double slack = kBoundSlack) const {
    return learner_lhs <= learner_rhs + slack && data_lhs <= data_rhs + slack &&
           gap_lhs <= gap_rhs + slack;
  }
};

struct GameConstants {
  double H;
  double lambda;
  double eta;
  double r;
};

inline GameConstants game_constants(const Dataset& data) {
  return {std::log(static_cast<double>(data.size())), 1.0, step_size(data),
          data.radius()};
}

// Coefficient of sum_t ||p_t - p_{t-1}||_1^2 after adding the learner and
// data bounds. Zero exactly when eta = lambda / r^2.
inline double optimism_residual(double r, double lambda, double eta) {
  return r * r / 2.0 - lambda / (2.0 * eta);
}

// Smallest T guaranteed to certify separation: the first integer above
// (lambda + 2 H r^2) / (2 lambda gamma), with lambda = 1 and H = ln n.
inline std::uint64_t round_bound(std::size_t n, double r, double gamma) {
  if (!(gamma > 0.0)) throw std::domain_error("round bound needs a positive margin");
  const double b = (1.0 + 2.0 * std::log(static_cast<double>(n)) * r * r) / (2.0 * gamma);
  return static_cast<std::uint64_t>(std::ceil(b)) + 1;
}

// ---------------------------------------------------------------------------
// Max-margin oracle

struct MarginCertificate {
  double gamma = 0.0;        // achieved by `direction`; a lower bound on the optimum
  double upper_bound = 0.0;  // ||v||, an upper bound on the optimum
  Vector direction;          // unit vector, empty when not separable
  bool separable = false;
};

namespace detail {

// Affine minimizer of ||sum_k a_k z_{S_k}|| subject to sum_k a_k = 1.
inline Eigen::VectorXd affine_minimizer(const Eigen::MatrixXd& gram,
                                        const std::vector<Eigen::Index>& active) {
  const auto k = static_cast<Eigen::Index>(active.size());
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) kkt(a, b) = gram(active[a], active[b]);
    kkt(a, k) = 1.0;
    kkt(k, a) = 1.0;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  Eigen::VectorXd sol = kkt.colPivHouseholderQr().solve(rhs);
  return sol.head(k);
}

}  // namespace detail

// Maximum over unit w of min_i y_i <w, x_i>.
//
// By minimax duality this equals the distance from the origin to the convex
// hull of the signed points z_i = y_i x_i. The nearest point v is found with
// Wolfe's min-norm-point algorithm; w = v / ||v|| is then evaluated directly,
// so the returned gamma is always attained by a concrete separator. When the
// hull contains the origin the data are not strictly separable and gamma = 0.
inline MarginCertificate max_margin(const Dataset& data) {
  const std::size_t n = data.size();
  const std::size_t d = data.dim();

  Eigen::MatrixXd z(n, static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) z(i, j) = data[i].y.sign() * data[i].x[j];
  }
  const Eigen::MatrixXd gram = z * z.transpose();
  const double scale = gram.diagonal().maxCoeff();

  constexpr double kOptTol = 1e-15;
  constexpr double kWeightTol = 1e-14;

  Eigen::Index start = 0;
  gram.diagonal().minCoeff(&start);
  std::vector<Eigen::Index> active{start};
  std::vector<double> weights{1.0};

  auto current_point = [&] {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < active.size(); ++k) {
      x += weights[k] * z.row(active[k]).transpose();
    }
    return x;
  };

  Eigen::VectorXd x = current_point();
  for (int major = 0; major < 10000; ++major) {
    const double xx = x.squaredNorm();
    if (xx <= 1e-24 * scale) break;
    const Eigen::VectorXd scores = z * x;
    Eigen::Index j = 0;
    scores.minCoeff(&j);
    if (scores(j) >= xx - kOptTol * scale) break;
    if (std::find(active.begin(), active.end(), j) != active.end()) break;
    active.push_back(j);
    weights.push_back(0.0);

    for (int minor = 0; minor < 10000; ++minor) {
      const Eigen::VectorXd alpha = detail::affine_minimizer(gram, active);
      if (alpha.minCoeff() > kWeightTol) {
        for (std::size_t k = 0; k < active.size(); ++k) {
          weights[k] = alpha(static_cast<Eigen::Index>(k));
        }
        break;
      }
      double theta = 1.0;
      for (std::size_t k = 0; k < active.size(); ++k) {
        if (alpha(k) <= kWeightTol) {
          const double denom = weights[k] - alpha(k);
          if (denom > 0.0) theta = std::min(theta, weights[k] / denom);
        }
      }
      std::vector<Eigen::Index> kept;
      std::vector<double> kept_w;
      double total = 0.0;
      for (std::size_t k = 0; k < active.size(); ++k) {
        const double v = theta * alpha(k) + (1.0 - theta) * weights[k];
        if (v > kWeightTol) {
          kept.push_back(active[k]);
          kept_w.push_back(v);
          total += v;
        }
      }
      for (double& v : kept_w) v /= total;
      active = std::move(kept);
      weights = std::move(kept_w);
      if (active.size() == 1) break;
    }
    x = current_point();
  }

  MarginCertificate cert;
  const double v_norm = x.norm();
  cert.upper_bound = v_norm;
  if (!(v_norm > 1e-12 * std::sqrt(scale))) return cert;

  Vector w(d);
  for (std::size_t j = 0; j < d; ++j) w[j] = x(static_cast<Eigen::Index>(j)) / v_norm;
  const double achieved = margin_of(w, data);
  if (achieved > 0.0) {
    cert.gamma = achieved;
    cert.direction = std::move(w);
    cert.separable = true;
  }
  return cert;
}

inline double brute_force_margin(const Dataset& data) { return max_margin(data).gamma; }

// ---------------------------------------------------------------------------
// Bound checks

// Unit maximizer of (sum_t p_t)^T M_u, namely v / ||v|| with
// v = sum_t sum_i p_t,i y_i x_i.
inline Vector best_unit_comparator(std::span<const SimplexWeights> p_history,
                                   const Dataset& data) {
  if (p_history.empty()) throw std::invalid_argument("empty distribution history");
  std::vector<double> total(data.size(), 0.0);
  for (const auto& p : p_history) {
    detail::require_same_dim(p.size(), data.size(), "best_unit_comparator");
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += p[i];
  }
  Vector v = Vector::zeros(data.dim());
  for (std::size_t i = 0; i < data.size(); ++i) {
    detail::add_scaled(v, total[i] * data[i].y.sign(), data[i].x);
  }
  const double v_norm = norm(v);
  if (!(v_norm > 0.0)) throw std::domain_error("degenerate history: zero comparator direction");
  for (std::size_t j = 0; j < v.size(); ++j) v[j] /= v_norm;
  return v;
}

namespace detail {

inline void require_trace(const RunTrace& trace, const Dataset& data) {
  if (trace.rounds.empty()) throw std::invalid_argument("empty trace");
  require_same_dim(trace.p0.size(), data.size(), "trace");
}

}  // namespace detail

// LHS/RHS of every bound for every prefix T = 1..rounds, recomputed from the
// stored distributions and margins alone.
inline std::vector<BoundReport> bound_reports(const RunTrace& trace, const Dataset& data,
                                              double gamma) {
  detail::require_trace(trace, data);
  const GameConstants g = game_constants(data);
  const std::size_t n = data.size();
  const double r2 = g.r * g.r;

  std::vector<double> p_sum(n, 0.0);
  std::vector<double> cum(n, 0.0);
  double played = 0.0;      // sum_t p_t^T M_{w_t}
  double movement = 0.0;    // sum_t ||p_t - p_{t-1}||_1^2
  const std::vector<double>* prev = &trace.p0;

  std::vector<BoundReport> out;
  out.reserve(trace.rounds.size());
  for (std::size_t k = 0; k < trace.rounds.size(); ++k) {
    const RoundRecord& rec = trace.rounds[k];
    detail::require_same_dim(rec.p.size(), n, "trace round");
    detail::require_same_dim(rec.margins.size(), n, "trace round");
    const double step = l1_distance(rec.p, *prev);
    movement += step * step;
    played += expectation(rec.p, rec.margins);
    for (std::size_t i = 0; i < n; ++i) {
      p_sum[i] += rec.p[i];
      cum[i] += rec.margins[i];
    }
    prev = &rec.p;

    Vector v = Vector::zeros(data.dim());
    for (std::size_t i = 0; i < n; ++i) {
      detail::add_scaled(v, p_sum[i] * data[i].y.sign(), data[i].x);
    }
    const double min_cum = min_of(cum);
    const double T = static_cast<double>(k + 1);

    BoundReport b;
    b.T = k + 1;
    b.H = g.H;
    b.lambda = g.lambda;
    b.eta = g.eta;
    b.learner_lhs = norm(v) - played;
    b.learner_rhs = 0.5 + (r2 / 2.0) * movement;
    b.data_lhs = played - min_cum;
    b.data_rhs = g.H / g.eta - (g.lambda / (2.0 * g.eta)) * movement;
    b.gap_lhs = gamma - min_cum / T;
    b.gap_rhs = (g.lambda + 2.0 * g.H * r2) / (2.0 * g.lambda * T);
    out.push_back(b);
  }
  return out;
}

// Learner bound at the full horizon, against the best unit comparator (and
// hence against every unit comparator).
inline BoundPair check_learner_bound(const RunTrace& trace, const Dataset& data) {
  detail::require_trace(trace, data);
  std::vector<SimplexWeights> history;
  history.reserve(trace.rounds.size());
  double played = 0.0, movement = 0.0;
  const std::vector<double>* prev = &trace.p0;
  for (const auto& rec : trace.rounds) {
    history.push_back(SimplexWeights::from_probs(rec.p));
    played += expectation(rec.p, rec.margins);
    const double step = l1_distance(rec.p, *prev);
    movement += step * step;
    prev = &rec.p;
  }
  std::vector<double> p_sum(data.size(), 0.0);
  for (const auto& rec : trace.rounds) {
    for (std::size_t i = 0; i < p_sum.size(); ++i) p_sum[i] += rec.p[i];
  }
  double comparator_value = 0.0;
  try {
    const Vector u = best_unit_comparator(history, data);
    for (std::size_t i = 0; i < data.size(); ++i) {
      comparator_value += p_sum[i] * data[i].y.sign() * detail::dot(u, data[i].x);
    }
  } catch (const std::domain_error&) {
    // sum_t x~_t = 0: every unit comparator scores zero
  }
  const double r = data.radius();
  return {comparator_value - played, 0.5 + (r * r / 2.0) * movement};
}

inline BoundPair check_data_bound(const RunTrace& trace, const Dataset& data, double H) {
  detail::require_trace(trace, data);
  const double eta = step_size(data);
  std::vector<double> cum(data.size(), 0.0);
  double played = 0.0, movement = 0.0;
  const std::vector<double>* prev = &trace.p0;
  for (const auto& rec : trace.rounds) {
    const double step = l1_distance(rec.p, *prev);
    movement += step * step;
    played += expectation(rec.p, rec.margins);
    for (std::size_t i = 0; i < cum.size(); ++i) cum[i] += rec.margins[i];
    prev = &rec.p;
  }
  return {played - min_of(cum), H / eta - (1.0 / (2.0 * eta)) * movement};
}

inline BoundPair check_gap_bound(const RunTrace& trace, const Dataset& data, double gamma) {
  const BoundReport b = bound_reports(trace, data, gamma).back();
  return {b.gap_lhs, b.gap_rhs};
}

inline BoundPair check_gap_bound(const RunTrace& trace, const Dataset& data) {
  return check_gap_bound(trace, data, brute_force_margin(data));
}

}  // namespace optsep

#endif  // OPTSEP_REGRET_HPP
