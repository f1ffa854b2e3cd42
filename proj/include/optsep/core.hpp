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

// Dense vectors with operation accounting, labeled datasets, simplex
// weights and margin computations shared by every solver.
//
// Accounting convention: one inner product between two vectors in R^d is
// one unit, one (scaled) vector addition is one unit. Scalar work such as
// exponentials, normalization or a min over n scalars is free.

#ifndef OPTSEP_CORE_HPP
#define OPTSEP_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace optsep {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tally of counted vector operations. Never decreases during a run.
struct OpCounter {
  std::uint64_t inner_products = 0;
  std::uint64_t additions = 0;

  std::uint64_t total() const { return inner_products + additions; }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim, 0.0) {}
  Vector(std::initializer_list<double> coords) : coords_(coords) {}
  explicit Vector(std::vector<double> coords) : coords_(std::move(coords)) {}

  static Vector zeros(std::size_t dim) { return Vector(dim); }

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }

  double operator[](std::size_t j) const { return coords_[j]; }
  double& operator[](std::size_t j) { return coords_[j]; }

  const double* data() const { return coords_.data(); }
  double* data() { return coords_.data(); }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  std::span<const double> span() const { return coords_; }
  const std::vector<double>& coords() const { return coords_; }

  bool all_finite() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](double v) { return std::isfinite(v); });
  }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](double v) { return v == 0.0; });
  }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

namespace detail {

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

// Fixed summation order (four interleaved partial sums), so results are
// reproducible bit for bit.
inline double dot(const double* a, const double* b, std::size_t d) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t j = 0;
  for (; j + 4 <= d; j += 4) {
    s0 += a[j] * b[j];
    s1 += a[j + 1] * b[j + 1];
    s2 += a[j + 2] * b[j + 2];
    s3 += a[j + 3] * b[j + 3];
  }
  for (; j < d; ++j) s0 += a[j] * b[j];
  return (s0 + s1) + (s2 + s3);
}

inline double dot(const Vector& a, const Vector& b) {
  return dot(a.data(), b.data(), a.size());
}

// target += alpha * a
inline void add_scaled(Vector& target, double alpha, const Vector& a) {
  double* t = target.data();
  const double* s = a.data();
  for (std::size_t j = 0, d = a.size(); j < d; ++j) t[j] += alpha * s[j];
}

}  // namespace detail

// Euclidean norm. Uncounted: it is scalar bookkeeping on a single vector.
inline double norm(const Vector& v) { return std::sqrt(detail::dot(v, v)); }

inline double inner(const Vector& a, const Vector& b, OpCounter& counter) {
  detail::require_same_dim(a.size(), b.size(), "inner");
  ++counter.inner_products;
  return detail::dot(a, b);
}

// alpha * a + b
inline Vector axpy(double alpha, const Vector& a, const Vector& b,
                   OpCounter& counter) {
  detail::require_same_dim(a.size(), b.size(), "axpy");
  ++counter.additions;
  Vector out = b;
  detail::add_scaled(out, alpha, a);
  return out;
}

// In-place form of axpy: target += alpha * a. Same accounting.
inline void axpy_inplace(double alpha, const Vector& a, Vector& target,
                         OpCounter& counter) {
  detail::require_same_dim(a.size(), target.size(), "axpy");
  ++counter.additions;
  detail::add_scaled(target, alpha, a);
}

// Binary label, exactly +1 or -1.
class Label {
 public:
  static constexpr Label positive() { return Label(1); }
  static constexpr Label negative() { return Label(-1); }

  static Label from_int(int y) {
    if (y != 1 && y != -1) {
      throw std::invalid_argument("label must be +1 or -1, got " +
                                  std::to_string(y));
    }
    return Label(y);
  }

  constexpr int value() const { return value_; }
  constexpr double sign() const { return static_cast<double>(value_); }

  friend constexpr bool operator==(Label, Label) = default;

 private:
  constexpr explicit Label(int y) : value_(y) {}
  int value_;
};

struct LabeledExample {
  Vector x;
  Label y;

  friend bool operator==(const LabeledExample&, const LabeledExample&) = default;
};

// n >= 1 labeled points sharing one dimension d >= 1, with the tight radius
// r = max_i ||x_i|| cached at construction.
class Dataset {
 public:
  explicit Dataset(std::vector<LabeledExample> examples)
      : examples_(std::move(examples)) {
    if (examples_.empty()) {
      throw std::invalid_argument("dataset must contain at least one example");
    }
    dim_ = examples_.front().x.size();
    if (dim_ == 0) {
      throw std::invalid_argument("dataset dimension must be at least 1");
    }
    double max_norm = 0.0;
    for (std::size_t i = 0; i < examples_.size(); ++i) {
      const Vector& x = examples_[i].x;
      if (x.size() != dim_) {
        throw DimensionError("example " + std::to_string(i) + " has dimension " +
                             std::to_string(x.size()) + ", expected " +
                             std::to_string(dim_));
      }
      if (!x.all_finite()) {
        throw std::invalid_argument("example " + std::to_string(i) +
                                    " has a non-finite coordinate");
      }
      max_norm = std::max(max_norm, norm(x));
    }
    if (!(max_norm > 0.0)) {
      throw std::invalid_argument("dataset radius must be positive (all points are zero)");
    }
    radius_ = max_norm;
  }

  std::size_t size() const { return examples_.size(); }
  std::size_t dim() const { return dim_; }
  double radius() const { return radius_; }

  const LabeledExample& operator[](std::size_t i) const { return examples_[i]; }
  const std::vector<LabeledExample>& examples() const { return examples_; }
  auto begin() const { return examples_.begin(); }
  auto end() const { return examples_.end(); }

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.examples_ == b.examples_;
  }

 private:
  std::vector<LabeledExample> examples_;
  std::size_t dim_ = 0;
  double radius_ = 0.0;
};

// Point of the open probability simplex. The log weights are the source of
// truth; probs() is a cache refreshed on every construction.
class SimplexWeights {
 public:
  static SimplexWeights uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("simplex dimension must be positive");
    return SimplexWeights(
        std::vector<double>(n, -std::log(static_cast<double>(n))));
  }

  // Normalizes arbitrary finite log weights with a max-shifted log-sum-exp.
  static SimplexWeights from_log_weights(std::vector<double> log_weights) {
    if (log_weights.empty()) {
      throw std::invalid_argument("simplex dimension must be positive");
    }
    const double shift =
        *std::max_element(log_weights.begin(), log_weights.end());
    if (!std::isfinite(shift)) {
      throw std::domain_error("log weights must be finite");
    }
    double sum = 0.0;
    for (double& v : log_weights) {
      v -= shift;
      sum += std::exp(v);
    }
    const double log_sum = std::log(sum);
    for (double& v : log_weights) v -= log_sum;
    return SimplexWeights(std::move(log_weights));
  }

  // Strictly positive weights, renormalized.
  static SimplexWeights from_probs(std::span<const double> probs) {
    std::vector<double> logs(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (!(probs[i] > 0.0) || !std::isfinite(probs[i])) {
        throw std::domain_error("simplex weights must be strictly positive");
      }
      logs[i] = std::log(probs[i]);
    }
    return from_log_weights(std::move(logs));
  }

  std::size_t size() const { return log_probs_.size(); }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<double>& log_probs() const { return log_probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  explicit SimplexWeights(std::vector<double> log_probs)
      : log_probs_(std::move(log_probs)), probs_(log_probs_.size()) {
    for (std::size_t i = 0; i < log_probs_.size(); ++i) {
      probs_[i] = std::exp(log_probs_[i]);
    }
  }

  std::vector<double> log_probs_;
  std::vector<double> probs_;
};

// M_w = [y_1 <w, x_1>, ..., y_n <w, x_n>]
struct MarginVector {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double min() const { return *std::min_element(values.begin(), values.end()); }
};

// p^T v. Scalar work, uncounted.
inline double expectation(std::span<const double> p, std::span<const double> v) {
  detail::require_same_dim(p.size(), v.size(), "expectation");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * v[i];
  return s;
}

inline MarginVector margin_vector(const Vector& w, const Dataset& data,
                                  OpCounter& counter) {
  detail::require_same_dim(w.size(), data.dim(), "margin_vector");
  MarginVector m;
  m.values.reserve(data.size());
  for (const auto& ex : data) {
    m.values.push_back(ex.y.sign() * inner(w, ex.x, counter));
  }
  return m;
}

// Signed margin min_i y_i <w, x_i> / ||w||. Negative means some point is
// misclassified.
inline double margin_of(const Vector& w, const Dataset& data) {
  detail::require_same_dim(w.size(), data.dim(), "margin_of");
  const double w_norm = norm(w);
  if (!(w_norm > 0.0)) {
    throw std::domain_error("margin is undefined for the zero vector");
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& ex : data) {
    best = std::min(best, ex.y.sign() * detail::dot(w, ex.x));
  }
  return best / w_norm;
}

// sum_i p_i y_i x_i, one counted addition per example.
inline Vector pseudoexample(std::span<const double> p, const Dataset& data,
                            OpCounter& counter) {
  detail::require_same_dim(p.size(), data.size(), "pseudoexample");
  Vector out = Vector::zeros(data.dim());
  for (std::size_t i = 0; i < data.size(); ++i) {
    axpy_inplace(p[i] * data[i].y.sign(), data[i].x, out, counter);
  }
  return out;
}

inline Vector pseudoexample(const SimplexWeights& p, const Dataset& data,
                            OpCounter& counter) {
  return pseudoexample(std::span<const double>(p.probs()), data, counter);
}

}  // namespace optsep

#endif  // OPTSEP_CORE_HPP
