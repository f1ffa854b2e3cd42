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

// Dataset generators and the CSV format.
//
// CSV: one example per line, label first (1, +1 or -1) followed by the d
// feature columns, ',' separated, LF line endings, no header unless asked.
// Values are written with 17 significant digits so reading back is exact.

#ifndef OPTSEP_DATAGEN_HPP
#define OPTSEP_DATAGEN_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "optsep/core.hpp"

namespace optsep {

enum class DatasetKind { kEq2, kRandomSeparable, kCsv };

struct DatasetSpec {
  DatasetKind kind = DatasetKind::kEq2;
  std::size_t n = 1;
  std::size_t d = 1;
  double margin_target = 0.1;
  std::uint64_t seed = 0;
};

// The alternating-prefix family on which Perceptron needs exponentially many
// updates. Point i (1-indexed) lives in R^n:
//   x_i = ((-1)^i, ..., (-1)^i, (-1)^{i+1}, 0, ..., 0)   (i-1 copies, then one)
//   y_i = (-1)^{i+1}
inline Dataset gen_eq2(std::size_t n) {
  if (n < 1) throw std::invalid_argument("eq2 dataset needs n >= 1");
  std::vector<LabeledExample> examples;
  examples.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double even = (i % 2 == 0) ? 1.0 : -1.0;  // (-1)^i
    Vector x(n);
    for (std::size_t j = 0; j + 1 < i; ++j) x[j] = even;
    x[i - 1] = -even;
    examples.push_back({std::move(x), Label::from_int(static_cast<int>(-even))});
  }
  return Dataset(std::move(examples));
}

// Uniform points in the unit ball, labeled by a random unit w*, keeping only
// points with |<w*, x>| >= margin_target. Deterministic in the seed.
inline Dataset gen_random_separable(std::size_t n, std::size_t d, double margin_target,
                                    std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("random dataset needs n, d >= 1");
  if (!(margin_target > 0.0 && margin_target < 1.0)) {
    throw std::invalid_argument("margin target must lie in (0, 1)");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  auto random_direction = [&] {
    Vector v(d);
    double nv = 0.0;
    while (!(nv > 0.0)) {
      for (std::size_t j = 0; j < d; ++j) v[j] = gauss(rng);
      nv = norm(v);
    }
    for (std::size_t j = 0; j < d; ++j) v[j] /= nv;
    return v;
  };

  const Vector w_star = random_direction();
  const double inv_d = 1.0 / static_cast<double>(d);

  std::vector<LabeledExample> examples;
  examples.reserve(n);
  constexpr std::uint64_t kMaxDraws = 1'000'000;
  std::uint64_t draws = 0;
  while (examples.size() < n) {
    if (++draws > kMaxDraws) {
      throw std::runtime_error("rejection sampling failed: margin target too large for d = " +
                               std::to_string(d));
    }
    Vector x = random_direction();
    const double radius = std::pow(unif(rng), inv_d);
    for (std::size_t j = 0; j < d; ++j) x[j] *= radius;
    const double s = detail::dot(w_star, x);
    if (std::abs(s) < margin_target) continue;
    examples.push_back({std::move(x), s > 0.0 ? Label::positive() : Label::negative()});
  }
  return Dataset(std::move(examples));
}

inline Dataset generate(const DatasetSpec& spec) {
  switch (spec.kind) {
    case DatasetKind::kEq2:
      if (spec.d != spec.n) throw std::invalid_argument("eq2 dataset requires d = n");
      return gen_eq2(spec.n);
    case DatasetKind::kRandomSeparable:
      return gen_random_separable(spec.n, spec.d, spec.margin_target, spec.seed);
    case DatasetKind::kCsv:
      break;
  }
  throw std::invalid_argument("csv datasets are read, not generated");
}

// ---------------------------------------------------------------------------
// CSV

class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace detail

inline Dataset read_csv(std::istream& in, bool has_header = false) {
  std::vector<LabeledExample> examples;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (has_header && line_no == 1) continue;
    if (detail::trim(line).empty()) continue;

    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() < 2) throw CsvError("expected a label and at least one feature", line_no);
    if (width == 0) width = fields.size();
    if (fields.size() != width) {
      throw CsvError("wrong number of columns (expected " + std::to_string(width) + ", got " +
                         std::to_string(fields.size()) + ")",
                     line_no);
    }

    const std::string_view label = detail::trim(fields[0]);
    Label y = Label::positive();
    if (label == "1" || label == "+1") {
      y = Label::positive();
    } else if (label == "-1") {
      y = Label::negative();
    } else {
      throw CsvError("invalid label", line_no);
    }

    Vector x(width - 1);
    for (std::size_t j = 1; j < width; ++j) {
      if (!detail::parse_double(fields[j], x[j - 1])) {
        throw CsvError("invalid number in column " + std::to_string(j + 1), line_no);
      }
    }
    examples.push_back({std::move(x), y});
  }
  if (examples.empty()) throw CsvError("no examples", line_no);
  return Dataset(std::move(examples));
}

inline Dataset read_csv(const std::string& path, bool has_header = false) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_csv(in, has_header);
}

inline void write_csv(const Dataset& data, std::ostream& out) {
  for (const auto& ex : data) {
    out << (ex.y.value() > 0 ? "1" : "-1");
    for (double v : ex.x) out << ',' << format_double(v);
    out << '\n';
  }
}

inline void write_csv(const Dataset& data, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_csv(data, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace optsep

#endif  // OPTSEP_DATAGEN_HPP
