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

#include "optsep/perceptron.hpp"

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "optsep/datagen.hpp"
#include "optsep/regret.hpp"

namespace optsep {
namespace {

// Integer-arithmetic Perceptron, independent of the library vector code.
struct IntegerPerceptron {
  std::uint64_t mistakes = 0, passes = 0, ops = 0;
};

IntegerPerceptron integer_perceptron(const std::vector<std::vector<long long>>& x,
                                     const std::vector<long long>& y) {
  IntegerPerceptron out;
  std::vector<long long> w(x[0].size(), 0);
  for (;;) {
    std::uint64_t pass_mistakes = 0;
    ++out.passes;
    for (std::size_t i = 0; i < x.size(); ++i) {
      long long s = 0;
      for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * x[i][j];
      ++out.ops;
      if (y[i] * s <= 0) {
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += y[i] * x[i][j];
        ++out.ops;
        ++pass_mistakes;
      }
    }
    out.mistakes += pass_mistakes;
    if (pass_mistakes == 0) return out;
  }
}

TEST(PerceptronTest, SinglePoint) {
  const Dataset d({{Vector{1.0}, Label::positive()}});
  const RunResult r = perceptron_run(d, 10);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.mistakes, 1u);
  EXPECT_EQ(r.rounds, 2u);
  EXPECT_EQ(r.total_ops, 3u);
  EXPECT_EQ(r.separator, (Vector{1}));
}

TEST(PerceptronTest, Eq2OneMatchesSinglePoint) {
  const RunResult r = perceptron_run(gen_eq2(1), 10);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.mistakes, 1u);
  EXPECT_EQ(r.total_ops, 3u);
}

TEST(PerceptronTest, MatchesIntegerOracleOnEq2) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const Dataset d = gen_eq2(n);
    std::vector<std::vector<long long>> x;
    std::vector<long long> y;
    for (const auto& ex : d) {
      x.emplace_back();
      for (double v : ex.x) x.back().push_back(static_cast<long long>(v));
      y.push_back(ex.y.value());
    }
    const IntegerPerceptron oracle = integer_perceptron(x, y);
    const RunResult r = perceptron_run(d, 1'000'000);
    ASSERT_TRUE(r.converged);
    EXPECT_EQ(*r.mistakes, oracle.mistakes) << "n = " << n;
    EXPECT_EQ(r.rounds, oracle.passes) << "n = " << n;
    EXPECT_EQ(r.total_ops, oracle.ops) << "n = " << n;
    EXPECT_GT(margin_of(r.separator, d), 0.0);
  }
}

TEST(PerceptronTest, Eq2MistakesGrowExponentially) {
  std::uint64_t prev = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const RunResult r = perceptron_run(gen_eq2(n), 1'000'000);
    ASSERT_TRUE(r.converged);
    if (n >= 2) {
      EXPECT_GE(*r.mistakes, 2 * prev) << "n = " << n;
    }
    if (n >= 4) {
      const double per_pass = static_cast<double>(*r.mistakes) / static_cast<double>(r.rounds);
      EXPECT_NEAR(per_pass, 2.0, 0.1) << "n = " << n;
    }
    prev = *r.mistakes;
  }
}

TEST(PerceptronTest, ContradictoryLabelsHitTheCap) {
  const Dataset d({{Vector{1.0}, Label::positive()}, {Vector{1.0}, Label::negative()}});
  const RunResult r = perceptron_run(d, 50);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.rounds, 50u);
  EXPECT_THROW(perceptron_run(d, 0), std::invalid_argument);
}

TEST(PerceptronTest, PassAccountingAndMonotoneMistakes) {
  const Dataset d = gen_eq2(4);
  PerceptronState s;
  s.w = Vector::zeros(4);
  std::uint64_t last = 0;
  for (int k = 0; k < 10; ++k) {
    const OpCounter before = s.counter;
    const std::uint64_t m = perceptron_pass(s, d);
    EXPECT_EQ(s.counter.inner_products - before.inner_products, 4u);
    EXPECT_EQ(s.counter.additions - before.additions, m);
    EXPECT_GE(s.mistakes, last);
    last = s.mistakes;
  }
}

TEST(PerceptronTest, ClassicalMistakeBound) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Dataset d = gen_random_separable(2 + seed % 15, 1 + seed % 7, 0.05 + 0.005 * seed, seed);
    const double gamma = brute_force_margin(d);
    ASSERT_GT(gamma, 0.0);
    const RunResult r = perceptron_run(d, 1'000'000);
    ASSERT_TRUE(r.converged);
    const double bound = (d.radius() / gamma) * (d.radius() / gamma);
    EXPECT_LE(static_cast<double>(*r.mistakes), bound) << "seed " << seed;
  }
}

}  // namespace
}  // namespace optsep
