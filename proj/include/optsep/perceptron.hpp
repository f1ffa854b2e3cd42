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

// Classical Perceptron with cyclic passes in index order.

#ifndef OPTSEP_PERCEPTRON_HPP
#define OPTSEP_PERCEPTRON_HPP

#include <cstdint>
#include <stdexcept>

#include "optsep/core.hpp"
#include "optsep/optimistic.hpp"

namespace optsep {

struct PerceptronState {
  Vector w;
  std::uint64_t pass_index = 0;
  std::uint64_t mistakes = 0;
  OpCounter counter;
};

// One pass over the data; returns the number of mistakes made in it.
// Each example costs one inner product, each mistake one more addition.
inline std::uint64_t perceptron_pass(PerceptronState& s, const Dataset& data) {
  std::uint64_t pass_mistakes = 0;
  for (const auto& ex : data) {
    const double y = ex.y.sign();
    if (y * inner(s.w, ex.x, s.counter) <= 0.0) {
      axpy_inplace(y, ex.x, s.w, s.counter);
      ++pass_mistakes;
    }
  }
  s.mistakes += pass_mistakes;
  ++s.pass_index;
  return pass_mistakes;
}

// Stops after the first pass without mistakes; that verification pass is
// counted like any other.
inline RunResult perceptron_run(const Dataset& data, std::uint64_t max_passes) {
  if (max_passes < 1) throw std::invalid_argument("max_passes must be at least 1");
  PerceptronState s;
  s.w = Vector::zeros(data.dim());

  bool converged = false;
  while (s.pass_index < max_passes) {
    if (perceptron_pass(s, data) == 0) {
      converged = true;
      break;
    }
  }

  RunResult result;
  result.separator = s.w;
  result.rounds = s.pass_index;
  result.total_ops = s.counter.total();
  result.converged = converged;
  result.mistakes = s.mistakes;
  if (!s.w.is_zero()) result.final_margin = margin_of(s.w, data);
  return result;
}

}  // namespace optsep

#endif  // OPTSEP_PERCEPTRON_HPP
