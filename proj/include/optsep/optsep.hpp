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

#ifndef OPTSEP_OPTSEP_HPP
#define OPTSEP_OPTSEP_HPP

#include "optsep/core.hpp"
#include "optsep/datagen.hpp"
#include "optsep/optimistic.hpp"
#include "optsep/perceptron.hpp"
#include "optsep/plot.hpp"
#include "optsep/regret.hpp"
#include "optsep/report.hpp"
#include "optsep/sweep.hpp"

#endif  // OPTSEP_OPTSEP_HPP
