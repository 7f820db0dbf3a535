/*
 * Copyright 2026 The graded-em Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GEM_SUITES_HPP
#define GEM_SUITES_HPP

#include "gem/expressivity.hpp"
#include "gem/logic.hpp"
#include "gem/monad.hpp"
#include "gem/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gem {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Random machines per preset for the machine-corpus suites.
  std::size_t machines = 10;
  std::size_t max_states = 5;
  std::size_t letters = 2;
  std::size_t bool_depth = 8;
  std::size_t rational_depth = 6;
  /// Random operator applications per depth in sampled closures.
  std::size_t samples = 64;
  EnumerationOptions enumeration;
};

/// The four shipped monad kinds, each paired with its preset quantale.
const std::vector<MonadKind>& preset_kinds();

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one named suite; "all" runs every other suite in order.
CheckReport run_suite(const std::string& name, const SuiteOptions& opt = {});

/// The machine corpus shared by expressivity, invariance and separation:
/// machine i has 1 + i % max_states states and its own derived seed.
Machine corpus_machine(MonadKind kind, std::size_t i, const SuiteOptions& opt);

/// Depth used for a preset: bool_depth for Boolean outputs, else rational_depth.
std::size_t corpus_depth(MonadKind kind, const SuiteOptions& opt);

/// Disjunction for the Boolean presets; fuzzy negation plus five random
/// dyadic convex combinations otherwise.
std::vector<PropOp> invariance_ops(MonadKind kind, std::uint64_t seed);

/// Folds a report that is expected to fail: a failure becomes a note, a pass
/// becomes a violation of the aggregate.
void absorb_negative(CheckReport& into, const CheckReport& negative);

}  // namespace gem

#endif  // GEM_SUITES_HPP
