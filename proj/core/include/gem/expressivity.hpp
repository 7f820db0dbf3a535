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

#ifndef GEM_EXPRESSIVITY_HPP
#define GEM_EXPRESSIVITY_HPP

#include "gem/logic.hpp"
#include "gem/vcat.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gem {

/// Whether {ev_λ · F h | h ∈ source, λ} is an initial source on
/// F A₀ = Ω × A₀^Σ (A₀+1 in the black-hole preset), where λ ranges over ⟨⊤⟩,
/// the letters and, for the black hole, the ⟨σ̄⟩. Ω is the test grid of the
/// signature; each source map is given by its values on A₀. The family
/// `source` must itself be initial on A₀.
CheckReport check_depth1_separation_F(const MooreSignature& sig, const FinVCat& a0,
                                      const std::vector<std::vector<Rational>>& source);

/// The shipped instances: discrete spaces of 1 to 3 points with their
/// characteristic maps over 2, and small rational metrics with their
/// distance-to-point maps over [0,1].
CheckReport check_depth1_separation_F(const MooreSignature& sig);

/// Per-depth equality of d^b and the word-fragment d^L for n ≤ N.
CheckReport check_expressivity(const Machine& m, std::size_t x, std::size_t y, std::size_t max_depth);
/// All state pairs of one machine.
CheckReport check_expressivity(const Machine& m, std::size_t max_depth);

/// d^b ≤ d^L (V-order) at every depth n ≤ N over the word fragment closed
/// under `samples` random applications of `ops`.
CheckReport check_invariance(const Machine& m, std::size_t x, std::size_t y, std::size_t max_depth,
                             const std::vector<PropOp>& ops, std::size_t samples = 64, std::uint64_t seed = 1);
CheckReport check_invariance(const Machine& m, std::size_t max_depth, const std::vector<PropOp>& ops,
                             std::size_t samples = 64, std::uint64_t seed = 1);

/// Black-hole case analysis: for every pair with different depth-N
/// behaviours some ⟨w⟩⟨⊤⟩ or ⟨w⟩⟨σ̄⟩ takes different values, and pairs with
/// equal behaviours agree on all of them.
CheckReport check_black_hole_separation(const Machine& m, std::size_t depth, bool via_behaviour = false);

/// The three-state X × X coalgebra under 𝒫 from the appendix: graded
/// tree-executability cannot tell x from y, uniform formulas cannot either,
/// but the non-uniform ◇(◇(⊤,⊤),⊤) does.
CheckReport appendix_counterexample(std::size_t max_depth = 5);

struct RandomMachineOptions {
  /// Probability (num/den) that a dist-bh transition is the black hole.
  std::uint64_t star_num = 1;
  std::uint64_t star_den = 4;
  std::size_t max_support = 3;
  /// Dist weights are multiples of 1/weight_denominator.
  std::size_t weight_denominator = 4;
};

/// Deterministic in all arguments. Outputs come from {0,1} or the dyadic
/// grid {0,1/4,1/2,3/4,1}.
Machine random_machine(MonadKind kind, QuantaleKind quantale, std::size_t states,
                       const std::vector<std::string>& alphabet, std::uint64_t seed,
                       const RandomMachineOptions& opt = {});

/// The preset quantale of a monad kind.
QuantaleKind preset_quantale(MonadKind kind);

}  // namespace gem

#endif  // GEM_EXPRESSIVITY_HPP
