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

#ifndef GEM_KANTOROVICH_HPP
#define GEM_KANTOROVICH_HPP

#include "gem/monad.hpp"
#include "gem/vcat.hpp"

#include <cstddef>
#include <vector>

namespace gem {

struct Coupling {
  Rational cost;
  /// Row-major over (support of mu) x (support of nu).
  std::vector<Rational> flow;
};

/// Optimal coupling of two distributions over the points of `d`, solved
/// exactly by the transportation simplex (northwest-corner start, MODI
/// potentials, Bland's rule against cycling on degenerate bases).
/// Needs a symmetric space over the unit interval quantale.
Coupling optimal_coupling(const FinVCat& d, const TValue<std::size_t>& mu, const TValue<std::size_t>& nu);

/// min over couplings γ of Σ γ(x,y)·d(x,y).
Rational kantorovich(const FinVCat& d, const TValue<std::size_t>& mu, const TValue<std::size_t>& nu);

}  // namespace gem

#endif  // GEM_KANTOROVICH_HPP
