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

#ifndef GEM_VCAT_HPP
#define GEM_VCAT_HPP

#include "gem/quantale.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gem {

/// A finite V-category: a carrier of labelled points with a dense
/// quantale-valued distance table. The `symmetric` and `separated` flags are
/// claims that check_vcat verifies; the constructor only validates shape.
class FinVCat {
 public:
  FinVCat(const Quantale& q, std::vector<std::string> labels, std::vector<Rational> table,
          bool symmetric = true, bool separated = false);

  /// d(x,x) = k and d(x,y) = bottom otherwise.
  static FinVCat discrete(const Quantale& q, std::vector<std::string> labels);
  static FinVCat discrete(const Quantale& q, std::size_t n);

  /// The given quantale elements with the symmetrized distance [a,b] ∧ [b,a].
  static FinVCat symmetrized_subspace(const Quantale& q, std::span<const Rational> points);

  const Quantale& quantale() const { return *q_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rational& d(std::size_t x, std::size_t y) const { return table_[x * size() + y]; }
  bool symmetric() const { return symmetric_; }
  bool separated() const { return separated_; }

 private:
  const Quantale* q_;
  std::vector<std::string> labels_;
  std::vector<Rational> table_;
  bool symmetric_;
  bool separated_;
};

/// Categorical product of `index_size` copies of `base`: carrier is all
/// functions index -> base (enumerated in mixed radix, index 0 most
/// significant), distance the componentwise meet. The empty power is the
/// one-point space with distance top.
FinVCat product_power(const FinVCat& base, std::size_t index_size);

/// Decodes a product_power carrier element back into its components.
std::vector<std::size_t> product_components(std::size_t element, std::size_t base_size,
                                            std::size_t index_size);

/// A map between finite V-categories known to be non-expansive
/// (d(x,y) ≤ d(fx,fy)). Construction verifies this eagerly.
class VFunctor {
 public:
  VFunctor(const FinVCat& domain, std::shared_ptr<const FinVCat> codomain, std::vector<std::size_t> map);

  const FinVCat& codomain() const { return *codomain_; }
  std::size_t operator()(std::size_t x) const { return map_.at(x); }
  std::size_t domain_size() const { return map_.size(); }

 private:
  std::shared_ptr<const FinVCat> codomain_;
  std::vector<std::size_t> map_;
};

struct InitialityResult {
  bool initial = true;
  std::size_t x = 0;
  std::size_t y = 0;
  Rational domain_distance;
  Rational meet_distance;
  std::string witness() const;
};

/// Whether d(x,y) = ⋀_i d_i(f_i x, f_i y) for all pairs; the first pair that
/// breaks the equality is returned as witness.
InitialityResult is_initial_source(const FinVCat& domain, std::span<const VFunctor> maps);

/// Reflexivity, the tensor triangle law, and the symmetric/separated claims.
CheckReport check_vcat(const FinVCat& v);

}  // namespace gem

#endif  // GEM_VCAT_HPP
