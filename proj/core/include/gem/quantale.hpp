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

#ifndef GEM_QUANTALE_HPP
#define GEM_QUANTALE_HPP

#include "gem/rational.hpp"
#include "gem/report.hpp"

#include <span>
#include <string>
#include <vector>

namespace gem {

enum class QuantaleKind { Bool, Unit };

/// A commutative unital quantale (V, ⊗, k, ≤) on a carrier of rationals.
///
/// Elements are always exact rationals. The Boolean quantale uses 0 for ⊥ and
/// 1 for ⊤. The unit interval quantale keeps the numeric spelling of a
/// distance while its lattice order is the reverse of the numeric one, so
/// "a ≤ b" below always means the quantale order.
///
/// Public operations validate membership and throw DomainError; subclasses
/// implement the unchecked `*_impl` hooks.
class Quantale {
 public:
  virtual ~Quantale() = default;

  virtual std::string name() const = 0;
  virtual QuantaleKind kind() const = 0;
  virtual bool contains(const Rational& a) const = 0;
  virtual Rational unit() const = 0;
  virtual Rational bottom() const = 0;
  virtual Rational top() const = 0;

  Rational tensor(const Rational& a, const Rational& b) const;
  Rational hom(const Rational& b, const Rational& c) const;
  bool leq(const Rational& a, const Rational& b) const;
  Rational join(const Rational& a, const Rational& b) const;
  Rational meet(const Rational& a, const Rational& b) const;
  Rational join(std::span<const Rational> family) const;
  Rational meet(std::span<const Rational> family) const;

  /// Symmetrized self-distance [a,b] ∧ [b,a] of the quantale as a V-category.
  Rational sym_dist(const Rational& a, const Rational& b) const;

  void require(const Rational& a) const;

 protected:
  virtual Rational tensor_impl(const Rational& a, const Rational& b) const = 0;
  virtual Rational hom_impl(const Rational& b, const Rational& c) const = 0;
  virtual bool leq_impl(const Rational& a, const Rational& b) const = 0;
  virtual Rational join_impl(const Rational& a, const Rational& b) const = 0;
  virtual Rational meet_impl(const Rational& a, const Rational& b) const = 0;
};

/// 2 = ({⊥,⊤}, ∧, ⊤, ≤); [b,c] is implication.
class Bool2 final : public Quantale {
 public:
  std::string name() const override { return "bool"; }
  QuantaleKind kind() const override { return QuantaleKind::Bool; }
  bool contains(const Rational& a) const override { return a == 0 || a == 1; }
  Rational unit() const override { return 1; }
  Rational bottom() const override { return 0; }
  Rational top() const override { return 1; }

 protected:
  Rational tensor_impl(const Rational& a, const Rational& b) const override;
  Rational hom_impl(const Rational& b, const Rational& c) const override;
  bool leq_impl(const Rational& a, const Rational& b) const override { return a <= b; }
  Rational join_impl(const Rational& a, const Rational& b) const override;
  Rational meet_impl(const Rational& a, const Rational& b) const override;
};

/// [0,1] with truncated addition, unit 0 and the reversed numeric order.
/// Bottom is 1, top is 0, joins are numeric infima.
class UnitIntervalOplus : public Quantale {
 public:
  std::string name() const override { return "unit"; }
  QuantaleKind kind() const override { return QuantaleKind::Unit; }
  bool contains(const Rational& a) const override { return a >= 0 && a <= 1; }
  Rational unit() const override { return 0; }
  Rational bottom() const override { return 1; }
  Rational top() const override { return 0; }

 protected:
  Rational tensor_impl(const Rational& a, const Rational& b) const override;
  Rational hom_impl(const Rational& b, const Rational& c) const override;
  bool leq_impl(const Rational& a, const Rational& b) const override { return a >= b; }
  Rational join_impl(const Rational& a, const Rational& b) const override;
  Rational meet_impl(const Rational& a, const Rational& b) const override;
};

const Quantale& bool2();
const Quantale& unit_interval();
const Quantale& quantale_of(QuantaleKind kind);
QuantaleKind parse_quantale_kind(const std::string& name);

/// Exhaustive check of the quantale axioms over `sample`: monoid laws, the
/// lattice laws of ≤/∨/∧, join-continuity over every subfamily of the sample
/// (including the empty family) and the tensor/hom adjunction.
CheckReport check_quantale_laws(const Quantale& q, std::span<const Rational> sample);

/// The full carrier of 2, or the dyadic grid {0, 1/4, 1/2, 3/4, 1}.
std::vector<Rational> default_sample(const Quantale& q);

}  // namespace gem

#endif  // GEM_QUANTALE_HPP
