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

#ifndef GEM_TERM_HPP
#define GEM_TERM_HPP

#include "gem/monad.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace gem {

/// A dynamically typed element of a composite F/T type such as T F T X,
/// used to evaluate the law diagrams symbolically. F is the Moore shape
/// A × (−)^Σ; a kid may be Star when F carries the black hole (−+1).
class Term {
 public:
  enum class Tag { Atom, Star, Node, Monad };

  static Term atom(Rational value);
  static Term star();
  static Term node(Rational out, std::vector<Term> kids);
  static Term monad(TValue<Term> value);

  Tag tag() const { return tag_; }
  bool is_star() const { return tag_ == Tag::Star; }
  /// The atom itself, or the output component of a node.
  const Rational& value() const { return value_; }
  const std::vector<Term>& kids() const { return kids_; }
  const TValue<Term>& monad() const;

  std::string show() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend bool operator<(const Term& a, const Term& b);

 private:
  explicit Term(Tag tag) : tag_(tag) {}

  Tag tag_;
  Rational value_;
  std::vector<Term> kids_;
  std::shared_ptr<const TValue<Term>> monad_;
};

/// The data fixing F = A × (−)^Σ (or A × (−+1)^Σ), the monad and the output
/// algebra a: TA → A with A = Ω.
struct MooreSignature {
  MonadKind kind;
  std::size_t letters;
  AlgebraStructure algebra;

  /// The monad the law diagrams run over. The black-hole preset composes 𝒟
  /// with the collapse 𝒟(−+1) → 𝒟− + 1, so its diagrams use 𝒟 and put
  /// the +1 into F.
  MonadKind law_monad() const { return kind == MonadKind::DistBH ? MonadKind::Dist : kind; }
  bool star_kids() const { return kind == MonadKind::DistBH; }
  std::string name() const;
};

MooreSignature moore_signature(MonadKind kind, std::size_t letters);

using ZetaFn = std::function<Term(const MooreSignature&, const Term&)>;

Term term_eta(const MooreSignature& sig, const Term& x);
Term term_mu(const Term& tt);
Term term_tmap(const Term& t, const std::function<Term(const Term&)>& f);
/// F f: maps every non-Star kid.
Term term_fmap(const Term& node, const std::function<Term(const Term&)>& f);
/// F^depth f.
Term term_fpow(std::size_t depth, const Term& t, const std::function<Term(const Term&)>& f);

/// ζ_X(t) = (a(T π₁ t), σ ↦ T π_σ t), followed by the collapse when kids
/// may be Star.
Term term_zeta(const MooreSignature& sig, const Term& t);
/// ζ^{(0)} = id, ζ^{(n+1)} = F ζ^{(n)} · ζ_{F^n}.
Term term_zeta_n(const MooreSignature& sig, std::size_t n, const Term& t, const ZetaFn& zeta = term_zeta);
/// μ^{m,n} = F^{m+n} μ · F^m ζ^{(n)}_T on F^m T F^n T X.
Term term_mu_mn(const MooreSignature& sig, std::size_t m, std::size_t n, const Term& t,
                const ZetaFn& zeta = term_zeta);

enum class Layer { T, F };

/// All (or a seeded sample of) elements of the type given by `layers`
/// (outermost first) applied to the atoms `base`. F layers draw outputs from
/// the algebra's test carrier.
std::vector<Term> enumerate_terms(const MooreSignature& sig, const std::vector<Layer>& layers,
                                  const std::vector<Term>& base, const EnumerationOptions& opt);

std::vector<Term> atoms(std::size_t n);

}  // namespace gem

#endif  // GEM_TERM_HPP
