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

#ifndef GEM_LOGIC_HPP
#define GEM_LOGIC_HPP

#include "gem/graded.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gem {

/// A propositional operator Ω^n → Ω. `probabilistic` tells which truth-value
/// object it lives on: [0,1] with expectation, or 2 with joins.
struct PropOp {
  std::string name;
  std::size_t arity = 0;
  bool probabilistic = true;
  /// The weight p of a convex combination.
  std::optional<Rational> param;
  std::function<Rational(std::span<const Rational>)> eval;

  Rational operator()(std::span<const Rational> args) const { return eval(args); }
};

PropOp disjunction();
/// x ↦ 1 − x.
PropOp fuzzy_negation();
/// (x, y) ↦ p·x + (1 − p)·y.
PropOp convex_combination(const Rational& p);
/// (x, y) ↦ x·y. Not an algebra homomorphism for expectation.
PropOp multiplication();

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// θ | p(φ₁, …, φₙ) | ⟨σ⟩φ | ⟨⊤⟩ | ⟨σ̄⟩.
struct Formula {
  enum class Kind { Const, Prop, Diamond, Top, Stuck };

  Kind kind = Kind::Const;
  /// Const: 1 for ⊤, 0 for ⊥.
  Rational truth;
  /// Diamond and Stuck.
  std::string letter;
  std::shared_ptr<const PropOp> op;
  std::vector<FormulaPtr> args;
};

FormulaPtr f_const(bool value);
FormulaPtr f_top();
FormulaPtr f_stuck(std::string letter);
FormulaPtr f_diamond(std::string letter, FormulaPtr arg);
FormulaPtr f_prop(const PropOp& op, std::vector<FormulaPtr> args);
/// ⟨w₁⟩…⟨wₖ⟩ tail.
FormulaPtr f_word(const std::vector<std::string>& alphabet, const Word& w, FormulaPtr tail);

/// Text syntax: <a>φ, <T>, <~a>, const(T), const(F), neg(φ), or(φ,ψ),
/// cc(p/q,φ,ψ), mul(φ,ψ). Whitespace between tokens is ignored.
FormulaPtr parse_formula(std::string_view text);
std::string print(const Formula& f);
inline std::string print(const FormulaPtr& f) { return print(*f); }

/// Common modal nesting depth of all leaves, a 0-ary modality counting as a
/// leaf one level down; nullopt when the leaves disagree.
std::optional<std::size_t> uniform_depth(const Formula& f);

/// Whether φ is a formula of the depth-n logic for monad `kind`: uniform of
/// depth ≤ n, and of depth exactly n if it reads truth constants over the
/// powerset monad (whose depth-n behaviour only knows which words of length
/// n are executable).
bool admits_depth(const Formula& f, std::size_t n, MonadKind kind);

/// Throws SignatureError if φ uses a letter, modality or operator the
/// machine's signature lacks.
void check_admissible(const Formula& f, const Machine& m);

/// ⟦φ⟧_c at every state.
std::vector<Rational> eval_all_states(const Formula& f, const Machine& m);
Rational eval_state(const Formula& f, const Machine& m, std::size_t x);

/// ⟦φ⟧_M on a word table, without access to the machine.
Rational eval_on_behaviour(const Formula& f, const WordTable& t);

/// Word formulas in the depth-n logic: ⟨w⟩⟨⊤⟩ for |w| < n, plus
/// ⟨w⟩const(⊤) for |w| = n over the powerset monad and ⟨w⟩⟨σ̄⟩ for
/// |w| < n in the black-hole preset.
std::vector<FormulaPtr> word_fragment(MonadKind kind, const std::vector<std::string>& alphabet, std::size_t n);

struct FragmentOptions {
  /// "word" or "sampled-propositional".
  std::string name = "word";
  std::vector<PropOp> ops;
  /// Number of random operator applications added per depth.
  std::size_t samples = 64;
  std::uint64_t seed = 1;
  /// Evaluate through the word tables (⟦φ⟧_M · c^(n)) instead of the
  /// inductive state semantics.
  bool via_behaviour = false;
};

struct LogicalProfile {
  std::vector<Rational> per_depth;
  Rational meet;
  /// Per depth, a formula attaining the distance (nullptr when the fragment
  /// is empty).
  std::vector<FormulaPtr> witness;
};

/// d^L truncated at N: per depth n, the V-meet over fragment formulas of the
/// depth-n logic of d_Ω(⟦φ⟧(x), ⟦φ⟧(y)).
LogicalProfile logical_distance(const Machine& m, std::size_t x, std::size_t y, std::size_t max_depth,
                                const FragmentOptions& fragment = {});
/// All pairs at once; result[x][y].
std::vector<std::vector<LogicalProfile>> logical_distances(const Machine& m, std::size_t max_depth,
                                                           const FragmentOptions& fragment = {});

/// A modality given by ev: F Ω → Ω together with its direct semantics
/// λ: F T Ω → Ω. Terms are F-nodes whose kids are atoms (ev) or monad
/// values over atoms (λ); kids may be Star in the black-hole preset.
struct Modality {
  std::string name;
  std::size_t arity = 0;
  std::function<Rational(const Term&)> ev;
  std::function<Rational(const Term&)> lambda;
};

Modality diamond_modality(const MooreSignature& sig, std::size_t letter);
Modality top_modality(const MooreSignature& sig);
Modality stuck_modality(const MooreSignature& sig, std::size_t letter);
/// ev(v, f) = v·v, the standard non-example.
Modality squaring_modality(const MooreSignature& sig);
/// Every shipped modality of the signature.
std::vector<Modality> shipped_modalities(const MooreSignature& sig);

/// (i) λ = ev · F o on sampled F T Ω values; (ii) ev · F o · ζ_Ω = o · T ev on
/// sampled T F Ω values.
CheckReport check_modality(const Modality& mod, const MooreSignature& sig, const EnumerationOptions& opt = {});

/// o · T p = p · o^n on sampled T(Ω^n) values over the default grid.
CheckReport check_prop_op(const PropOp& p, const MooreSignature& sig, const EnumerationOptions& opt = {});

/// The truth-value grid of the signature's Ω.
std::vector<Rational> omega_grid(const MooreSignature& sig);

}  // namespace gem

#endif  // GEM_LOGIC_HPP
