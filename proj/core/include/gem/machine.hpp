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

#ifndef GEM_MACHINE_HPP
#define GEM_MACHINE_HPP

#include "gem/monad.hpp"
#include "gem/quantale.hpp"
#include "gem/term.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gem {

/// Input that is well-formed JSON but uses an operator the machine's
/// signature does not provide (e.g. <~a> on a plain 𝒟 machine).
class SignatureError : public InputError {
 public:
  using InputError::InputError;
};

/// A finite FT-coalgebra for F = Ω × (−)^Σ: an output per state and a
/// T-value of successors per state and letter. For DistBH a transition is
/// either a ⋆-free distribution or the black hole.
struct Machine {
  QuantaleKind quantale = QuantaleKind::Bool;
  MonadKind monad = MonadKind::Pow;
  std::vector<std::string> alphabet;
  std::vector<std::string> states;
  std::vector<Rational> out;
  /// Row-major: trans[x * |Σ| + σ].
  std::vector<TValue<std::size_t>> trans;

  std::size_t size() const { return states.size(); }
  std::size_t letters() const { return alphabet.size(); }
  const TValue<std::size_t>& next(std::size_t x, std::size_t sigma) const { return trans[x * letters() + sigma]; }
  const Quantale& q() const { return quantale_of(quantale); }
  MooreSignature signature() const { return moore_signature(monad, letters()); }

  std::size_t state_index(const std::string& name) const;
  std::size_t letter_index(const std::string& name) const;
};

/// The four shipped (monad, quantale) presets: pow/nepow over bool,
/// dist/dist-bh over unit.
bool is_preset(MonadKind monad, QuantaleKind quantale);

/// Throws InputError naming the offending state/letter on any violated
/// shape constraint.
void validate(const Machine& m);

/// An element of F C = Ω × (C+1)^Σ; nullopt kids are ⋆.
struct MooreValue {
  Rational out;
  std::vector<std::optional<std::size_t>> next;

  friend bool operator==(const MooreValue& a, const MooreValue& b) { return a.out == b.out && a.next == b.next; }
  friend bool operator<(const MooreValue& a, const MooreValue& b) {
    if (a.out != b.out) return a.out < b.out;
    return a.next < b.next;
  }
};

struct ZetaResult {
  Rational out;
  std::vector<TValue<std::size_t>> next;
};

/// ζ_C on T F C: the output is a(T π₁ t), the σ-successor T π_σ t (collapsed
/// to ⋆ in the black-hole preset as soon as ⋆ has positive mass).
ZetaResult zeta_apply(const MooreSignature& sig, const TValue<MooreValue>& t);

/// Unit and multiplication diagrams of the EM law on carriers {0..n-1} for
/// each requested size. `zeta` may be swapped out for negative tests.
CheckReport check_em_law(const MooreSignature& sig, const std::vector<std::size_t>& carrier_sizes,
                         const EnumerationOptions& opt = {}, const ZetaFn& zeta = term_zeta);

struct DetStep {
  /// nullopt when the state is the black hole.
  std::optional<Rational> output;
  std::vector<TValue<std::size_t>> next;
};

/// c^# at s: output a(T out (s)), σ-successor μ(T trans(−,σ)(s)).
DetStep det_step(const Machine& m, const TValue<std::size_t>& s);

TValue<std::size_t> det_root(const Machine& m, std::size_t x);

struct DetGraph {
  std::vector<TValue<std::size_t>> nodes;
  std::vector<std::size_t> depth;
  std::vector<std::optional<Rational>> output;
  /// Successor node per letter; empty for nodes at the depth bound.
  std::vector<std::vector<std::size_t>> next;
};

/// Breadth-first exploration of c^# from `roots` up to `depth` steps, letters
/// in alphabet order, states deduplicated structurally. Throws ResourceError
/// once more than `cap` nodes would be created.
DetGraph reachable_determinization(const Machine& m, const std::vector<TValue<std::size_t>>& roots,
                                   std::size_t depth, std::size_t cap = 10000);

std::string show(const Machine& m, const TValue<std::size_t>& s);

}  // namespace gem

#endif  // GEM_MACHINE_HPP
