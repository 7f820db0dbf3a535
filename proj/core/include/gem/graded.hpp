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

#ifndef GEM_GRADED_HPP
#define GEM_GRADED_HPP

#include "gem/machine.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gem {

using Word = std::vector<std::size_t>;

/// |Σ|^len.
std::size_t word_count(std::size_t letters, std::size_t len);
/// Number of words shorter than `len`, i.e. the length-lex index of the
/// first word of length `len`.
std::size_t word_offset(std::size_t letters, std::size_t len);
/// Position of `w` in the length-lex order of Σ^*.
std::size_t word_index(std::size_t letters, const Word& w);
/// Σ^len in lexicographic order.
std::vector<Word> words_of_length(std::size_t letters, std::size_t len);
/// Letters concatenated, or joined with '.' when some letter name is longer
/// than one character. The empty word is "".
std::string word_string(const std::vector<std::string>& alphabet, const Word& w);

/// c^(n)(x) ∈ F^n T 1: the output after every word shorter than n and, for
/// the non-affine monads, whether each word of length n can be executed.
/// A nullopt body entry marks a word on which the run has fallen into the
/// black hole.
struct WordTable {
  MonadKind kind = MonadKind::Dist;
  std::vector<std::string> alphabet;
  std::size_t depth = 0;
  std::vector<std::optional<Rational>> body;
  std::optional<std::vector<bool>> frontier;

  std::size_t letters() const { return alphabet.size(); }

  /// Body entry of a word with |w| < depth.
  const std::optional<Rational>& at(const Word& w) const;
  /// Whether the run on w (|w| ≤ depth) has not collapsed: for |w| = depth
  /// the frontier bit, otherwise the body entry being present.
  bool alive(const Word& w) const;

  friend bool operator==(const WordTable& a, const WordTable& b) {
    return a.kind == b.kind && a.alphabet == b.alphabet && a.depth == b.depth && a.body == b.body &&
           a.frontier == b.frontier;
  }
};

WordTable n_step_behaviour(const Machine& m, std::size_t x, std::size_t n);
/// Behaviours of every state at depth n, sharing the determinization.
std::vector<WordTable> n_step_behaviours(const Machine& m, std::size_t n);

/// F^n!: forgets the frontier.
WordTable em_project(const WordTable& t);

/// d_{M_n 1}: the V-meet of sym_dist over body entries (a collapsed entry is
/// at distance bottom from a live one, k from another collapsed one) and of
/// the discrete distance over frontier bits.
Rational table_distance(const Quantale& q, const WordTable& a, const WordTable& b);

/// The first word (length-lex) on which two tables differ, if any.
std::optional<Word> first_difference(const WordTable& a, const WordTable& b);

struct DepthProfile {
  /// Index n holds the value at depth n, for n = 0..N.
  std::vector<Rational> per_depth;
  Rational meet;
};

/// d^b truncated at N: per-depth distances of c^(n)(x), c^(n)(y) and their
/// V-meet.
DepthProfile behavioural_distance(const Machine& m, std::size_t x, std::size_t y, std::size_t max_depth);
/// All-pairs variant sharing one determinization per depth; result[x][y].
std::vector<std::vector<DepthProfile>> behavioural_distances(const Machine& m, std::size_t max_depth);

/// Graded unit laws and associativity of μ^{m,n} = F^{m+n}μ · F^m ζ^{(n)} T
/// on M_n X = F^n T X for every m + n + k ≤ max_depth over carriers of the
/// given sizes.
CheckReport check_graded_monad_laws(const MooreSignature& sig, const std::vector<std::size_t>& carrier_sizes,
                                    std::size_t max_depth = 2, const EnumerationOptions& opt = {},
                                    const ZetaFn& zeta = term_zeta);

}  // namespace gem

#endif  // GEM_GRADED_HPP
