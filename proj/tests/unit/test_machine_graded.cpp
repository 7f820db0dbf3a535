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

#include "gem/expressivity.hpp"
#include "gem/graded.hpp"
#include "gem/io.hpp"
#include "gem/machine.hpp"
#include "gem/suites.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace {

using gem::MonadKind;
using gem::rat;
using gem::Rational;
using nlohmann::json;

gem::Machine nfa2() {
  return gem::parse_machine(json::parse(R"({
    "quantale": "bool", "monad": "pow", "alphabet": ["a", "b"], "states": ["q0", "q1"],
    "out": {"q0": "0", "q1": "1"},
    "trans": {"q0": {"a": ["q0", "q1"], "b": ["q0"]}, "q1": {"a": [], "b": ["q1"]}}})"));
}

gem::Machine pa2() {
  return gem::parse_machine(json::parse(R"({
    "quantale": "unit", "monad": "dist", "alphabet": ["a"], "states": ["x", "y"],
    "out": {"x": "1/4", "y": "3/4"},
    "trans": {"x": {"a": {"x": "1"}}, "y": {"a": {"y": "1"}}}})"));
}

gem::Term swap_letters(const gem::MooreSignature& sig, const gem::Term& t) {
  auto z = gem::term_zeta(sig, t);
  auto kids = z.kids();
  std::reverse(kids.begin(), kids.end());
  return gem::Term::node(z.value(), kids);
}

TEST(EmLaw, HoldsForAllPresets) {
  for (auto k : gem::preset_kinds()) {
    for (std::size_t letters = 1; letters <= 2; ++letters) {
      const auto r = gem::check_em_law(gem::moore_signature(k, letters), {1, 2});
      EXPECT_TRUE(r.passed) << r.summary();
    }
  }
}

TEST(EmLaw, MiswiredZetaFailsWithWitness) {
  const auto sig = gem::moore_signature(MonadKind::Pow, 2);
  const auto r = gem::check_em_law(sig, {1, 2}, {}, swap_letters);
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_FALSE(r.violations.front().witness.empty());
}

TEST(Determinization, StepMatchesSubsetConstruction) {
  const auto m = nfa2();
  const auto bits = oracle::to_bits(m);
  for (std::uint32_t set = 0; set < 4; ++set) {
    std::vector<std::size_t> elems;
    for (std::size_t x = 0; x < 2; ++x)
      if (set >> x & 1u) elems.push_back(x);
    const auto step = gem::det_step(m, gem::TValue<std::size_t>::set(MonadKind::Pow, elems));
    ASSERT_TRUE(step.output);
    EXPECT_EQ(*step.output == 1, oracle::subset_accepts(bits, set));
    for (std::size_t s = 0; s < 2; ++s) {
      std::uint32_t got = 0;
      for (auto y : step.next[s].support()) got |= 1u << y;
      EXPECT_EQ(got, oracle::subset_step(bits, set, s));
    }
  }
}

TEST(Determinization, ReachableGraphMatchesSubsetAutomaton) {
  const auto m = nfa2();
  const auto bits = oracle::to_bits(m);
  for (std::size_t depth = 0; depth <= 3; ++depth) {
    const auto g = gem::reachable_determinization(m, {gem::det_root(m, 0)}, depth);
    const auto a = oracle::subset_automaton(bits, 1u, depth);
    ASSERT_EQ(g.nodes.size(), a.sets.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      std::uint32_t got = 0;
      for (auto y : g.nodes[i].support()) got |= 1u << y;
      EXPECT_EQ(got, a.sets[i]);
      EXPECT_EQ(*g.output[i] == 1, static_cast<bool>(a.accepting[i]));
    }
  }
}

TEST(Determinization, DiracRootOfProbabilisticMachine) {
  const auto m = gem::parse_machine(json::parse(R"({
    "quantale": "unit", "monad": "dist", "alphabet": ["a"], "states": ["s", "t"],
    "out": {"s": "0", "t": "1"},
    "trans": {"s": {"a": {"s": "1/2", "t": "1/2"}}, "t": {"a": {"t": "1"}}}})"));
  const auto g = gem::reachable_determinization(m, {gem::det_root(m, 0)}, 2);
  // δs, then ½s+½t, then ¼s+¾t.
  ASSERT_EQ(g.nodes.size(), 3u);
  EXPECT_EQ(*g.output[0], 0);
  EXPECT_EQ(*g.output[1], rat(1, 2));
  EXPECT_EQ(*g.output[2], rat(3, 4));
  EXPECT_EQ(g.nodes[2].weight(0), rat(1, 4));
  EXPECT_TRUE(g.next[2].empty());
}

TEST(Determinization, BlackHoleIsAbsorbing) {
  const auto m = gem::parse_machine(json::parse(R"({
    "quantale": "unit", "monad": "dist-bh", "alphabet": ["a"], "states": ["p"],
    "out": {"p": "1/2"}, "trans": {"p": {"a": {"p": "1/2", "*": "1/2"}}}})"));
  const auto g = gem::reachable_determinization(m, {gem::det_root(m, 0)}, 3);
  ASSERT_EQ(g.nodes.size(), 2u);
  EXPECT_TRUE(g.nodes[1].is_star());
  EXPECT_FALSE(g.output[1]);
  EXPECT_EQ(g.next[1][0], 1u);
}

TEST(Determinization, CapIsEnforced) {
  gem::RandomMachineOptions o;
  const auto m = gem::random_machine(MonadKind::Dist, gem::QuantaleKind::Unit, 4, {"a", "b"}, 3, o);
  EXPECT_THROW(gem::reachable_determinization(m, {gem::det_root(m, 0)}, 12, 50), gem::ResourceError);
}

TEST(Behaviour, ZeroDepthIsEmptyForAffineKinds) {
  const auto t = gem::n_step_behaviour(pa2(), 0, 0);
  EXPECT_TRUE(t.body.empty());
  EXPECT_FALSE(t.frontier);
}

TEST(Behaviour, SelfLoopRepeatsTheOutput) {
  const auto m = gem::parse_machine(json::parse(R"({
    "quantale": "unit", "monad": "dist", "alphabet": ["a"], "states": ["q"],
    "out": {"q": "1/2"}, "trans": {"q": {"a": {"q": "1"}}}})"));
  const auto t = gem::n_step_behaviour(m, 0, 2);
  ASSERT_EQ(t.body.size(), 2u);
  EXPECT_EQ(*t.at({}), rat(1, 2));
  EXPECT_EQ(*t.at({0}), rat(1, 2));
}

TEST(Behaviour, PowFrontierMarksDeadWords) {
  const auto m = nfa2();
  const auto bits = oracle::to_bits(m);
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto t = gem::n_step_behaviour(m, 1, n);
    ASSERT_TRUE(t.frontier);
    for (const auto& w : oracle::words(2, n)) EXPECT_EQ(t.alive(w), oracle::run_word(bits, 2u, w) != 0);
  }
}

TEST(Behaviour, ProjectionErasesExecutability) {
  // u's a-successor is a silent state, v has none; only the frontier differs.
  const auto m = gem::parse_machine(json::parse(R"({
    "quantale": "bool", "monad": "pow", "alphabet": ["a"], "states": ["u", "v", "s"],
    "out": {"u": "0", "v": "0", "s": "0"},
    "trans": {"u": {"a": ["s"]}, "v": {"a": []}, "s": {"a": []}}})"));
  const auto tu = gem::n_step_behaviour(m, 0, 1), tv = gem::n_step_behaviour(m, 1, 1);
  EXPECT_FALSE(tu == tv);
  EXPECT_TRUE(gem::em_project(tu) == gem::em_project(tv));
  const auto a = gem::n_step_behaviour(pa2(), 0, 3);
  EXPECT_TRUE(gem::em_project(a) == a);
}

TEST(Behaviour, AffineBodiesMatchWordAcceptance) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto nd = gem::random_machine(MonadKind::NePow, gem::QuantaleKind::Bool, 1 + seed % 5, {"a", "b"}, seed);
    const auto bits = oracle::to_bits(nd);
    const auto pd = gem::random_machine(MonadKind::Dist, gem::QuantaleKind::Unit, 1 + seed % 5, {"a", "b"}, seed);
    const auto mm = oracle::to_matrices(pd);
    for (std::size_t x = 0; x < nd.size(); ++x) {
      const auto tn = gem::n_step_behaviour(nd, x, 6);
      const auto tp = gem::n_step_behaviour(pd, x, 6);
      for (std::size_t len = 0; len < 6; ++len)
        for (const auto& w : oracle::words(2, len)) {
          EXPECT_EQ(*tn.at(w) == 1, oracle::subset_accepts(bits, oracle::run_word(bits, 1u << x, w)));
          EXPECT_EQ(*tp.at(w), oracle::word_value(mm, x, w));
        }
    }
  }
}

TEST(Distance, ConstantOutputsGiveHalfAtEveryDepth) {
  const auto p = gem::behavioural_distance(pa2(), 0, 1, 5);
  EXPECT_EQ(p.per_depth[0], 0);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(p.per_depth[n], rat(1, 2));
  EXPECT_EQ(p.meet, rat(1, 2));
}

TEST(Distance, IdenticalStatesAreAtUnit) {
  const auto m = nfa2();
  EXPECT_EQ(gem::behavioural_distance(m, 1, 1, 4).meet, 1);
  EXPECT_EQ(gem::behavioural_distance(pa2(), 0, 0, 4).meet, 0);
}

TEST(Distance, BooleanDistanceTracksLanguagesAndFrontiers) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto kind = seed % 2 ? MonadKind::Pow : MonadKind::NePow;
    const auto m = gem::random_machine(kind, gem::QuantaleKind::Bool, 3, {"a", "b"}, seed);
    const auto bits = oracle::to_bits(m);
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) {
        const auto p = gem::behavioural_distance(m, x, y, 4);
        for (std::size_t n = 0; n <= 4; ++n) {
          bool equal = !oracle::first_language_difference(bits, x, y, n);
          for (const auto& w : oracle::words(2, n))
            equal = equal && (oracle::run_word(bits, 1u << x, w) != 0) == (oracle::run_word(bits, 1u << y, w) != 0);
          EXPECT_EQ(p.per_depth[n] == 1, equal) << "seed " << seed << " depth " << n;
        }
      }
  }
}

TEST(Distance, FirstDifferenceAtLengthTwo) {
  // Both are deadlock-free; from x only "ab" is accepted among short words,
  // from y only "aa".
  const auto m = gem::parse_machine(json::parse(R"({
    "quantale": "bool", "monad": "nepow", "alphabet": ["a", "b"], "states": ["x", "y", "m1", "m2", "acc", "rej"],
    "out": {"x": "0", "y": "0", "m1": "0", "m2": "0", "acc": "1", "rej": "0"},
    "trans": {
      "x": {"a": ["m1"], "b": ["rej"]}, "y": {"a": ["m2"], "b": ["rej"]},
      "m1": {"a": ["rej"], "b": ["acc"]}, "m2": {"a": ["acc"], "b": ["rej"]},
      "acc": {"a": ["rej"], "b": ["rej"]}, "rej": {"a": ["rej"], "b": ["rej"]}}})"));
  const auto p = gem::behavioural_distance(m, 0, 1, 5);
  for (std::size_t n = 0; n <= 2; ++n) EXPECT_EQ(p.per_depth[n], 1) << n;
  for (std::size_t n = 3; n <= 5; ++n) EXPECT_EQ(p.per_depth[n], 0) << n;
  const auto w = gem::first_difference(gem::n_step_behaviour(m, 0, 3), gem::n_step_behaviour(m, 1, 3));
  ASSERT_TRUE(w);
  EXPECT_EQ(gem::word_string(m.alphabet, *w), "aa");
}

TEST(Distance, AllPairsAgreeWithSinglePairs) {
  const auto m = gem::random_machine(MonadKind::Dist, gem::QuantaleKind::Unit, 3, {"a", "b"}, 11);
  const auto all = gem::behavioural_distances(m, 3);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      const auto p = gem::behavioural_distance(m, x, y, 3);
      EXPECT_EQ(all[x][y].per_depth, p.per_depth);
      EXPECT_EQ(all[x][y].meet, p.meet);
    }
}

TEST(Words, IndexingIsLengthLexicographic) {
  EXPECT_EQ(gem::word_count(2, 3), 8u);
  EXPECT_EQ(gem::word_offset(2, 2), 3u);
  EXPECT_EQ(gem::word_index(2, {}), 0u);
  EXPECT_EQ(gem::word_index(2, {1}), 2u);
  EXPECT_EQ(gem::word_index(2, {0, 0}), 3u);
  EXPECT_EQ(gem::word_string({"a", "b"}, {0, 1}), "ab");
  EXPECT_EQ(gem::word_string({"go", "stop"}, {0, 1}), "go.stop");
}

TEST(GradedLaws, HoldForAllPresets) {
  gem::EnumerationOptions o;
  o.cap = 150;
  for (auto k : gem::preset_kinds()) {
    const auto r = gem::check_graded_monad_laws(gem::moore_signature(k, 2), {1, 2}, 2, o);
    EXPECT_TRUE(r.passed) << r.summary();
  }
}

TEST(GradedLaws, MiswiredZetaBreaksAssociativity) {
  gem::EnumerationOptions o;
  o.cap = 150;
  const auto r = gem::check_graded_monad_laws(gem::moore_signature(MonadKind::NePow, 2), {1, 2}, 2, o, swap_letters);
  EXPECT_FALSE(r.passed);
  bool assoc = false;
  for (const auto& v : r.violations) assoc = assoc || v.law.rfind("associativity", 0) == 0;
  EXPECT_TRUE(assoc) << r.summary();
}

}  // namespace
