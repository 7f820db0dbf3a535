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
#include "gem/io.hpp"
#include "gem/suites.hpp"

#include <gtest/gtest.h>

namespace {

using nlohmann::json;

json base() {
  return json::parse(R"({
    "quantale": "unit", "monad": "dist", "alphabet": ["a", "b"], "states": ["x", "y"],
    "out": {"x": "0", "y": "1/2"},
    "trans": {"x": {"a": {"x": "1/2", "y": "1/2"}, "b": {"y": 1}}, "y": {"a": {"y": "1"}, "b": {"x": "1"}}}})");
}

std::vector<std::string> problems(const json& j) {
  try {
    gem::parse_document(j);
  } catch (const gem::ValidationError& e) {
    return e.problems();
  }
  return {};
}

TEST(MachineJson, RoundTrip) {
  const auto m = gem::parse_machine(base());
  const auto j = gem::to_json(m);
  EXPECT_EQ(j["trans"]["x"]["b"]["y"], "1");
  EXPECT_EQ(gem::to_json(gem::parse_machine(j)), j);
}

TEST(MachineJson, WeightsMustSumToOne) {
  auto j = base();
  j["trans"]["x"]["a"]["y"] = "1/4";
  const auto p = problems(j);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].rfind("trans.x.a:", 0), 0u) << p[0];
}

TEST(MachineJson, CollectsEveryProblem) {
  auto j = base();
  j["out"]["x"] = "0.5";
  j["trans"]["y"]["a"] = {{"z", "1"}};
  j.erase("alphabet");
  j["extra"] = 1;
  const auto p = problems(j);
  EXPECT_GE(p.size(), 2u);
}

TEST(MachineJson, NamesPathsOfBadValues) {
  auto j = base();
  j["out"]["x"] = "0.5";
  j["trans"]["y"]["a"] = {{"z", "1"}};
  const auto p = problems(j);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].rfind("out.x:", 0), 0u);
  EXPECT_EQ(p[1].rfind("trans.y.a.z:", 0), 0u);
}

TEST(MachineJson, RejectsFloatsAndNonPresets) {
  auto j = base();
  j["trans"]["x"]["b"] = {{"y", 1.0}};
  EXPECT_FALSE(problems(j).empty());
  j = base();
  j["quantale"] = "bool";
  EXPECT_FALSE(problems(j).empty());
  j = base();
  j["monad"] = "list";
  EXPECT_FALSE(problems(j).empty());
}

TEST(MachineJson, EmptySetsOnlyForPow) {
  auto j = json::parse(R"({"quantale": "bool", "monad": "nepow", "alphabet": ["a"], "states": ["x"],
    "out": {"x": "1"}, "trans": {"x": {"a": []}}})");
  EXPECT_FALSE(problems(j).empty());
  j["monad"] = "pow";
  EXPECT_TRUE(problems(j).empty());
  j["out"]["x"] = "1/2";
  EXPECT_FALSE(problems(j).empty());
}

TEST(MachineJson, BlackHoleSpellings) {
  auto j = json::parse(R"({"quantale": "unit", "monad": "dist-bh", "alphabet": ["a"], "states": ["x"],
    "out": {"x": "1"}, "trans": {"x": {"a": "*"}}})");
  auto m = gem::parse_machine(j);
  EXPECT_TRUE(m.next(0, 0).is_star());
  j["trans"]["x"]["a"] = "⋆";
  EXPECT_TRUE(gem::parse_machine(j).next(0, 0).is_star());
  j["trans"]["x"]["a"] = {{"x", "1/2"}, {"*", "1/2"}};
  EXPECT_TRUE(gem::parse_machine(j).next(0, 0).is_star());
  j["trans"]["x"]["a"] = {{"x", "1"}};
  EXPECT_FALSE(gem::parse_machine(j).next(0, 0).is_star());
  EXPECT_EQ(gem::to_json(m)["trans"]["x"]["a"], "*");
  j["monad"] = "dist";
  j["trans"]["x"]["a"] = "*";
  EXPECT_FALSE(problems(j).empty());
}

TEST(MachineJson, DuplicateAndReservedNames) {
  auto j = base();
  j["states"] = {"x", "x"};
  EXPECT_FALSE(problems(j).empty());
  j = base();
  j["alphabet"] = {"a", "*"};
  EXPECT_FALSE(problems(j).empty());
}

TEST(Document, FormulasAndPairs) {
  auto j = base();
  j["formulas"] = {{"f", "<a><T>"}};
  j["pairs"] = {{"p", {"x", "y"}}};
  const auto doc = gem::parse_document(j);
  ASSERT_EQ(doc.formulas.size(), 1u);
  ASSERT_EQ(doc.pairs.size(), 1u);
  EXPECT_EQ(doc.pairs[0].second, (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(gem::to_json(doc)["formulas"]["f"], "<a><T>");
  j["formulas"]["g"] = "<~a>";
  j["pairs"]["q"] = {"x", "w"};
  const auto p = problems(j);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].rfind("formulas.g:", 0), 0u);
  EXPECT_EQ(p[1].rfind("pairs.q:", 0), 0u);
}

TEST(WordTableJson, RoundTrip) {
  const auto m = gem::parse_machine(json::parse(R"({"quantale": "bool", "monad": "pow", "alphabet": ["a", "b"],
    "states": ["x", "y"], "out": {"x": "0", "y": "1"},
    "trans": {"x": {"a": ["y"], "b": []}, "y": {"a": ["x", "y"], "b": ["y"]}}})"));
  const auto t = gem::n_step_behaviour(m, 0, 3);
  const auto j = gem::to_json(t);
  EXPECT_EQ(j["body"][""], "0");
  EXPECT_EQ(j["body"]["a"], "1");
  EXPECT_EQ(j["frontier"]["bbb"], false);
  auto back = j;
  back["alphabet"] = m.alphabet;
  EXPECT_TRUE(gem::word_table_from_json(back, gem::MonadKind::Pow) == t);
}

}  // namespace

TEST(SuiteReplay, FailingMachineReproducesWitness) {
  gem::SuiteOptions opt;
  opt.seed = 42;
  const auto report = gem::run_suite("invariance", opt);
  ASSERT_FALSE(report.passed);
  ASSERT_TRUE(report.details.contains("instances"));
  const auto& [name, doc] = *report.details["instances"].items().begin();
  const auto m = gem::parse_machine(nlohmann::json::parse(doc.dump()));
  const std::size_t i = std::stoul(name.substr(name.find('#') + 1));
  EXPECT_EQ(gem::to_json(m), gem::to_json(gem::corpus_machine(m.monad, i, opt)));
  auto replay = gem::check_invariance(m, gem::corpus_depth(m.monad, opt), gem::invariance_ops(m.monad, opt.seed + i),
                                      opt.samples, opt.seed + i);
  ASSERT_FALSE(replay.violations.empty());
  const auto& first = report.violations.front();
  EXPECT_EQ(first.law, name + ": " + replay.violations.front().law);
  EXPECT_EQ(first.witness, replay.violations.front().witness);
}
