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

#include "gem/report.hpp"

#include <algorithm>

namespace gem {

void CheckReport::fail(const std::string& law, const std::string& witness) {
  passed = false;
  if (has_violation(law) || violations.size() >= kMaxViolations) return;
  violations.push_back({law, witness});
}

bool CheckReport::has_violation(const std::string& law) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.law == law; });
}

void CheckReport::absorb(const CheckReport& other) {
  cases += other.cases;
  const std::string prefix = other.instance.empty() ? "" : other.instance + ": ";
  for (const auto& v : other.violations) fail(prefix + v.law, v.witness);
  if (!other.passed && other.violations.empty()) passed = false;
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["instance"] = instance;
  j["verdict"] = passed ? "pass" : "fail";
  j["cases"] = cases;
  auto& vs = j["violations"] = nlohmann::json::array();
  for (const auto& v : violations) vs.push_back({{"law", v.law}, {"witness", v.witness}});
  j["notes"] = notes;
  if (!details.empty()) j["details"] = details;
  return j;
}

std::string CheckReport::summary() const {
  std::string s = check;
  if (!instance.empty()) s += " [" + instance + "]";
  s += passed ? ": PASS" : ": FAIL";
  s += " (" + std::to_string(cases) + " cases)";
  for (const auto& v : violations) s += "\n  - " + v.law + ": " + v.witness;
  return s;
}

}  // namespace gem
