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

#ifndef GEM_REPORT_HPP
#define GEM_REPORT_HPP

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace gem {

struct Violation {
  std::string law;
  std::string witness;
};

/// Outcome of a law or theorem check. A failing report always names the law
/// that broke and carries a witness that reproduces the failure.
struct CheckReport {
  std::string check;
  std::string instance;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  nlohmann::json details = nlohmann::json::object();

  static constexpr std::size_t kMaxViolations = 16;

  CheckReport() = default;
  CheckReport(std::string check_name, std::string instance_name)
      : check(std::move(check_name)), instance(std::move(instance_name)) {}

  /// Records a violation; only the first one per law is kept.
  void fail(const std::string& law, const std::string& witness);

  bool has_violation(const std::string& law) const;

  /// Folds a sub-report into this one, prefixing its laws with its instance.
  void absorb(const CheckReport& other);

  nlohmann::json to_json() const;
  std::string summary() const;
};

}  // namespace gem

#endif  // GEM_REPORT_HPP
