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

#ifndef GEM_IO_HPP
#define GEM_IO_HPP

#include "gem/graded.hpp"
#include "gem/logic.hpp"
#include "gem/machine.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace gem {

/// A machine document that failed validation; every problem is listed with
/// its JSON path.
class ValidationError : public InputError {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Machine JSON plus optional named formulas and state pairs.
struct MachineDocument {
  Machine machine;
  std::vector<std::pair<std::string, FormulaPtr>> formulas;
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> pairs;
};

MachineDocument parse_document(const nlohmann::json& j);
MachineDocument load_document(const std::string& path);
inline Machine parse_machine(const nlohmann::json& j) { return parse_document(j).machine; }

nlohmann::json to_json(const Machine& m);
nlohmann::json to_json(const MachineDocument& doc);
nlohmann::json to_json(const WordTable& t);
WordTable word_table_from_json(const nlohmann::json& j, MonadKind kind);
/// Nodes in creation order (breadth-first from the roots).
nlohmann::json to_json(const Machine& m, const DetGraph& g);

/// "*" for the black hole, arrays for sets, {state: "p/q"} for distributions.
nlohmann::json value_to_json(const Machine& m, const TValue<std::size_t>& t);

}  // namespace gem

#endif  // GEM_IO_HPP
