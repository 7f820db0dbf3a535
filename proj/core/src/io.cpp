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

#include "gem/io.hpp"

#include <fstream>
#include <map>

namespace gem {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::string s = "invalid machine document";
  for (const auto& p : problems) s += "\n  " + p;
  return s;
}

bool is_star_name(const std::string& s) { return s == "*" || s == "⋆"; }

class DocumentParser {
 public:
  MachineDocument run(const nlohmann::json& j) {
    MachineDocument doc;
    Machine& m = doc.machine;
    if (!j.is_object()) {
      problem("", "document must be a JSON object");
      finish();
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
      static const char* known[] = {"quantale", "monad", "alphabet", "states", "out", "trans", "formulas", "pairs"};
      if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known))
        problem(it.key(), "unknown field");
    }
    bool kinds_ok = true;
    try {
      m.quantale = parse_quantale_kind(str(j, "quantale"));
    } catch (const InputError& e) {
      problem("quantale", e.what());
      kinds_ok = false;
    }
    try {
      m.monad = parse_monad_kind(str(j, "monad"));
    } catch (const InputError& e) {
      problem("monad", e.what());
      kinds_ok = false;
    }
    if (kinds_ok && !is_preset(m.monad, m.quantale))
      problem("monad", "monad " + to_string(m.monad) + " is not shipped with quantale " + m.q().name());
    m.alphabet = names(j, "alphabet");
    m.states = names(j, "states");
    finish();
    if (!kinds_ok || !is_preset(m.monad, m.quantale)) finish();

    const auto& out = field(j, "out");
    m.out.assign(m.size(), 0);
    if (out.is_object()) {
      for (std::size_t x = 0; x < m.size(); ++x) {
        const std::string path = "out." + m.states[x];
        if (!out.contains(m.states[x])) {
          problem(path, "missing");
          continue;
        }
        if (auto r = rational(out[m.states[x]], path)) {
          if (!m.q().contains(*r)) problem(path, to_string(*r) + " is not an element of " + m.q().name());
          else m.out[x] = *r;
        }
      }
      for (auto it = out.begin(); it != out.end(); ++it)
        if (!has(m.states, it.key())) problem("out." + it.key(), "unknown state");
    } else {
      problem("out", "must be an object keyed by state");
    }

    const auto& trans = field(j, "trans");
    m.trans.assign(m.size() * m.letters(), TValue<std::size_t>::unit(m.monad, 0));
    if (trans.is_object()) {
      for (auto it = trans.begin(); it != trans.end(); ++it)
        if (!has(m.states, it.key())) problem("trans." + it.key(), "unknown state");
      for (std::size_t x = 0; x < m.size(); ++x) {
        const std::string row_path = "trans." + m.states[x];
        if (!trans.contains(m.states[x]) || !trans[m.states[x]].is_object()) {
          problem(row_path, "missing or not an object keyed by letter");
          continue;
        }
        const auto& row = trans[m.states[x]];
        for (auto it = row.begin(); it != row.end(); ++it)
          if (!has(m.alphabet, it.key())) problem(row_path + "." + it.key(), "unknown letter");
        for (std::size_t s = 0; s < m.letters(); ++s) {
          const std::string path = row_path + "." + m.alphabet[s];
          if (!row.contains(m.alphabet[s])) {
            problem(path, "missing");
            continue;
          }
          if (auto v = value(m, row[m.alphabet[s]], path)) m.trans[x * m.letters() + s] = std::move(*v);
        }
      }
    } else {
      problem("trans", "must be an object keyed by state");
    }
    finish();

    if (j.contains("formulas")) {
      const auto& fs = j["formulas"];
      if (!fs.is_object()) problem("formulas", "must be an object of name: formula text");
      else
        for (auto it = fs.begin(); it != fs.end(); ++it) {
          const std::string path = "formulas." + it.key();
          if (!it->is_string()) {
            problem(path, "must be a string");
            continue;
          }
          try {
            auto f = parse_formula(it->get<std::string>());
            check_admissible(*f, m);
            doc.formulas.emplace_back(it.key(), std::move(f));
          } catch (const InputError& e) {
            problem(path, e.what());
          }
        }
    }
    if (j.contains("pairs")) {
      const auto& ps = j["pairs"];
      if (!ps.is_object()) problem("pairs", "must be an object of name: [state, state]");
      else
        for (auto it = ps.begin(); it != ps.end(); ++it) {
          const std::string path = "pairs." + it.key();
          if (!it->is_array() || it->size() != 2 || !(*it)[0].is_string() || !(*it)[1].is_string()) {
            problem(path, "must be [state, state]");
            continue;
          }
          const auto a = (*it)[0].get<std::string>(), b = (*it)[1].get<std::string>();
          if (!has(m.states, a) || !has(m.states, b)) {
            problem(path, "unknown state");
            continue;
          }
          doc.pairs.push_back({it.key(), {m.state_index(a), m.state_index(b)}});
        }
    }
    finish();
    return doc;
  }

 private:
  void problem(const std::string& path, const std::string& what) {
    problems_.push_back((path.empty() ? "$" : path) + ": " + what);
  }

  void finish() {
    if (!problems_.empty()) throw ValidationError(problems_);
  }

  static bool has(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  }

  const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    static const nlohmann::json null;
    if (!j.contains(key)) {
      problem(key, "missing");
      return null;
    }
    return j[key];
  }

  std::string str(const nlohmann::json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_string()) {
      if (!v.is_null()) problem(key, "must be a string");
      return "";
    }
    return v.get<std::string>();
  }

  std::vector<std::string> names(const nlohmann::json& j, const char* key) {
    const auto& v = field(j, key);
    std::vector<std::string> out;
    if (v.is_null()) return out;
    if (!v.is_array() || v.empty()) {
      problem(key, "must be a nonempty array of strings");
      return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string path = std::string(key) + "[" + std::to_string(i) + "]";
      if (!v[i].is_string() || v[i].get<std::string>().empty()) {
        problem(path, "must be a nonempty string");
        continue;
      }
      const auto s = v[i].get<std::string>();
      if (has(out, s)) problem(path, "duplicate name '" + s + "'");
      else if (is_star_name(s)) problem(path, "'" + s + "' is reserved for the black hole");
      else out.push_back(s);
    }
    return out;
  }

  std::optional<Rational> rational(const nlohmann::json& v, const std::string& path) {
    try {
      if (v.is_string()) return parse_rational(v.get<std::string>());
      if (v.is_number_integer()) return Rational(v.get<long long>());
      if (v.is_boolean()) return Rational(v.get<bool>() ? 1 : 0);
    } catch (const InputError& e) {
      problem(path, e.what());
      return std::nullopt;
    }
    problem(path, "expected a rational string \"p/q\" or an integer");
    return std::nullopt;
  }

  std::optional<TValue<std::size_t>> value(const Machine& m, const nlohmann::json& v, const std::string& path) {
    try {
      if (!is_probabilistic(m.monad)) {
        if (!v.is_array()) {
          problem(path, "expected an array of states");
          return std::nullopt;
        }
        std::vector<std::size_t> elems;
        for (const auto& e : v) {
          if (!e.is_string() || !has(m.states, e.get<std::string>())) {
            problem(path, "unknown state " + e.dump());
            return std::nullopt;
          }
          elems.push_back(m.state_index(e.get<std::string>()));
        }
        if (m.monad == MonadKind::NePow && elems.empty()) {
          problem(path, "empty successor set for nepow");
          return std::nullopt;
        }
        return TValue<std::size_t>::set(m.monad, std::move(elems));
      }
      if (v.is_string() && is_star_name(v.get<std::string>())) {
        if (m.monad != MonadKind::DistBH) {
          problem(path, "the black hole needs the dist-bh monad");
          return std::nullopt;
        }
        return TValue<std::size_t>::star();
      }
      if (!v.is_object()) {
        problem(path, "expected an object {state: \"p/q\"}");
        return std::nullopt;
      }
      std::vector<std::pair<std::optional<std::size_t>, Rational>> w;
      for (auto it = v.begin(); it != v.end(); ++it) {
        auto r = rational(it.value(), path + "." + it.key());
        if (!r) return std::nullopt;
        if (*r <= 0) {
          problem(path + "." + it.key(), "probabilities must be positive");
          return std::nullopt;
        }
        if (is_star_name(it.key())) {
          if (m.monad != MonadKind::DistBH) {
            problem(path, "the black hole needs the dist-bh monad");
            return std::nullopt;
          }
          w.emplace_back(std::nullopt, *r);
        } else if (has(m.states, it.key())) {
          w.emplace_back(m.state_index(it.key()), *r);
        } else {
          problem(path + "." + it.key(), "unknown state");
          return std::nullopt;
        }
      }
      Rational total = 0;
      for (const auto& [e, r] : w) total += r;
      if (total != 1) {
        problem(path, "weights sum to " + to_string(total) + ", expected 1");
        return std::nullopt;
      }
      if (m.monad == MonadKind::DistBH) return bh_flatten(std::move(w));
      std::vector<std::pair<std::size_t, Rational>> plain;
      for (auto& [e, r] : w) plain.emplace_back(*e, r);
      return TValue<std::size_t>::dist(m.monad, std::move(plain));
    } catch (const DomainError& e) {
      problem(path, e.what());
      return std::nullopt;
    }
  }

  std::vector<std::string> problems_;
};

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : InputError(join_problems(problems)), problems_(std::move(problems)) {}

MachineDocument parse_document(const nlohmann::json& j) { return DocumentParser().run(j); }

MachineDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError({std::string("$: not valid JSON: ") + e.what()});
  }
  return parse_document(j);
}

nlohmann::json value_to_json(const Machine& m, const TValue<std::size_t>& t) {
  if (t.is_star()) return "*";
  if (!is_probabilistic(t.kind())) {
    auto a = nlohmann::json::array();
    for (auto x : t.support()) a.push_back(m.states.at(x));
    return a;
  }
  auto o = nlohmann::json::object();
  for (std::size_t i = 0; i < t.size(); ++i) o[m.states.at(t.support()[i])] = to_string(t.weights()[i]);
  return o;
}

nlohmann::json to_json(const Machine& m) {
  nlohmann::json j;
  j["quantale"] = m.q().name();
  j["monad"] = to_string(m.monad);
  j["alphabet"] = m.alphabet;
  j["states"] = m.states;
  auto out = nlohmann::json::object();
  for (std::size_t x = 0; x < m.size(); ++x) out[m.states[x]] = to_string(m.out[x]);
  j["out"] = out;
  auto trans = nlohmann::json::object();
  for (std::size_t x = 0; x < m.size(); ++x) {
    auto row = nlohmann::json::object();
    for (std::size_t s = 0; s < m.letters(); ++s) row[m.alphabet[s]] = value_to_json(m, m.next(x, s));
    trans[m.states[x]] = row;
  }
  j["trans"] = trans;
  return j;
}

nlohmann::json to_json(const MachineDocument& doc) {
  auto j = to_json(doc.machine);
  if (!doc.formulas.empty()) {
    auto fs = nlohmann::json::object();
    for (const auto& [name, f] : doc.formulas) fs[name] = print(f);
    j["formulas"] = fs;
  }
  if (!doc.pairs.empty()) {
    auto ps = nlohmann::json::object();
    for (const auto& [name, p] : doc.pairs)
      ps[name] = {doc.machine.states[p.first], doc.machine.states[p.second]};
    j["pairs"] = ps;
  }
  return j;
}

nlohmann::json to_json(const WordTable& t) {
  nlohmann::json j;
  j["depth"] = t.depth;
  auto body = nlohmann::json::object();
  for (std::size_t len = 0; len < t.depth; ++len)
    for (const auto& w : words_of_length(t.letters(), len)) {
      const auto& v = t.at(w);
      body[word_string(t.alphabet, w)] = v ? nlohmann::json(to_string(*v)) : nlohmann::json("*");
    }
  j["body"] = body;
  if (t.frontier) {
    auto f = nlohmann::json::object();
    for (const auto& w : words_of_length(t.letters(), t.depth)) f[word_string(t.alphabet, w)] = t.alive(w);
    j["frontier"] = f;
  }
  return j;
}

WordTable word_table_from_json(const nlohmann::json& j, MonadKind kind) {
  WordTable t;
  t.kind = kind;
  try {
    t.depth = j.at("depth").get<std::size_t>();
    if (j.contains("alphabet")) t.alphabet = j["alphabet"].get<std::vector<std::string>>();
    if (t.alphabet.empty()) throw InputError("word table needs an alphabet");
    for (std::size_t len = 0; len < t.depth; ++len)
      for (const auto& w : words_of_length(t.letters(), len)) {
        const auto& v = j.at("body").at(word_string(t.alphabet, w));
        const auto s = v.get<std::string>();
        t.body.push_back(is_star_name(s) ? std::nullopt : std::optional<Rational>(parse_rational(s)));
      }
    if (!is_affine(kind)) {
      std::vector<bool> f;
      for (const auto& w : words_of_length(t.letters(), t.depth))
        f.push_back(j.at("frontier").at(word_string(t.alphabet, w)).get<bool>());
      t.frontier = std::move(f);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed word table: ") + e.what());
  }
  return t;
}

nlohmann::json to_json(const Machine& m, const DetGraph& g) {
  nlohmann::json j;
  auto nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    nlohmann::json n;
    n["id"] = i;
    n["state"] = value_to_json(m, g.nodes[i]);
    n["depth"] = g.depth[i];
    n["output"] = g.output[i] ? nlohmann::json(to_string(*g.output[i])) : nlohmann::json("*");
    if (!g.next[i].empty()) {
      auto next = nlohmann::json::object();
      for (std::size_t s = 0; s < m.letters(); ++s) next[m.alphabet[s]] = g.next[i][s];
      n["next"] = next;
    }
    nodes.push_back(n);
  }
  j["nodes"] = nodes;
  return j;
}

}  // namespace gem
