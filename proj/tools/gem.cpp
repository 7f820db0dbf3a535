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

// gem: command-line front end for the graded-em library.

#include "gem/expressivity.hpp"
#include "gem/graded.hpp"
#include "gem/io.hpp"
#include "gem/logic.hpp"
#include "gem/machine.hpp"
#include "gem/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using gem::Rational;
using nlohmann::json;

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kResourceCap = 3 };

struct Globals {
  bool json = false;
};

/// Seed precedence: --seed, then GRADED_EM_SEED, then 1.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GRADED_EM_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw gem::InputError(std::string("GRADED_EM_SEED is not an unsigned integer: '") + env + "'");
  }
  return 1;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

int cmd_check(const Globals& g, const std::string& file) {
  const auto doc = gem::load_document(file);
  const auto& m = doc.machine;
  gem::CheckReport r("check", file);
  r.cases = m.size() * m.letters() + doc.formulas.size() + doc.pairs.size();
  r.details = {{"quantale", m.q().name()},
               {"monad", gem::to_string(m.monad)},
               {"states", m.size()},
               {"letters", m.letters()},
               {"formulas", doc.formulas.size()},
               {"pairs", doc.pairs.size()}};
  if (g.json) print_json(r.to_json());
  else
    std::cout << "ok: " << m.size() << " states over {" << [&] {
      std::string s;
      for (std::size_t i = 0; i < m.letters(); ++i) s += (i ? "," : "") + m.alphabet[i];
      return s;
    }() << "}, " << gem::to_string(m.monad) << " with " << m.q().name() << "\n";
  return kOk;
}

struct DistanceArgs {
  std::string file, from, to;
  std::size_t depth = 1;
  bool logical = false;
  std::string fragment = "word";
  bool via_behaviour = false;
  std::size_t samples = 64;
  std::optional<std::uint64_t> seed;
};

int cmd_distance(const Globals& g, const DistanceArgs& a) {
  const auto doc = gem::load_document(a.file);
  const auto& m = doc.machine;
  const auto x = m.state_index(a.from), y = m.state_index(a.to);
  if (a.depth < 1) throw gem::InputError("--depth must be at least 1");
  const auto b = gem::behavioural_distance(m, x, y, a.depth);

  std::optional<gem::LogicalProfile> l;
  if (a.logical) {
    gem::FragmentOptions f;
    f.name = a.fragment;
    f.via_behaviour = a.via_behaviour;
    f.samples = a.samples;
    f.seed = resolve_seed(a.seed);
    if (a.fragment == "sampled-propositional") f.ops = gem::invariance_ops(m.monad, f.seed);
    else if (a.fragment != "word") throw gem::InputError("unknown fragment '" + a.fragment + "'");
    l = gem::logical_distance(m, x, y, a.depth, f);
  }

  std::optional<std::size_t> mismatch;
  if (l)
    for (std::size_t n = 0; n <= a.depth && !mismatch; ++n)
      if (l->per_depth[n] != b.per_depth[n]) mismatch = n;
  const char* frontier_note = gem::is_affine(m.monad)
                                  ? nullptr
                                  : "frontier words are compared with the discrete distance";
  const std::string verdict = !l ? ""
                              : mismatch ? "NOT EXPRESSIVE at depth " + std::to_string(*mismatch)
                                         : "EXPRESSIVE up to depth " + std::to_string(a.depth);

  if (g.json) {
    json j;
    j["from"] = a.from;
    j["to"] = a.to;
    j["depth"] = a.depth;
    auto rows = json::array();
    for (std::size_t n = 0; n <= a.depth; ++n) {
      json row{{"depth", n}, {"behavioural", gem::to_string(b.per_depth[n])}};
      if (l) {
        row["logical"] = gem::to_string(l->per_depth[n]);
        if (l->witness[n]) row["witness"] = gem::print(l->witness[n]);
      }
      rows.push_back(row);
    }
    j["per_depth"] = rows;
    j["behavioural_meet"] = gem::to_string(b.meet);
    if (l) {
      j["fragment"] = a.fragment;
      j["logical_meet"] = gem::to_string(l->meet);
      j["verdict"] = verdict;
    }
    if (frontier_note) j["note"] = frontier_note;
    print_json(j);
  } else {
    std::cout << pad("depth", 7) << pad("behavioural", 13) << (l ? pad("logical", 13) + "witness" : "") << "\n";
    for (std::size_t n = 0; n <= a.depth; ++n) {
      std::cout << pad(std::to_string(n), 7) << pad(gem::to_string(b.per_depth[n]), 13);
      if (l) std::cout << pad(gem::to_string(l->per_depth[n]), 13) << (l->witness[n] ? gem::print(l->witness[n]) : "-");
      std::cout << "\n";
    }
    std::cout << pad("meet", 7) << pad(gem::to_string(b.meet), 13) << (l ? gem::to_string(l->meet) : "") << "\n";
    if (l) std::cout << verdict << "\n";
    if (frontier_note) std::cout << "note: " << frontier_note << "\n";
  }
  return mismatch ? kCheckFailed : kOk;
}

struct EvalArgs {
  std::string file, state, formula;
  bool via_behaviour = false;
};

int cmd_eval(const Globals& g, const EvalArgs& a) {
  const auto doc = gem::load_document(a.file);
  const auto& m = doc.machine;
  const auto x = m.state_index(a.state);
  std::vector<std::pair<std::string, gem::FormulaPtr>> todo;
  if (!a.formula.empty()) {
    auto f = gem::parse_formula(a.formula);
    gem::check_admissible(*f, m);
    todo.emplace_back(gem::print(f), f);
  } else {
    if (doc.formulas.empty()) throw gem::InputError("no --formula given and the document has no formulas");
    todo = doc.formulas;
  }
  json out = json::object();
  for (const auto& [name, f] : todo) {
    Rational v;
    if (a.via_behaviour) {
      const auto depth = gem::uniform_depth(*f);
      if (!depth) throw gem::SignatureError("formula " + gem::print(f) + " has no uniform depth");
      v = gem::eval_on_behaviour(*f, gem::n_step_behaviour(m, x, *depth));
    } else {
      v = gem::eval_state(*f, m, x);
    }
    out[name] = gem::to_string(v);
    if (!g.json) std::cout << (todo.size() > 1 ? name + " = " : "") << gem::to_string(v) << "\n";
  }
  if (g.json) print_json({{"state", a.state}, {"values", out}});
  return kOk;
}

struct LawsArgs {
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  std::size_t machines = 10;
};

int cmd_laws(const Globals& g, const LawsArgs& a) {
  gem::SuiteOptions opt;
  opt.seed = resolve_seed(a.seed);
  opt.enumeration.seed = opt.seed;
  opt.machines = a.machines;
  const auto r = gem::run_suite(a.suite, opt);
  if (g.json) {
    print_json(r.to_json());
  } else {
    std::cout << r.summary() << "\n";
    for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
  }
  return r.passed ? kOk : kCheckFailed;
}

struct DeterminizeArgs {
  std::string file;
  std::vector<std::string> from;
  std::size_t depth = 0;
  std::size_t cap = 10000;
};

int cmd_determinize(const Globals& g, const DeterminizeArgs& a) {
  const auto doc = gem::load_document(a.file);
  const auto& m = doc.machine;
  std::vector<gem::TValue<std::size_t>> roots;
  for (const auto& s : a.from) roots.push_back(gem::det_root(m, m.state_index(s)));
  const auto graph = gem::reachable_determinization(m, roots, a.depth, a.cap);
  if (g.json) {
    print_json(gem::to_json(m, graph));
    return kOk;
  }
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    std::cout << pad("#" + std::to_string(i), 6) << pad(gem::show(m, graph.nodes[i]), 24) << "out "
              << pad(graph.output[i] ? gem::to_string(*graph.output[i]) : "*", 8);
    for (std::size_t s = 0; s < graph.next[i].size(); ++s)
      std::cout << " " << m.alphabet[s] << "->#" << graph.next[i][s];
    std::cout << "\n";
  }
  return kOk;
}

struct BehaviourArgs {
  std::string file, state;
  std::size_t depth = 1;
};

int cmd_behaviour(const Globals& g, const BehaviourArgs& a) {
  const auto doc = gem::load_document(a.file);
  const auto& m = doc.machine;
  const auto t = gem::n_step_behaviour(m, m.state_index(a.state), a.depth);
  if (g.json) {
    print_json(gem::to_json(t));
    return kOk;
  }
  for (std::size_t len = 0; len < t.depth; ++len)
    for (const auto& w : gem::words_of_length(t.letters(), len)) {
      const auto& v = t.at(w);
      std::cout << pad(len ? gem::word_string(t.alphabet, w) : "(empty)", 12) << (v ? gem::to_string(*v) : "*") << "\n";
    }
  if (t.frontier)
    for (const auto& w : gem::words_of_length(t.letters(), t.depth))
      std::cout << pad(t.depth ? gem::word_string(t.alphabet, w) : "(empty)", 12)
                << (t.alive(w) ? "alive" : "dead") << "\n";
  return kOk;
}

int report_error(const Globals& g, const std::string& kind, const std::exception& e, int code) {
  if (g.json) {
    json j{{"error", kind}, {"message", e.what()}};
    if (auto* v = dynamic_cast<const gem::ValidationError*>(&e)) j["problems"] = v->problems();
    print_json(j);
  } else {
    std::cerr << "gem: " << kind << ": " << e.what() << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Eilenberg-Moore semantics, distances and logics for finite machines", "gem"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");

  std::string check_file;
  auto* check = app.add_subcommand("check", "Validate a machine document");
  check->add_option("file", check_file, "Machine JSON")->required();

  DistanceArgs dist;
  auto* distance = app.add_subcommand("distance", "Behavioural (and logical) distance between two states");
  distance->add_option("file", dist.file, "Machine JSON")->required();
  distance->add_option("--from", dist.from, "First state")->required();
  distance->add_option("--to", dist.to, "Second state")->required();
  distance->add_option("--depth", dist.depth, "Maximal depth N >= 1")->required();
  distance->add_flag("--logical", dist.logical, "Also compute the logical distance");
  distance->add_option("--fragment", dist.fragment, "word | sampled-propositional")->capture_default_str();
  distance->add_flag("--via-behaviour", dist.via_behaviour, "Evaluate formulas on n-step behaviours");
  distance->add_option("--samples", dist.samples, "Operator applications per depth")->capture_default_str();
  distance->add_option("--seed", dist.seed, "Sampling seed");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula at a state");
  eval->add_option("file", ev.file, "Machine JSON")->required();
  eval->add_option("--state", ev.state, "State")->required();
  eval->add_option("--formula", ev.formula, "Formula text; defaults to the document's formulas");
  eval->add_flag("--via-behaviour", ev.via_behaviour, "Evaluate on the n-step behaviour");

  LawsArgs la;
  auto* laws = app.add_subcommand("laws", "Run a law or theorem suite");
  laws->add_option("--suite", la.suite, "Suite name")
      ->check(CLI::IsMember(gem::suite_names()))
      ->capture_default_str();
  laws->add_option("--seed", la.seed, "Seed (default: GRADED_EM_SEED or 1)");
  laws->add_option("--machines", la.machines, "Random machines per preset")->capture_default_str();

  DeterminizeArgs det;
  auto* determinize = app.add_subcommand("determinize", "Dump the reachable determinization");
  determinize->add_option("file", det.file, "Machine JSON")->required();
  determinize->add_option("--from", det.from, "Root states")->required()->delimiter(',');
  determinize->add_option("--depth", det.depth, "Exploration depth")->required();
  determinize->add_option("--cap", det.cap, "Maximal number of explored nodes")->capture_default_str();

  BehaviourArgs beh;
  auto* behaviour = app.add_subcommand("behaviour", "Print the n-step behaviour of a state");
  behaviour->add_option("file", beh.file, "Machine JSON")->required();
  behaviour->add_option("--state", beh.state, "State")->required();
  behaviour->add_option("--depth", beh.depth, "Depth n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(g, check_file);
    if (distance->parsed()) return cmd_distance(g, dist);
    if (eval->parsed()) return cmd_eval(g, ev);
    if (laws->parsed()) return cmd_laws(g, la);
    if (determinize->parsed()) return cmd_determinize(g, det);
    if (behaviour->parsed()) return cmd_behaviour(g, beh);
  } catch (const gem::ValidationError& e) {
    Globals forced = g;
    forced.json = true;
    return report_error(forced, "validation", e, kInputError);
  } catch (const gem::SignatureError& e) {
    return report_error(g, "signature", e, kInputError);
  } catch (const gem::InputError& e) {
    return report_error(g, "input", e, kInputError);
  } catch (const gem::ResourceError& e) {
    return report_error(g, "resource", e, kResourceCap);
  } catch (const gem::DomainError& e) {
    return report_error(g, "domain", e, kInputError);
  }
  return kOk;
}
