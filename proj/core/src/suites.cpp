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

#include "gem/suites.hpp"

#include "gem/graded.hpp"
#include "gem/io.hpp"
#include "gem/machine.hpp"
#include "gem/quantale.hpp"

#include <random>

namespace gem {

namespace {

std::vector<std::string> alphabet_of(std::size_t letters) {
  std::vector<std::string> out;
  for (std::size_t s = 0; s < letters; ++s) out.push_back(std::string(1, static_cast<char>('a' + s)));
  return out;
}

std::vector<AlgebraStructure> algebras_of(MonadKind kind) {
  return {is_probabilistic(kind) ? o_expect() : o_join(kind)};
}

CheckReport quantale_suite(const SuiteOptions&) {
  CheckReport r("laws", "quantale");
  for (auto kind : {QuantaleKind::Bool, QuantaleKind::Unit}) {
    const auto& q = quantale_of(kind);
    const auto sample = default_sample(q);
    r.absorb(check_quantale_laws(q, sample));
  }
  return r;
}

CheckReport monad_suite(const SuiteOptions& opt) {
  CheckReport r("laws", "monad");
  for (auto kind : preset_kinds()) {
    const auto algebras = kind == MonadKind::DistBH ? std::vector<AlgebraStructure>{} : algebras_of(kind);
    r.absorb(check_monad_and_algebra_laws(kind, {1, 2, 3}, algebras, opt.enumeration));
  }
  r.notes.push_back("dist-bh: o_expect is checked as a dist algebra; the black hole has no expectation");
  return r;
}

CheckReport em_suite(const SuiteOptions& opt) {
  CheckReport r("laws", "em-law");
  for (auto kind : preset_kinds())
    for (std::size_t letters = 1; letters <= opt.letters; ++letters)
      r.absorb(check_em_law(moore_signature(kind, letters), {1, 2, 3}, opt.enumeration));
  return r;
}

CheckReport graded_suite(const SuiteOptions& opt) {
  CheckReport r("laws", "graded");
  EnumerationOptions e = opt.enumeration;
  e.cap = std::min<std::size_t>(e.cap, 400);
  for (auto kind : preset_kinds())
    r.absorb(check_graded_monad_laws(moore_signature(kind, opt.letters), {1, 2}, 2, e));
  return r;
}

CheckReport modality_suite(const SuiteOptions& opt) {
  CheckReport r("laws", "modality");
  for (auto kind : preset_kinds()) {
    const auto sig = moore_signature(kind, opt.letters);
    for (const auto& mod : shipped_modalities(sig)) r.absorb(check_modality(mod, sig, opt.enumeration));
    if (is_probabilistic(kind)) {
      absorb_negative(r, check_modality(squaring_modality(sig), sig, opt.enumeration));
      r.absorb(check_prop_op(fuzzy_negation(), sig, opt.enumeration));
      r.absorb(check_prop_op(convex_combination(rat(1, 3)), sig, opt.enumeration));
      absorb_negative(r, check_prop_op(multiplication(), sig, opt.enumeration));
    } else {
      r.absorb(check_prop_op(disjunction(), sig, opt.enumeration));
    }
  }
  return r;
}

// Failing corpus machines are attached in full so the violation can be
// replayed from a file.
void absorb_corpus(CheckReport& into, const CheckReport& sub, const Machine& m) {
  into.absorb(sub);
  if (!sub.passed) into.details["instances"][sub.instance] = to_json(m);
}

CheckReport separation_suite(const SuiteOptions& opt) {
  CheckReport r("laws", "separation");
  for (auto kind : preset_kinds()) r.absorb(check_depth1_separation_F(moore_signature(kind, opt.letters)));
  for (std::size_t i = 0; i < opt.machines; ++i) {
    const auto m = corpus_machine(MonadKind::DistBH, i, opt);
    auto sub = check_black_hole_separation(m, corpus_depth(MonadKind::DistBH, opt));
    sub.instance = "dist-bh machine #" + std::to_string(i);
    absorb_corpus(r, sub, m);
  }
  return r;
}

CheckReport expressivity_suite(const SuiteOptions& opt) {
  CheckReport r("laws", "expressivity");
  for (auto kind : preset_kinds())
    for (std::size_t i = 0; i < opt.machines; ++i) {
      const auto m = corpus_machine(kind, i, opt);
      auto sub = check_expressivity(m, corpus_depth(kind, opt));
      sub.instance = to_string(kind) + " machine #" + std::to_string(i);
      sub.details = nlohmann::json::object();
      absorb_corpus(r, sub, m);
    }
  return r;
}

CheckReport invariance_suite(const SuiteOptions& opt) {
  CheckReport r("laws", "invariance");
  for (auto kind : preset_kinds())
    for (std::size_t i = 0; i < opt.machines; ++i) {
      const auto m = corpus_machine(kind, i, opt);
      auto sub = check_invariance(m, corpus_depth(kind, opt), invariance_ops(kind, opt.seed + i), opt.samples,
                                  opt.seed + i);
      sub.instance = to_string(kind) + " machine #" + std::to_string(i);
      sub.details = nlohmann::json::object();
      absorb_corpus(r, sub, m);
    }
  return r;
}

CheckReport appendix_suite(const SuiteOptions&) {
  CheckReport r("laws", "appendix");
  auto sub = appendix_counterexample(5);
  r.absorb(sub);
  r.details = sub.details;
  return r;
}

}  // namespace

const std::vector<MonadKind>& preset_kinds() {
  static const std::vector<MonadKind> kinds{MonadKind::Pow, MonadKind::NePow, MonadKind::Dist, MonadKind::DistBH};
  return kinds;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"quantale",     "monad",      "em-law",   "graded", "modality",
                                              "separation",   "expressivity", "invariance", "appendix", "all"};
  return names;
}

CheckReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "quantale") return quantale_suite(opt);
  if (name == "monad") return monad_suite(opt);
  if (name == "em-law") return em_suite(opt);
  if (name == "graded") return graded_suite(opt);
  if (name == "modality") return modality_suite(opt);
  if (name == "separation") return separation_suite(opt);
  if (name == "expressivity") return expressivity_suite(opt);
  if (name == "invariance") return invariance_suite(opt);
  if (name == "appendix") return appendix_suite(opt);
  if (name == "all") {
    CheckReport r("laws", "all");
    for (const auto& s : suite_names())
      if (s != "all") {
        const auto sub = run_suite(s, opt);
        r.absorb(sub);
        if (sub.details.contains("instances"))
          for (const auto& [k, v] : sub.details["instances"].items()) r.details["instances"][s + ": " + k] = v;
      }
    return r;
  }
  throw InputError("unknown suite '" + name + "'");
}

Machine corpus_machine(MonadKind kind, std::size_t i, const SuiteOptions& opt) {
  const std::size_t states = 1 + i % std::max<std::size_t>(opt.max_states, 1);
  return random_machine(kind, preset_quantale(kind), states, alphabet_of(opt.letters), opt.seed * 7919 + i);
}

std::size_t corpus_depth(MonadKind kind, const SuiteOptions& opt) {
  return quantale_of(preset_quantale(kind)).contains(rat(1, 2)) ? opt.rational_depth : opt.bool_depth;
}

std::vector<PropOp> invariance_ops(MonadKind kind, std::uint64_t seed) {
  if (!is_probabilistic(kind)) return {disjunction()};
  std::vector<PropOp> ops{fuzzy_negation()};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 5; ++i) {
    const long long den = 1LL << (1 + rng() % 4);
    ops.push_back(convex_combination(rat(1 + static_cast<long long>(rng() % (den - 1)), den)));
  }
  return ops;
}

void absorb_negative(CheckReport& into, const CheckReport& negative) {
  into.cases += negative.cases;
  if (negative.passed) {
    into.fail("negative example " + negative.instance + " is rejected", "no violation found");
    return;
  }
  const auto& v = negative.violations.front();
  into.notes.push_back("negative example " + negative.instance + " rejected as expected; " + v.law + ": " + v.witness);
}

}  // namespace gem
