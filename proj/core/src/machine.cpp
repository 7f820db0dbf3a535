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

#include "gem/machine.hpp"

#include <deque>
#include <map>

namespace gem {

std::size_t Machine::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return i;
  throw InputError("unknown state '" + name + "'");
}

std::size_t Machine::letter_index(const std::string& name) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == name) return i;
  throw InputError("unknown letter '" + name + "'");
}

bool is_preset(MonadKind monad, QuantaleKind quantale) {
  return is_probabilistic(monad) == (quantale == QuantaleKind::Unit);
}

void validate(const Machine& m) {
  if (!is_preset(m.monad, m.quantale))
    throw InputError("monad " + to_string(m.monad) + " is not shipped with quantale " + m.q().name());
  if (m.alphabet.empty()) throw InputError("alphabet: must be nonempty");
  if (m.states.empty()) throw InputError("states: must be nonempty");
  if (m.out.size() != m.size()) throw InputError("out: one value per state expected");
  if (m.trans.size() != m.size() * m.letters()) throw InputError("trans: one value per state and letter expected");
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (!m.q().contains(m.out[x])) throw InputError("out." + m.states[x] + ": not an element of " + m.q().name());
    for (std::size_t s = 0; s < m.letters(); ++s) {
      const auto& t = m.next(x, s);
      const std::string path = "trans." + m.states[x] + "." + m.alphabet[s];
      if (t.kind() != m.monad) throw InputError(path + ": value of the wrong monad kind");
      for (auto y : t.support())
        if (y >= m.size()) throw InputError(path + ": successor out of range");
    }
  }
}

ZetaResult zeta_apply(const MooreSignature& sig, const TValue<MooreValue>& t) {
  if (t.is_star()) throw DomainError("zeta_apply: the black hole is not an element of T F C");
  ZetaResult r{sig.algebra(fmap(t, [](const MooreValue& v) { return v.out; })), {}};
  for (std::size_t s = 0; s < sig.letters; ++s) {
    if (!is_probabilistic(t.kind())) {
      r.next.push_back(fmap(t, [s](const MooreValue& v) {
        if (!v.next.at(s)) throw DomainError("zeta_apply: black hole kid outside the black-hole preset");
        return *v.next[s];
      }));
      continue;
    }
    if (sig.star_kids()) {
      std::vector<std::pair<std::optional<std::size_t>, Rational>> pushed;
      for (std::size_t i = 0; i < t.size(); ++i) pushed.emplace_back(t.support()[i].next.at(s), t.weights()[i]);
      r.next.push_back(bh_flatten(std::move(pushed)));
      continue;
    }
    std::vector<std::pair<std::size_t, Rational>> w;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto& kid = t.support()[i].next.at(s);
      if (!kid) throw DomainError("zeta_apply: black hole kid outside the black-hole preset");
      w.emplace_back(*kid, t.weights()[i]);
    }
    r.next.push_back(TValue<std::size_t>::dist(sig.kind, std::move(w)));
  }
  return r;
}

CheckReport check_em_law(const MooreSignature& sig, const std::vector<std::size_t>& carrier_sizes,
                         const EnumerationOptions& opt, const ZetaFn& zeta) {
  CheckReport report("em-law", sig.name());
  for (auto n : carrier_sizes) {
    const auto base = atoms(n);
    for (const auto& f : enumerate_terms(sig, {Layer::F}, base, opt)) {
      ++report.cases;
      const Term lhs = zeta(sig, term_eta(sig, f));
      const Term rhs = term_fmap(f, [&](const Term& x) { return term_eta(sig, x); });
      if (lhs != rhs) report.fail("unit zeta.eta_F = F(eta)", f.show() + " gives " + lhs.show() + " vs " + rhs.show());
    }
    for (const auto& t : enumerate_terms(sig, {Layer::T, Layer::T, Layer::F}, base, opt)) {
      ++report.cases;
      const Term inner = term_tmap(t, [&](const Term& s) { return zeta(sig, s); });
      const Term lhs = term_fmap(zeta(sig, inner), term_mu);
      const Term rhs = zeta(sig, term_mu(t));
      if (lhs != rhs)
        report.fail("multiplication F(mu).zeta_T.T(zeta) = zeta.mu_F",
                    t.show() + " gives " + lhs.show() + " vs " + rhs.show());
    }
  }
  return report;
}

TValue<std::size_t> det_root(const Machine& m, std::size_t x) {
  if (x >= m.size()) throw InputError("state index out of range");
  return TValue<std::size_t>::unit(m.monad, x);
}

DetStep det_step(const Machine& m, const TValue<std::size_t>& s) {
  DetStep r;
  if (s.is_star()) {
    r.next.assign(m.letters(), TValue<std::size_t>::star());
    return r;
  }
  const auto sig = m.signature();
  r.output = sig.algebra(fmap(s, [&](std::size_t x) { return m.out.at(x); }));
  for (std::size_t a = 0; a < m.letters(); ++a)
    r.next.push_back(mult(fmap(s, [&](std::size_t x) { return m.next(x, a); })));
  return r;
}

DetGraph reachable_determinization(const Machine& m, const std::vector<TValue<std::size_t>>& roots,
                                   std::size_t depth, std::size_t cap) {
  DetGraph g;
  std::map<TValue<std::size_t>, std::size_t> index;
  std::deque<std::size_t> queue;
  auto add = [&](const TValue<std::size_t>& s, std::size_t d) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (g.nodes.size() >= cap)
      throw ResourceError("determinization exceeds the cap of " + std::to_string(cap) + " states");
    const std::size_t id = g.nodes.size();
    index.emplace(s, id);
    g.nodes.push_back(s);
    g.depth.push_back(d);
    g.output.emplace_back();
    g.next.emplace_back();
    queue.push_back(id);
    return id;
  };
  for (const auto& r : roots) {
    if (r.kind() != m.monad) throw InputError("root of the wrong monad kind");
    add(r, 0);
  }
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const auto step = det_step(m, g.nodes[id]);
    g.output[id] = step.output;
    if (g.depth[id] == depth) continue;
    std::vector<std::size_t> succ;
    for (const auto& s : step.next) succ.push_back(add(s, g.depth[id] + 1));
    g.next[id] = std::move(succ);
  }
  return g;
}

std::string show(const Machine& m, const TValue<std::size_t>& s) {
  if (s.is_star()) return "*";
  const bool prob = is_probabilistic(s.kind());
  std::string out = prob ? "[" : "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += m.states.at(s.support()[i]);
    if (prob) out += "->" + to_string(s.weights()[i]);
  }
  return out + (prob ? "]" : "}");
}

}  // namespace gem
