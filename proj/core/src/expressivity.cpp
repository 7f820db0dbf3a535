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

#include <algorithm>
#include <map>
#include <random>

namespace gem {

QuantaleKind preset_quantale(MonadKind kind) {
  return is_probabilistic(kind) ? QuantaleKind::Unit : QuantaleKind::Bool;
}

// ---------------------------------------------------------------------------

CheckReport check_depth1_separation_F(const MooreSignature& sig, const FinVCat& a0,
                                      const std::vector<std::vector<Rational>>& source) {
  const Quantale& q = quantale_of(preset_quantale(sig.kind));
  CheckReport report("depth1-separation", sig.name() + ", " + std::to_string(a0.size()) + "-point A0, " +
                                              std::to_string(source.size()) + " source maps");
  if (&a0.quantale() != &q) throw DomainError("test space over the wrong quantale");
  for (const auto& h : source)
    if (h.size() != a0.size()) throw DomainError("source map has the wrong domain size");

  std::vector<Rational> values = omega_grid(sig);
  for (const auto& h : source) values.insert(values.end(), h.begin(), h.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto omega = std::make_shared<const FinVCat>(FinVCat::symmetrized_subspace(q, values));
  auto idx = [&](const Rational& v) {
    return static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), v) - values.begin());
  };

  std::vector<VFunctor> base;
  try {
    for (const auto& h : source) {
      std::vector<std::size_t> map;
      for (const auto& v : h) map.push_back(idx(v));
      base.emplace_back(a0, omega, std::move(map));
    }
  } catch (const DomainError& e) {
    report.fail("source maps are V-functors", e.what());
    return report;
  }
  if (auto r = is_initial_source(a0, base); !r.initial) {
    report.fail("source is initial on A0", r.witness());
    return report;
  }

  // F A₀: output grid × kids, a kid index equal to |A₀| being ⋆.
  const auto grid = omega_grid(sig);
  const std::size_t star = a0.size();
  const std::size_t kid_choices = a0.size() + (sig.star_kids() ? 1 : 0);
  std::size_t count = grid.size();
  for (std::size_t s = 0; s < sig.letters; ++s) count *= kid_choices;
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> elems;
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < count; ++e) {
    std::size_t rest = e;
    std::vector<std::size_t> kids(sig.letters);
    for (std::size_t s = sig.letters; s-- > 0;) {
      kids[s] = rest % kid_choices;
      rest /= kid_choices;
    }
    std::string l = "(" + to_string(grid[rest]) + ";";
    for (std::size_t s = 0; s < sig.letters; ++s)
      l += (s ? "," : "") + (kids[s] == star ? std::string("*") : a0.label(kids[s]));
    labels.push_back(l + ")");
    elems.emplace_back(rest, std::move(kids));
  }
  std::vector<Rational> table(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      Rational acc = q.sym_dist(grid[elems[i].first], grid[elems[j].first]);
      for (std::size_t s = 0; s < sig.letters; ++s) {
        const std::size_t a = elems[i].second[s], b = elems[j].second[s];
        if (a == star || b == star) acc = q.meet(acc, a == b ? q.unit() : q.bottom());
        else acc = q.meet(acc, a0.d(a, b));
      }
      table[i * count + j] = acc;
    }
  }
  const FinVCat fa0(q, labels, std::move(table), true, a0.separated());

  std::vector<VFunctor> family;
  try {
    std::vector<std::size_t> top;
    for (const auto& e : elems) top.push_back(idx(grid[e.first]));
    family.emplace_back(fa0, omega, std::move(top));
    for (std::size_t s = 0; s < sig.letters; ++s) {
      for (const auto& h : source) {
        std::vector<std::size_t> map;
        for (const auto& e : elems) map.push_back(idx(e.second[s] == star ? Rational(0) : h[e.second[s]]));
        family.emplace_back(fa0, omega, std::move(map));
      }
      if (sig.star_kids()) {
        std::vector<std::size_t> map;
        for (const auto& e : elems) map.push_back(idx(e.second[s] == star ? Rational(1) : Rational(0)));
        family.emplace_back(fa0, omega, std::move(map));
      }
    }
  } catch (const DomainError& e) {
    report.fail("modal maps are V-functors", e.what());
    return report;
  }
  report.cases = count * count;
  if (auto r = is_initial_source(fa0, family); !r.initial)
    report.fail("initial on F A0", fa0.label(r.x) + " vs " + fa0.label(r.y) + ": " + r.witness());
  return report;
}

CheckReport check_depth1_separation_F(const MooreSignature& sig) {
  CheckReport report("depth1-separation", sig.name());
  const Quantale& q = quantale_of(preset_quantale(sig.kind));
  if (q.kind() == QuantaleKind::Bool) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const FinVCat a0 = FinVCat::discrete(q, n);
      std::vector<std::vector<Rational>> chi;
      for (std::size_t a = 0; a < n; ++a) {
        std::vector<Rational> h(n, 0);
        h[a] = 1;
        chi.push_back(std::move(h));
      }
      report.absorb(check_depth1_separation_F(sig, a0, chi));
    }
    return report;
  }
  auto metric = [&](std::vector<std::string> labels, std::vector<Rational> table) {
    return FinVCat(q, std::move(labels), std::move(table), true, true);
  };
  std::vector<FinVCat> spaces;
  spaces.push_back(metric({"p"}, {0}));
  spaces.push_back(metric({"p", "q", "r"}, {0, rat(1, 4), rat(3, 4), rat(1, 4), 0, rat(1, 2), rat(3, 4), rat(1, 2), 0}));
  spaces.push_back(metric({"p", "q", "r"}, {0, rat(1, 2), rat(1, 2), rat(1, 2), 0, rat(1, 2), rat(1, 2), rat(1, 2), 0}));
  for (const auto& a0 : spaces) {
    std::vector<std::vector<Rational>> maps;
    for (std::size_t p = 0; p < a0.size(); ++p) {
      std::vector<Rational> h;
      for (std::size_t x = 0; x < a0.size(); ++x) h.push_back(a0.d(x, p));
      maps.push_back(std::move(h));
    }
    report.absorb(check_depth1_separation_F(sig, a0, maps));
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Pairs all_pairs(const Machine& m) {
  Pairs out;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x + 1; y < m.size(); ++y) out.emplace_back(x, y);
  return out;
}

std::string pair_name(const Machine& m, std::size_t x, std::size_t y) {
  return "(" + m.states[x] + ", " + m.states[y] + ")";
}

nlohmann::json profile_json(const std::vector<Rational>& v) {
  auto j = nlohmann::json::array();
  for (const auto& r : v) j.push_back(to_string(r));
  return j;
}

CheckReport expressivity_on(const Machine& m, const Pairs& pairs, std::size_t max_depth, const std::string& inst) {
  CheckReport report("expressivity", inst);
  const auto bd = behavioural_distances(m, max_depth);
  const auto ld = logical_distances(m, max_depth);
  std::vector<std::vector<LogicalProfile>> lm;
  if (m.monad == MonadKind::DistBH) {
    FragmentOptions via;
    via.via_behaviour = true;
    lm = logical_distances(m, max_depth, via);
  }
  bool behaviour_route_ok = true;
  for (auto [x, y] : pairs) {
    for (std::size_t n = 0; n <= max_depth; ++n) {
      ++report.cases;
      const Rational& b = bd[x][y].per_depth[n];
      const Rational& l = ld[x][y].per_depth[n];
      if (!lm.empty() && lm[x][y].per_depth[n] != b) behaviour_route_ok = false;
      if (b == l) continue;
      std::string w = "states " + pair_name(m, x, y) + " depth " + std::to_string(n) + ": behavioural " +
                      to_string(b) + ", logical " + to_string(l);
      if (auto diff = first_difference(n_step_behaviour(m, x, n), n_step_behaviour(m, y, n)))
        w += ", tables first differ at word \"" + word_string(m.alphabet, *diff) + "\"";
      if (ld[x][y].witness[n]) w += ", best formula " + print(ld[x][y].witness[n]);
      report.fail("per-depth d^b = d^L", w);
    }
  }
  if (pairs.size() == 1) {
    auto [x, y] = pairs.front();
    report.details["behavioural"] = profile_json(bd[x][y].per_depth);
    report.details["logical"] = profile_json(ld[x][y].per_depth);
  }
  if (!lm.empty())
    report.notes.push_back(std::string("evaluating through the word tables instead of the state semantics: ") +
                           (behaviour_route_ok ? "equal at every depth" : "also differs"));
  return report;
}

CheckReport invariance_on(const Machine& m, const Pairs& pairs, std::size_t max_depth,
                          const std::vector<PropOp>& ops, std::size_t samples, std::uint64_t seed,
                          const std::string& inst) {
  CheckReport report("invariance", inst);
  FragmentOptions frag;
  frag.name = "sampled-propositional";
  frag.ops = ops;
  frag.samples = samples;
  frag.seed = seed;
  const auto bd = behavioural_distances(m, max_depth);
  const auto ld = logical_distances(m, max_depth, frag);
  const Quantale& q = m.q();
  for (auto [x, y] : pairs) {
    for (std::size_t n = 0; n <= max_depth; ++n) {
      ++report.cases;
      const Rational& b = bd[x][y].per_depth[n];
      const Rational& l = ld[x][y].per_depth[n];
      if (q.leq(b, l)) continue;
      const auto& f = ld[x][y].witness[n];
      const auto vals = eval_all_states(*f, m);
      report.fail("d^b <= d^L", "states " + pair_name(m, x, y) + " depth " + std::to_string(n) + ": behavioural " +
                                    to_string(b) + ", logical " + to_string(l) + " via " + print(f) + " = " +
                                    to_string(vals[x]) + " vs " + to_string(vals[y]));
    }
  }
  if (pairs.size() == 1) {
    auto [x, y] = pairs.front();
    report.details["behavioural"] = profile_json(bd[x][y].per_depth);
    report.details["logical"] = profile_json(ld[x][y].per_depth);
  }
  return report;
}

std::string machine_tag(const Machine& m) {
  return to_string(m.monad) + " machine, " + std::to_string(m.size()) + " states";
}

}  // namespace

CheckReport check_expressivity(const Machine& m, std::size_t x, std::size_t y, std::size_t max_depth) {
  if (x >= m.size() || y >= m.size()) throw InputError("state index out of range");
  return expressivity_on(m, {{x, y}}, max_depth, machine_tag(m) + ", pair " + pair_name(m, x, y));
}

CheckReport check_expressivity(const Machine& m, std::size_t max_depth) {
  return expressivity_on(m, all_pairs(m), max_depth, machine_tag(m));
}

CheckReport check_invariance(const Machine& m, std::size_t x, std::size_t y, std::size_t max_depth,
                             const std::vector<PropOp>& ops, std::size_t samples, std::uint64_t seed) {
  if (x >= m.size() || y >= m.size()) throw InputError("state index out of range");
  return invariance_on(m, {{x, y}}, max_depth, ops, samples, seed, machine_tag(m) + ", pair " + pair_name(m, x, y));
}

CheckReport check_invariance(const Machine& m, std::size_t max_depth, const std::vector<PropOp>& ops,
                             std::size_t samples, std::uint64_t seed) {
  return invariance_on(m, all_pairs(m), max_depth, ops, samples, seed, machine_tag(m));
}

CheckReport check_black_hole_separation(const Machine& m, std::size_t depth, bool via_behaviour) {
  if (m.monad != MonadKind::DistBH) throw DomainError("black-hole separation needs a dist-bh machine");
  CheckReport report("black-hole-separation", machine_tag(m) + ", depth " + std::to_string(depth) +
                                                  (via_behaviour ? ", word-table semantics" : ""));
  const auto fragment = word_fragment(MonadKind::DistBH, m.alphabet, depth);
  const auto tables = n_step_behaviours(m, depth);
  std::vector<std::vector<Rational>> values;
  for (const auto& f : fragment) {
    if (via_behaviour) {
      std::vector<Rational> v;
      for (const auto& t : tables) v.push_back(eval_on_behaviour(*f, t));
      values.push_back(std::move(v));
    } else {
      values.push_back(eval_all_states(*f, m));
    }
  }
  for (auto [x, y] : all_pairs(m)) {
    ++report.cases;
    const bool differ = tables[x] != tables[y];
    std::optional<std::size_t> sep;
    for (std::size_t i = 0; i < fragment.size() && !sep; ++i)
      if (values[i][x] != values[i][y]) sep = i;
    if (differ && !sep) {
      const auto w = first_difference(tables[x], tables[y]);
      report.fail("different behaviours are separated",
                  "states " + pair_name(m, x, y) + " differ at word \"" + word_string(m.alphabet, *w) +
                      "\" but agree on every word formula");
    } else if (!differ && sep) {
      report.fail("equal behaviours agree", "states " + pair_name(m, x, y) + " have equal behaviours but " +
                                                print(fragment[*sep]) + " = " + to_string(values[*sep][x]) +
                                                " vs " + to_string(values[*sep][y]));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

CheckReport appendix_counterexample(std::size_t max_depth) {
  CheckReport report("appendix", "c(x) = {(z,z)}, c(y) = {(x,z)}, c(z) = {} for F X = X x X, T = P");
  enum { X = 0, Y = 1, Z = 2 };
  const std::vector<std::vector<std::pair<int, int>>> c{{{Z, Z}}, {{X, Z}}, {}};
  const char* names = "xyz";

  // Graded semantics: c^(n)(s) ∈ 𝒫(F^n 1) ≅ 2, executability of the full
  // binary tree of depth n.
  std::vector<std::vector<bool>> exec{{true, true, true}};
  for (std::size_t n = 1; n <= max_depth; ++n) {
    std::vector<bool> row(3, false);
    for (int s = 0; s < 3; ++s)
      for (auto [l, r] : c[s]) row[s] = row[s] || (exec[n - 1][l] && exec[n - 1][r]);
    exec.push_back(row);
  }
  auto& jexec = report.details["executable"] = nlohmann::json::array();
  for (std::size_t n = 0; n <= max_depth; ++n) {
    ++report.cases;
    jexec.push_back({{"depth", n}, {"x", static_cast<bool>(exec[n][X])}, {"y", static_cast<bool>(exec[n][Y])},
                     {"z", static_cast<bool>(exec[n][Z])}});
    if (exec[n][X] != exec[n][Y]) report.fail("x, y graded-equivalent", "depth " + std::to_string(n));
  }

  // ◇(φ, ψ)(s) = ∃(l, r) ∈ c(s). φ(l) ∧ ψ(r); semantics as bit masks over {x,y,z}.
  auto diamond = [&](unsigned phi, unsigned psi) {
    unsigned out = 0;
    for (int s = 0; s < 3; ++s)
      for (auto [l, r] : c[s])
        if ((phi >> l & 1u) && (psi >> r & 1u)) out |= 1u << s;
    return out;
  };
  const unsigned top = 0b111;
  const unsigned nonuniform = diamond(diamond(top, top), top);
  report.details["nonuniform"] = {{"formula", "<>(<>(T,T),T)"}, {"x", (nonuniform >> X & 1u) != 0},
                                  {"y", (nonuniform >> Y & 1u) != 0}};
  ++report.cases;
  if ((nonuniform >> X & 1u) != 0 || (nonuniform >> Y & 1u) != 1)
    report.fail("<>(<>(T,T),T) is F at x and T at y", "got mask " + std::to_string(nonuniform));
  const unsigned uniform2 = diamond(diamond(top, top), diamond(top, top));
  ++report.cases;
  if ((uniform2 >> X & 1u) != (uniform2 >> Y & 1u))
    report.fail("<>(<>(T,T),<>(T,T)) agrees on x and y", "got mask " + std::to_string(uniform2));

  // All uniform formulas over Θ = {⊤}, ◇ and disjunction, up to semantics.
  std::map<unsigned, std::string> level{{top, "T"}};
  auto& jclasses = report.details["uniform_classes"] = nlohmann::json::array();
  for (std::size_t n = 0; n <= max_depth; ++n) {
    if (n > 0) {
      std::map<unsigned, std::string> next;
      for (const auto& [a, fa] : level)
        for (const auto& [b, fb] : level) next.emplace(diamond(a, b), "<>(" + fa + "," + fb + ")");
      for (bool grew = true; grew;) {
        grew = false;
        const auto snapshot = next;
        for (const auto& [a, fa] : snapshot)
          for (const auto& [b, fb] : snapshot)
            if (next.emplace(a | b, "or(" + fa + "," + fb + ")").second) grew = true;
      }
      level = std::move(next);
    }
    auto classes = nlohmann::json::array();
    for (const auto& [mask, f] : level) {
      ++report.cases;
      std::string sem;
      for (int s = 0; s < 3; ++s) sem += (mask >> s & 1u) ? std::string(1, names[s]) : "";
      classes.push_back({{"formula", f}, {"true_at", sem}});
      if ((mask >> X & 1u) != (mask >> Y & 1u))
        report.fail("uniform formulas agree on x and y", "depth " + std::to_string(n) + ": " + f);
    }
    jclasses.push_back({{"depth", n}, {"classes", classes}});
  }
  return report;
}

// ---------------------------------------------------------------------------

Machine random_machine(MonadKind kind, QuantaleKind quantale, std::size_t states,
                       const std::vector<std::string>& alphabet, std::uint64_t seed,
                       const RandomMachineOptions& opt) {
  if (states == 0 || alphabet.empty()) throw InputError("random_machine: bounds must be positive");
  if (!is_preset(kind, quantale)) throw InputError("random_machine: not a shipped preset");
  if (opt.weight_denominator == 0 || opt.star_den == 0) throw InputError("random_machine: zero denominator");
  std::mt19937_64 rng(seed * 8 + static_cast<std::uint64_t>(kind));
  Machine m;
  m.quantale = quantale;
  m.monad = kind;
  m.alphabet = alphabet;
  for (std::size_t i = 0; i < states; ++i) m.states.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < states; ++i)
    m.out.push_back(quantale == QuantaleKind::Bool ? Rational(static_cast<long long>(rng() % 2))
                                                   : rat(static_cast<long long>(rng() % 5), 4));
  auto pick = [&](std::size_t k) {
    std::vector<std::size_t> out;
    while (out.size() < k) {
      const std::size_t y = rng() % states;
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
    return out;
  };
  const std::size_t cap = std::min(opt.max_support, states);
  for (std::size_t x = 0; x < states; ++x) {
    for (std::size_t s = 0; s < alphabet.size(); ++s) {
      switch (kind) {
        case MonadKind::Pow: m.trans.push_back(TValue<std::size_t>::set(kind, pick(rng() % (cap + 1)))); break;
        case MonadKind::NePow: m.trans.push_back(TValue<std::size_t>::set(kind, pick(1 + rng() % cap))); break;
        case MonadKind::Dist:
        case MonadKind::DistBH: {
          if (kind == MonadKind::DistBH && rng() % opt.star_den < opt.star_num) {
            m.trans.push_back(TValue<std::size_t>::star());
            break;
          }
          const std::size_t denom = opt.weight_denominator;
          const std::size_t k = 1 + rng() % std::min(cap, denom);
          const auto support = pick(k);
          std::vector<std::size_t> cuts;
          while (cuts.size() + 1 < k) {
            const std::size_t c = 1 + rng() % (denom - 1);
            if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
          }
          std::sort(cuts.begin(), cuts.end());
          cuts.push_back(denom);
          std::vector<std::pair<std::size_t, Rational>> w;
          std::size_t prev = 0;
          for (std::size_t i = 0; i < k; ++i) {
            w.emplace_back(support[i], rat(static_cast<long long>(cuts[i] - prev), static_cast<long long>(denom)));
            prev = cuts[i];
          }
          m.trans.push_back(TValue<std::size_t>::dist(kind, std::move(w)));
          break;
        }
      }
    }
  }
  return m;
}

}  // namespace gem
