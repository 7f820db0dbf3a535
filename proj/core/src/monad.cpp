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

#include "gem/monad.hpp"

namespace gem {

std::string to_string(MonadKind kind) {
  switch (kind) {
    case MonadKind::Pow: return "pow";
    case MonadKind::NePow: return "nepow";
    case MonadKind::Dist: return "dist";
    case MonadKind::DistBH: return "dist-bh";
  }
  return "?";
}

MonadKind parse_monad_kind(const std::string& name) {
  if (name == "pow") return MonadKind::Pow;
  if (name == "nepow") return MonadKind::NePow;
  if (name == "dist") return MonadKind::Dist;
  if (name == "dist-bh") return MonadKind::DistBH;
  throw InputError("unknown monad '" + name + "' (expected pow, nepow, dist or dist-bh)");
}

AlgebraStructure o_join(MonadKind kind) {
  if (kind != MonadKind::Pow && kind != MonadKind::NePow)
    throw DomainError("o_join is an algebra for the powerset monads only");
  return {"o_join", kind, {0, 1}, [](const TValue<Rational>& t) {
            return t.contains(Rational(1)) ? Rational(1) : Rational(0);
          }};
}

AlgebraStructure o_expect() {
  return {"o_expect", MonadKind::Dist, {0, rat(1, 2), 1}, [](const TValue<Rational>& t) {
            if (t.is_star()) throw DomainError("o_expect is undefined on the black hole");
            Rational e = 0;
            for (std::size_t i = 0; i < t.size(); ++i) e += t.support()[i] * t.weights()[i];
            return e;
          }};
}

std::string show(const TValue<std::size_t>& t) {
  if (t.is_star()) return "*";
  std::string s = is_probabilistic(t.kind()) ? "[" : "{";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(t.support()[i]);
    if (is_probabilistic(t.kind())) s += "->" + to_string(t.weights()[i]);
  }
  return s + (is_probabilistic(t.kind()) ? "]" : "}");
}

std::string show(const TValue<Rational>& t) {
  if (t.is_star()) return "*";
  std::string s = is_probabilistic(t.kind()) ? "[" : "{";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += to_string(t.support()[i]);
    if (is_probabilistic(t.kind())) s += "->" + to_string(t.weights()[i]);
  }
  return s + (is_probabilistic(t.kind()) ? "]" : "}");
}

namespace {

template <class E>
std::string show_nested(const TValue<TValue<E>>& tt) {
  if (tt.is_star()) return "*";
  std::string s = "<";
  for (std::size_t i = 0; i < tt.size(); ++i) {
    if (i) s += ", ";
    s += show(tt.support()[i]);
    if (is_probabilistic(tt.kind())) s += "->" + to_string(tt.weights()[i]);
  }
  return s + ">";
}

void check_monad_on_carrier(MonadKind kind, std::size_t n, const EnumerationOptions& opt, CheckReport& report) {
  using V = TValue<std::size_t>;
  using VV = TValue<V>;
  std::vector<std::size_t> carrier(n);
  for (std::size_t i = 0; i < n; ++i) carrier[i] = i;

  EnumerationOptions level1 = opt;
  level1.max_support = n;  // TX in full
  level1.cap = std::max<std::size_t>(opt.cap, 1u << 12);
  const auto tx = enumerate_values(kind, carrier, level1);
  for (const auto& t : tx) {
    ++report.cases;
    if (mult(VV::unit(kind, t)) != t) report.fail("left unit mu.eta_T = id", show(t));
    if (mult(fmap(t, [&](std::size_t x) { return V::unit(kind, x); })) != t)
      report.fail("right unit mu.T(eta) = id", show(t));
  }

  EnumerationOptions level2 = opt;
  level2.max_support = std::min<std::size_t>(opt.max_support, 3);
  const auto ttx = enumerate_values(kind, tx, level2);
  EnumerationOptions level3 = opt;
  level3.max_support = 2;
  level3.seed = opt.seed + 17;
  const auto tttx = enumerate_values(kind, ttx, level3);
  for (const auto& ttt : tttx) {
    ++report.cases;
    const V lhs = mult(mult(ttt));
    const V rhs = mult(fmap(ttt, [](const VV& inner) { return mult(inner); }));
    if (lhs != rhs) report.fail("associativity mu.mu_T = mu.T(mu)", "carrier size " + std::to_string(n));
  }
}

void check_algebra(const AlgebraStructure& a, const EnumerationOptions& opt, CheckReport& report) {
  using V = TValue<Rational>;
  const MonadKind kind = a.kind;
  for (const auto& x : a.test_carrier) {
    ++report.cases;
    if (a(V::unit(kind, x)) != x) report.fail(a.name + " unit law a.eta = id", to_string(x));
  }
  EnumerationOptions level1 = opt;
  level1.max_support = a.test_carrier.size();
  const auto ta = enumerate_values(kind, a.test_carrier, level1);
  // a(t) must land back in the sampled carrier's ambient set; the
  // multiplication law is then checked on TT over the sample.
  EnumerationOptions level2 = opt;
  level2.max_support = std::min<std::size_t>(opt.max_support, 3);
  const auto tta = enumerate_values(kind, ta, level2);
  for (const auto& tt : tta) {
    ++report.cases;
    const Rational lhs = a(fmap(tt, [&](const V& inner) { return a(inner); }));
    const Rational rhs = a(mult(tt));
    if (lhs != rhs) report.fail(a.name + " multiplication law a.T(a) = a.mu", show_nested(tt));
  }
}

}  // namespace

CheckReport check_monad_and_algebra_laws(MonadKind kind, const std::vector<std::size_t>& carrier_sizes,
                                         const std::vector<AlgebraStructure>& algebras,
                                         const EnumerationOptions& opt) {
  CheckReport report("monad-laws", to_string(kind));
  for (auto n : carrier_sizes) check_monad_on_carrier(kind, n, opt, report);
  for (const auto& a : algebras) {
    if (a.kind != kind) throw DomainError("algebra " + a.name + " is for " + to_string(a.kind));
    check_algebra(a, opt, report);
  }
  return report;
}

}  // namespace gem
