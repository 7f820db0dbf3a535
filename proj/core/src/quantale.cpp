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

#include "gem/quantale.hpp"

#include <algorithm>

namespace gem {

void Quantale::require(const Rational& a) const {
  if (!contains(a)) throw DomainError(to_string(a) + " is not an element of quantale " + name());
}

Rational Quantale::tensor(const Rational& a, const Rational& b) const {
  require(a);
  require(b);
  return tensor_impl(a, b);
}

Rational Quantale::hom(const Rational& b, const Rational& c) const {
  require(b);
  require(c);
  return hom_impl(b, c);
}

bool Quantale::leq(const Rational& a, const Rational& b) const {
  require(a);
  require(b);
  return leq_impl(a, b);
}

Rational Quantale::join(const Rational& a, const Rational& b) const {
  require(a);
  require(b);
  return join_impl(a, b);
}

Rational Quantale::meet(const Rational& a, const Rational& b) const {
  require(a);
  require(b);
  return meet_impl(a, b);
}

Rational Quantale::join(std::span<const Rational> family) const {
  Rational acc = bottom();
  for (const auto& a : family) acc = join(acc, a);
  return acc;
}

Rational Quantale::meet(std::span<const Rational> family) const {
  Rational acc = top();
  for (const auto& a : family) acc = meet(acc, a);
  return acc;
}

Rational Quantale::sym_dist(const Rational& a, const Rational& b) const {
  return meet(hom(a, b), hom(b, a));
}

Rational Bool2::tensor_impl(const Rational& a, const Rational& b) const { return std::min(a, b); }
Rational Bool2::hom_impl(const Rational& b, const Rational& c) const { return (b == 0 || c == 1) ? 1 : 0; }
Rational Bool2::join_impl(const Rational& a, const Rational& b) const { return std::max(a, b); }
Rational Bool2::meet_impl(const Rational& a, const Rational& b) const { return std::min(a, b); }

Rational UnitIntervalOplus::tensor_impl(const Rational& a, const Rational& b) const {
  return std::min<Rational>(a + b, 1);
}
Rational UnitIntervalOplus::hom_impl(const Rational& b, const Rational& c) const {
  return std::max<Rational>(c - b, 0);
}
// Reversed order: joins are numeric minima, meets numeric maxima.
Rational UnitIntervalOplus::join_impl(const Rational& a, const Rational& b) const { return std::min(a, b); }
Rational UnitIntervalOplus::meet_impl(const Rational& a, const Rational& b) const { return std::max(a, b); }

const Quantale& bool2() {
  static const Bool2 q;
  return q;
}

const Quantale& unit_interval() {
  static const UnitIntervalOplus q;
  return q;
}

const Quantale& quantale_of(QuantaleKind kind) {
  return kind == QuantaleKind::Bool ? bool2() : unit_interval();
}

QuantaleKind parse_quantale_kind(const std::string& name) {
  if (name == "bool") return QuantaleKind::Bool;
  if (name == "unit") return QuantaleKind::Unit;
  throw InputError("unknown quantale '" + name + "' (expected \"bool\" or \"unit\")");
}

std::vector<Rational> default_sample(const Quantale& q) {
  if (q.kind() == QuantaleKind::Bool) return {0, 1};
  return {0, rat(1, 4), rat(1, 2), rat(3, 4), 1};
}

namespace {

std::string show(std::initializer_list<Rational> xs) {
  std::string s = "(";
  bool first = true;
  for (const auto& x : xs) {
    if (!first) s += ", ";
    s += to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

CheckReport check_quantale_laws(const Quantale& q, std::span<const Rational> sample) {
  CheckReport report("quantale-laws", q.name());
  for (const auto& a : sample) {
    if (!q.contains(a)) {
      report.fail("carrier", to_string(a) + " is outside the carrier");
      return report;
    }
  }
  const Rational k = q.unit();
  auto closed = [&](const Rational& r, const char* op, std::initializer_list<Rational> args) {
    if (!q.contains(r)) report.fail(std::string("closure of ") + op, show(args) + " -> " + to_string(r));
  };

  for (const auto& a : sample) {
    ++report.cases;
    if (q.tensor(a, k) != a || q.tensor(k, a) != a) report.fail("monoid unit", show({a}));
    if (!q.leq(a, a)) report.fail("order reflexivity", show({a}));
    if (!q.leq(q.bottom(), a) || !q.leq(a, q.top())) report.fail("order bounds", show({a}));
    for (const auto& b : sample) {
      ++report.cases;
      const Rational ab = q.tensor(a, b);
      closed(ab, "tensor", {a, b});
      if (ab != q.tensor(b, a)) report.fail("tensor commutativity", show({a, b}));
      if (q.leq(a, b) && q.leq(b, a) && a != b) report.fail("order antisymmetry", show({a, b}));
      const Rational j = q.join(a, b);
      const Rational m = q.meet(a, b);
      closed(j, "join", {a, b});
      closed(m, "meet", {a, b});
      if (!q.leq(a, j) || !q.leq(b, j)) report.fail("join is an upper bound", show({a, b}));
      if (!q.leq(m, a) || !q.leq(m, b)) report.fail("meet is a lower bound", show({a, b}));
      for (const auto& c : sample) {
        ++report.cases;
        if (q.tensor(q.tensor(a, b), c) != q.tensor(a, q.tensor(b, c)))
          report.fail("tensor associativity", show({a, b, c}));
        if (q.leq(a, b) && q.leq(b, c) && !q.leq(a, c)) report.fail("order transitivity", show({a, b, c}));
        if (q.leq(a, c) && q.leq(b, c) && !q.leq(j, c)) report.fail("join is least", show({a, b, c}));
        if (q.leq(c, a) && q.leq(c, b) && !q.leq(c, m)) report.fail("meet is greatest", show({a, b, c}));
        const bool lhs = q.leq(q.tensor(a, b), c);
        const bool rhs = q.leq(a, q.hom(b, c));
        if (lhs != rhs) report.fail("tensor-hom adjunction", show({a, b, c}));
      }
    }
  }

  // Join-continuity over every subfamily, the empty one included.
  const std::size_t n = sample.size();
  if (n <= 16) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Rational> family;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) family.push_back(sample[i]);
      for (const auto& v : sample) {
        ++report.cases;
        std::vector<Rational> shifted;
        for (const auto& u : family) shifted.push_back(q.tensor(u, v));
        if (q.tensor(q.join(family), v) != q.join(shifted)) {
          std::string fam = "{";
          for (std::size_t i = 0; i < family.size(); ++i) fam += (i ? ", " : "") + to_string(family[i]);
          report.fail("join-continuity", "family " + fam + "}, v = " + to_string(v));
        }
      }
    }
  } else {
    report.notes.push_back("sample larger than 16 elements: join-continuity checked on binary joins only");
  }
  return report;
}

}  // namespace gem
