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

#include "gem/term.hpp"

#include <random>
#include <set>

namespace gem {

Term Term::atom(Rational value) {
  Term t(Tag::Atom);
  t.value_ = std::move(value);
  return t;
}

Term Term::star() { return Term(Tag::Star); }

Term Term::node(Rational out, std::vector<Term> kids) {
  Term t(Tag::Node);
  t.value_ = std::move(out);
  t.kids_ = std::move(kids);
  return t;
}

Term Term::monad(TValue<Term> value) {
  Term t(Tag::Monad);
  t.monad_ = std::make_shared<const TValue<Term>>(std::move(value));
  return t;
}

const TValue<Term>& Term::monad() const {
  if (tag_ != Tag::Monad) throw DomainError("term " + show() + " is not a monad value");
  return *monad_;
}

bool operator==(const Term& a, const Term& b) {
  if (a.tag_ != b.tag_) return false;
  switch (a.tag_) {
    case Term::Tag::Atom: return a.value_ == b.value_;
    case Term::Tag::Star: return true;
    case Term::Tag::Node: return a.value_ == b.value_ && a.kids_ == b.kids_;
    case Term::Tag::Monad: return a.monad_ == b.monad_ || *a.monad_ == *b.monad_;
  }
  return false;
}

bool operator<(const Term& a, const Term& b) {
  if (a.tag_ != b.tag_) return a.tag_ < b.tag_;
  switch (a.tag_) {
    case Term::Tag::Atom: return a.value_ < b.value_;
    case Term::Tag::Star: return false;
    case Term::Tag::Node:
      if (a.value_ != b.value_) return a.value_ < b.value_;
      return a.kids_ < b.kids_;
    case Term::Tag::Monad: return *a.monad_ < *b.monad_;
  }
  return false;
}

std::string Term::show() const {
  switch (tag_) {
    case Tag::Atom: return to_string(value_);
    case Tag::Star: return "*";
    case Tag::Node: {
      std::string s = "(" + to_string(value_) + ";";
      for (std::size_t i = 0; i < kids_.size(); ++i) s += (i ? ", " : " ") + kids_[i].show();
      return s + ")";
    }
    case Tag::Monad: {
      const auto& m = *monad_;
      const bool prob = is_probabilistic(m.kind());
      std::string s = prob ? "[" : "{";
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ", ";
        s += m.support()[i].show();
        if (prob) s += "->" + to_string(m.weights()[i]);
      }
      return s + (prob ? "]" : "}");
    }
  }
  return "?";
}

std::string MooreSignature::name() const {
  return to_string(kind) + "/" + algebra.name + "/|S|=" + std::to_string(letters);
}

MooreSignature moore_signature(MonadKind kind, std::size_t letters) {
  if (letters == 0) throw DomainError("alphabet must be nonempty");
  switch (kind) {
    case MonadKind::Pow:
    case MonadKind::NePow: return {kind, letters, o_join(kind)};
    case MonadKind::Dist:
    case MonadKind::DistBH: return {kind, letters, o_expect()};
  }
  throw DomainError("unknown monad kind");
}

Term term_eta(const MooreSignature& sig, const Term& x) {
  return Term::monad(TValue<Term>::unit(sig.law_monad(), x));
}

Term term_mu(const Term& tt) {
  return Term::monad(mult(fmap(tt.monad(), [](const Term& inner) { return inner.monad(); })));
}

Term term_tmap(const Term& t, const std::function<Term(const Term&)>& f) { return Term::monad(fmap(t.monad(), f)); }

Term term_fmap(const Term& node, const std::function<Term(const Term&)>& f) {
  if (node.tag() != Term::Tag::Node) throw DomainError("term " + node.show() + " is not an F-value");
  std::vector<Term> kids;
  kids.reserve(node.kids().size());
  for (const auto& k : node.kids()) kids.push_back(k.is_star() ? k : f(k));
  return Term::node(node.value(), std::move(kids));
}

Term term_fpow(std::size_t depth, const Term& t, const std::function<Term(const Term&)>& f) {
  if (depth == 0) return f(t);
  return term_fmap(t, [&](const Term& k) { return term_fpow(depth - 1, k, f); });
}

Term term_zeta(const MooreSignature& sig, const Term& t) {
  const auto& tv = t.monad();
  const Rational out = sig.algebra(fmap(tv, [](const Term& n) { return n.value(); }));
  std::vector<Term> kids;
  for (std::size_t s = 0; s < sig.letters; ++s) {
    auto image = fmap(tv, [s](const Term& n) { return n.kids().at(s); });
    const bool stuck = sig.star_kids() && image.contains(Term::star());
    kids.push_back(stuck ? Term::star() : Term::monad(std::move(image)));
  }
  return Term::node(out, std::move(kids));
}

Term term_zeta_n(const MooreSignature& sig, std::size_t n, const Term& t, const ZetaFn& zeta) {
  if (n == 0) return t;
  return term_fmap(zeta(sig, t), [&](const Term& k) { return term_zeta_n(sig, n - 1, k, zeta); });
}

Term term_mu_mn(const MooreSignature& sig, std::size_t m, std::size_t n, const Term& t, const ZetaFn& zeta) {
  return term_fpow(m, t, [&](const Term& inner) {
    return term_fpow(n, term_zeta_n(sig, n, inner, zeta), term_mu);
  });
}

namespace {

std::vector<Term> f_layer(const MooreSignature& sig, const std::vector<Term>& inner, const EnumerationOptions& opt) {
  std::vector<Term> choices = inner;
  if (sig.star_kids()) choices.push_back(Term::star());
  const auto& grid = sig.algebra.test_carrier;
  const std::size_t c = choices.size();

  std::size_t total = grid.size();
  bool big = false;
  for (std::size_t s = 0; s < sig.letters && !big; ++s) {
    total *= c;
    big = total > opt.cap;
  }
  std::vector<Term> out;
  if (!big) {
    for (std::size_t e = 0; e < total; ++e) {
      std::size_t rest = e;
      std::vector<Term> kids(sig.letters, Term::star());
      for (std::size_t s = sig.letters; s-- > 0;) {
        kids[s] = choices[rest % c];
        rest /= c;
      }
      out.push_back(Term::node(grid[rest], std::move(kids)));
    }
    return out;
  }
  std::mt19937_64 rng(opt.seed + 101);
  std::set<Term> seen;
  for (std::size_t attempt = 0; attempt < opt.cap * 20 && seen.size() < opt.cap; ++attempt) {
    std::vector<Term> kids;
    for (std::size_t s = 0; s < sig.letters; ++s) kids.push_back(choices[rng() % c]);
    seen.insert(Term::node(grid[rng() % grid.size()], std::move(kids)));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Term> enumerate_terms(const MooreSignature& sig, const std::vector<Layer>& layers,
                                  const std::vector<Term>& base, const EnumerationOptions& opt) {
  std::vector<Term> cur = base;
  for (std::size_t i = layers.size(); i-- > 0;) {
    EnumerationOptions o = opt;
    o.seed = opt.seed * 31 + i;
    if (layers[i] == Layer::F) {
      cur = f_layer(sig, cur, o);
    } else {
      auto values = enumerate_values(sig.law_monad(), cur, o);
      cur.clear();
      for (auto& v : values) cur.push_back(Term::monad(std::move(v)));
    }
  }
  return cur;
}

std::vector<Term> atoms(std::size_t n) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Term::atom(Rational(static_cast<long long>(i))));
  return out;
}

}  // namespace gem
