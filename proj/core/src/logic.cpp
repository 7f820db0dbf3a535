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

#include "gem/logic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <unordered_map>

namespace gem {

PropOp disjunction() {
  return {"or", 2, false, std::nullopt, [](std::span<const Rational> a) { return std::max(a[0], a[1]); }};
}

PropOp fuzzy_negation() {
  return {"neg", 1, true, std::nullopt, [](std::span<const Rational> a) { return Rational(1) - a[0]; }};
}

PropOp convex_combination(const Rational& p) {
  if (p < 0 || p > 1) throw DomainError("convex weight " + to_string(p) + " outside [0,1]");
  return {"cc", 2, true, p, [p](std::span<const Rational> a) { return p * a[0] + (Rational(1) - p) * a[1]; }};
}

PropOp multiplication() {
  return {"mul", 2, true, std::nullopt, [](std::span<const Rational> a) { return a[0] * a[1]; }};
}

FormulaPtr f_const(bool value) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Const;
  f->truth = value ? 1 : 0;
  return f;
}

FormulaPtr f_top() {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Top;
  return f;
}

FormulaPtr f_stuck(std::string letter) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Stuck;
  f->letter = std::move(letter);
  return f;
}

FormulaPtr f_diamond(std::string letter, FormulaPtr arg) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Diamond;
  f->letter = std::move(letter);
  f->args.push_back(std::move(arg));
  return f;
}

FormulaPtr f_prop(const PropOp& op, std::vector<FormulaPtr> args) {
  if (args.size() != op.arity)
    throw InputError(op.name + " takes " + std::to_string(op.arity) + " arguments, got " + std::to_string(args.size()));
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Prop;
  f->op = std::make_shared<const PropOp>(op);
  f->args = std::move(args);
  return f;
}

FormulaPtr f_word(const std::vector<std::string>& alphabet, const Word& w, FormulaPtr tail) {
  for (std::size_t i = w.size(); i-- > 0;) tail = f_diamond(alphabet.at(w[i]), tail);
  return tail;
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  FormulaPtr parse() {
    auto f = formula();
    skip();
    if (pos_ != s_.size()) error("trailing input");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw InputError("formula: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) error("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::vector<FormulaPtr> args(std::size_t n) {
    std::vector<FormulaPtr> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (i) expect(',');
      out.push_back(formula());
    }
    expect(')');
    return out;
  }

  FormulaPtr formula() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    if (s_[pos_] == '<') {
      ++pos_;
      skip();
      bool bar = false;
      if (pos_ < s_.size() && s_[pos_] == '~') {
        bar = true;
        ++pos_;
      }
      const std::string label = name();
      expect('>');
      if (bar) return f_stuck(label);
      if (label == "T") return f_top();
      return f_diamond(label, formula());
    }
    const std::string head = name();
    expect('(');
    if (head == "const") {
      const std::string v = name();
      expect(')');
      if (v == "T") return f_const(true);
      if (v == "F") return f_const(false);
      error("truth constant must be T or F");
    }
    if (head == "neg") return f_prop(fuzzy_negation(), args(1));
    if (head == "or") return f_prop(disjunction(), args(2));
    if (head == "mul") return f_prop(multiplication(), args(2));
    if (head == "cc") {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ',') ++pos_;
      Rational p;
      try {
        p = parse_rational(s_.substr(start, pos_ - start));
      } catch (const InputError& e) {
        error(e.what());
      }
      if (p < 0 || p > 1) error("convex weight outside [0,1]");
      expect(',');
      return f_prop(convex_combination(p), args(2));
    }
    error("unknown operator '" + head + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Const: return f.truth == 1 ? "const(T)" : "const(F)";
    case Formula::Kind::Top: return "<T>";
    case Formula::Kind::Stuck: return "<~" + f.letter + ">";
    case Formula::Kind::Diamond: return "<" + f.letter + ">" + print(*f.args[0]);
    case Formula::Kind::Prop: {
      std::string s = f.op->name + "(";
      if (f.op->param) s += to_string(*f.op->param) + ",";
      for (std::size_t i = 0; i < f.args.size(); ++i) s += (i ? "," : "") + print(*f.args[i]);
      return s + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> uniform_depth(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Const: return 0;
    case Formula::Kind::Top:
    case Formula::Kind::Stuck: return 1;
    case Formula::Kind::Diamond: {
      auto d = uniform_depth(*f.args[0]);
      if (!d) return std::nullopt;
      return *d + 1;
    }
    case Formula::Kind::Prop: {
      std::optional<std::size_t> common;
      for (const auto& a : f.args) {
        auto d = uniform_depth(*a);
        if (!d || (common && *common != *d)) return std::nullopt;
        common = d;
      }
      return common;
    }
  }
  return std::nullopt;
}

namespace {

bool has_const(const Formula& f) {
  if (f.kind == Formula::Kind::Const) return true;
  return std::any_of(f.args.begin(), f.args.end(), [](const FormulaPtr& a) { return has_const(*a); });
}

}  // namespace

bool admits_depth(const Formula& f, std::size_t n, MonadKind kind) {
  const auto d = uniform_depth(f);
  if (!d || *d > n) return false;
  if (kind == MonadKind::Pow && has_const(f)) return *d == n;
  return true;
}

void check_admissible(const Formula& f, const Machine& m) {
  switch (f.kind) {
    case Formula::Kind::Const:
    case Formula::Kind::Top: break;
    case Formula::Kind::Stuck:
      if (m.monad != MonadKind::DistBH)
        throw SignatureError("<~" + f.letter + "> needs the dist-bh monad, machine uses " + to_string(m.monad));
      [[fallthrough]];
    case Formula::Kind::Diamond:
      if (std::find(m.alphabet.begin(), m.alphabet.end(), f.letter) == m.alphabet.end())
        throw SignatureError("letter '" + f.letter + "' is not in the alphabet");
      break;
    case Formula::Kind::Prop:
      if (f.op->probabilistic != is_probabilistic(m.monad))
        throw SignatureError("operator " + f.op->name + " is not defined on the truth values of " +
                             to_string(m.monad));
      break;
  }
  for (const auto& a : f.args) check_admissible(*a, m);
}

namespace {

using Cache = std::unordered_map<const Formula*, std::vector<Rational>>;

const std::vector<Rational>& eval_cached(const Formula& f, const Machine& m, Cache& cache) {
  auto it = cache.find(&f);
  if (it != cache.end()) return it->second;
  const std::size_t n = m.size();
  std::vector<Rational> v(n);
  switch (f.kind) {
    case Formula::Kind::Const:
      std::fill(v.begin(), v.end(), f.truth);
      break;
    case Formula::Kind::Top:
      v = m.out;
      break;
    case Formula::Kind::Stuck: {
      const std::size_t s = m.letter_index(f.letter);
      for (std::size_t x = 0; x < n; ++x) v[x] = m.next(x, s).is_star() ? 1 : 0;
      break;
    }
    case Formula::Kind::Diamond: {
      const std::size_t s = m.letter_index(f.letter);
      const auto& arg = eval_cached(*f.args[0], m, cache);
      const auto sig = m.signature();
      for (std::size_t x = 0; x < n; ++x) {
        const auto& t = m.next(x, s);
        v[x] = t.is_star() ? Rational(0) : sig.algebra(fmap(t, [&](std::size_t y) { return arg[y]; }));
      }
      break;
    }
    case Formula::Kind::Prop: {
      std::vector<const std::vector<Rational>*> args;
      for (const auto& a : f.args) args.push_back(&eval_cached(*a, m, cache));
      std::vector<Rational> point(args.size());
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < args.size(); ++i) point[i] = (*args[i])[x];
        v[x] = (*f.op)(point);
      }
      break;
    }
  }
  return cache.emplace(&f, std::move(v)).first->second;
}

}  // namespace

std::vector<Rational> eval_all_states(const Formula& f, const Machine& m) {
  check_admissible(f, m);
  Cache cache;
  return eval_cached(f, m, cache);
}

Rational eval_state(const Formula& f, const Machine& m, std::size_t x) {
  if (x >= m.size()) throw InputError("state index out of range");
  return eval_all_states(f, m).at(x);
}

// ---------------------------------------------------------------------------

namespace {

struct BehaviourEval {
  const WordTable& t;
  std::map<std::string, std::size_t> letters;

  std::size_t letter(const std::string& name) const {
    auto it = letters.find(name);
    if (it == letters.end()) throw SignatureError("letter '" + name + "' is not in the alphabet");
    return it->second;
  }

  Rational eval(const Formula& f, Word& w) const {
    switch (f.kind) {
      case Formula::Kind::Const:
        if (t.kind == MonadKind::Pow) {
          if (w.size() != t.depth) throw DomainError("truth constant above the table depth over pow");
          return t.alive(w) ? f.truth : Rational(0);
        }
        return f.truth;
      case Formula::Kind::Top: {
        const auto& v = t.at(w);
        return v ? *v : Rational(0);
      }
      case Formula::Kind::Stuck: {
        if (t.kind != MonadKind::DistBH) throw SignatureError("<~" + f.letter + "> needs the dist-bh monad");
        w.push_back(letter(f.letter));
        const bool alive = t.alive(w);
        w.pop_back();
        return alive ? 0 : 1;
      }
      case Formula::Kind::Diamond: {
        w.push_back(letter(f.letter));
        Rational r = 0;
        if (t.kind == MonadKind::Pow || t.alive(w)) r = eval(*f.args[0], w);
        w.pop_back();
        return r;
      }
      case Formula::Kind::Prop: {
        std::vector<Rational> args;
        for (const auto& a : f.args) args.push_back(eval(*a, w));
        return (*f.op)(args);
      }
    }
    return 0;
  }
};

}  // namespace

Rational eval_on_behaviour(const Formula& f, const WordTable& t) {
  if (!admits_depth(f, t.depth, t.kind))
    throw DomainError("formula " + print(f) + " is not in the depth-" + std::to_string(t.depth) + " logic");
  BehaviourEval ev{t, {}};
  for (std::size_t i = 0; i < t.letters(); ++i) ev.letters[t.alphabet[i]] = i;
  Word w;
  return ev.eval(f, w);
}

// ---------------------------------------------------------------------------

std::vector<FormulaPtr> word_fragment(MonadKind kind, const std::vector<std::string>& alphabet, std::size_t n) {
  const std::size_t k = alphabet.size();
  std::vector<FormulaPtr> out;
  // ⟨w⟩tail for all |w| ≤ max_len, sharing suffixes so evaluation caches hit.
  auto words = [&](const FormulaPtr& tail, std::size_t max_len, std::size_t min_len) {
    std::vector<FormulaPtr> level{tail};
    for (std::size_t len = 0; len <= max_len; ++len) {
      if (len >= min_len) out.insert(out.end(), level.begin(), level.end());
      if (len == max_len) break;
      // Words of length len+1 in lexicographic order: σ·w.
      std::vector<FormulaPtr> next;
      next.reserve(level.size() * k);
      for (std::size_t s = 0; s < k; ++s)
        for (const auto& f : level) next.push_back(f_diamond(alphabet[s], f));
      level = std::move(next);
    }
  };
  if (n >= 1) words(f_top(), n - 1, 0);
  if (kind == MonadKind::Pow) words(f_const(true), n, n);
  if (kind == MonadKind::DistBH && n >= 1)
    for (const auto& a : alphabet) words(f_stuck(a), n - 1, 0);
  return out;
}

std::vector<std::vector<LogicalProfile>> logical_distances(const Machine& m, std::size_t max_depth,
                                                           const FragmentOptions& fragment) {
  if (fragment.name != "word" && fragment.name != "sampled-propositional")
    throw InputError("unknown fragment '" + fragment.name + "' (expected word or sampled-propositional)");
  for (const auto& op : fragment.ops)
    if (op.probabilistic != is_probabilistic(m.monad))
      throw SignatureError("operator " + op.name + " is not defined on the truth values of " + to_string(m.monad));
  const Quantale& q = m.q();
  const std::size_t n = m.size();
  std::vector<std::vector<LogicalProfile>> out(n, std::vector<LogicalProfile>(n));
  for (auto& row : out)
    for (auto& p : row) p.meet = q.top();

  for (std::size_t depth = 0; depth <= max_depth; ++depth) {
    std::vector<FormulaPtr> pool = word_fragment(m.monad, m.alphabet, depth);
    std::vector<std::vector<Rational>> values;
    if (fragment.via_behaviour) {
      const auto tables = n_step_behaviours(m, depth);
      for (const auto& f : pool) {
        std::vector<Rational> v;
        for (const auto& t : tables) v.push_back(eval_on_behaviour(*f, t));
        values.push_back(std::move(v));
      }
    } else {
      Cache cache;
      for (const auto& f : pool) values.push_back(eval_cached(*f, m, cache));
    }

    if (fragment.name == "sampled-propositional" && !fragment.ops.empty() && !pool.empty()) {
      std::mt19937_64 rng(fragment.seed * 1000003 + depth);
      std::map<std::size_t, std::vector<std::size_t>> by_depth;
      for (std::size_t i = 0; i < pool.size(); ++i) by_depth[*uniform_depth(*pool[i])].push_back(i);
      for (std::size_t sample = 0; sample < fragment.samples; ++sample) {
        const PropOp& op = fragment.ops[rng() % fragment.ops.size()];
        const std::size_t first = rng() % pool.size();
        const auto& group = by_depth[*uniform_depth(*pool[first])];
        std::vector<std::size_t> picks{first};
        while (picks.size() < op.arity) picks.push_back(group[rng() % group.size()]);
        std::vector<FormulaPtr> args;
        for (auto i : picks) args.push_back(pool[i]);
        std::vector<Rational> v(n), point(op.arity);
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t i = 0; i < op.arity; ++i) point[i] = values[picks[i]][x];
          v[x] = op(point);
        }
        pool.push_back(f_prop(op, std::move(args)));
        values.push_back(std::move(v));
        by_depth[*uniform_depth(*pool.back())].push_back(pool.size() - 1);
      }
    }

    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Rational acc = q.top();
        FormulaPtr witness;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          const Rational d = q.sym_dist(values[i][x], values[i][y]);
          if (!witness || !q.leq(acc, d)) {
            acc = q.meet(acc, d);
            witness = pool[i];
          }
        }
        auto& p = out[x][y];
        p.per_depth.push_back(acc);
        p.witness.push_back(witness);
        p.meet = q.meet(p.meet, acc);
      }
    }
  }
  return out;
}

LogicalProfile logical_distance(const Machine& m, std::size_t x, std::size_t y, std::size_t max_depth,
                                const FragmentOptions& fragment) {
  if (x >= m.size() || y >= m.size()) throw InputError("state index out of range");
  return logical_distances(m, max_depth, fragment)[x][y];
}

// ---------------------------------------------------------------------------

std::vector<Rational> omega_grid(const MooreSignature& sig) {
  if (is_probabilistic(sig.kind)) return {0, rat(1, 4), rat(1, 2), rat(3, 4), 1};
  return {0, 1};
}

namespace {

Rational algebra_on_atoms(const MooreSignature& sig, const Term& t) {
  return sig.algebra(fmap(t.monad(), [](const Term& a) { return a.value(); }));
}

}  // namespace

Modality diamond_modality(const MooreSignature& sig, std::size_t letter) {
  if (letter >= sig.letters) throw DomainError("letter out of range");
  Modality m;
  m.name = "<" + std::to_string(letter) + ">";
  m.arity = 1;
  m.ev = [letter](const Term& n) {
    const Term& k = n.kids().at(letter);
    return k.is_star() ? Rational(0) : k.value();
  };
  m.lambda = [sig, letter](const Term& n) {
    const Term& k = n.kids().at(letter);
    return k.is_star() ? Rational(0) : algebra_on_atoms(sig, k);
  };
  return m;
}

Modality top_modality(const MooreSignature&) {
  Modality m;
  m.name = "<T>";
  m.ev = [](const Term& n) { return n.value(); };
  m.lambda = m.ev;
  return m;
}

Modality stuck_modality(const MooreSignature& sig, std::size_t letter) {
  if (!sig.star_kids()) throw SignatureError("<~σ> needs the dist-bh monad");
  if (letter >= sig.letters) throw DomainError("letter out of range");
  Modality m;
  m.name = "<~" + std::to_string(letter) + ">";
  m.ev = [letter](const Term& n) { return n.kids().at(letter).is_star() ? Rational(1) : Rational(0); };
  m.lambda = m.ev;
  return m;
}

Modality squaring_modality(const MooreSignature&) {
  Modality m;
  m.name = "square";
  m.ev = [](const Term& n) { return n.value() * n.value(); };
  m.lambda = m.ev;
  return m;
}

std::vector<Modality> shipped_modalities(const MooreSignature& sig) {
  std::vector<Modality> out{top_modality(sig)};
  for (std::size_t s = 0; s < sig.letters; ++s) out.push_back(diamond_modality(sig, s));
  if (sig.star_kids())
    for (std::size_t s = 0; s < sig.letters; ++s) out.push_back(stuck_modality(sig, s));
  return out;
}

CheckReport check_modality(const Modality& mod, const MooreSignature& sig, const EnumerationOptions& opt) {
  CheckReport report("modality", mod.name + " over " + sig.name());
  std::vector<Term> grid;
  for (const auto& v : omega_grid(sig)) grid.push_back(Term::atom(v));
  auto fo = [&](const Term& n) {
    return term_fmap(n, [&](const Term& k) { return Term::atom(algebra_on_atoms(sig, k)); });
  };
  for (const auto& t : enumerate_terms(sig, {Layer::F, Layer::T}, grid, opt)) {
    ++report.cases;
    const Rational direct = mod.lambda(t);
    const Rational factored = mod.ev(fo(t));
    if (direct != factored)
      report.fail("factorization lambda = ev.Fo",
                  t.show() + ": lambda " + to_string(direct) + ", ev.Fo " + to_string(factored));
  }
  for (const auto& t : enumerate_terms(sig, {Layer::T, Layer::F}, grid, opt)) {
    ++report.cases;
    const Rational lhs = mod.ev(fo(term_zeta(sig, t)));
    const Rational rhs = sig.algebra(fmap(t.monad(), [&](const Term& n) { return mod.ev(n); }));
    if (lhs != rhs)
      report.fail("homomorphy ev.Fo.zeta = o.T(ev)",
                  t.show() + ": ev.Fo.zeta " + to_string(lhs) + ", o.T(ev) " + to_string(rhs));
  }
  return report;
}

CheckReport check_prop_op(const PropOp& p, const MooreSignature& sig, const EnumerationOptions& opt) {
  CheckReport report("prop-op", p.name + (p.param ? "(" + to_string(*p.param) + ")" : "") + " over " + sig.name());
  if (p.probabilistic != is_probabilistic(sig.kind)) {
    report.fail("truth values", p.name + " is not defined on the truth values of " + to_string(sig.kind));
    return report;
  }
  const auto grid = omega_grid(sig);
  std::vector<std::vector<Rational>> tuples{{}};
  for (std::size_t i = 0; i < p.arity; ++i) {
    std::vector<std::vector<Rational>> next;
    for (const auto& t : tuples)
      for (const auto& g : grid) {
        auto u = t;
        u.push_back(g);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  auto show_value = [](const TValue<std::vector<Rational>>& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      s += i ? ", (" : "(";
      for (std::size_t j = 0; j < t.support()[i].size(); ++j) s += (j ? "," : "") + to_string(t.support()[i][j]);
      s += ")";
      if (is_probabilistic(t.kind())) s += "->" + to_string(t.weights()[i]);
    }
    return s + "]";
  };
  for (const auto& t : enumerate_values(sig.law_monad(), tuples, opt)) {
    ++report.cases;
    const Rational lhs = sig.algebra(fmap(t, [&](const std::vector<Rational>& u) { return p(u); }));
    std::vector<Rational> components;
    for (std::size_t i = 0; i < p.arity; ++i)
      components.push_back(sig.algebra(fmap(t, [i](const std::vector<Rational>& u) { return u[i]; })));
    const Rational rhs = p(components);
    if (lhs != rhs)
      report.fail("homomorphy o.T(p) = p.o^n",
                  show_value(t) + ": o.T(p) " + to_string(lhs) + ", p.o^n " + to_string(rhs));
  }
  return report;
}

}  // namespace gem
