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

#include "gem/graded.hpp"

#include <map>

namespace gem {

std::size_t word_count(std::size_t letters, std::size_t len) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < len; ++i) n *= letters;
  return n;
}

std::size_t word_offset(std::size_t letters, std::size_t len) {
  std::size_t total = 0;
  for (std::size_t l = 0; l < len; ++l) total += word_count(letters, l);
  return total;
}

std::size_t word_index(std::size_t letters, const Word& w) {
  std::size_t idx = 0;
  for (auto a : w) idx = idx * letters + a;
  return word_offset(letters, w.size()) + idx;
}

std::vector<Word> words_of_length(std::size_t letters, std::size_t len) {
  std::vector<Word> out;
  const std::size_t n = word_count(letters, len);
  for (std::size_t e = 0; e < n; ++e) {
    Word w(len);
    std::size_t rest = e;
    for (std::size_t i = len; i-- > 0;) {
      w[i] = rest % letters;
      rest /= letters;
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::string word_string(const std::vector<std::string>& alphabet, const Word& w) {
  bool short_names = true;
  for (const auto& a : alphabet) short_names = short_names && a.size() == 1;
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !short_names) s += ".";
    s += alphabet.at(w[i]);
  }
  return s;
}

const std::optional<Rational>& WordTable::at(const Word& w) const {
  if (w.size() >= depth) throw DomainError("word of length " + std::to_string(w.size()) + " outside the body");
  return body.at(word_index(letters(), w));
}

bool WordTable::alive(const Word& w) const {
  if (w.size() > depth) throw DomainError("word longer than the table depth");
  if (w.size() < depth) return at(w).has_value();
  if (!frontier) return true;
  return (*frontier)[word_index(letters(), w) - word_offset(letters(), depth)];
}

namespace {

class Stepper {
 public:
  explicit Stepper(const Machine& m) : m_(m) {}

  const DetStep& step(const TValue<std::size_t>& s) {
    auto it = memo_.find(s);
    if (it == memo_.end()) it = memo_.emplace(s, det_step(m_, s)).first;
    return it->second;
  }

  WordTable behaviour(std::size_t x, std::size_t n) {
    WordTable t;
    t.kind = m_.monad;
    t.alphabet = m_.alphabet;
    t.depth = n;
    std::vector<TValue<std::size_t>> level{det_root(m_, x)};
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<TValue<std::size_t>> next;
      next.reserve(level.size() * t.letters());
      for (const auto& s : level) {
        const auto& st = step(s);
        t.body.push_back(st.output);
        for (const auto& succ : st.next) next.push_back(succ);
      }
      level = std::move(next);
    }
    if (!is_affine(m_.monad)) {
      std::vector<bool> f;
      for (const auto& s : level) f.push_back(m_.monad == MonadKind::Pow ? !s.empty() : !s.is_star());
      t.frontier = std::move(f);
    }
    return t;
  }

 private:
  const Machine& m_;
  std::map<TValue<std::size_t>, DetStep> memo_;
};

}  // namespace

WordTable n_step_behaviour(const Machine& m, std::size_t x, std::size_t n) {
  Stepper st(m);
  return st.behaviour(x, n);
}

std::vector<WordTable> n_step_behaviours(const Machine& m, std::size_t n) {
  Stepper st(m);
  std::vector<WordTable> out;
  for (std::size_t x = 0; x < m.size(); ++x) out.push_back(st.behaviour(x, n));
  return out;
}

WordTable em_project(const WordTable& t) {
  WordTable r = t;
  r.frontier.reset();
  return r;
}

Rational table_distance(const Quantale& q, const WordTable& a, const WordTable& b) {
  if (a.depth != b.depth || a.alphabet != b.alphabet || a.kind != b.kind)
    throw DomainError("table_distance: tables of different shape");
  Rational acc = q.top();
  for (std::size_t i = 0; i < a.body.size(); ++i) {
    const auto& u = a.body[i];
    const auto& v = b.body[i];
    if (u && v) acc = q.meet(acc, q.sym_dist(*u, *v));
    else if (u || v) acc = q.meet(acc, q.bottom());
  }
  if (a.frontier.has_value() != b.frontier.has_value())
    throw DomainError("table_distance: only one table carries a frontier");
  if (a.frontier)
    for (std::size_t i = 0; i < a.frontier->size(); ++i)
      if ((*a.frontier)[i] != (*b.frontier)[i]) acc = q.meet(acc, q.bottom());
  return acc;
}

std::optional<Word> first_difference(const WordTable& a, const WordTable& b) {
  if (a.depth != b.depth || a.alphabet != b.alphabet) throw DomainError("first_difference: tables of different shape");
  for (std::size_t len = 0; len <= a.depth; ++len) {
    for (const auto& w : words_of_length(a.letters(), len)) {
      if (len < a.depth) {
        if (a.at(w) != b.at(w)) return w;
      } else if (a.alive(w) != b.alive(w)) {
        return w;
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<DepthProfile>> behavioural_distances(const Machine& m, std::size_t max_depth) {
  const Quantale& q = m.q();
  const std::size_t n = m.size();
  std::vector<std::vector<DepthProfile>> out(n, std::vector<DepthProfile>(n));
  for (auto& row : out)
    for (auto& p : row) p.meet = q.top();
  Stepper st(m);
  for (std::size_t d = 0; d <= max_depth; ++d) {
    std::vector<WordTable> tables;
    for (std::size_t x = 0; x < n; ++x) tables.push_back(st.behaviour(x, d));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Rational v = table_distance(q, tables[x], tables[y]);
        out[x][y].per_depth.push_back(v);
        out[x][y].meet = q.meet(out[x][y].meet, v);
      }
    }
  }
  return out;
}

DepthProfile behavioural_distance(const Machine& m, std::size_t x, std::size_t y, std::size_t max_depth) {
  if (x >= m.size() || y >= m.size()) throw InputError("state index out of range");
  const Quantale& q = m.q();
  Stepper st(m);
  DepthProfile p{{}, q.top()};
  for (std::size_t d = 0; d <= max_depth; ++d) {
    const Rational v = table_distance(q, st.behaviour(x, d), st.behaviour(y, d));
    p.per_depth.push_back(v);
    p.meet = q.meet(p.meet, v);
  }
  return p;
}

namespace {

std::vector<Layer> graded_layers(std::initializer_list<std::size_t> depths) {
  std::vector<Layer> layers;
  for (auto d : depths) {
    for (std::size_t i = 0; i < d; ++i) layers.push_back(Layer::F);
    layers.push_back(Layer::T);
  }
  return layers;
}

}  // namespace

CheckReport check_graded_monad_laws(const MooreSignature& sig, const std::vector<std::size_t>& carrier_sizes,
                                    std::size_t max_depth, const EnumerationOptions& opt, const ZetaFn& zeta) {
  CheckReport report("graded-monad-laws", sig.name());
  auto eta = [&](const Term& x) { return term_eta(sig, x); };
  for (auto size : carrier_sizes) {
    const auto base = atoms(size);
    for (std::size_t n = 0; n <= max_depth; ++n) {
      for (const auto& x : enumerate_terms(sig, graded_layers({n}), base, opt)) {
        ++report.cases;
        const Term left = term_mu_mn(sig, 0, n, eta(x), zeta);
        if (left != x)
          report.fail("left unit mu^{0," + std::to_string(n) + "}.eta = id", x.show() + " gives " + left.show());
        const Term lifted = term_fpow(n, x, [&](const Term& t) { return term_tmap(t, eta); });
        const Term right = term_mu_mn(sig, n, 0, lifted, zeta);
        if (right != x)
          report.fail("right unit mu^{" + std::to_string(n) + ",0}.M_n(eta) = id", x.show() + " gives " + right.show());
      }
    }
    for (std::size_t m = 0; m <= max_depth; ++m) {
      for (std::size_t n = 0; m + n <= max_depth; ++n) {
        for (std::size_t k = 0; m + n + k <= max_depth; ++k) {
          const std::string law = "associativity (m,n,k)=(" + std::to_string(m) + "," + std::to_string(n) + "," +
                                  std::to_string(k) + ")";
          for (const auto& t : enumerate_terms(sig, graded_layers({m, n, k}), base, opt)) {
            ++report.cases;
            const Term inner = term_fpow(m, t, [&](const Term& s) {
              return term_tmap(s, [&](const Term& u) { return term_mu_mn(sig, n, k, u, zeta); });
            });
            const Term lhs = term_mu_mn(sig, m, n + k, inner, zeta);
            const Term rhs = term_mu_mn(sig, m + n, k, term_mu_mn(sig, m, n, t, zeta), zeta);
            if (lhs != rhs) report.fail(law, t.show() + " gives " + lhs.show() + " vs " + rhs.show());
          }
        }
      }
    }
  }
  return report;
}

}  // namespace gem
