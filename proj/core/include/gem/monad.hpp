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

#ifndef GEM_MONAD_HPP
#define GEM_MONAD_HPP

#include "gem/rational.hpp"
#include "gem/report.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gem {

/// The four shipped branching monads.
///
/// DistBH is the black-hole monad X ↦ 𝒟X + 1: a value is either a ⋆-free
/// finite distribution or the pure black hole ⋆. Any positive ⋆ mass
/// collapses a mixture to ⋆, so the representation is always normalized.
enum class MonadKind { Pow, NePow, Dist, DistBH };

std::string to_string(MonadKind kind);
MonadKind parse_monad_kind(const std::string& name);

/// T1 ≅ 1. Pow (∅ vs {*}) and DistBH (δ vs ⋆) have two-point T1.
constexpr bool is_affine(MonadKind kind) { return kind == MonadKind::NePow || kind == MonadKind::Dist; }
constexpr bool is_probabilistic(MonadKind kind) { return kind == MonadKind::Dist || kind == MonadKind::DistBH; }

/// A finitely supported value of T over element type E (E needs == and <).
/// Sets keep a sorted duplicate-free support; distributions additionally keep
/// a parallel vector of strictly positive weights summing to 1.
template <class E>
class TValue {
 public:
  static TValue set(MonadKind kind, std::vector<E> elems) {
    if (is_probabilistic(kind)) throw DomainError("set literal given for probabilistic monad " + to_string(kind));
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (kind == MonadKind::NePow && elems.empty()) throw DomainError("nonempty powerset value is empty");
    TValue v(kind);
    v.support_ = std::move(elems);
    return v;
  }

  /// Merges repeated outcomes and drops zero weights; the result must have
  /// total mass exactly 1.
  static TValue dist(MonadKind kind, std::vector<std::pair<E, Rational>> weighted) {
    if (!is_probabilistic(kind)) throw DomainError("distribution literal given for " + to_string(kind));
    std::sort(weighted.begin(), weighted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    TValue v(kind);
    Rational total = 0;
    for (auto& [e, w] : weighted) {
      if (w < 0) throw DomainError("negative probability weight " + gem::to_string(w));
      total += w;
      if (w == 0) continue;
      if (!v.support_.empty() && v.support_.back() == e) {
        v.weights_.back() += w;
      } else {
        v.support_.push_back(std::move(e));
        v.weights_.push_back(w);
      }
    }
    if (total != 1) throw DomainError("distribution has total mass " + gem::to_string(total) + ", expected 1");
    return v;
  }

  static TValue star() {
    TValue v(MonadKind::DistBH);
    v.star_ = true;
    return v;
  }

  static TValue unit(MonadKind kind, E x) {
    TValue v(kind);
    v.support_.push_back(std::move(x));
    if (is_probabilistic(kind)) v.weights_.push_back(Rational(1));
    return v;
  }

  MonadKind kind() const { return kind_; }
  bool is_star() const { return star_; }
  bool empty() const { return !star_ && support_.empty(); }
  std::size_t size() const { return support_.size(); }
  const std::vector<E>& support() const { return support_; }
  const std::vector<Rational>& weights() const { return weights_; }

  Rational weight(const E& e) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), e);
    if (it == support_.end() || !(*it == e)) return 0;
    return is_probabilistic(kind_) ? weights_[it - support_.begin()] : Rational(1);
  }
  bool contains(const E& e) const { return std::binary_search(support_.begin(), support_.end(), e); }

  friend bool operator==(const TValue& a, const TValue& b) {
    return a.kind_ == b.kind_ && a.star_ == b.star_ && a.support_ == b.support_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const TValue& a, const TValue& b) { return !(a == b); }
  friend bool operator<(const TValue& a, const TValue& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.star_ != b.star_) return a.star_ < b.star_;
    if (a.support_ != b.support_) return a.support_ < b.support_;
    return a.weights_ < b.weights_;
  }

 private:
  explicit TValue(MonadKind kind) : kind_(kind) {}

  MonadKind kind_;
  bool star_ = false;
  std::vector<E> support_;
  std::vector<Rational> weights_;
};

/// T f. Images of set elements are deduplicated, pushed-forward masses of
/// collided outcomes are added, ⋆ is fixed.
template <class E, class F>
auto fmap(const TValue<E>& t, F&& f) -> TValue<std::decay_t<std::invoke_result_t<F, const E&>>> {
  using R = std::decay_t<std::invoke_result_t<F, const E&>>;
  if (t.is_star()) return TValue<R>::star();
  if (!is_probabilistic(t.kind())) {
    std::vector<R> image;
    image.reserve(t.size());
    for (const auto& e : t.support()) image.push_back(f(e));
    return TValue<R>::set(t.kind(), std::move(image));
  }
  std::vector<std::pair<R, Rational>> pushed;
  pushed.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) pushed.emplace_back(f(t.support()[i]), t.weights()[i]);
  return TValue<R>::dist(t.kind(), std::move(pushed));
}

/// μ. Union for sets, weighted mixture for distributions; in DistBH any ⋆ in
/// play absorbs the whole value.
template <class E>
TValue<E> mult(const TValue<TValue<E>>& tt) {
  const MonadKind kind = tt.kind();
  if (tt.is_star()) return TValue<E>::star();
  for (const auto& inner : tt.support())
    if (inner.kind() != kind)
      throw DomainError("mult over mixed kinds " + to_string(kind) + " / " + to_string(inner.kind()));
  if (!is_probabilistic(kind)) {
    std::vector<E> all;
    for (const auto& inner : tt.support()) all.insert(all.end(), inner.support().begin(), inner.support().end());
    return TValue<E>::set(kind, std::move(all));
  }
  std::vector<std::pair<E, Rational>> mix;
  for (std::size_t i = 0; i < tt.size(); ++i) {
    const auto& inner = tt.support()[i];
    if (inner.is_star()) return TValue<E>::star();
    for (std::size_t j = 0; j < inner.size(); ++j)
      mix.emplace_back(inner.support()[j], tt.weights()[i] * inner.weights()[j]);
  }
  return TValue<E>::dist(kind, std::move(mix));
}

/// The collapse 𝒟(X+1) → 𝒟X + 1: ⋆ (encoded as nullopt) with positive mass
/// turns the whole value into ⋆, otherwise the distribution is kept.
template <class E>
TValue<E> bh_flatten(std::vector<std::pair<std::optional<E>, Rational>> weighted) {
  std::vector<std::pair<E, Rational>> kept;
  Rational total = 0;
  bool star = false;
  for (auto& [e, w] : weighted) {
    if (w < 0) throw DomainError("negative probability weight " + gem::to_string(w));
    total += w;
    if (!e) {
      if (w > 0) star = true;
      continue;
    }
    kept.emplace_back(std::move(*e), w);
  }
  if (total != 1) throw DomainError("distribution has total mass " + gem::to_string(total) + ", expected 1");
  if (star) return TValue<E>::star();
  return TValue<E>::dist(MonadKind::DistBH, std::move(kept));
}

/// An Eilenberg-Moore algebra on a subset of the rationals (the truth-value
/// object), given by a rule TΩ → Ω. `test_carrier` is the finite sample the
/// law checks run on.
struct AlgebraStructure {
  std::string name;
  MonadKind kind;
  std::vector<Rational> test_carrier;
  std::function<Rational(const TValue<Rational>&)> eval;

  Rational operator()(const TValue<Rational>& t) const { return eval(t); }
};

/// o(X) = ⊤ iff ⊤ ∈ X, over 2 = {0, 1}. Valid for Pow and NePow.
AlgebraStructure o_join(MonadKind kind);
/// Expected value 𝒟[0,1] → [0,1], tested on {0, 1/2, 1}.
AlgebraStructure o_expect();

/// Options for the finite test families used by law checks.
struct EnumerationOptions {
  std::size_t max_support = 3;
  /// Distribution weights are multiples of 1/weight_denominator.
  std::size_t weight_denominator = 4;
  /// Families larger than this are replaced by a seeded sample of this size.
  std::size_t cap = 4000;
  std::uint64_t seed = 1;
};

/// Every T-value over `elems` within the support bound (sets include ∅ for
/// Pow; DistBH includes ⋆), down-sampled to `cap` deterministically.
template <class E>
std::vector<TValue<E>> enumerate_values(MonadKind kind, const std::vector<E>& elems, const EnumerationOptions& opt);

/// Unit, multiplication and associativity laws of T on carriers {0..n-1} for
/// each requested size, plus the unit and multiplication laws of every
/// algebra. Exhaustive for sets up to the support bound, grid-wise for
/// distributions.
CheckReport check_monad_and_algebra_laws(MonadKind kind, const std::vector<std::size_t>& carrier_sizes,
                                         const std::vector<AlgebraStructure>& algebras,
                                         const EnumerationOptions& opt = {});

std::string show(const TValue<std::size_t>& t);
std::string show(const TValue<Rational>& t);

// ---------------------------------------------------------------------------

namespace detail {

/// Compositions of `total` into `parts` positive integers.
inline void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t first = 1; first + parts - 1 <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

template <class E>
std::vector<TValue<E>> enumerate_values(MonadKind kind, const std::vector<E>& elems, const EnumerationOptions& opt) {
  const std::size_t n = elems.size();
  const std::size_t max_k = std::min(opt.max_support, n);
  const std::size_t min_k = kind == MonadKind::Pow ? 0 : 1;
  const std::size_t denom = opt.weight_denominator;

  auto make = [&](const std::vector<std::size_t>& pick, const std::vector<std::size_t>* comp) {
    if (!is_probabilistic(kind)) {
      std::vector<E> chosen;
      for (auto i : pick) chosen.push_back(elems[i]);
      return TValue<E>::set(kind, std::move(chosen));
    }
    std::vector<std::pair<E, Rational>> w;
    for (std::size_t i = 0; i < pick.size(); ++i)
      w.emplace_back(elems[pick[i]],
                     Rational(static_cast<long long>((*comp)[i])) / Rational(static_cast<long long>(denom)));
    return TValue<E>::dist(kind, std::move(w));
  };

  // Size of the full family, saturating at cap + 1.
  std::size_t total = kind == MonadKind::DistBH ? 1 : 0;
  {
    std::size_t choose = 1;  // C(n, k)
    for (std::size_t k = 0; k <= max_k && total <= opt.cap; ++k) {
      if (k > 0) choose = choose * (n - k + 1) / k;
      if (k < min_k) continue;
      std::size_t per = 1;
      if (is_probabilistic(kind)) {
        if (k > denom) continue;
        // C(denom - 1, k - 1) compositions
        per = 1;
        for (std::size_t i = 1; i < k; ++i) per = per * (denom - i) / i;
      }
      total += choose * per;
      if (choose > opt.cap) total = opt.cap + 1;
    }
  }

  std::vector<TValue<E>> out;
  if (total <= opt.cap) {
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
      if (pick.size() == k) {
        if (!is_probabilistic(kind)) {
          out.push_back(make(pick, nullptr));
          return;
        }
        std::vector<std::vector<std::size_t>> comps;
        std::vector<std::size_t> cur;
        if (k <= denom) detail::compositions(denom, k, cur, comps);
        for (const auto& c : comps) out.push_back(make(pick, &c));
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        pick.push_back(i);
        rec(i + 1, k);
        pick.pop_back();
      }
    };
    for (std::size_t k = min_k; k <= max_k; ++k) rec(0, k);
    if (kind == MonadKind::DistBH) out.push_back(TValue<E>::star());
    return out;
  }

  // Too many to list: draw `cap` distinct values from the same family.
  std::mt19937_64 rng(opt.seed);
  std::vector<TValue<E>> seen;
  if (kind == MonadKind::DistBH) seen.push_back(TValue<E>::star());
  const std::size_t max_attempts = opt.cap * 20;
  for (std::size_t attempt = 0; attempt < max_attempts && seen.size() < opt.cap; ++attempt) {
    std::size_t hi = is_probabilistic(kind) ? std::min(max_k, denom) : max_k;
    const std::size_t k = min_k + static_cast<std::size_t>(rng() % (hi - min_k + 1));
    std::vector<std::size_t> pick;
    while (pick.size() < k) {
      const std::size_t i = static_cast<std::size_t>(rng() % n);
      if (std::find(pick.begin(), pick.end(), i) == pick.end()) pick.push_back(i);
    }
    std::sort(pick.begin(), pick.end());
    std::vector<std::size_t> comp;
    if (is_probabilistic(kind)) {
      // Random composition of denom into k positive parts via cut points.
      std::vector<std::size_t> cuts;
      while (cuts.size() + 1 < k) {
        const std::size_t c = 1 + static_cast<std::size_t>(rng() % (denom - 1));
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
      }
      std::sort(cuts.begin(), cuts.end());
      std::size_t prev = 0;
      for (auto c : cuts) {
        comp.push_back(c - prev);
        prev = c;
      }
      comp.push_back(denom - prev);
    }
    auto v = make(pick, &comp);
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(std::move(v));
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

}  // namespace gem

#endif  // GEM_MONAD_HPP
