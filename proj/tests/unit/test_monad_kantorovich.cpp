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

#include "gem/kantorovich.hpp"
#include "gem/monad.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace {

using gem::MonadKind;
using gem::rat;
using gem::Rational;
using V = gem::TValue<std::size_t>;
using VV = gem::TValue<V>;

TEST(Monad, UnitIsSingletonOrDirac) {
  EXPECT_EQ(V::unit(MonadKind::Pow, 2).support(), std::vector<std::size_t>{2});
  const auto d = V::unit(MonadKind::Dist, 1);
  EXPECT_EQ(d.weight(1), 1);
  EXPECT_EQ(d.weight(0), 0);
}

TEST(Monad, PowersetMultiplicationIsUnion) {
  const auto a = V::set(MonadKind::Pow, {0, 1}), b = V::set(MonadKind::Pow, {2}), e = V::set(MonadKind::Pow, {});
  EXPECT_EQ(gem::mult(VV::set(MonadKind::Pow, {a, b})), V::set(MonadKind::Pow, {0, 1, 2}));
  EXPECT_EQ(gem::mult(VV::set(MonadKind::Pow, {e})), e);
  EXPECT_TRUE(gem::mult(VV::set(MonadKind::Pow, {})).empty());
  const auto s = V::set(MonadKind::NePow, {0});
  EXPECT_EQ(gem::mult(VV::set(MonadKind::NePow, {s})), s);
  EXPECT_THROW(V::set(MonadKind::NePow, {}), gem::DomainError);
}

TEST(Monad, DistributionMultiplicationMixes) {
  const auto p = V::dist(MonadKind::Dist, {{0, rat(1, 2)}, {1, rat(1, 2)}});
  const auto q = V::unit(MonadKind::Dist, 1);
  const auto m = gem::mult(VV::dist(MonadKind::Dist, {{p, rat(1, 2)}, {q, rat(1, 2)}}));
  EXPECT_EQ(m.weight(0), rat(1, 4));
  EXPECT_EQ(m.weight(1), rat(3, 4));
}

TEST(Monad, DistributionsMustHaveMassOne) {
  EXPECT_THROW(V::dist(MonadKind::Dist, {{0, rat(1, 2)}, {1, rat(1, 4)}}), gem::DomainError);
  EXPECT_THROW(V::dist(MonadKind::Dist, {{0, rat(3, 2)}, {1, rat(-1, 2)}}), gem::DomainError);
  const auto merged = V::dist(MonadKind::Dist, {{0, rat(1, 2)}, {0, rat(1, 2)}});
  EXPECT_EQ(merged.size(), 1u);
}

TEST(Monad, BlackHoleAbsorbs) {
  const auto star = V::star();
  const auto p = V::dist(MonadKind::DistBH, {{0, 1}});
  EXPECT_TRUE(gem::mult(VV::dist(MonadKind::DistBH, {{star, rat(1, 3)}, {p, rat(2, 3)}})).is_star());
  EXPECT_TRUE(gem::mult(VV::star()).is_star());
  EXPECT_TRUE(gem::bh_flatten<std::size_t>({{std::nullopt, rat(1, 8)}, {0, rat(7, 8)}}).is_star());
  EXPECT_EQ(gem::bh_flatten<std::size_t>({{std::nullopt, 0}, {0, 1}}), p);
}

TEST(Monad, Affinity) {
  EXPECT_TRUE(gem::is_affine(MonadKind::NePow));
  EXPECT_TRUE(gem::is_affine(MonadKind::Dist));
  EXPECT_FALSE(gem::is_affine(MonadKind::Pow));
  EXPECT_FALSE(gem::is_affine(MonadKind::DistBH));
  // |T1| through the enumerator.
  gem::EnumerationOptions o;
  const std::vector<std::size_t> one{0};
  EXPECT_EQ(gem::enumerate_values(MonadKind::NePow, one, o).size(), 1u);
  EXPECT_EQ(gem::enumerate_values(MonadKind::Dist, one, o).size(), 1u);
  EXPECT_EQ(gem::enumerate_values(MonadKind::Pow, one, o).size(), 2u);
  EXPECT_EQ(gem::enumerate_values(MonadKind::DistBH, one, o).size(), 2u);
}

TEST(Monad, EnumerationCountsSmallFamilies) {
  gem::EnumerationOptions o;
  const std::vector<std::size_t> three{0, 1, 2};
  EXPECT_EQ(gem::enumerate_values(MonadKind::Pow, three, o).size(), 8u);
  EXPECT_EQ(gem::enumerate_values(MonadKind::NePow, three, o).size(), 7u);
  // Weights in quarters over three points: compositions of 4 into 1..3 parts.
  // 3 singletons, 3 pairs x 3, 1 triple x 3.
  EXPECT_EQ(gem::enumerate_values(MonadKind::Dist, three, o).size(), 15u);
  o.cap = 5;
  EXPECT_EQ(gem::enumerate_values(MonadKind::Dist, three, o).size(), 5u);
}

TEST(Monad, LawsHoldForEveryKind) {
  for (auto k : {MonadKind::Pow, MonadKind::NePow, MonadKind::Dist, MonadKind::DistBH}) {
    std::vector<gem::AlgebraStructure> algebras;
    if (k == MonadKind::Pow || k == MonadKind::NePow) algebras.push_back(gem::o_join(k));
    if (k == MonadKind::Dist) algebras.push_back(gem::o_expect());
    const auto r = gem::check_monad_and_algebra_laws(k, {1, 2, 3}, algebras);
    EXPECT_TRUE(r.passed) << r.summary();
    EXPECT_GT(r.cases, 0u);
  }
}

TEST(Monad, BrokenAlgebraIsCaught) {
  // Squared expectation already breaks the unit law at 1/2.
  gem::AlgebraStructure bad{"o_sq", MonadKind::Dist, {0, rat(1, 2), 1}, [](const gem::TValue<Rational>& t) {
                              Rational e = 0;
                              for (std::size_t i = 0; i < t.size(); ++i) e += t.support()[i] * t.weights()[i];
                              return Rational(e * e);
                            }};
  const auto r = gem::check_monad_and_algebra_laws(MonadKind::Dist, {1}, {bad});
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.violations.empty());
}

TEST(Monad, AlgebraValues) {
  using R = gem::TValue<Rational>;
  EXPECT_EQ(gem::o_join(MonadKind::Pow).eval(R::set(MonadKind::Pow, {})), 0);
  EXPECT_EQ(gem::o_join(MonadKind::Pow).eval(R::set(MonadKind::Pow, {0, 1})), 1);
  EXPECT_EQ(gem::o_expect().eval(R::dist(MonadKind::Dist, {{rat(1, 4), rat(1, 2)}, {rat(3, 4), rat(1, 2)}})),
            rat(1, 2));
  EXPECT_THROW(gem::o_join(MonadKind::Dist), gem::DomainError);
}

TEST(Kantorovich, DiracToDiracIsGroundDistance) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto t = oracle::random_transport(seed);
    for (std::size_t x = 0; x < t.space.size(); ++x)
      for (std::size_t y = 0; y < t.space.size(); ++y)
        EXPECT_EQ(gem::kantorovich(t.space, V::unit(MonadKind::Dist, x), V::unit(MonadKind::Dist, y)),
                  t.space.d(x, y));
  }
}

TEST(Kantorovich, AgreesWithVertexEnumeration) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto t = oracle::random_transport(seed, 3);
    EXPECT_EQ(gem::kantorovich(t.space, t.mu, t.nu), oracle::kantorovich_by_vertices(t)) << "seed " << seed;
  }
}

TEST(Kantorovich, CouplingHasTheRightMarginals) {
  const auto t = oracle::random_transport(99);
  const auto c = gem::optimal_coupling(t.space, t.mu, t.nu);
  const std::size_t m = t.mu.size(), n = t.nu.size();
  ASSERT_EQ(c.flow.size(), m * n);
  Rational cost = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_GE(c.flow[i * n + j], 0);
      row += c.flow[i * n + j];
      cost += c.flow[i * n + j] * t.space.d(t.mu.support()[i], t.nu.support()[j]);
    }
    EXPECT_EQ(row, t.mu.weights()[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < m; ++i) col += c.flow[i * n + j];
    EXPECT_EQ(col, t.nu.weights()[j]);
  }
  EXPECT_EQ(cost, c.cost);
}

TEST(Kantorovich, HandComputedExample) {
  // Points 0, 1/2, 1 on a line; moving 1/2 mass from 0 to 1.
  std::vector<Rational> pts{0, rat(1, 2), 1};
  const auto space = gem::FinVCat::symmetrized_subspace(gem::unit_interval(), pts);
  const auto mu = V::dist(MonadKind::Dist, {{0, rat(1, 2)}, {1, rat(1, 2)}});
  const auto nu = V::dist(MonadKind::Dist, {{1, rat(1, 2)}, {2, rat(1, 2)}});
  EXPECT_EQ(gem::kantorovich(space, mu, nu), rat(1, 2));
}

TEST(Kantorovich, ExpectationIsNonexpansive) {
  std::vector<Rational> pts{0, rat(1, 4), rat(1, 2), rat(3, 4), 1};
  const auto space = gem::FinVCat::symmetrized_subspace(gem::unit_interval(), pts);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto mu = oracle::random_dist(rng, pts.size(), 4), nu = oracle::random_dist(rng, pts.size(), 4);
    auto e = [&](const V& p) {
      Rational s = 0;
      for (std::size_t k = 0; k < p.size(); ++k) s += pts[p.support()[k]] * p.weights()[k];
      return s;
    };
    const Rational diff = e(mu) > e(nu) ? e(mu) - e(nu) : e(nu) - e(mu);
    EXPECT_LE(diff, gem::kantorovich(space, mu, nu));
  }
}

TEST(Kantorovich, RejectsBooleanSpaces) {
  const auto space = gem::FinVCat::discrete(gem::bool2(), 2);
  EXPECT_THROW(gem::kantorovich(space, V::unit(MonadKind::Dist, 0), V::unit(MonadKind::Dist, 1)),
               gem::DomainError);
}

}  // namespace
