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

#include "gem/vcat.hpp"

namespace gem {

FinVCat::FinVCat(const Quantale& q, std::vector<std::string> labels, std::vector<Rational> table,
                 bool symmetric, bool separated)
    : q_(&q), labels_(std::move(labels)), table_(std::move(table)), symmetric_(symmetric), separated_(separated) {
  if (table_.size() != labels_.size() * labels_.size())
    throw DomainError("distance table has " + std::to_string(table_.size()) + " entries, expected " +
                      std::to_string(labels_.size() * labels_.size()));
  for (const auto& r : table_) q.require(r);
}

FinVCat FinVCat::discrete(const Quantale& q, std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<Rational> table(n * n, q.bottom());
  for (std::size_t i = 0; i < n; ++i) table[i * n + i] = q.unit();
  return FinVCat(q, std::move(labels), std::move(table), true, true);
}

FinVCat FinVCat::discrete(const Quantale& q, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return discrete(q, std::move(labels));
}

FinVCat FinVCat::symmetrized_subspace(const Quantale& q, std::span<const Rational> points) {
  const std::size_t n = points.size();
  std::vector<std::string> labels;
  std::vector<Rational> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(to_string(points[i]));
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = q.sym_dist(points[i], points[j]);
  }
  return FinVCat(q, std::move(labels), std::move(table), true, true);
}

std::vector<std::size_t> product_components(std::size_t element, std::size_t base_size, std::size_t index_size) {
  std::vector<std::size_t> out(index_size);
  for (std::size_t i = index_size; i-- > 0;) {
    out[i] = element % base_size;
    element /= base_size;
  }
  return out;
}

FinVCat product_power(const FinVCat& base, std::size_t index_size) {
  const Quantale& q = base.quantale();
  const std::size_t b = base.size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < index_size; ++i) n *= b;

  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < n; ++e) {
    comps.push_back(product_components(e, b, index_size));
    std::string l = "(";
    for (std::size_t i = 0; i < index_size; ++i) l += (i ? "," : "") + base.label(comps.back()[i]);
    labels.push_back(l + ")");
  }
  std::vector<Rational> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Rational acc = q.top();
      for (std::size_t i = 0; i < index_size; ++i) acc = q.meet(acc, base.d(comps[x][i], comps[y][i]));
      table[x * n + y] = acc;
    }
  }
  return FinVCat(q, std::move(labels), std::move(table), base.symmetric(), base.separated());
}

VFunctor::VFunctor(const FinVCat& domain, std::shared_ptr<const FinVCat> codomain, std::vector<std::size_t> map)
    : codomain_(std::move(codomain)), map_(std::move(map)) {
  if (map_.size() != domain.size())
    throw DomainError("map covers " + std::to_string(map_.size()) + " points, domain has " +
                      std::to_string(domain.size()));
  if (&domain.quantale() != &codomain_->quantale()) throw DomainError("domain and codomain use different quantales");
  for (auto fx : map_)
    if (fx >= codomain_->size()) throw DomainError("map leaves the codomain");
  const Quantale& q = domain.quantale();
  for (std::size_t x = 0; x < map_.size(); ++x) {
    for (std::size_t y = 0; y < map_.size(); ++y) {
      if (!q.leq(domain.d(x, y), codomain_->d(map_[x], map_[y]))) {
        throw DomainError("map is not a V-functor: d(" + domain.label(x) + "," + domain.label(y) + ") = " +
                          to_string(domain.d(x, y)) + " but image distance is " +
                          to_string(codomain_->d(map_[x], map_[y])));
      }
    }
  }
}

std::string InitialityResult::witness() const {
  if (initial) return "";
  return "pair (" + std::to_string(x) + ", " + std::to_string(y) + "): domain distance " +
         to_string(domain_distance) + ", meet over source " + to_string(meet_distance);
}

InitialityResult is_initial_source(const FinVCat& domain, std::span<const VFunctor> maps) {
  const Quantale& q = domain.quantale();
  for (const auto& f : maps)
    if (f.domain_size() != domain.size()) throw DomainError("source map has the wrong domain size");
  InitialityResult r;
  for (std::size_t x = 0; x < domain.size(); ++x) {
    for (std::size_t y = 0; y < domain.size(); ++y) {
      Rational acc = q.top();
      for (const auto& f : maps) acc = q.meet(acc, f.codomain().d(f(x), f(y)));
      if (acc != domain.d(x, y)) {
        r.initial = false;
        r.x = x;
        r.y = y;
        r.domain_distance = domain.d(x, y);
        r.meet_distance = acc;
        return r;
      }
    }
  }
  return r;
}

CheckReport check_vcat(const FinVCat& v) {
  const Quantale& q = v.quantale();
  CheckReport report("vcat-laws", std::to_string(v.size()) + "-point space over " + q.name());
  const Rational k = q.unit();
  auto pair = [&](std::size_t a, std::size_t b) { return "(" + v.label(a) + ", " + v.label(b) + ")"; };
  for (std::size_t x = 0; x < v.size(); ++x) {
    ++report.cases;
    if (!q.leq(k, v.d(x, x))) report.fail("reflexivity", v.label(x));
    for (std::size_t y = 0; y < v.size(); ++y) {
      ++report.cases;
      if (v.symmetric() && v.d(x, y) != v.d(y, x)) report.fail("symmetry", pair(x, y));
      if (v.separated() && x != y && q.leq(k, v.d(x, y))) report.fail("separation", pair(x, y));
      for (std::size_t z = 0; z < v.size(); ++z) {
        if (!q.leq(q.tensor(v.d(x, y), v.d(y, z)), v.d(x, z))) {
          report.fail("triangle", "(" + v.label(x) + ", " + v.label(y) + ", " + v.label(z) + "): " +
                                      to_string(v.d(x, y)) + " (x) " + to_string(v.d(y, z)) + " vs " +
                                      to_string(v.d(x, z)));
        }
      }
    }
  }
  return report;
}

}  // namespace gem
