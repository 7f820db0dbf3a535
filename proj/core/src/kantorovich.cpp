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

#include <algorithm>
#include <optional>

namespace gem {

namespace {

void require_distribution(const FinVCat& d, const TValue<std::size_t>& t, const char* which) {
  if (!is_probabilistic(t.kind()) || t.is_star())
    throw DomainError(std::string("kantorovich: ") + which + " is not a distribution");
  for (auto x : t.support())
    if (x >= d.size()) throw DomainError(std::string("kantorovich: ") + which + " leaves the ground space");
}

// Edges of the basis tree on the path from row r to column c (column nodes
// are offset by m). Returns cell indices in path order starting at row r.
std::vector<std::size_t> tree_path(std::size_t m, std::size_t n, const std::vector<std::size_t>& basis,
                                   std::size_t r, std::size_t c) {
  const std::size_t nodes = m + n;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes);  // (neighbour, cell)
  for (auto cell : basis) {
    const std::size_t i = cell / n, j = cell % n;
    adj[i].push_back({m + j, cell});
    adj[m + j].push_back({i, cell});
  }
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(nodes);  // (node, cell)
  std::vector<bool> seen(nodes, false);
  std::vector<std::size_t> stack{r};
  seen[r] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (auto [v, cell] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      parent[v] = {u, cell};
      stack.push_back(v);
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t v = m + c; v != r; v = parent[v]->first) path.push_back(parent[v]->second);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Coupling optimal_coupling(const FinVCat& d, const TValue<std::size_t>& mu, const TValue<std::size_t>& nu) {
  if (d.quantale().kind() != QuantaleKind::Unit)
    throw DomainError("kantorovich needs distances in the unit interval quantale");
  require_distribution(d, mu, "mu");
  require_distribution(d, nu, "nu");
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y)
      if (d.d(x, y) != d.d(y, x))
        throw DomainError("kantorovich needs a symmetric ground space: d(" + d.label(x) + "," + d.label(y) + ")");

  const std::size_t m = mu.size(), n = nu.size();
  std::vector<Rational> cost(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = d.d(mu.support()[i], nu.support()[j]);

  // Northwest corner: m + n - 1 basic cells forming a spanning tree.
  std::vector<Rational> flow(m * n, 0);
  std::vector<std::size_t> basis;
  {
    std::vector<Rational> supply = mu.weights(), demand = nu.weights();
    std::size_t i = 0, j = 0;
    while (true) {
      const Rational x = std::min(supply[i], demand[j]);
      flow[i * n + j] = x;
      basis.push_back(i * n + j);
      supply[i] -= x;
      demand[j] -= x;
      if (i == m - 1 && j == n - 1) break;
      if (i == m - 1) ++j;
      else if (j == n - 1) ++i;
      else if (supply[i] == 0) ++i;
      else ++j;
    }
  }

  std::vector<bool> in_basis(m * n, false);
  for (auto c : basis) in_basis[c] = true;

  while (true) {
    // Potentials u_i + v_j = c_ij on the basis tree, u_0 = 0.
    std::vector<std::optional<Rational>> u(m), v(n);
    u[0] = Rational(0);
    for (bool changed = true; changed;) {
      changed = false;
      for (auto cell : basis) {
        const std::size_t i = cell / n, j = cell % n;
        if (u[i] && !v[j]) {
          v[j] = cost[cell] - *u[i];
          changed = true;
        } else if (v[j] && !u[i]) {
          u[i] = cost[cell] - *v[j];
          changed = true;
        }
      }
    }
    std::optional<std::size_t> entering;
    for (std::size_t cell = 0; cell < m * n && !entering; ++cell) {
      if (in_basis[cell]) continue;
      if (cost[cell] - *u[cell / n] - *v[cell % n] < 0) entering = cell;
    }
    if (!entering) break;

    const std::size_t ei = *entering / n, ej = *entering % n;
    // Cycle: entering (+), then the tree path from column ej back to row ei
    // alternates -, +, -, ...
    auto path = tree_path(m, n, basis, ei, ej);
    std::reverse(path.begin(), path.end());
    std::optional<std::size_t> leaving;
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const std::size_t cell = path[k];
      if (!leaving || flow[cell] < flow[*leaving] || (flow[cell] == flow[*leaving] && cell < *leaving))
        leaving = cell;
    }
    const Rational theta = flow[*leaving];
    flow[*entering] += theta;
    for (std::size_t k = 0; k < path.size(); ++k) flow[path[k]] += (k % 2 == 0) ? -theta : theta;
    in_basis[*leaving] = false;
    in_basis[*entering] = true;
    *std::find(basis.begin(), basis.end(), *leaving) = *entering;
  }

  Coupling out{0, std::move(flow)};
  for (std::size_t c = 0; c < m * n; ++c) out.cost += out.flow[c] * cost[c];
  return out;
}

Rational kantorovich(const FinVCat& d, const TValue<std::size_t>& mu, const TValue<std::size_t>& nu) {
  return optimal_coupling(d, mu, nu).cost;
}

}  // namespace gem
