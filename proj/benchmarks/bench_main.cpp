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
#include "gem/graded.hpp"
#include "gem/kantorovich.hpp"
#include "gem/logic.hpp"
#include "gem/machine.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

namespace {

using namespace gem;

const std::vector<std::string> kLetters{"a", "b"};

Machine bench_machine(MonadKind kind, std::size_t states) {
  return random_machine(kind, preset_quantale(kind), states, kLetters, 17);
}

void BM_DetStep(benchmark::State& state) {
  const auto kind = static_cast<MonadKind>(state.range(0));
  const Machine m = bench_machine(kind, 5);
  const auto root = det_root(m, 0);
  for (auto _ : state) benchmark::DoNotOptimize(det_step(m, root));
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_DetStep)
    ->Arg(static_cast<int>(MonadKind::Pow))
    ->Arg(static_cast<int>(MonadKind::Dist))
    ->Arg(static_cast<int>(MonadKind::DistBH));

void BM_NStepBehaviour(benchmark::State& state) {
  const Machine m = bench_machine(MonadKind::Dist, 5);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(n_step_behaviour(m, 0, depth));
}
BENCHMARK(BM_NStepBehaviour)->DenseRange(2, 8, 2);

// Points 0..n-1 on a line with d(i,j) = |i-j|/n; mu sits on the left half,
// nu on the right.
void BM_Kantorovich(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = Rational(static_cast<long long>(i > j ? i - j : j - i)) / static_cast<long long>(n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  const FinVCat space(unit_interval(), labels, table, true, true);
  std::vector<std::pair<std::size_t, Rational>> left, right;
  for (std::size_t i = 0; i < n / 2; ++i) {
    left.emplace_back(i, Rational(1) / static_cast<long long>(n / 2));
    right.emplace_back(n - 1 - i, Rational(1) / static_cast<long long>(n / 2));
  }
  const auto mu = TValue<std::size_t>::dist(MonadKind::Dist, left);
  const auto nu = TValue<std::size_t>::dist(MonadKind::Dist, right);
  for (auto _ : state) benchmark::DoNotOptimize(kantorovich(space, mu, nu));
}
BENCHMARK(BM_Kantorovich)->RangeMultiplier(2)->Range(4, 32);

void BM_LogicalDistance(benchmark::State& state) {
  const auto kind = static_cast<MonadKind>(state.range(0));
  const Machine m = bench_machine(kind, 4);
  const auto depth = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(logical_distance(m, 0, 1, depth));
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_LogicalDistance)
    ->Args({static_cast<int>(MonadKind::Pow), 6})
    ->Args({static_cast<int>(MonadKind::Dist), 4})
    ->Args({static_cast<int>(MonadKind::DistBH), 4});

void BM_BehaviouralDistance(benchmark::State& state) {
  const Machine m = bench_machine(MonadKind::Dist, 4);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(behavioural_distance(m, 0, 1, depth));
}
BENCHMARK(BM_BehaviouralDistance)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
