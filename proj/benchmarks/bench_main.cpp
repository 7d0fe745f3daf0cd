// Copyright 2026 The toruslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "toruslab/albert.hpp"
#include "toruslab/assoc.hpp"
#include "toruslab/clifford.hpp"
#include "toruslab/jordan.hpp"

namespace {

using namespace toruslab;

std::shared_ptr<const AlbertTriple> standard_triple() {
  const std::int64_t g[] = {3, 3, 3, 1};
  const std::int64_t d[] = {1, 1, 3, 1};
  return std::make_shared<const AlbertTriple>(
      Subgroup::diagonal(d), Subgroup::diagonal(g),
      std::array<GroupElement, 3>{GroupElement{1, 0, 0, 0}, GroupElement{0, 1, 0, 0}, GroupElement{0, 0, 1, 0}});
}

AssocElement random_element(const CocyclePtr& c, std::size_t terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(-2, 2), num(-5, 5);
  AssocElement out(c);
  const auto& basis = c->domain().basis();
  for (std::size_t t = 0; t < terms; ++t) {
    GroupElement g(c->rank());
    for (const auto& b : basis) g += coord(rng) * b;
    out.add_term(g, Scalar(c->field(), Rational(num(rng)), Rational(num(rng))));
  }
  return out;
}

void BM_AssocMul(benchmark::State& state) {
  const auto terms = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const CocyclePtr c = Cocycle::quantum(QuantumMatrix::single(3, 0, 1, Scalar::omega()));
  const auto x = random_element(c, terms, rng), y = random_element(c, terms, rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AssocMul)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_CocycleCheck(benchmark::State& state) {
  const CocyclePtr c = albert_cocycle(standard_triple(), Scalar::omega());
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_identity_check(*c, 1));
}
BENCHMARK(BM_CocycleCheck)->Unit(benchmark::kMillisecond);

void BM_Charpoly(benchmark::State& state) {
  const auto a = Deg3Torus::build(standard_triple());
  const CubicNormStructure cubic(a);
  std::mt19937_64 rng(2);
  const auto x = random_element(a->handle(), static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(cubic.via_charpoly(x));
}
BENCHMARK(BM_Charpoly)->Arg(1)->Arg(3)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_PowerTraceNorm(benchmark::State& state) {
  const auto a = Deg3Torus::build(standard_triple());
  const CubicNormStructure cubic(a);
  std::mt19937_64 rng(2);
  const auto x = random_element(a->handle(), static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(cubic.norm(x));
}
BENCHMARK(BM_PowerTraceNorm)->Arg(1)->Arg(3)->Arg(9);

void BM_AlbertProduct(benchmark::State& state) {
  const auto a = Deg3Torus::build(standard_triple());
  const auto j = AlbertTorus::first_tits(a);
  std::mt19937_64 rng(3);
  const auto terms = static_cast<std::size_t>(state.range(0));
  const auto x = j->make(random_element(a->handle(), terms, rng), random_element(a->handle(), terms, rng),
                         random_element(a->handle(), terms, rng));
  const auto y = j->make(random_element(a->handle(), terms, rng), random_element(a->handle(), terms, rng),
                         random_element(a->handle(), terms, rng));
  for (auto _ : state) benchmark::DoNotOptimize(j->product(x, y));
}
BENCHMARK(BM_AlbertProduct)->Arg(1)->Arg(2)->Arg(4);

void BM_CliffordJordanCheck(benchmark::State& state) {
  const auto t = std::make_shared<const CliffordTriple>(
      Subgroup::scaled(2, 2), std::vector<GroupElement>{{0, 0}, {1, 0}, {0, 1}},
      std::vector<Scalar>{Scalar::one(FieldDescriptor::rational()),
                          Scalar::integer(FieldDescriptor::rational(), -1)});
  const auto v = JordanView::clifford(t);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_identity_check(*v, state.range(0)));
}
BENCHMARK(BM_CliffordJordanCheck)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CentralGradingGroup(benchmark::State& state) {
  std::vector<std::vector<Scalar>> q(4, std::vector<Scalar>(4, Scalar::one(FieldDescriptor::cyclotomic3())));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = i + 1; k < 4; ++k) {
      q[i][k] = Scalar::omega().pow(static_cast<long>(i + k));
      q[k][i] = q[i][k].inverse();
    }
  const CocyclePtr c = Cocycle::quantum(QuantumMatrix(q));
  for (auto _ : state) benchmark::DoNotOptimize(central_grading_group(*c));
}
BENCHMARK(BM_CentralGradingGroup);

}  // namespace

BENCHMARK_MAIN();
