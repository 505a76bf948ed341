/*
 * Copyright 2026 The hypst Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "hypst/charsums.hpp"
#include "hypst/groupid.hpp"
#include "hypst/pointcount.hpp"
#include "hypst/stmatrix.hpp"

namespace {

using namespace hypst;

void BM_JacobiSum(benchmark::State& state) {
  const auto field = make_field(state.range(0));
  const CharExponent a(field, field.order() / 3);
  const auto b = CharExponent::quadratic(field);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_sum(field, a, b, 6));
}
BENCHMARK(BM_JacobiSum)->Arg(1009)->Arg(10009)->Arg(100003);

void BM_CountFormula(benchmark::State& state) {
  const auto field = make_field(state.range(0));
  const auto curve = CurveSpec::make(Family::AdditiveConstant, 9, Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(count_formula(field, curve));
}
BENCHMARK(BM_CountFormula)->Arg(1009)->Arg(10009)->Arg(100003);

void BM_CountBruteforce(benchmark::State& state) {
  const auto field = make_field(state.range(0));
  const auto curve = CurveSpec::make(Family::AdditiveConstant, 9, Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(count_bruteforce(field, curve));
}
BENCHMARK(BM_CountBruteforce)->Arg(1009)->Arg(10009)->Arg(100003);

void BM_MatrixAndKernel(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto p = generic_primes(CurveSpec::make(Family::AdditiveConstant, d), 1).front();
  for (auto _ : state) {
    const auto m = build_matrix(p, d, Family::AdditiveConstant);
    benchmark::DoNotOptimize(right_kernel(m));
  }
}
BENCHMARK(BM_MatrixAndKernel)->Arg(10)->Arg(24)->Arg(40);

void BM_IdentifySt0(benchmark::State& state) {
  const auto curve = CurveSpec::make(Family::AdditiveConstant, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(identify_st0(curve));
}
BENCHMARK(BM_IdentifySt0)->Arg(10)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_TraceSweep(benchmark::State& state) {
  const auto curve = CurveSpec::make(Family::AdditiveConstant, 10);
  for (auto _ : state) benchmark::DoNotOptimize(trace_sweep(curve, 3, state.range(0), 1));
}
BENCHMARK(BM_TraceSweep)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
