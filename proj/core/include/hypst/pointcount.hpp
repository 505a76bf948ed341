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

// Point counts for y^2 = x^d + c and y^2 = x^d + cx over F_p.
//
// Counts are normalized as (number of affine solutions) + 1. For even d the
// smooth projective model has two points at infinity, so this is one less
// than its point count; the Jacobi-sum formula and the brute-force oracle
// both use the affine + 1 convention. Traces of Frobenius are taken on the
// smooth model, t_p = p + 1 - #C(F_p), so that |t_p| <= 2g sqrt(p).
//
// The closed form is
//
//   #C(F_p) = p + 1 + sum_a T^a(-c) phi(c) J(T^a, phi)
//
// summed over the contributing exponents a (see contributing_ms), with phi
// the quadratic character.

#ifndef HYPST_POINTCOUNT_HPP
#define HYPST_POINTCOUNT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hypst/curve.hpp"
#include "hypst/ffield.hpp"

namespace hypst {

struct Contribution {
  // m for AdditiveConstant, the odd t = 2m+1 for LinearTwist.
  int index = 0;
  // Character exponent a: m(p-1)/d, resp. t(p-1)/(2(d-1)).
  std::int64_t exponent = 0;

  friend bool operator==(const Contribution&, const Contribution&) = default;
};

struct ContributionSet {
  Family family = Family::AdditiveConstant;
  std::int64_t p = 0;
  int d = 0;
  std::vector<Contribution> entries;  // ascending index
};

// AdditiveConstant: all m with m(p-1)/d integral and in [1, p-2].
// LinearTwist: all odd t in [1, 2(d-1)-1] with 2(d-1) | t(p-1).
ContributionSet contributing_ms(std::int64_t p, int d, Family family);

// Throws Error(BadReduction) unless has_good_reduction(curve, p), and
// Error(NonIntegerResult) if the character sum fails to be a rational integer.
std::int64_t count_formula(const PrimeField& field, const CurveSpec& curve);

// #{(x, y) in F_p^2 : y^2 = f(x)} + 1 by enumeration. Valid at every odd p.
std::int64_t count_bruteforce(const PrimeField& field, const CurveSpec& curve);

// Points at infinity of the smooth model: 2 for even d (monic), 1 for odd d.
int points_at_infinity(const CurveSpec& curve) noexcept;

// #C(F_p) on the smooth model from an affine + 1 count.
std::int64_t smooth_count(const CurveSpec& curve, std::int64_t count) noexcept;

struct TraceSample {
  std::int64_t p = 0;
  std::int64_t count = 0;   // affine + 1
  std::int64_t trace = 0;   // p + 1 - smooth_count(curve, count)
  double normalized = 0.0;  // trace / sqrt(p)
};

struct MomentSummary {
  std::size_t samples = 0;
  double mean = 0.0;
  double moment2 = 0.0;
  double moment4 = 0.0;
  double moment6 = 0.0;
  // Residue modulus of p for class_counts (CurveSpec::character_modulus).
  std::int64_t modulus = 1;
  std::map<std::int64_t, std::size_t> class_counts;
};

struct SweepResult {
  std::vector<TraceSample> samples;  // ascending p
  MomentSummary summary;
};

// One sample per odd prime p in [p_min, p_max] of good reduction, computed with
// count_formula on a worker pool. threads = 0 picks hardware concurrency.
SweepResult trace_sweep(const CurveSpec& curve, std::int64_t p_min, std::int64_t p_max,
                        unsigned threads = 0);

MomentSummary summarize(const CurveSpec& curve, const std::vector<TraceSample>& samples);

}  // namespace hypst

#endif  // HYPST_POINTCOUNT_HPP
