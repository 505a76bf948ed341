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

// Identity component of the Sato-Tate group as a torus. The carry-matrix
// columns, taken modulo the all-ones (cyclotomic) direction, generate the
// character lattice of the torus.

#ifndef HYPST_GROUPID_HPP
#define HYPST_GROUPID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hypst/curve.hpp"
#include "hypst/stmatrix.hpp"

namespace hypst {

struct WeightClass {
  // The member column whose k = 1 entry is 0.
  std::vector<std::uint8_t> weight;
  std::size_t plus = 0;   // columns equal to weight
  std::size_t minus = 0;  // columns equal to 1 - weight
  std::vector<std::int64_t> plus_exponents;
  std::vector<std::int64_t> minus_exponents;
};

struct WeightClasses {
  std::vector<WeightClass> classes;  // in order of first column
  // Columns that are constant (all 0 or all 1), listed by exponent.
  std::vector<std::int64_t> degenerate;
};

WeightClasses weight_classes(const CarryMatrix& m);

// rank(columns and the all-ones vector) - 1.
std::size_t torus_dimension(const CarryMatrix& m);

// "U(1)_k" factors (k = plus count, "U(1)" for k = 1) sorted by descending k
// when the classes form a basis modulo the all-ones vector; otherwise "U(1)"
// repeated dimension times.
std::string torus_name(const WeightClasses& classes, std::size_t dimension);

struct PrimeReport {
  std::int64_t p = 0;
  std::size_t columns = 0;
  std::size_t kernel_rank = 0;
  std::vector<RelationResult> relations;  // one per kernel basis vector
  std::size_t dimension = 0;
  std::vector<std::size_t> multiplicities;  // sorted class sizes, descending
};

struct TorusId {
  std::size_t dimension = 0;
  std::vector<WeightClass> classes;
  std::string name;
  // Columns of the first prime's carry matrix, one vector per column.
  std::vector<std::vector<std::uint8_t>> weight_matrix;
  std::vector<std::int64_t> primes_used;
  std::vector<PrimeReport> reports;
};

// First `count` primes p <= search_limit with good reduction and 2g columns.
// Throws Error(NoGenericPrime) when fewer exist.
std::vector<std::int64_t> generic_primes(const CurveSpec& curve, std::size_t count,
                                         std::int64_t search_limit = 100000);

// Runs the carry-matrix pipeline at the first num_primes generic primes and
// checks that they agree. Throws Error(InconsistentAcrossPrimes),
// Error(RelationVerificationFailed) or Error(NoGenericPrime).
TorusId identify_st0(const CurveSpec& curve, std::size_t num_primes = 3);

}  // namespace hypst

#endif  // HYPST_GROUPID_HPP
