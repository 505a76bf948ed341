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

// Integer row lattices: Hermite normal form, rank, right kernels, saturation.

#ifndef HYPST_LATTICE_HPP
#define HYPST_LATTICE_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace hypst {

using IntVector = std::vector<mpz_class>;
// Row-major; every row has the same length.
using IntMatrix = std::vector<IntVector>;

// Row Hermite normal form of the row lattice: zero rows dropped, pivots
// positive, entries above each pivot reduced into [0, pivot).
IntMatrix hnf(IntMatrix rows);

std::size_t rank(const IntMatrix& rows);

// Basis of {v in Z^cols : M v = 0} in HNF. The basis is saturated because it
// comes out of a unimodular transform.
IntMatrix right_kernel(const IntMatrix& m, std::size_t cols);

// Smallest saturated lattice containing the rows: (Q-span) intersected with Z^cols.
IntMatrix saturate(const IntMatrix& rows, std::size_t cols);

bool lattice_equal(const IntMatrix& a, const IntMatrix& b);
bool is_saturated(const IntMatrix& rows, std::size_t cols);

IntVector mat_vec(const IntMatrix& m, const IntVector& v);

}  // namespace hypst

#endif  // HYPST_LATTICE_HPP
