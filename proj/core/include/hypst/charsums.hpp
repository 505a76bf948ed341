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

// Gauss sums (floating point, diagnostic only) and exact Jacobi sums.

#ifndef HYPST_CHARSUMS_HPP
#define HYPST_CHARSUMS_HPP

#include <complex>
#include <cstdint>

#include "hypst/cyclo.hpp"
#include "hypst/ffield.hpp"

namespace hypst {

struct GaussDiagnostic {
  std::int64_t p = 0;
  std::int64_t a = 0;
  // sum over x in F_p^x of T^a(x) * exp(2 pi i x / p).
  std::complex<double> value;
};

GaussDiagnostic gauss_sum(const PrimeField& field, CharExponent a);

// J(T^a, T^b) = sum over x of T^a(x) T^b(1 - x), exactly, in Q(zeta_{p-1}).
CycloElt jacobi_sum(const PrimeField& field, CharExponent a, CharExponent b);

// The same value computed inside the subfield Q(zeta_conductor). Requires
// conductor | p-1 and (p-1)/conductor dividing both exponents; throws
// Error(InvalidArgument) otherwise.
CycloElt jacobi_sum(const PrimeField& field, CharExponent a, CharExponent b,
                    std::int64_t conductor);

// Compares embed(J(A,B), 1) with g(A) g(B) / g(AB) to 1e-6. Throws
// Error(DegenerateCharacters) when A, B or AB is trivial.
bool gauss_jacobi_check(const PrimeField& field, CharExponent a, CharExponent b);

}  // namespace hypst

#endif  // HYPST_CHARSUMS_HPP
