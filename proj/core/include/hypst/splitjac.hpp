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

// Symbolic Jacobian factorizations of y^2 = x^{2g+2} + c and y^2 = x^{2g+1} + cx.
// Factors are recorded as curve data; no maps between Jacobians are built.

#ifndef HYPST_SPLITJAC_HPP
#define HYPST_SPLITJAC_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "hypst/curve.hpp"

namespace hypst {

struct LowerGenusTerm {
  int x_exponent = 0;        // g - 2k
  mpz_class coefficient;     // (-1)^k [C(g-k, k) + C(g-k-1, k-1)]
  int zeta_exponent = 0;     // i k mod g, for zeta a fixed primitive g-th root of unity
  Rational c_exponent;       // k / g
};

// y^2 = sum_k coefficient * zeta^{ik} c^{k/g} x^{g-2k}, k = 0..(g-1)/2.
struct LowerGenusCurve {
  int g = 0;
  int i = 0;
  Rational c;
  std::vector<LowerGenusTerm> terms;

  int genus() const noexcept { return (g - 1) / 2; }
  // "y^2 = x^7 - 7 zeta^i x^5 + 14 zeta^2i x^3 - 7 zeta^3i x", with the
  // concrete exponent i k mod g when symbolic_i is false. A factor
  // c^(k/g) is shown whenever c != 1.
  std::string to_string(bool symbolic_i = false) const;
};

// Throws Error(EvenInput) for even g or g < 3 and Error(InvalidArgument)
// unless i is 0 or 1 and c is nonzero.
LowerGenusCurve lower_genus_curve(int g, int i, Rational c = Rational(1));

struct IsogenyFactor;

struct IsogenyFactorization {
  CurveSpec source;
  std::vector<IsogenyFactor> factors;

  int total_genus() const;
  // "(x^3 + c)^2 x (x^7 + cx)"; refined factors appear in brackets.
  std::string to_string(bool symbolic = true) const;
};

struct IsogenyFactor {
  std::variant<CurveSpec, LowerGenusCurve> curve;
  int exponent = 1;
  // Further splitting of one copy of this factor, when available.
  std::vector<IsogenyFactorization> refinement;

  int genus() const;
  std::string to_string(bool symbolic = true) const;
};

// Jac(y^2 = x^{2g+2} + c) ~ Jac(y^2 = x^{g+1} + c)^2. g even >= 2, else
// Error(OddInput) / Error(InvalidArgument).
IsogenyFactorization split_even(int g, Rational c = Rational(1));

// Jac(y^2 = x^{2g+2} + c) ~ Jac(y^2 = x^{g+1} + c) x Jac(y^2 = x^{g+2} + cx).
// g odd >= 3; even g and g < 3 throw Error(EvenInput).
IsogenyFactorization split_odd(int g, Rational c = Rational(1));

// Closed form with k = v2(g+1): (y^2 = x^{(g+1)/2^k} + c)^2 and, for
// i = 1..k, y^2 = x^{g_i + 2} + cx with g_i = (g+1)/2^{i-1} - 1. Genus 0
// factors are omitted. Cross-checked against split_full_recursive; g >= 2.
IsogenyFactorization split_full(int g, Rational c = Rational(1));

// The same factorization obtained by applying split_odd until the remaining
// even-degree factor has even genus, then split_even.
IsogenyFactorization split_full_recursive(int g, Rational c = Rational(1));

// Jac(y^2 = x^{2g+1} + cx) ~ E x Jac(C_0) x Jac(C_1), E: y^2 = x^3 + cx.
// g odd >= 3, else Error(EvenInput).
IsogenyFactorization split_refined(int g, Rational c = Rational(1));

// Refines every linear-twist factor y^2 = x^{2h+1} + cx with h odd >= 3.
IsogenyFactorization refine(IsogenyFactorization f);

// Checks x^{2g+1} + cx against the Lockwood expansion built from `curve`'s
// terms at `trials` random complex points drawn from a seeded mt19937_64.
// c^{1/g} is the principal branch and zeta = exp(2 pi i / g). The comparison
// is relative to the sum of the absolute values of all terms.
bool lockwood_check(const LowerGenusCurve& curve, int trials, double tol, std::uint64_t seed = 0);
bool lockwood_check(int g, int i, Rational c, int trials, double tol, std::uint64_t seed = 0);

}  // namespace hypst

#endif  // HYPST_SPLITJAC_HPP
