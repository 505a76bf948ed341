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

#include <gtest/gtest.h>

#include <cmath>

#include "hypst/charsums.hpp"
#include "hypst/ntheory.hpp"
#include "test_util.hpp"

namespace hypst {
namespace {

using testing::kind_of;

// J(A, B) straight from the definition with char_eval.
CycloElt jacobi_by_definition(const PrimeField& f, std::int64_t a, std::int64_t b) {
  CycloElt sum = CycloElt::zero(f.order());
  for (std::int64_t x = 0; x < f.p(); ++x) {
    sum += char_eval(f, CharExponent(f, a), x) * char_eval(f, CharExponent(f, b), 1 - x + f.p());
  }
  return sum;
}

TEST(GaussSum, Examples) {
  const auto f5 = make_field(5);
  const auto trivial = gauss_sum(f5, CharExponent(f5, 0)).value;
  EXPECT_NEAR(trivial.real(), -1.0, 1e-12);
  EXPECT_NEAR(trivial.imag(), 0.0, 1e-12);
  const auto quadratic = gauss_sum(f5, CharExponent(f5, 2)).value;
  EXPECT_NEAR(quadratic.real(), std::sqrt(5.0), 1e-9);
  EXPECT_NEAR(quadratic.imag(), 0.0, 1e-9);
  const auto f7 = make_field(7);
  EXPECT_NEAR(std::abs(gauss_sum(f7, CharExponent(f7, 3)).value), std::sqrt(7.0), 1e-9);
}

TEST(GaussSum, AbsoluteValueAndReflection) {
  for (std::int64_t p : odd_primes_in(3, 50)) {
    const auto f = make_field(p);
    for (std::int64_t a = 1; a < p - 1; ++a) {
      const auto g = gauss_sum(f, CharExponent(f, a)).value;
      const auto gbar = gauss_sum(f, CharExponent(f, -a)).value;
      EXPECT_NEAR(std::norm(g), static_cast<double>(p), 1e-9);
      const double chi_minus_one = (a * f.dlog(p - 1)) % (p - 1) == 0 ? 1.0 : -1.0;
      EXPECT_NEAR((g * gbar).real(), chi_minus_one * static_cast<double>(p), 1e-9);
      EXPECT_NEAR((g * gbar).imag(), 0.0, 1e-9);
    }
  }
}

TEST(JacobiSum, Examples) {
  const auto f7 = make_field(7);
  EXPECT_EQ(jacobi_sum(f7, CharExponent(f7, 0), CharExponent(f7, 0)), CycloElt::rational(6, 5));
  const auto f11 = make_field(11);
  EXPECT_TRUE(jacobi_sum(f11, CharExponent(f11, 1), CharExponent(f11, 9)).is_one());
  const auto f19 = make_field(19);
  const auto w = jacobi_sum(f19, CharExponent(f19, 2), CharExponent(f19, 9));
  EXPECT_EQ(w * w.conj(), CycloElt::rational(18, 19));
}

TEST(JacobiSum, MatchesDefinition) {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const auto f = make_field(p);
    for (std::int64_t a = 0; a < p - 1; ++a) {
      for (std::int64_t b = 0; b < p - 1; ++b) {
        EXPECT_EQ(jacobi_sum(f, CharExponent(f, a), CharExponent(f, b)), jacobi_by_definition(f, a, b));
      }
    }
  }
}

TEST(JacobiSum, SymmetryAndConjugation) {
  for (std::int64_t p : odd_primes_in(3, 23)) {
    const auto f = make_field(p);
    for (std::int64_t a = 0; a < p - 1; ++a) {
      for (std::int64_t b = 0; b < p - 1; ++b) {
        const auto j = jacobi_sum(f, CharExponent(f, a), CharExponent(f, b));
        EXPECT_EQ(j, jacobi_sum(f, CharExponent(f, b), CharExponent(f, a)));
        EXPECT_EQ(j.conj(), jacobi_sum(f, CharExponent(f, -a), CharExponent(f, -b)));
      }
    }
  }
}

TEST(JacobiSum, SubfieldAgreesWithFullConductor) {
  const auto f = make_field(37);
  for (std::int64_t a = 0; a < 36; a += 4) {
    const auto sub = jacobi_sum(f, CharExponent(f, a), CharExponent::quadratic(f), 18);
    EXPECT_EQ(sub.conductor(), 18);
    EXPECT_EQ(sub.lift(36), jacobi_sum(f, CharExponent(f, a), CharExponent::quadratic(f)));
  }
  EXPECT_EQ(kind_of([&] { jacobi_sum(f, CharExponent(f, 1), CharExponent(f, 2), 7); }),
            ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { jacobi_sum(f, CharExponent(f, 1), CharExponent(f, 2), 18); }),
            ErrorKind::InvalidArgument);
}

TEST(GaussJacobi, Identity) {
  const auto f11 = make_field(11);
  EXPECT_TRUE(gauss_jacobi_check(f11, CharExponent(f11, 1), CharExponent(f11, 5)));
  const auto f19 = make_field(19);
  EXPECT_TRUE(gauss_jacobi_check(f19, CharExponent(f19, 2), CharExponent(f19, 9)));
  const auto f7 = make_field(7);
  EXPECT_EQ(kind_of([&] { gauss_jacobi_check(f7, CharExponent(f7, 0), CharExponent(f7, 1)); }),
            ErrorKind::DegenerateCharacters);
  EXPECT_EQ(kind_of([&] { gauss_jacobi_check(f7, CharExponent(f7, 2), CharExponent(f7, 4)); }),
            ErrorKind::DegenerateCharacters);
}

}  // namespace
}  // namespace hypst
