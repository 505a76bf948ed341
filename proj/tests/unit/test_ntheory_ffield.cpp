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

#include <numeric>
#include <set>

#include "hypst/cyclo.hpp"
#include "hypst/errors.hpp"
#include "hypst/ffield.hpp"
#include "hypst/ntheory.hpp"
#include "test_util.hpp"

namespace hypst {
namespace {

using testing::kind_of;

// Multiplicative order by repeated multiplication.
std::int64_t naive_order(std::int64_t g, std::int64_t p) {
  std::int64_t x = g % p;
  std::int64_t k = 1;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

bool naive_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(NTheory, IsPrimeMatchesTrialDivision) {
  for (std::int64_t n = -5; n < 5000; ++n) EXPECT_EQ(is_prime(n), naive_prime(n)) << n;
  EXPECT_TRUE(is_prime(1'000'000'007));
  EXPECT_FALSE(is_prime(3'215'031'751));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(NTheory, DivisorsPhiAndValuation) {
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(prime_factors(360), (std::vector<std::int64_t>{2, 3, 5}));
  for (std::int64_t n = 1; n < 300; ++n) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
  EXPECT_EQ(v2(1), 0);
  EXPECT_EQ(v2(48), 4);
  EXPECT_EQ(v2(-12), 2);
}

TEST(NTheory, ModularInverse) {
  EXPECT_EQ(inv_mod(3, 11), 4);
  EXPECT_EQ(inv_mod(-3, 11), 7);
  EXPECT_EQ(kind_of([] { inv_mod(6, 9); }), ErrorKind::NotCoprime);
}

TEST(NTheory, OddPrimesInRange) {
  EXPECT_EQ(odd_primes_in(1, 20), (std::vector<std::int64_t>{3, 5, 7, 11, 13, 17, 19}));
  EXPECT_TRUE(odd_primes_in(24, 28).empty());
}

TEST(PrimeField, GeneratorExamples) {
  EXPECT_EQ(make_field(11).generator(), 2);
  EXPECT_EQ(make_field(19).generator(), 2);
  const auto f3 = make_field(3);
  EXPECT_EQ(f3.generator(), 2);
  EXPECT_EQ(f3.dlog(2), 1);
  EXPECT_EQ(f3.dlog(1), 0);
}

TEST(PrimeField, GeneratorIsSmallestPrimitiveRoot) {
  for (std::int64_t p : odd_primes_in(3, 400)) {
    const auto f = make_field(p);
    std::int64_t expected = 2;
    while (naive_order(expected, p) != p - 1) ++expected;
    EXPECT_EQ(f.generator(), expected) << p;
  }
}

TEST(PrimeField, DlogIsABijectionInvertedByPow) {
  for (std::int64_t p : odd_primes_in(3, 200)) {
    const auto f = make_field(p);
    std::set<std::int64_t> logs;
    for (std::int64_t x = 1; x < p; ++x) {
      const auto e = f.dlog(x);
      EXPECT_GE(e, 0);
      EXPECT_LE(e, p - 2);
      EXPECT_EQ(f.pow(f.generator(), e), x);
      logs.insert(e);
    }
    EXPECT_EQ(logs.size(), static_cast<std::size_t>(p - 1));
  }
}

TEST(PrimeField, RejectsBadModuli) {
  EXPECT_EQ(kind_of([] { make_field(9); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { make_field(2); }), ErrorKind::EvenOrTooSmall);
  EXPECT_EQ(kind_of([] { make_field(1); }), ErrorKind::EvenOrTooSmall);
  EXPECT_EQ(kind_of([] { make_field(-7); }), ErrorKind::EvenOrTooSmall);
  EXPECT_EQ(kind_of([] { make_field(100); }), ErrorKind::EvenOrTooSmall);
  EXPECT_EQ(kind_of([] { make_field(kMaxFieldPrime + 19); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { make_field(11).dlog(0); }), ErrorKind::InvalidArgument);
}

TEST(Characters, EvaluationExamples) {
  const auto f = make_field(11);
  EXPECT_TRUE(char_eval(f, CharExponent(f, 0), 7).is_one());
  EXPECT_EQ(f.dlog(10), 5);
  EXPECT_EQ(char_eval(f, CharExponent(f, 5), 10), CycloElt::rational(10, -1));
  EXPECT_TRUE(char_eval(f, CharExponent(f, 3), 0).is_zero());
  EXPECT_TRUE(char_eval(f, CharExponent(f, 0), 0).is_zero());
}

TEST(Characters, ExponentConventions) {
  const auto f = make_field(13);
  EXPECT_TRUE(CharExponent::trivial(f).is_trivial());
  EXPECT_EQ(CharExponent::quadratic(f).value(), 6);
  EXPECT_EQ(CharExponent(f, -1).value(), 11);
  EXPECT_EQ(CharExponent(f, 25).value(), 1);
  EXPECT_FALSE(char_exponent_at(f, CharExponent(f, 1), 0).has_value());
}

TEST(Characters, MultiplicativityOfExponents) {
  for (std::int64_t p : odd_primes_in(3, 50)) {
    const auto f = make_field(p);
    for (std::int64_t a = 0; a < p - 1; ++a) {
      const CharExponent chi(f, a);
      for (std::int64_t x = 1; x < p; ++x) {
        for (std::int64_t y = 1; y < p; ++y) {
          const auto ex = *char_exponent_at(f, chi, x);
          const auto ey = *char_exponent_at(f, chi, y);
          EXPECT_EQ(mod(ex + ey, p - 1), *char_exponent_at(f, chi, x * y % p));
        }
      }
    }
  }
}

TEST(Characters, MultiplicativityOfValues) {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const auto f = make_field(p);
    for (std::int64_t a = 0; a < p - 1; ++a) {
      const CharExponent chi(f, a);
      for (std::int64_t x = 1; x < p; ++x) {
        for (std::int64_t y = 1; y < p; ++y) {
          EXPECT_EQ(char_eval(f, chi, x) * char_eval(f, chi, y), char_eval(f, chi, x * y % p));
        }
      }
    }
  }
}

TEST(Characters, Orthogonality) {
  for (std::int64_t p : odd_primes_in(3, 50)) {
    const auto f = make_field(p);
    for (std::int64_t a = 0; a < p - 1; ++a) {
      CycloElt sum = CycloElt::zero(p - 1);
      for (std::int64_t x = 1; x < p; ++x) sum += char_eval(f, CharExponent(f, a), x);
      EXPECT_EQ(sum, CycloElt::rational(p - 1, a == 0 ? p - 1 : 0)) << p << " " << a;
    }
  }
}

TEST(Characters, QuadraticCharacterIsLegendreSymbol) {
  for (std::int64_t p : odd_primes_in(3, 50)) {
    const auto f = make_field(p);
    const auto phi = CharExponent::quadratic(f);
    EXPECT_EQ(quadratic_char(f, 0), 0);
    for (std::int64_t x = 1; x < p; ++x) {
      const std::int64_t euler = pow_mod(x, (p - 1) / 2, p);
      const int legendre = euler == 1 ? 1 : -1;
      EXPECT_EQ(quadratic_char(f, x), legendre);
      EXPECT_EQ(char_eval(f, phi, x), CycloElt::rational(p - 1, legendre));
    }
  }
}

}  // namespace
}  // namespace hypst
