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

#include "hypst/charsums.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hypst/errors.hpp"
#include "hypst/ntheory.hpp"

namespace hypst {

GaussDiagnostic gauss_sum(const PrimeField& field, CharExponent a) {
  const std::int64_t p = field.p();
  const std::int64_t n = field.order();
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  std::complex<long double> acc = 0;
  for (std::int64_t x = 1; x < p; ++x) {
    const std::int64_t e = mul_mod(a.value(), field.dlog(x), n);
    const long double angle = two_pi * (static_cast<long double>(e) / static_cast<long double>(n) +
                                        static_cast<long double>(x) / static_cast<long double>(p));
    acc += std::polar(1.0L, angle);
  }
  return {p, a.value(), {static_cast<double>(acc.real()), static_cast<double>(acc.imag())}};
}

CycloElt jacobi_sum(const PrimeField& field, CharExponent a, CharExponent b) {
  return jacobi_sum(field, a, b, field.order());
}

CycloElt jacobi_sum(const PrimeField& field, CharExponent a, CharExponent b,
                    std::int64_t conductor) {
  const std::int64_t n = field.order();
  if (conductor < 1 || n % conductor != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "conductor " + std::to_string(conductor) + " does not divide p-1");
  }
  const std::int64_t step = n / conductor;
  if (a.value() % step != 0 || b.value() % step != 0) {
    throw Error(ErrorKind::InvalidArgument, "characters do not take values in Q(zeta_" +
                                                std::to_string(conductor) + ")");
  }
  const std::int64_t ea = a.value() / step;
  const std::int64_t eb = b.value() / step;
  // x = 0 and x = 1 contribute nothing: every character vanishes at 0.
  std::vector<std::int64_t> counts(static_cast<std::size_t>(conductor), 0);
  for (std::int64_t x = 2; x < field.p(); ++x) {
    const std::int64_t e = ea * field.dlog(x) + eb * field.dlog(1 - x);
    ++counts[static_cast<std::size_t>(mod(e, conductor))];
  }
  return CycloElt::from_exponent_counts(conductor, counts);
}

bool gauss_jacobi_check(const PrimeField& field, CharExponent a, CharExponent b) {
  const CharExponent ab(field, a.value() + b.value());
  if (a.is_trivial() || b.is_trivial() || ab.is_trivial()) {
    throw Error(ErrorKind::DegenerateCharacters,
                "Gauss-Jacobi identity needs A, B and AB nontrivial");
  }
  const auto j = jacobi_sum(field, a, b).embed(1);
  const auto ga = gauss_sum(field, a).value;
  const auto gb = gauss_sum(field, b).value;
  const auto gab = gauss_sum(field, ab).value;
  return std::abs(j - ga * gb / gab) <= 1e-6;
}

}  // namespace hypst
