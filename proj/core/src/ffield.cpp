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

#include "hypst/ffield.hpp"

#include <string>

#include "hypst/cyclo.hpp"
#include "hypst/errors.hpp"
#include "hypst/ntheory.hpp"

namespace hypst {

namespace {

std::int64_t smallest_primitive_root(std::int64_t p) {
  const std::int64_t n = p - 1;
  const auto factors = prime_factors(n);
  for (std::int64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::int64_t q : factors) {
      if (pow_mod(g, n / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  return 1;  // p = 2 never reaches here; p = 3 returns 2 above.
}

}  // namespace

PrimeField make_field(std::int64_t p) {
  if (p < 3 || p % 2 == 0) {
    throw Error(ErrorKind::EvenOrTooSmall, "field modulus must be an odd prime, got " + std::to_string(p));
  }
  if (p > kMaxFieldPrime) {
    throw Error(ErrorKind::InvalidArgument,
                "p = " + std::to_string(p) + " exceeds the dense dlog table limit");
  }
  if (!is_prime(p)) {
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  }
  const std::int64_t g = smallest_primitive_root(p);
  auto table = std::make_shared<std::vector<std::int32_t>>(static_cast<std::size_t>(p), -1);
  std::int64_t x = 1;
  for (std::int64_t i = 0; i < p - 1; ++i) {
    (*table)[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(i);
    x = x * g % p;
  }
  return PrimeField(p, g, std::move(table));
}

std::int64_t PrimeField::reduce(std::int64_t x) const noexcept { return mod(x, p_); }

std::int64_t PrimeField::dlog(std::int64_t x) const {
  const std::int64_t r = reduce(x);
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "dlog of zero");
  return (*dlog_)[static_cast<std::size_t>(r)];
}

std::int64_t PrimeField::pow(std::int64_t x, std::int64_t e) const noexcept {
  return pow_mod(x, e, p_);
}

std::int64_t PrimeField::inv(std::int64_t x) const {
  if (reduce(x) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_p");
  return inv_mod(x, p_);
}

CharExponent::CharExponent(const PrimeField& field, std::int64_t a) : a_(mod(a, field.order())) {}

std::optional<std::int64_t> char_exponent_at(const PrimeField& field, CharExponent a,
                                             std::int64_t x) {
  if (field.reduce(x) == 0) return std::nullopt;
  return mul_mod(a.value(), field.dlog(x), field.order());
}

CycloElt char_eval(const PrimeField& field, CharExponent a, std::int64_t x) {
  const auto n = field.order();
  const auto e = char_exponent_at(field, a, x);
  if (!e) return CycloElt::zero(n);
  return CycloElt::zeta_power(n, *e);
}

int quadratic_char(const PrimeField& field, std::int64_t x) {
  if (field.reduce(x) == 0) return 0;
  return field.dlog(x) % 2 == 0 ? 1 : -1;
}

}  // namespace hypst
