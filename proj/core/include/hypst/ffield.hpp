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

// Prime fields F_p with a fixed generator of F_p^x and a dense discrete-log
// table. Multiplicative characters are T^a where T sends the generator to
// zeta_{p-1}; every character, the trivial one included, vanishes at 0.

#ifndef HYPST_FFIELD_HPP
#define HYPST_FFIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace hypst {

class CycloElt;

// Largest modulus accepted by make_field. The dlog table is dense.
inline constexpr std::int64_t kMaxFieldPrime = 10'000'000;

class PrimeField {
 public:
  std::int64_t p() const noexcept { return p_; }
  // Order of F_p^x, also the conductor of character values.
  std::int64_t order() const noexcept { return p_ - 1; }
  // Smallest primitive root modulo p.
  std::int64_t generator() const noexcept { return generator_; }

  // Canonical representative in [0, p).
  std::int64_t reduce(std::int64_t x) const noexcept;

  // Discrete log base generator() of a unit; x is reduced first.
  // Throws Error(InvalidArgument) for x = 0 mod p.
  std::int64_t dlog(std::int64_t x) const;

  std::int64_t pow(std::int64_t x, std::int64_t e) const noexcept;
  std::int64_t inv(std::int64_t x) const;

 private:
  friend PrimeField make_field(std::int64_t p);
  PrimeField(std::int64_t p, std::int64_t g, std::shared_ptr<const std::vector<std::int32_t>> table)
      : p_(p), generator_(g), dlog_(std::move(table)) {}

  std::int64_t p_;
  std::int64_t generator_;
  std::shared_ptr<const std::vector<std::int32_t>> dlog_;
};

// Throws Error(EvenOrTooSmall) for p < 3 or even p, Error(NotPrime) for odd
// composites, Error(InvalidArgument) above kMaxFieldPrime.
PrimeField make_field(std::int64_t p);

// Exponent a of the character T^a, always kept in [0, p-1).
class CharExponent {
 public:
  CharExponent(const PrimeField& field, std::int64_t a);

  std::int64_t value() const noexcept { return a_; }
  bool is_trivial() const noexcept { return a_ == 0; }

  static CharExponent trivial(const PrimeField& field) { return {field, 0}; }
  static CharExponent quadratic(const PrimeField& field) { return {field, field.order() / 2}; }

  friend bool operator==(const CharExponent&, const CharExponent&) = default;

 private:
  std::int64_t a_;
};

// Exponent e with T^a(x) = zeta_{p-1}^e, or nullopt when x = 0 mod p.
std::optional<std::int64_t> char_exponent_at(const PrimeField& field, CharExponent a,
                                             std::int64_t x);

// T^a(x) as an exact element of Q(zeta_{p-1}); zero at x = 0.
CycloElt char_eval(const PrimeField& field, CharExponent a, std::int64_t x);

// +1 / -1 / 0 value of the quadratic character.
int quadratic_char(const PrimeField& field, std::int64_t x);

}  // namespace hypst

#endif  // HYPST_FFIELD_HPP
