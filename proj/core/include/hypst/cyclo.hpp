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

// Exact arithmetic in Q(zeta_n).
//
// An element is stored in the power basis 1, zeta, ..., zeta^(phi(n)-1)
// reduced modulo the n-th cyclotomic polynomial, as an integer numerator
// vector over one positive common denominator with gcd(content, den) = 1.
// That representation is canonical, so equality is coefficient-wise.
//
// Contexts (Phi_n and its sparse form) are cached per conductor in a
// process-wide table guarded by a mutex; elements themselves are plain
// values and safe to share read-only between threads.

#ifndef HYPST_CYCLO_HPP
#define HYPST_CYCLO_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hypst {

// Coefficient i multiplies x^i.
using IntPoly = std::vector<mpz_class>;

// Phi_n, obtained by dividing x^n - 1 by the product of Phi_d over the proper
// divisors d of n. Requires n >= 1.
IntPoly cyclotomic_poly(std::int64_t n);

namespace detail {
struct CycloContext;
}

class CycloElt {
 public:
  // Zero of Q(zeta_1) = Q.
  CycloElt();

  static CycloElt zero(std::int64_t n);
  static CycloElt one(std::int64_t n);
  static CycloElt rational(std::int64_t n, const mpq_class& q);
  // zeta_n^k for any integer k.
  static CycloElt zeta_power(std::int64_t n, std::int64_t k);
  // sum_j counts[j] * zeta_n^j; indices are taken modulo n, so the span may
  // have any length.
  static CycloElt from_exponent_counts(std::int64_t n, std::span<const std::int64_t> counts);
  // sum_j coeffs[j] * zeta_n^j for a polynomial of any length.
  static CycloElt from_poly(std::int64_t n, std::span<const mpq_class> coeffs);

  std::int64_t conductor() const noexcept;
  // phi(n), the length of the canonical coefficient vector.
  std::int64_t degree() const noexcept;

  std::vector<mpq_class> coeffs() const;
  const std::vector<mpz_class>& numerators() const noexcept { return num_; }
  const mpz_class& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  std::optional<mpq_class> as_rational() const;

  CycloElt& operator+=(const CycloElt& rhs);
  CycloElt& operator-=(const CycloElt& rhs);
  CycloElt& operator*=(const CycloElt& rhs);
  CycloElt operator-() const;

  friend CycloElt operator+(CycloElt lhs, const CycloElt& rhs) { return lhs += rhs; }
  friend CycloElt operator-(CycloElt lhs, const CycloElt& rhs) { return lhs -= rhs; }
  friend CycloElt operator*(const CycloElt& lhs, const CycloElt& rhs);
  // Equal conductor and equal canonical coefficients.
  friend bool operator==(const CycloElt& lhs, const CycloElt& rhs);

  // Complex conjugation zeta -> zeta^-1.
  CycloElt conj() const;
  // Throws Error(DivisionByZero) for zero.
  CycloElt inv() const;
  // Negative exponents go through inv().
  CycloElt pow(std::int64_t e) const;
  // Same element viewed in Q(zeta_m); requires n | m.
  CycloElt lift(std::int64_t m) const;

  // Value under zeta_n -> exp(2 pi i k / n); throws Error(NotCoprime) unless
  // gcd(k, n) = 1.
  std::complex<double> embed(std::int64_t k) const;

  // Human-readable form in terms of z = zeta_n, e.g. "1 - 2*z^3".
  std::string to_string() const;

 private:
  CycloElt(std::shared_ptr<const detail::CycloContext> ctx, std::vector<mpz_class> num,
           mpz_class den);
  void normalize();
  void require_same_field(const CycloElt& rhs) const;

  std::shared_ptr<const detail::CycloContext> ctx_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

// Least N >= 1 with w^N = 1, or nullopt when w is not a root of unity. Roots of
// unity in Q(zeta_n) are +-zeta_n^k, so testing w^lcm(2, n) = 1 is complete.
std::optional<std::int64_t> is_root_of_unity(const CycloElt& w);

}  // namespace hypst

#endif  // HYPST_CYCLO_HPP
