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

#include "hypst/ntheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hypst/errors.hpp"

namespace hypst {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::EvenOrTooSmall: return "EvenOrTooSmall";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::DegenerateCharacters: return "DegenerateCharacters";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::NoColumns: return "NoColumns";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::InconsistentAcrossPrimes: return "InconsistentAcrossPrimes";
    case ErrorKind::RelationVerificationFailed: return "RelationVerificationFailed";
    case ErrorKind::NoGenericPrime: return "NoGenericPrime";
    case ErrorKind::OddInput: return "OddInput";
    case ErrorKind::EvenInput: return "EvenInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::int64_t mod(std::int64_t a, std::int64_t m) noexcept {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) noexcept {
  __extension__ using wide = __int128;
  return static_cast<std::int64_t>(static_cast<wide>(mod(a, m)) * mod(b, m) % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) noexcept {
  std::int64_t result = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw Error(ErrorKind::NotCoprime,
                std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return mod(old_s, m);
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 0) n = -n;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t q = 1; q * q <= n; ++q) {
    if (n % q == 0) {
      small.push_back(q);
      if (q != n / q) large.push_back(n / q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t q : prime_factors(n)) result = result / q * (q - 1);
  return result;
}

std::vector<std::int64_t> odd_primes_in(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  if (hi < 3 || hi < lo) return out;
  std::vector<bool> composite(static_cast<std::size_t>(hi + 1), false);
  for (std::int64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::int64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::int64_t p = std::max<std::int64_t>(lo, 3); p <= hi; ++p) {
    if (!composite[p]) out.push_back(p);
  }
  return out;
}

int v2(std::int64_t n) noexcept {
  if (n == 0) return 0;
  int k = 0;
  while ((n & 1) == 0) {
    n /= 2;
    ++k;
  }
  return k;
}

}  // namespace hypst
