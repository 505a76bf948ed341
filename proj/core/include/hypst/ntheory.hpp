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

// Small-integer number theory shared by every module.

#ifndef HYPST_NTHEORY_HPP
#define HYPST_NTHEORY_HPP

#include <cstdint>
#include <vector>

namespace hypst {

std::int64_t mod(std::int64_t a, std::int64_t m) noexcept;
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) noexcept;
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) noexcept;

// Inverse of a modulo m; throws Error(NotCoprime) when gcd(a, m) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n) noexcept;

// Distinct prime divisors in ascending order.
std::vector<std::int64_t> prime_factors(std::int64_t n);

// All positive divisors in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

// Odd primes p with lo <= p <= hi, ascending (simple sieve).
std::vector<std::int64_t> odd_primes_in(std::int64_t lo, std::int64_t hi);

// 2-adic valuation of a nonzero integer.
int v2(std::int64_t n) noexcept;

}  // namespace hypst

#endif  // HYPST_NTHEORY_HPP
