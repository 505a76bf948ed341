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

#include "hypst/pointcount.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "hypst/cyclo.hpp"
#include "hypst/errors.hpp"
#include "hypst/ntheory.hpp"

namespace hypst {

ContributionSet contributing_ms(std::int64_t p, int d, Family family) {
  ContributionSet out;
  out.family = family;
  out.p = p;
  out.d = d;
  const std::int64_t n = p - 1;
  if (family == Family::AdditiveConstant) {
    for (int m = 1; m < d; ++m) {
      if ((static_cast<std::int64_t>(m) * n) % d != 0) continue;
      const std::int64_t a = static_cast<std::int64_t>(m) * n / d;
      if (a >= 1 && a <= p - 2) out.entries.push_back({m, a});
    }
  } else {
    const std::int64_t den = 2 * static_cast<std::int64_t>(d - 1);
    for (int t = 1; t < den; t += 2) {
      if ((t * n) % den != 0) continue;
      const std::int64_t a = t * n / den;
      if (a <= p - 2) out.entries.push_back({t, a});
    }
  }
  return out;
}

std::int64_t count_formula(const PrimeField& field, const CurveSpec& curve) {
  const std::int64_t p = field.p();
  if (!has_good_reduction(curve, p)) {
    throw Error(ErrorKind::BadReduction,
                curve.equation() + " has bad reduction at p = " + std::to_string(p));
  }
  const auto set = contributing_ms(p, curve.d(), curve.family());
  if (set.entries.empty()) return p + 1;

  // Every term lives in Q(zeta_N) with N = (p-1)/step; summing exponent
  // counts there keeps the exact arithmetic at conductor at most 2d.
  const std::int64_t n = field.order();
  const std::int64_t half = n / 2;
  std::int64_t step = half;
  for (const auto& e : set.entries) step = std::gcd(step, e.exponent);
  const std::int64_t conductor = n / step;

  const std::int64_t c = curve.c().mod_p(p);
  const std::int64_t log_minus_c = field.dlog(field.reduce(-c));
  const std::int64_t log_c = field.dlog(c);

  std::vector<std::int64_t> counts(static_cast<std::size_t>(conductor), 0);
  for (const auto& e : set.entries) {
    const std::int64_t a = e.exponent / step;
    const std::int64_t h = half / step;
    const std::int64_t twist = a * log_minus_c + h * log_c;
    for (std::int64_t x = 2; x < p; ++x) {
      const std::int64_t exp = twist + a * field.dlog(x) + h * field.dlog(p + 1 - x);
      ++counts[static_cast<std::size_t>(mod(exp, conductor))];
    }
  }
  const auto sum = CycloElt::from_exponent_counts(conductor, counts);
  const auto value = sum.as_rational();
  if (!value || value->get_den() != 1 || !value->get_num().fits_slong_p()) {
    throw Error(ErrorKind::NonIntegerResult, "character sum for " + curve.equation() +
                                                 " at p = " + std::to_string(p) +
                                                 " is not a rational integer: " + sum.to_string());
  }
  return p + 1 + value->get_num().get_si();
}

std::int64_t count_bruteforce(const PrimeField& field, const CurveSpec& curve) {
  const std::int64_t p = field.p();
  std::vector<std::int32_t> roots(static_cast<std::size_t>(p), 0);
  for (std::int64_t y = 0; y < p; ++y) ++roots[static_cast<std::size_t>(mul_mod(y, y, p))];

  // Bad primes are allowed here; c is reduced naively when its denominator survives.
  const std::int64_t den = mod(curve.c().den(), p);
  const std::int64_t c = den == 0 ? 0 : mul_mod(mod(curve.c().num(), p), inv_mod(den, p), p);
  const bool linear = curve.family() == Family::LinearTwist;
  std::int64_t total = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t f = mod(pow_mod(x, curve.d(), p) + (linear ? mul_mod(c, x, p) : c), p);
    total += roots[static_cast<std::size_t>(f)];
  }
  return total;
}

int points_at_infinity(const CurveSpec& curve) noexcept { return curve.d() % 2 == 0 ? 2 : 1; }

std::int64_t smooth_count(const CurveSpec& curve, std::int64_t count) noexcept {
  return count + points_at_infinity(curve) - 1;
}

MomentSummary summarize(const CurveSpec& curve, const std::vector<TraceSample>& samples) {
  MomentSummary s;
  s.samples = samples.size();
  s.modulus = curve.character_modulus();
  for (const auto& t : samples) {
    const double x = t.normalized;
    const double x2 = x * x;
    s.mean += x;
    s.moment2 += x2;
    s.moment4 += x2 * x2;
    s.moment6 += x2 * x2 * x2;
    ++s.class_counts[t.p % s.modulus];
  }
  if (!samples.empty()) {
    const double n = static_cast<double>(samples.size());
    s.mean /= n;
    s.moment2 /= n;
    s.moment4 /= n;
    s.moment6 /= n;
  }
  return s;
}

SweepResult trace_sweep(const CurveSpec& curve, std::int64_t p_min, std::int64_t p_max,
                        unsigned threads) {
  if (p_min < 3 || p_max < p_min) {
    throw Error(ErrorKind::InvalidArgument, "sweep range needs 3 <= pmin <= pmax");
  }
  if (p_max > kMaxFieldPrime) {
    throw Error(ErrorKind::InvalidArgument, "pmax exceeds " + std::to_string(kMaxFieldPrime));
  }
  std::vector<std::int64_t> primes;
  for (std::int64_t p : odd_primes_in(p_min, p_max)) {
    if (has_good_reduction(curve, p)) primes.push_back(p);
  }

  SweepResult result;
  result.samples.resize(primes.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, primes.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      try {
        const std::int64_t p = primes[i];
        const auto field = make_field(p);
        TraceSample& s = result.samples[i];
        s.p = p;
        s.count = count_formula(field, curve);
        s.trace = p + 1 - smooth_count(curve, s.count);
        s.normalized = static_cast<double>(s.trace) / std::sqrt(static_cast<double>(p));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = primes.size();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  result.summary = summarize(curve, result.samples);
  return result;
}

}  // namespace hypst
