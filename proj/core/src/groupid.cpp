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

#include "hypst/groupid.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "hypst/errors.hpp"
#include "hypst/ffield.hpp"
#include "hypst/ntheory.hpp"

namespace hypst {

namespace {

std::vector<std::uint8_t> complement(const std::vector<std::uint8_t>& v) {
  std::vector<std::uint8_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = 1 - v[i];
  return out;
}

bool is_constant(const std::vector<std::uint8_t>& v) {
  return std::all_of(v.begin(), v.end(), [&](std::uint8_t x) { return x == v.front(); });
}

IntVector to_int(const std::vector<std::uint8_t>& v) { return IntVector(v.begin(), v.end()); }

std::vector<std::size_t> multiplicities(const WeightClasses& wc) {
  std::vector<std::size_t> out;
  for (const auto& c : wc.classes) out.push_back(c.plus);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// rank(vectors and the all-ones vector) - 1.
std::size_t rank_mod_ones(IntMatrix vectors, std::size_t length) {
  vectors.emplace_back(length, 1);
  return rank(vectors) - 1;
}

}  // namespace

WeightClasses weight_classes(const CarryMatrix& m) {
  WeightClasses out;
  for (std::size_t j = 0; j < m.num_cols(); ++j) {
    const auto col = m.column(j);
    const std::int64_t a = m.cols[j].exponent;
    if (col.empty() || is_constant(col)) {
      out.degenerate.push_back(a);
      continue;
    }
    const bool flipped = col.front() == 1;
    const auto rep = flipped ? complement(col) : col;
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const WeightClass& c) { return c.weight == rep; });
    if (it == out.classes.end()) {
      out.classes.push_back({rep, 0, 0, {}, {}});
      it = std::prev(out.classes.end());
    }
    if (flipped) {
      ++it->minus;
      it->minus_exponents.push_back(a);
    } else {
      ++it->plus;
      it->plus_exponents.push_back(a);
    }
  }
  return out;
}

std::size_t torus_dimension(const CarryMatrix& m) {
  IntMatrix cols;
  for (std::size_t j = 0; j < m.num_cols(); ++j) cols.push_back(to_int(m.column(j)));
  return rank_mod_ones(std::move(cols), m.num_rows());
}

std::string torus_name(const WeightClasses& wc, std::size_t dimension) {
  if (dimension == 0) return "1";
  std::vector<std::string> factors;
  bool basis = wc.classes.size() == dimension;
  if (basis) {
    IntMatrix reps;
    for (const auto& c : wc.classes) reps.push_back(to_int(c.weight));
    basis = rank_mod_ones(std::move(reps), wc.classes.front().weight.size()) == dimension;
  }
  if (basis) {
    for (std::size_t k : multiplicities(wc)) {
      factors.push_back(k == 1 ? "U(1)" : "U(1)_" + std::to_string(k));
    }
  } else {
    factors.assign(dimension, "U(1)");
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x " : "") + factors[i];
  return out;
}

std::vector<std::int64_t> generic_primes(const CurveSpec& curve, std::size_t count,
                                         std::int64_t search_limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 3; p <= search_limit && out.size() < count; p += 2) {
    if (!has_good_reduction(curve, p) || !is_prime(p)) continue;
    if (st_columns(p, curve.d(), curve.family()).is_generic) out.push_back(p);
  }
  if (out.size() < count) {
    throw Error(ErrorKind::NoGenericPrime,
                "found " + std::to_string(out.size()) + " of " + std::to_string(count) +
                    " generic primes below " + std::to_string(search_limit) + " for " +
                    curve.equation());
  }
  return out;
}

TorusId identify_st0(const CurveSpec& curve, std::size_t num_primes) {
  if (num_primes == 0) throw Error(ErrorKind::InvalidArgument, "num_primes must be positive");
  const auto primes = generic_primes(curve, num_primes);

  struct Outcome {
    CarryMatrix matrix;
    WeightClasses classes;
    PrimeReport report;
    std::exception_ptr error;
  };
  std::vector<Outcome> outcomes(primes.size());
  auto run = [&](std::size_t idx) {
    try {
      const std::int64_t p = primes[idx];
      Outcome& o = outcomes[idx];
      o.matrix = build_matrix(p, curve.d(), curve.family());
      const auto violations = validate_matrix(o.matrix);
      if (!violations.empty()) {
        throw Error(ErrorKind::RelationVerificationFailed,
                    "carry matrix at p = " + std::to_string(p) + " fails " + violations.front());
      }
      const auto field = make_field(p);
      const auto kernel = right_kernel(o.matrix);
      o.report.p = p;
      o.report.columns = o.matrix.num_cols();
      o.report.kernel_rank = kernel.rank;
      for (const auto& v : kernel.basis) {
        const auto r = verify_relation(field, o.matrix, v, curve.c());
        if (r.kind == RelationKind::Fail) {
          throw Error(ErrorKind::RelationVerificationFailed,
                      "kernel vector is not a character relation at p = " + std::to_string(p));
        }
        o.report.relations.push_back(r);
      }
      o.classes = weight_classes(o.matrix);
      o.report.dimension = torus_dimension(o.matrix);
      o.report.multiplicities = multiplicities(o.classes);
    } catch (...) {
      outcomes[idx].error = std::current_exception();
    }
  };
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < primes.size(); ++i) workers.emplace_back(run, i);
  for (auto& w : workers) w.join();
  for (const auto& o : outcomes) {
    if (o.error) std::rethrow_exception(o.error);
  }

  const Outcome& first = outcomes.front();
  for (const auto& o : outcomes) {
    if (o.report.dimension != first.report.dimension ||
        o.report.multiplicities != first.report.multiplicities) {
      throw Error(ErrorKind::InconsistentAcrossPrimes,
                  "p = " + std::to_string(first.report.p) + " and p = " +
                      std::to_string(o.report.p) + " disagree on the torus");
    }
  }

  TorusId id;
  id.dimension = first.report.dimension;
  id.classes = first.classes.classes;
  id.name = torus_name(first.classes, id.dimension);
  for (std::size_t j = 0; j < first.matrix.num_cols(); ++j) {
    id.weight_matrix.push_back(first.matrix.column(j));
  }
  id.primes_used = primes;
  for (const auto& o : outcomes) id.reports.push_back(o.report);
  return id;
}

}  // namespace hypst
