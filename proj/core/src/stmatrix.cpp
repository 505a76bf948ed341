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

#include "hypst/stmatrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hypst/cyclo.hpp"
#include "hypst/errors.hpp"
#include "hypst/ntheory.hpp"

namespace hypst {

StColumns st_columns(std::int64_t p, int d, Family family) {
  const auto set = contributing_ms(p, d, family);
  StColumns out;
  out.family = family;
  out.p = p;
  out.d = d;
  out.genus = (d - 1) / 2;
  for (const auto& e : set.entries) {
    if (2 * e.exponent != p - 1) out.columns.push_back(e);
  }
  out.is_generic = out.columns.size() == static_cast<std::size_t>(2 * out.genus);
  return out;
}

IntMatrix CarryMatrix::to_int() const {
  IntMatrix out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out[i].assign(entries[i].begin(), entries[i].end());
  }
  return out;
}

std::vector<std::uint8_t> CarryMatrix::column(std::size_t j) const {
  std::vector<std::uint8_t> out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out[i] = entries[i][j];
  return out;
}

CarryMatrix build_matrix(std::int64_t p, int d, Family family) {
  const auto cols = st_columns(p, d, family);
  if (cols.columns.empty()) {
    throw Error(ErrorKind::NoColumns, "no contributing characters for d = " + std::to_string(d) +
                                          " at p = " + std::to_string(p));
  }
  CarryMatrix m;
  m.family = family;
  m.p = p;
  m.d = d;
  m.genus = cols.genus;
  m.is_generic = cols.is_generic;
  m.cols = cols.columns;
  const std::int64_t n = p - 1;
  const std::int64_t half = n / 2;
  for (std::int64_t k = 1; k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    m.rows.push_back(k);
    std::vector<std::uint8_t> row;
    row.reserve(m.cols.size());
    for (const auto& c : m.cols) {
      row.push_back(mul_mod(k, c.exponent, n) + mul_mod(k, half, n) >= n ? 1 : 0);
    }
    m.entries.push_back(std::move(row));
  }
  return m;
}

std::vector<std::string> validate_matrix(const CarryMatrix& m) {
  std::vector<std::string> failed;
  const std::size_t r = m.num_rows();
  const std::size_t c = m.num_cols();

  bool rows_ok = true;
  for (const auto& row : m.entries) {
    const auto ones = static_cast<std::size_t>(std::count(row.begin(), row.end(), 1));
    if (2 * ones != c) rows_ok = false;
  }
  if (!rows_ok) failed.emplace_back("row balance");

  bool cols_ok = true;
  for (std::size_t j = 0; j < c; ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < r; ++i) ones += m.entries[i][j];
    if (2 * ones != r) cols_ok = false;
  }
  if (!cols_ok) failed.emplace_back("column balance");

  const std::int64_t n = m.p - 1;
  std::map<std::int64_t, std::size_t> row_of;
  std::map<std::int64_t, std::size_t> col_of;
  for (std::size_t i = 0; i < r; ++i) row_of[m.rows[i]] = i;
  for (std::size_t j = 0; j < c; ++j) col_of[m.cols[j].exponent] = j;

  bool conj_ok = true;
  for (std::size_t i = 0; i < r && conj_ok; ++i) {
    const auto it = row_of.find(n - m.rows[i]);
    if (it == row_of.end()) {
      conj_ok = false;
      break;
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (m.entries[it->second][j] != 1 - m.entries[i][j]) conj_ok = false;
    }
  }
  if (!conj_ok) failed.emplace_back("conjugate complement");

  bool galois_ok = true;
  for (std::size_t ui = 0; ui < r && galois_ok; ++ui) {
    const std::int64_t u = m.rows[ui];
    const std::int64_t u_inv = inv_mod(u, n);
    for (std::size_t j = 0; j < c && galois_ok; ++j) {
      const auto cj = col_of.find(mul_mod(u_inv, m.cols[j].exponent, n));
      if (cj == col_of.end()) {
        galois_ok = false;
        break;
      }
      for (std::size_t i = 0; i < r; ++i) {
        const auto ri = row_of.find(mul_mod(m.rows[i], u, n));
        if (ri == row_of.end() || m.entries[ri->second][cj->second] != m.entries[i][j]) {
          galois_ok = false;
          break;
        }
      }
    }
  }
  if (!galois_ok) failed.emplace_back("Galois stability");
  return failed;
}

std::string to_grid(const CarryMatrix& m) {
  std::ostringstream out;
  for (const auto& row : m.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << int(row[j]);
    out << '\n';
  }
  return out.str();
}

KernelLattice right_kernel(const CarryMatrix& m) {
  KernelLattice k;
  k.basis = right_kernel(m.to_int(), m.num_cols());
  k.rank = k.basis.size();
  k.saturated = is_saturated(k.basis, m.num_cols());
  return k;
}

std::string_view to_string(RelationKind kind) noexcept {
  switch (kind) {
    case RelationKind::Exact: return "Exact";
    case RelationKind::Torsion: return "Torsion";
    case RelationKind::Fail: return "Fail";
  }
  return "Fail";
}

RelationResult verify_relation(const PrimeField& field, const CarryMatrix& m,
                               const IntVector& v, const Rational& c) {
  const std::int64_t p = field.p();
  if (p != m.p) throw Error(ErrorKind::InvalidArgument, "field and matrix use different primes");
  if (v.size() != m.num_cols()) {
    throw Error(ErrorKind::InvalidArgument, "relation length differs from the column count");
  }
  for (const auto& x : mat_vec(m.to_int(), v)) {
    if (x != 0) throw Error(ErrorKind::NotInKernel, "M v != 0");
  }
  if (c.num() % p == 0) {
    throw Error(ErrorKind::BadReduction, "c vanishes mod " + std::to_string(p));
  }
  const std::int64_t c_mod = c.mod_p(p);

  const std::int64_t n = field.order();
  const std::int64_t half = n / 2;
  std::int64_t step = half;
  for (const auto& col : m.cols) step = std::gcd(step, col.exponent);
  const std::int64_t conductor = n / step;
  const std::int64_t h = half / step;
  const std::int64_t log_minus_c = field.dlog(field.reduce(-c_mod));
  const std::int64_t log_c = field.dlog(c_mod);

  // Each term has absolute value sqrt(p) in every embedding, so a negative
  // power is conj(term)^|v| / p^|v|.
  CycloElt w = CycloElt::one(conductor);
  std::int64_t p_power = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    const std::int64_t a = m.cols[j].exponent / step;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(conductor), 0);
    const std::int64_t twist = a * log_minus_c + h * log_c;
    for (std::int64_t x = 2; x < p; ++x) {
      ++counts[static_cast<std::size_t>(
          mod(twist + a * field.dlog(x) + h * field.dlog(p + 1 - x), conductor))];
    }
    const auto term = CycloElt::from_exponent_counts(conductor, counts);
    const std::int64_t e = v[j].get_si();
    if (e > 0) {
      w *= term.pow(e);
    } else {
      w *= term.conj().pow(-e);
      p_power += -e;
    }
  }
  if (p_power > 0) {
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(p_power));
    w *= CycloElt::rational(conductor, mpq_class(mpz_class(1), denom));
  }

  if (w.is_one()) return {RelationKind::Exact, 1};
  if (const auto order = is_root_of_unity(w)) return {RelationKind::Torsion, *order};
  return {RelationKind::Fail, std::nullopt};
}

}  // namespace hypst
