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

#include "hypst/lattice.hpp"

#include <algorithm>
#include <utility>

namespace hypst {

namespace {

bool is_zero_range(const IntVector& row, std::size_t first, std::size_t last) {
  for (std::size_t j = first; j < last; ++j) {
    if (row[j] != 0) return false;
  }
  return true;
}

void sub_multiple(IntVector& target, const IntVector& source, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

// Unimodular row reduction to echelon form on the first `width` columns; the
// remaining columns ride along. Returns the number of pivot rows.
std::size_t echelon(IntMatrix& a, std::size_t width) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < a.size(); ++col) {
    while (true) {
      std::size_t best = a.size();
      for (std::size_t r = pivot_row; r < a.size(); ++r) {
        if (a[r][col] == 0) continue;
        if (best == a.size() || abs(a[r][col]) < abs(a[best][col])) best = r;
      }
      if (best == a.size()) break;
      std::swap(a[pivot_row], a[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < a.size(); ++r) {
        if (a[r][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][col].get_mpz_t(), a[pivot_row][col].get_mpz_t());
        sub_multiple(a[r], a[pivot_row], q);
        if (a[r][col] != 0) done = false;
      }
      if (done) {
        ++pivot_row;
        break;
      }
    }
  }
  return pivot_row;
}

}  // namespace

IntMatrix hnf(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t width = rows.front().size();
  const std::size_t r = echelon(rows, width);
  rows.resize(r);
  std::size_t col = 0;
  for (std::size_t i = 0; i < r; ++i) {
    while (rows[i][col] == 0) ++col;
    if (rows[i][col] < 0) {
      for (auto& x : rows[i]) x = -x;
    }
    for (std::size_t k = 0; k < i; ++k) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[k][col].get_mpz_t(), rows[i][col].get_mpz_t());
      sub_multiple(rows[k], rows[i], q);
    }
  }
  return rows;
}

std::size_t rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  IntMatrix copy = rows;
  return echelon(copy, copy.front().size());
}

IntMatrix right_kernel(const IntMatrix& m, std::size_t cols) {
  // Reduce [M^T | I]; rows whose M^T part vanishes span the kernel.
  const std::size_t height = m.size();
  IntMatrix aug(cols, IntVector(height + cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < height; ++i) aug[j][i] = m[i][j];
    aug[j][height + j] = 1;
  }
  const std::size_t r = echelon(aug, height);
  IntMatrix basis;
  for (std::size_t j = r; j < cols; ++j) {
    if (!is_zero_range(aug[j], 0, height)) continue;
    basis.emplace_back(aug[j].begin() + static_cast<std::ptrdiff_t>(height), aug[j].end());
  }
  return hnf(std::move(basis));
}

IntMatrix saturate(const IntMatrix& rows, std::size_t cols) {
  return right_kernel(right_kernel(rows, cols), cols);
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) { return hnf(a) == hnf(b); }

bool is_saturated(const IntMatrix& rows, std::size_t cols) {
  return lattice_equal(rows, saturate(rows, cols));
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  IntVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

}  // namespace hypst
