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

// Carry matrices: rows are the units k mod p-1, columns the contributing
// characters T^a. The entry at (k, a) is the valuation of J(T^a, phi) at the
// prime above p selected by k, which is 1 exactly when
// (k a mod p-1) + (k (p-1)/2 mod p-1) >= p-1.

#ifndef HYPST_STMATRIX_HPP
#define HYPST_STMATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypst/curve.hpp"
#include "hypst/ffield.hpp"
#include "hypst/lattice.hpp"
#include "hypst/pointcount.hpp"

namespace hypst {

struct StColumns {
  Family family = Family::AdditiveConstant;
  std::int64_t p = 0;
  int d = 0;
  int genus = 0;
  // Contributing characters except a = (p-1)/2, ascending.
  std::vector<Contribution> columns;
  // columns.size() == 2 * genus.
  bool is_generic = false;
};

StColumns st_columns(std::int64_t p, int d, Family family);

struct CarryMatrix {
  Family family = Family::AdditiveConstant;
  std::int64_t p = 0;
  int d = 0;
  int genus = 0;
  bool is_generic = false;
  std::vector<std::int64_t> rows;  // units k mod p-1, ascending
  std::vector<Contribution> cols;
  std::vector<std::vector<std::uint8_t>> entries;  // entries[row][col]

  std::size_t num_rows() const noexcept { return rows.size(); }
  std::size_t num_cols() const noexcept { return cols.size(); }
  IntMatrix to_int() const;
  // Column j as a vector indexed by row.
  std::vector<std::uint8_t> column(std::size_t j) const;
};

// Throws Error(NoColumns) when nothing contributes at p.
CarryMatrix build_matrix(std::int64_t p, int d, Family family);

// Names of the violated structural checks: "row balance", "column balance",
// "conjugate complement", "Galois stability". Empty for a valid matrix.
std::vector<std::string> validate_matrix(const CarryMatrix& m);

// Rows of space-separated 0/1 entries, one line per row.
std::string to_grid(const CarryMatrix& m);

struct KernelLattice {
  IntMatrix basis;  // HNF rows, each of length num_cols
  std::size_t rank = 0;
  bool saturated = false;
};

KernelLattice right_kernel(const CarryMatrix& m);

enum class RelationKind { Exact, Torsion, Fail };

std::string_view to_string(RelationKind kind) noexcept;

struct RelationResult {
  RelationKind kind = RelationKind::Fail;
  // Multiplicative order of W when kind is Torsion (1 for Exact).
  std::optional<std::int64_t> order;
};

// W = prod_a (T^a(-c) phi(c) J(T^a, phi))^{v_a}, computed exactly. Exact when
// W = 1, Torsion(N) when W is a root of unity of order N > 1, Fail otherwise.
// Throws Error(NotInKernel) unless M v = 0, Error(BadReduction) if c does not
// reduce to a unit mod p, Error(InvalidArgument) on a length mismatch.
RelationResult verify_relation(const PrimeField& field, const CarryMatrix& m,
                               const IntVector& v, const Rational& c);

}  // namespace hypst

#endif  // HYPST_STMATRIX_HPP
