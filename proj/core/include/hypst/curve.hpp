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

#ifndef HYPST_CURVE_HPP
#define HYPST_CURVE_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace hypst {

// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "3", "-1", "2/5".
  std::string to_string() const;
  // Accepts "a" or "a/b"; throws Error(InvalidArgument) otherwise.
  static Rational parse(std::string_view text);

  // Image in F_p; throws Error(BadReduction) when p divides the denominator.
  std::int64_t mod_p(std::int64_t p) const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

enum class Family {
  AdditiveConstant,  // y^2 = x^d + c
  LinearTwist,       // y^2 = x^d + c x, d odd
};

std::string_view to_string(Family family) noexcept;
// "additive" / "linear" (and the enum spellings); throws on anything else.
Family parse_family(std::string_view text);

class CurveSpec {
 public:
  // Requires d >= 3, c != 0 and d odd for LinearTwist; throws
  // Error(InvalidArgument).
  static CurveSpec make(Family family, int d, Rational c = Rational(1));
  // Same checks with d >= 1, for the low-degree factors that the splitting
  // recursions produce.
  static CurveSpec make_factor(Family family, int d, Rational c = Rational(1));

  Family family() const noexcept { return family_; }
  int d() const noexcept { return d_; }
  const Rational& c() const noexcept { return c_; }
  int genus() const noexcept;

  // Modulus whose residue classes govern the contributing characters:
  // lcm(2, d) for AdditiveConstant, 2(d-1) for LinearTwist.
  std::int64_t character_modulus() const noexcept;

  // "y^2 = x^9 + 2" or, with symbolic = true, "y^2 = x^9 + c".
  std::string equation(bool symbolic = false) const;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;

 private:
  CurveSpec(Family family, int d, Rational c) : family_(family), d_(d), c_(c) {}

  Family family_;
  int d_;
  Rational c_;
};

// Good reduction: p odd and p divides none of 2, d, num(c), den(c).
bool has_good_reduction(const CurveSpec& curve, std::int64_t p) noexcept;

// Parses the shorthand "x^10+c", "x^7+cx", "x^9+2", "x^7-3x", "x^5+2/3x".
// A symbolic c takes its value from default_c.
CurveSpec parse_curve(std::string_view text, Rational default_c = Rational(1));

}  // namespace hypst

#endif  // HYPST_CURVE_HPP
