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

#include "hypst/splitjac.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hypst/errors.hpp"
#include "hypst/ntheory.hpp"

namespace hypst {

namespace {

mpz_class binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::complex<double> ipow(std::complex<double> base, int e) {
  std::complex<double> out = 1.0;
  for (; e > 0; e >>= 1, base *= base) {
    if (e & 1) out *= base;
  }
  return out;
}

std::string rhs(const std::string& equation) {
  const auto eq = equation.find("= ");
  return eq == std::string::npos ? equation : equation.substr(eq + 2);
}

CurveSpec additive_source(int g, const Rational& c) {
  return CurveSpec::make_factor(Family::AdditiveConstant, 2 * g + 2, c);
}

IsogenyFactor curve_factor(Family family, int d, const Rational& c, int exponent) {
  return {CurveSpec::make_factor(family, d, c), exponent, {}};
}

void require_odd_genus(int g) {
  if (g % 2 == 0) throw Error(ErrorKind::EvenInput, "g = " + std::to_string(g) + " is even");
  if (g < 3) throw Error(ErrorKind::EvenInput, "g = " + std::to_string(g) + " is below 3");
}

void split_recursive(int g, const Rational& c, std::vector<IsogenyFactor>& linear,
                     std::vector<IsogenyFactor>& additive) {
  if (g == 0) return;
  if (g % 2 == 0) {
    additive.push_back(curve_factor(Family::AdditiveConstant, g + 1, c, 2));
    return;
  }
  linear.push_back(curve_factor(Family::LinearTwist, g + 2, c, 1));
  split_recursive((g - 1) / 2, c, linear, additive);
}

bool same_factors(const IsogenyFactorization& a, const IsogenyFactorization& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    const auto* x = std::get_if<CurveSpec>(&a.factors[i].curve);
    const auto* y = std::get_if<CurveSpec>(&b.factors[i].curve);
    if (!x || !y || !(*x == *y) || a.factors[i].exponent != b.factors[i].exponent) return false;
  }
  return true;
}

}  // namespace

std::string LowerGenusCurve::to_string(bool symbolic_i) const {
  std::string out = "y^2 =";
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& t = terms[k];
    const bool negative = t.coefficient < 0;
    const mpz_class magnitude = abs(t.coefficient);
    out += k == 0 ? (negative ? " -" : " ") : (negative ? " - " : " + ");
    std::vector<std::string> parts;
    if (magnitude != 1) parts.push_back(magnitude.get_str());
    if (symbolic_i && k > 0) {
      parts.push_back(k == 1 ? "zeta^i" : "zeta^" + std::to_string(k) + "i");
    } else if (!symbolic_i && t.zeta_exponent != 0) {
      parts.push_back(t.zeta_exponent == 1 ? "zeta" : "zeta^" + std::to_string(t.zeta_exponent));
    }
    if (!(c == Rational(1)) && !t.c_exponent.is_zero()) {
      parts.push_back("(" + c.to_string() + ")^(" + t.c_exponent.to_string() + ")");
    }
    if (t.x_exponent == 1) {
      parts.emplace_back("x");
    } else if (t.x_exponent > 1) {
      parts.push_back("x^" + std::to_string(t.x_exponent));
    }
    for (std::size_t j = 0; j < parts.size(); ++j) out += (j ? " " : "") + parts[j];
  }
  return out;
}

LowerGenusCurve lower_genus_curve(int g, int i, Rational c) {
  require_odd_genus(g);
  if (i != 0 && i != 1) throw Error(ErrorKind::InvalidArgument, "i must be 0 or 1");
  if (c.is_zero()) throw Error(ErrorKind::InvalidArgument, "c must be nonzero");
  LowerGenusCurve out;
  out.g = g;
  out.i = i;
  out.c = c;
  for (int k = 0; k <= (g - 1) / 2; ++k) {
    mpz_class coef = binomial(g - k, k) + binomial(g - k - 1, k - 1);
    if (k % 2 == 1) coef = -coef;
    out.terms.push_back({g - 2 * k, coef, (i * k) % g, Rational(k, g)});
  }
  return out;
}

int IsogenyFactor::genus() const {
  return std::visit([](const auto& curve) { return curve.genus(); }, curve);
}

std::string IsogenyFactor::to_string(bool symbolic) const {
  std::string body;
  if (const auto* spec = std::get_if<CurveSpec>(&curve)) {
    body = "(" + rhs(spec->equation(symbolic)) + ")";
  } else {
    const auto& lower = std::get<LowerGenusCurve>(curve);
    body = "C_" + std::to_string(lower.i) + "(" + rhs(lower.to_string(false)) + ")";
  }
  if (exponent != 1) body += "^" + std::to_string(exponent);
  if (!refinement.empty()) {
    std::string inner;
    for (std::size_t j = 0; j < refinement.size(); ++j) {
      inner += (j ? " x " : "") + refinement[j].to_string(symbolic);
    }
    body = exponent == 1 ? "[" + inner + "]" : "[" + inner + "]^" + std::to_string(exponent);
  }
  return body;
}

int IsogenyFactorization::total_genus() const {
  int total = 0;
  for (const auto& f : factors) total += f.exponent * f.genus();
  return total;
}

std::string IsogenyFactorization::to_string(bool symbolic) const {
  std::string out;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    out += (j ? " x " : "") + factors[j].to_string(symbolic);
  }
  return out;
}

IsogenyFactorization split_even(int g, Rational c) {
  if (g % 2 != 0) throw Error(ErrorKind::OddInput, "g = " + std::to_string(g) + " is odd");
  if (g < 2) throw Error(ErrorKind::InvalidArgument, "g must be at least 2");
  return {additive_source(g, c), {curve_factor(Family::AdditiveConstant, g + 1, c, 2)}};
}

IsogenyFactorization split_odd(int g, Rational c) {
  require_odd_genus(g);
  return {additive_source(g, c),
          {curve_factor(Family::AdditiveConstant, g + 1, c, 1),
           curve_factor(Family::LinearTwist, g + 2, c, 1)}};
}

IsogenyFactorization split_full_recursive(int g, Rational c) {
  if (g < 2) throw Error(ErrorKind::InvalidArgument, "g must be at least 2");
  std::vector<IsogenyFactor> linear;
  std::vector<IsogenyFactor> additive;
  split_recursive(g, c, linear, additive);
  IsogenyFactorization out{additive_source(g, c), additive};
  out.factors.insert(out.factors.end(), linear.begin(), linear.end());
  return out;
}

IsogenyFactorization split_full(int g, Rational c) {
  if (g < 2) throw Error(ErrorKind::InvalidArgument, "g must be at least 2");
  const int k = v2(g + 1);
  IsogenyFactorization out{additive_source(g, c), {}};
  const int base_degree = (g + 1) >> k;
  if (base_degree > 1) {
    out.factors.push_back(curve_factor(Family::AdditiveConstant, base_degree, c, 2));
  }
  for (int i = 1; i <= k; ++i) {
    const int gi = ((g + 1) >> (i - 1)) - 1;
    out.factors.push_back(curve_factor(Family::LinearTwist, gi + 2, c, 1));
  }
  if (!same_factors(out, split_full_recursive(g, c)) || out.total_genus() != g) {
    throw Error(ErrorKind::InvalidArgument,
                "closed-form splitting disagrees with the recursion at g = " + std::to_string(g));
  }
  return out;
}

IsogenyFactorization split_refined(int g, Rational c) {
  require_odd_genus(g);
  IsogenyFactorization out{CurveSpec::make_factor(Family::LinearTwist, 2 * g + 1, c), {}};
  out.factors.push_back(curve_factor(Family::LinearTwist, 3, c, 1));
  out.factors.push_back({lower_genus_curve(g, 0, c), 1, {}});
  out.factors.push_back({lower_genus_curve(g, 1, c), 1, {}});
  return out;
}

IsogenyFactorization refine(IsogenyFactorization f) {
  for (auto& factor : f.factors) {
    const auto* spec = std::get_if<CurveSpec>(&factor.curve);
    if (!spec || spec->family() != Family::LinearTwist) continue;
    const int h = spec->genus();
    if (h >= 3 && h % 2 == 1) factor.refinement = {split_refined(h, spec->c())};
  }
  return f;
}

bool lockwood_check(const LowerGenusCurve& curve, int trials, double tol, std::uint64_t seed) {
  using cplx = std::complex<double>;
  const int g = curve.g;
  const double two_pi = 2.0 * std::numbers::pi;
  const cplx c(curve.c.to_double(), 0.0);
  const cplx root = std::pow(c, 1.0 / g);  // principal branch
  const cplx zeta = std::polar(1.0, two_pi / g);
  const cplx shift = ipow(zeta, curve.i) * root;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  for (int t = 0; t < trials; ++t) {
    const cplx x(coord(rng), coord(rng));
    const cplx lhs = ipow(x, 2 * g + 1) + c * x;
    cplx sum = 0.0;
    double scale = std::abs(lhs);
    for (const auto& term : curve.terms) {
      const int k = (g - term.x_exponent) / 2;
      const cplx value = term.coefficient.get_d() * ipow(zeta, term.zeta_exponent) *
                         ipow(root, k) * ipow(x, 2 * k + 1) *
                         ipow(x * x + shift, term.x_exponent);
      sum += value;
      scale += std::abs(value);
    }
    if (std::abs(lhs - sum) > tol * std::max(1.0, scale)) return false;
  }
  return true;
}

bool lockwood_check(int g, int i, Rational c, int trials, double tol, std::uint64_t seed) {
  if (tol <= 0) throw Error(ErrorKind::InvalidArgument, "tol must be positive");
  return lockwood_check(lower_genus_curve(g, i, c), trials, tol, seed);
}

}  // namespace hypst
