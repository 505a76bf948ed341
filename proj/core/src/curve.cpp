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

#include "hypst/curve.hpp"

#include <charconv>
#include <numeric>

#include "hypst/errors.hpp"
#include "hypst/ntheory.hpp"

namespace hypst {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') out.push_back(ch);
  }
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  return Rational(parse_int(std::string_view(s).substr(0, slash)),
                  parse_int(std::string_view(s).substr(slash + 1)));
}

std::int64_t Rational::mod_p(std::int64_t p) const {
  if (den_ % p == 0) {
    throw Error(ErrorKind::BadReduction, "denominator of " + to_string() + " vanishes mod " + std::to_string(p));
  }
  return mul_mod(num_, inv_mod(den_, p), p);
}

std::string_view to_string(Family family) noexcept {
  return family == Family::AdditiveConstant ? "additive" : "linear";
}

Family parse_family(std::string_view text) {
  if (text == "additive" || text == "AdditiveConstant") return Family::AdditiveConstant;
  if (text == "linear" || text == "LinearTwist") return Family::LinearTwist;
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(text) + "'");
}

CurveSpec CurveSpec::make(Family family, int d, Rational c) {
  if (d < 3) throw Error(ErrorKind::InvalidArgument, "d must be at least 3");
  return make_factor(family, d, c);
}

CurveSpec CurveSpec::make_factor(Family family, int d, Rational c) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be positive");
  if (c.is_zero()) throw Error(ErrorKind::InvalidArgument, "c must be nonzero");
  if (family == Family::LinearTwist && d % 2 == 0) {
    throw Error(ErrorKind::InvalidArgument, "d must be odd for the linear twist family");
  }
  return CurveSpec(family, d, c);
}

int CurveSpec::genus() const noexcept {
  // floor((d-1)/2) for both families; LinearTwist d is odd.
  return (d_ - 1) / 2;
}

std::int64_t CurveSpec::character_modulus() const noexcept {
  if (family_ == Family::LinearTwist) return 2 * (d_ - 1);
  return d_ % 2 == 0 ? d_ : 2 * d_;
}

std::string CurveSpec::equation(bool symbolic) const {
  std::string out = "y^2 = x";
  if (d_ != 1) out += "^" + std::to_string(d_);
  const std::string x_suffix = family_ == Family::LinearTwist ? "x" : "";
  if (symbolic) return out + " + c" + x_suffix;
  if (c_.num() < 0) {
    const Rational magnitude(-c_.num(), c_.den());
    const bool unit = magnitude == Rational(1);
    out += " - " + (unit && !x_suffix.empty() ? "" : magnitude.to_string()) + x_suffix;
  } else {
    const bool unit = c_ == Rational(1);
    out += " + " + (unit && !x_suffix.empty() ? "" : c_.to_string()) + x_suffix;
  }
  return out;
}

bool has_good_reduction(const CurveSpec& curve, std::int64_t p) noexcept {
  if (p < 3 || p % 2 == 0) return false;
  return curve.d() % p != 0 && curve.c().num() % p != 0 && curve.c().den() % p != 0;
}

CurveSpec parse_curve(std::string_view text, Rational default_c) {
  std::string s = strip_spaces(text);
  if (s.starts_with("y^2=")) s = s.substr(4);
  if (!s.starts_with("x^")) {
    throw Error(ErrorKind::InvalidArgument, "curve shorthand must look like x^d+c or x^d+cx");
  }
  const auto sign = s.find_first_of("+-", 2);
  if (sign == std::string::npos) {
    throw Error(ErrorKind::InvalidArgument, "curve shorthand is missing the constant term");
  }
  const int d = static_cast<int>(parse_int(std::string_view(s).substr(2, sign - 2)));
  std::string tail = s.substr(sign + 1);
  const bool negative = s[sign] == '-';
  Family family = Family::AdditiveConstant;
  if (tail.ends_with("x")) {
    family = Family::LinearTwist;
    tail.pop_back();
    if (tail.ends_with("*")) tail.pop_back();
  }
  Rational c = default_c;
  if (tail == "c") {
    c = default_c;
  } else if (tail.empty()) {
    c = Rational(1);
  } else {
    c = Rational::parse(tail);
  }
  if (negative) c = Rational(-c.num(), c.den());
  return CurveSpec::make(family, d, c);
}

}  // namespace hypst
