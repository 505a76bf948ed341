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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "hypst/splitjac.hpp"
#include "test_util.hpp"

namespace hypst {
namespace {

using testing::kind_of;

// "A5^2" for (y^2 = x^5 + c)^2, "L7" for y^2 = x^7 + cx, "C9" for a lower genus curve.
std::string shape(const IsogenyFactorization& f) {
  std::string out;
  for (const auto& factor : f.factors) {
    if (!out.empty()) out += " ";
    if (const auto* spec = std::get_if<CurveSpec>(&factor.curve)) {
      out += (spec->family() == Family::AdditiveConstant ? "A" : "L") + std::to_string(spec->d());
    } else {
      out += "C" + std::to_string(std::get<LowerGenusCurve>(factor.curve).g);
    }
    if (factor.exponent != 1) out += "^" + std::to_string(factor.exponent);
  }
  return out;
}

TEST(SplitEven, Examples) {
  EXPECT_EQ(shape(split_even(4)), "A5^2");
  EXPECT_EQ(shape(split_even(2)), "A3^2");
  EXPECT_EQ(shape(split_even(8)), "A9^2");
  EXPECT_EQ(split_even(4).source.d(), 10);
  EXPECT_EQ(kind_of([] { split_even(5); }), ErrorKind::OddInput);
  EXPECT_EQ(kind_of([] { split_even(0); }), ErrorKind::InvalidArgument);
}

TEST(SplitOdd, Examples) {
  EXPECT_EQ(shape(split_odd(5)), "A6 L7");
  EXPECT_EQ(shape(split_odd(3)), "A4 L5");
  EXPECT_EQ(kind_of([] { split_odd(1); }), ErrorKind::EvenInput);
  EXPECT_EQ(kind_of([] { split_odd(4); }), ErrorKind::EvenInput);
}

TEST(SplitFull, HandDerivedExamples) {
  EXPECT_EQ(shape(split_full(4)), "A5^2");
  EXPECT_EQ(shape(split_full(5)), "A3^2 L7");
  EXPECT_EQ(shape(split_full(9)), "A5^2 L11");
  EXPECT_EQ(shape(split_full(11)), "A3^2 L13 L7");
  // k = v2(4) = 2 leaves a genus 0 square, which is dropped.
  EXPECT_EQ(shape(split_full(3)), "L5 L3");
  EXPECT_EQ(shape(split_full(7)), "L9 L5 L3");
}

TEST(SplitFull, KeepsC) {
  const auto f = split_full(11, Rational(2));
  EXPECT_EQ(f.to_string(false), "(x^3 + 2)^2 x (x^13 + 2x) x (x^7 + 2x)");
  for (const auto& factor : f.factors) EXPECT_EQ(std::get<CurveSpec>(factor.curve).c(), Rational(2));
}

TEST(SplitFull, GenusConservationAndRecursion) {
  for (int g = 2; g <= 64; ++g) {
    const auto closed = split_full(g);
    EXPECT_EQ(closed.total_genus(), g) << g;
    EXPECT_EQ(closed.source.genus(), g);
    const auto recursive = split_full_recursive(g);
    EXPECT_EQ(shape(closed), shape(recursive)) << g;
    EXPECT_EQ(closed.to_string(), recursive.to_string()) << g;
  }
}

TEST(LowerGenusCurve, TableMagnitudesAndSigns) {
  const std::vector<std::vector<long>> table = {
      {1, 3}, {1, 5, 5}, {1, 7, 14, 7}, {1, 9, 27, 30, 9}, {1, 11, 44, 77, 55, 11}};
  for (std::size_t r = 0; r < table.size(); ++r) {
    const int g = 3 + 2 * static_cast<int>(r);
    const auto curve = lower_genus_curve(g, 1);
    ASSERT_EQ(curve.terms.size(), table[r].size()) << g;
    EXPECT_EQ(curve.genus(), (g - 1) / 2);
    for (std::size_t k = 0; k < table[r].size(); ++k) {
      const long sign = k % 2 ? -1 : 1;
      EXPECT_EQ(curve.terms[k].coefficient, sign * table[r][k]) << g << " " << k;
      EXPECT_EQ(curve.terms[k].x_exponent, g - 2 * static_cast<int>(k));
      EXPECT_EQ(curve.terms[k].c_exponent, Rational(static_cast<std::int64_t>(k), g));
    }
  }
}

TEST(LowerGenusCurve, ZetaExponents) {
  const auto exps = [](int g) {
    std::vector<int> out;
    for (const auto& t : lower_genus_curve(g, 1).terms) out.push_back(t.zeta_exponent);
    return out;
  };
  EXPECT_EQ(exps(3), (std::vector<int>{0, 1}));
  EXPECT_EQ(exps(7), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(exps(11), (std::vector<int>{0, 1, 2, 3, 4, 5}));
  // The binomial formula gives zeta^{2i} and zeta^{4i} in the last terms.
  EXPECT_EQ(exps(5), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(exps(9), (std::vector<int>{0, 1, 2, 3, 4}));
  for (const auto& t : lower_genus_curve(7, 0).terms) EXPECT_EQ(t.zeta_exponent, 0);
}

TEST(LowerGenusCurve, Printing) {
  EXPECT_EQ(lower_genus_curve(7, 1).to_string(true),
            "y^2 = x^7 - 7 zeta^i x^5 + 14 zeta^2i x^3 - 7 zeta^3i x");
  EXPECT_EQ(lower_genus_curve(3, 1).to_string(true), "y^2 = x^3 - 3 zeta^i x");
  EXPECT_EQ(kind_of([] { lower_genus_curve(4, 0); }), ErrorKind::EvenInput);
  EXPECT_EQ(kind_of([] { lower_genus_curve(1, 0); }), ErrorKind::EvenInput);
  EXPECT_EQ(kind_of([] { lower_genus_curve(5, 2); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { lower_genus_curve(5, 0, Rational(0)); }), ErrorKind::InvalidArgument);
}

TEST(Lockwood, IdentityHolds) {
  for (int g : {3, 5, 7, 9, 11}) {
    for (int i : {0, 1}) {
      for (int c : {1, 2}) {
        EXPECT_TRUE(lockwood_check(g, i, Rational(c), 20, 1e-9)) << g << " " << i << " " << c;
      }
    }
  }
  EXPECT_TRUE(lockwood_check(11, 1, Rational(2), 20, 1e-9, 12345));
  EXPECT_TRUE(lockwood_check(9, 1, Rational(-3, 2), 20, 1e-9));
}

TEST(Lockwood, DetectsPerturbedCoefficient) {
  for (int g : {3, 7, 11}) {
    for (std::size_t k = 0; k < static_cast<std::size_t>((g + 1) / 2); ++k) {
      auto curve = lower_genus_curve(g, 1, Rational(2));
      curve.terms[k].coefficient += 1;
      EXPECT_FALSE(lockwood_check(curve, 20, 1e-9)) << g << " " << k;
    }
  }
}

TEST(Lockwood, DetectsTableExponents) {
  auto five = lower_genus_curve(5, 1);
  five.terms[2].zeta_exponent = 1;
  EXPECT_FALSE(lockwood_check(five, 20, 1e-9));
  auto nine = lower_genus_curve(9, 1);
  nine.terms[4].zeta_exponent = 5;
  EXPECT_FALSE(lockwood_check(nine, 20, 1e-9));
}

TEST(SplitRefined, Structure) {
  for (int g : {3, 5, 7, 9, 11}) {
    const auto f = split_refined(g, Rational(3));
    EXPECT_EQ(shape(f), "L3 C" + std::to_string(g) + " C" + std::to_string(g));
    EXPECT_EQ(f.total_genus(), g);
    EXPECT_EQ(std::get<LowerGenusCurve>(f.factors[1].curve).i, 0);
    EXPECT_EQ(std::get<LowerGenusCurve>(f.factors[2].curve).i, 1);
  }
  EXPECT_EQ(kind_of([] { split_refined(4); }), ErrorKind::EvenInput);
}

TEST(SplitRefined, RefineKeepsGenus) {
  for (int g = 2; g <= 40; ++g) {
    const auto f = refine(split_full(g));
    EXPECT_EQ(f.total_genus(), g);
    for (const auto& factor : f.factors) {
      for (const auto& sub : factor.refinement) EXPECT_EQ(sub.total_genus(), factor.genus());
    }
  }
  EXPECT_EQ(refine(split_full(5)).to_string(),
            "(x^3 + c)^2 x [(x^3 + cx) x C_0(x^3 - 3 x) x C_1(x^3 - 3 zeta x)]");
}

}  // namespace
}  // namespace hypst
