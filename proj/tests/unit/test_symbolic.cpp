// Copyright 2026 The distcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <boost/math/special_functions/hermite.hpp>
#include <cmath>
#include <numbers>

#include "distcalc/errors.hpp"
#include "distcalc/symbolic.hpp"
#include "oracles/values.hpp"

namespace distcalc {
namespace {

using SF = SymbolicFunction;

struct Named {
  std::string name;
  SF f;
};

std::vector<Named> fixtures() {
  return {
      {"bump", SF::bump(1)},
      {"bump2", SF::bump(2.5)},
      {"gauss", SF::gaussian(1)},
      {"cexp", SF::complex_exp(3)},
      {"chirp", SF::chirp()},
      {"const", SF::constant(2.0)},
      {"plateau", SF::plateau(1, 0.5)},
      {"weight1", SF::weight(1)},
      {"weight2", SF::weight(2)},
      {"poly", SF::polynomial({1.0, 0.0, 1.0})},
      {"gauss_chirp", SF::gaussian(1) * SF::chirp()},
      {"bump_cexp", SF::bump(1) * SF::complex_exp(2)},
      {"shifted_bump", SF::bump(1).translate(2.0)},
      {"dilated_gauss", SF::gaussian(1).dilate(2)},
      {"weight_cexp", SF::weight(1) * SF::complex_exp(1)},
      {"xgauss", SF::polynomial({0.0, 1.0}) * SF::gaussian(0.5)},
      {"weight_chirp", SF::weight(1) * SF::chirp()},
      {"poly_plateau", SF::polynomial({0.0, 0.0, 3.0}) * SF::plateau(2, 0.5)},
  };
}

std::vector<Space> function_spaces() {
  return {Space(Kind::kD), Space(Kind::kS),    Space::DLp(1),    Space::DLp(2),
          Space::DLp(7),   Space(Kind::kBDot), Space(Kind::kDLInf), Space(Kind::kOC),
          Space(Kind::kOM), Space(Kind::kE)};
}

TEST(Symbolic, EvaluateExamples) {
  EXPECT_NEAR(std::abs(SF::gaussian(1)(0.0) - 1.0), 0.0, 1e-15);
  Complex v = SF::complex_exp(2)(std::numbers::pi / 2);
  EXPECT_NEAR(v.real(), -1.0, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  for (double x : {-3.0, -1.0, 1.0, 1.5}) EXPECT_EQ(SF::bump(1)(x), Complex(0.0));
  EXPECT_NEAR(SF::bump(1)(0.0).real(), oracle::kBumpSup, 1e-15);
  EXPECT_NEAR(SF::bump(1, 2)(Point{0.6, 0.8}).real(), 0.0, 0.0);
}

TEST(Symbolic, DerivativeExamples) {
  auto f = SF::complex_exp(1.7);
  auto d = f.partial(0);
  for (double x : {-1.0, 0.3, 2.0}) {
    Complex want = Complex(0, 1.7) * f(x);
    EXPECT_NEAR(std::abs(d(x) - want), 0.0, 1e-14);
  }
  auto g = SF::gaussian(1);
  auto d0 = g.derivative({0});
  for (double x : {-1.0, 0.3}) EXPECT_EQ(d0(x), g(x));
  auto chirp = SF::chirp();
  auto dc = chirp.partial(0);
  for (double x : {-2.0, -0.7, 0.1, 0.9, 3.0}) {
    Complex want = Complex(0, 2 * x) * std::exp(Complex(0, x * x));
    EXPECT_NEAR(std::abs(dc(x) - want), 0.0, 1e-12);
  }
}

// d^k/dx^k e^{-x²} = (-1)^k H_k(x) e^{-x²}.
TEST(Symbolic, GaussDerivativesMatchHermite) {
  auto g = SF::gaussian(1);
  for (unsigned k = 0; k <= 8; ++k) {
    auto d = g.derivative({static_cast<int>(k)});
    for (double x : {-2.5, -1.0, -0.2, 0.0, 0.6, 1.7, 3.1}) {
      double want = (k % 2 ? -1.0 : 1.0) * boost::math::hermite(k, x) * std::exp(-x * x);
      EXPECT_NEAR(d(x).real(), want, 1e-10 * std::max(1.0, std::abs(want))) << k << " " << x;
      EXPECT_NEAR(d(x).imag(), 0.0, 1e-12);
    }
  }
}

TEST(Symbolic, DerivativesMatchFiniteDifferences) {
  const double h = 1e-5;
  for (const auto& [name, f] : fixtures()) {
    auto d = f.partial(0);
    for (double x : {-2.3, -1.4, -0.77, -0.31, 0.13, 0.58, 0.93, 1.21, 1.87, 2.6}) {
      Complex fd = (f(x + h) - f(x - h)) / (2 * h);
      double scale = std::max({1.0, std::abs(d(x)), std::abs(f(x))});
      EXPECT_LE(std::abs(d(x) - fd), 1e-5 * scale) << name << " at " << x;
    }
  }
}

TEST(Symbolic, MixedPartialsIn2D) {
  auto f = SF::gaussian(0.7, 2) * SF::complex_exp(Point{1.0, -2.0}) + SF::bump(1.5, 2);
  auto fxy = f.derivative({1, 1});
  auto fyx = f.partial(1).partial(0);
  const double h = 1e-4;
  for (Point p : {Point{0.2, -0.4}, Point{-0.9, 0.3}, Point{1.1, 0.7}}) {
    EXPECT_NEAR(std::abs(fxy(p) - fyx(p)), 0.0, 1e-10);
    auto fx = f.partial(0);
    Complex fd = (fx(Point{p[0], p[1] + h}) - fx(Point{p[0], p[1] - h})) / (2 * h);
    EXPECT_NEAR(std::abs(fxy(p) - fd), 0.0, 1e-5 * std::max(1.0, std::abs(fd)));
  }
}

TEST(Symbolic, DilationLaws) {
  auto b = SF::bump(1).dilate(2);
  ASSERT_TRUE(b.support_radius().has_value());
  EXPECT_NEAR(*b.support_radius(), 0.5, 1e-15);
  for (const auto& [name, f] : fixtures()) {
    for (double c : {0.5, 2.0, 3.0}) {
      auto fc = f.dilate(c);
      for (int k = 0; k <= 3; ++k) {
        auto lhs = fc.derivative({k});
        auto rhs = f.derivative({k});
        for (double x : {-0.4, 0.0, 0.35, 0.8}) {
          Complex want = std::pow(c, k) * rhs(c * x);
          EXPECT_NEAR(std::abs(lhs(x) - want), 0.0, 1e-9 * std::max(1.0, std::abs(want)))
              << name << " c=" << c << " k=" << k;
        }
      }
    }
  }
}

TEST(Symbolic, TranslationLaws) {
  auto b = SF::bump(1);
  EXPECT_EQ(b.translate(1.3)(1.3), b(0.0));
  for (const auto& [name, f] : fixtures()) {
    auto t = f.translate(0.75);
    auto dt = t.partial(0);
    auto df = f.partial(0);
    for (double x : {-1.0, 0.2, 0.9, 2.1}) {
      EXPECT_NEAR(std::abs(t(x) - f(x - 0.75)), 0.0, 1e-11 * std::max(1.0, std::abs(f(x - 0.75))))
          << name;
      EXPECT_NEAR(std::abs(dt(x) - df(x - 0.75)), 0.0,
                  1e-10 * std::max(1.0, std::abs(df(x - 0.75))))
          << name;
    }
  }
}

TEST(Symbolic, Arithmetic) {
  auto f = SF::gaussian(1);
  auto g = SF::complex_exp(2);
  for (double x : {-0.5, 0.4, 1.9}) {
    EXPECT_NEAR(std::abs((f + g)(x) - (f(x) + g(x))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs((f * g)(x) - f(x) * g(x)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.scaled(Complex(0, 3))(x) - Complex(0, 3) * f(x)), 0.0, 1e-15);
  }
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_TRUE(SF::constant(5.0).partial(0).is_zero());
  EXPECT_THROW(SF::gaussian(1, 1) + SF::gaussian(1, 2), DimensionMismatch);
}

TEST(Symbolic, PlateauValues) {
  auto p = SF::plateau(1, 0.5);
  EXPECT_NEAR(p(0.0).real(), 1.0, 1e-12);
  EXPECT_NEAR(p(0.4).real(), 1.0, 1e-12);
  EXPECT_NEAR(p(1.0).real(), oracle::kPlateauAt1, 1e-10);
  EXPECT_NEAR(p(1.25).real(), oracle::kPlateauAt1p25, 1e-10);
  EXPECT_NEAR(p(-1.25).real(), oracle::kPlateauAt1p25, 1e-10);
  EXPECT_EQ(p(1.6), Complex(0.0));
  EXPECT_THROW(SF::plateau(1, 1.5), Error);
  EXPECT_NEAR(unit_bump_mass(), oracle::kBumpMass, 1e-13);
}

TEST(Symbolic, SupportBoxes) {
  EXPECT_FALSE(SF::gaussian(1).support_radius().has_value());
  EXPECT_NEAR(*SF::bump(1).translate(2.0).support_radius(), 3.0, 1e-15);
  auto box = (SF::bump(1) * SF::complex_exp(1)).support_box();
  ASSERT_TRUE(box.has_value());
  EXPECT_NEAR(box->bounds[0].first, -1.0, 1e-15);
  EXPECT_NEAR(box->bounds[0].second, 1.0, 1e-15);
  EXPECT_NEAR(*SF::plateau(1, 0.5).support_radius(), 1.5, 1e-15);
}

TEST(Symbolic, Analyticity) {
  EXPECT_TRUE(SF::gaussian(1).analytic());
  EXPECT_TRUE(SF::chirp().analytic());
  EXPECT_FALSE(SF::bump(1).analytic());
  EXPECT_FALSE(SF::plateau(1, 0.5).analytic());
}

TEST(Symbolic, MembershipExamples) {
  EXPECT_TRUE(membership(SF::chirp(), Space(Kind::kOM)).member);
  EXPECT_FALSE(membership(SF::chirp(), Space(Kind::kOC)).member);
  EXPECT_TRUE(membership(SF::constant(1.0), Space(Kind::kOC)).member);
  for (double c : {1.0, 2.0, 5.0}) {
    EXPECT_TRUE(membership(SF::complex_exp(c), Space(Kind::kDLInf)).member);
    EXPECT_FALSE(membership(SF::complex_exp(c), Space(Kind::kBDot)).member);
  }
  EXPECT_TRUE(membership(SF::bump(1), Space(Kind::kD)).member);
  EXPECT_FALSE(membership(SF::gaussian(1), Space(Kind::kD)).member);
  EXPECT_TRUE(membership(SF::gaussian(1), Space(Kind::kS)).member);
  EXPECT_FALSE(membership(SF::weight(3), Space(Kind::kS)).member);
  EXPECT_TRUE(membership(SF::weight(1), Space::DLp(1)).member);
  EXPECT_FALSE(membership(SF::polynomial({0.0, 1.0}), Space(Kind::kDLInf)).member);
  EXPECT_TRUE(membership(SF::polynomial({0.0, 1.0}), Space(Kind::kOC)).member);
  EXPECT_THROW(membership(SF::gaussian(1), Space(Kind::kSPrime)), MembershipError);
  EXPECT_THROW(membership(SF::gaussian(1), Space(Kind::kDLp)), MembershipError);
}

TEST(Symbolic, MembershipIntegrabilityThreshold) {
  // (1+x²)^{-1} is in L^p iff p > 1/2; every p >= 1 qualifies. In 3-D
  // (1+|x|²)^{-1} is in L^p iff 2p > 3.
  EXPECT_FALSE(membership(SF::weight(1, 3), Space::DLp(1, 3)).member);
  EXPECT_TRUE(membership(SF::weight(1, 3), Space::DLp(2, 3)).member);
  EXPECT_FALSE(membership(SF::weight(1, 3), Space::DLp(1.5, 3)).member);
}

TEST(Symbolic, MembershipFollowsInclusion) {
  for (const auto& [name, f] : fixtures()) {
    for (const Space& sub : function_spaces()) {
      if (!membership(f, sub).member) continue;
      for (const Space& super : function_spaces()) {
        if (includes(sub, super)) {
          EXPECT_TRUE(membership(f, super).member) << name << " " << sub.token() << " "
                                                   << super.token();
        }
      }
    }
  }
}

TEST(Symbolic, MembershipStableUnderDerivatives) {
  for (const auto& [name, f] : fixtures()) {
    for (int k = 1; k <= 3; ++k) {
      auto d = f.derivative({k});
      for (const Space& e : function_spaces()) {
        if (membership(f, e).member) {
          EXPECT_TRUE(membership(d, e).member) << name << " k=" << k << " " << e.token();
        }
      }
    }
  }
}

// Products of O_C members stay in O_C with added growth exponents.
TEST(Symbolic, ProductClosure) {
  std::vector<SF> oc;
  for (const auto& [name, f] : fixtures()) {
    if (membership(f, Space(Kind::kOC)).member) oc.push_back(f);
  }
  ASSERT_GE(oc.size(), 10u);
  for (const SF& f : oc) {
    for (const SF& g : oc) {
      SF fg = f * g;
      EXPECT_TRUE(membership(fg, Space(Kind::kOC)).member) << f.label() << " " << g.label();
      EXPECT_TRUE(membership(fg, Space(Kind::kOM)).member);
      auto pf = f.growth_profile();
      auto pg = g.growth_profile();
      auto pfg = fg.growth_profile();
      if (pf.decays_rapidly() || pg.decays_rapidly()) continue;
      EXPECT_LE(pfg.growth(0), pf.growth(0) + pg.growth(0)) << f.label() << " " << g.label();
    }
  }
  auto x = SF::polynomial({0.0, 1.0});
  auto x2 = SF::polynomial({0.0, 0.0, 1.0});
  EXPECT_EQ((x * x2).growth_profile().growth(0),
            x.growth_profile().growth(0) + x2.growth_profile().growth(0));
}

TEST(Symbolic, ProductClosureInOM) {
  auto f = SF::chirp() * SF::polynomial({1.0, 1.0});
  auto g = SF::chirp().scaled(-1.0) * SF::weight(1);
  EXPECT_TRUE(membership(f * g, Space(Kind::kOM)).member);
  EXPECT_TRUE(membership(f * f, Space(Kind::kOM)).member);
  EXPECT_FALSE(membership(f * f, Space(Kind::kOC)).member);
}

TEST(Symbolic, GrowthProfiles) {
  auto chirp = SF::chirp().growth_profile();
  EXPECT_EQ(chirp.slope, 1);
  EXPECT_FALSE(chirp.uniform());
  EXPECT_EQ(chirp.growth(3), 3);
  auto w = SF::weight(2).growth_profile();
  EXPECT_EQ(w.base, -4);
  EXPECT_TRUE(w.uniform());
  EXPECT_EQ(SF::bump(1).growth_profile().decay, DecayClass::kCompactSupport);
  EXPECT_EQ(SF::gaussian(1).growth_profile().decay, DecayClass::kRapidDecay);
}

}  // namespace
}  // namespace distcalc
