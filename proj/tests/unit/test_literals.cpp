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

#include <cmath>

#include "distcalc/errors.hpp"
#include "distcalc/literals.hpp"

namespace distcalc {
namespace {

using SF = SymbolicFunction;

void expect_same(const SF& a, const SF& b, const std::vector<double>& xs) {
  for (double x : xs) {
    EXPECT_NEAR(std::abs(a(x) - b(x)), 0.0, 1e-13 * std::max(1.0, std::abs(b(x))))
        << a.label() << " vs " << b.label() << " at " << x;
  }
}

const std::vector<double> kXs{-2.2, -0.9, -0.1, 0.0, 0.45, 0.99, 1.7};

TEST(Literals, Families) {
  expect_same(parse_function("bump(1)"), SF::bump(1), kXs);
  expect_same(parse_function("gauss(2)"), SF::gaussian(2), kXs);
  expect_same(parse_function("cexp(3)"), SF::complex_exp(3), kXs);
  expect_same(parse_function("chirp"), SF::chirp(), kXs);
  expect_same(parse_function("poly(1,0,-2)"), SF::polynomial({1.0, 0.0, -2.0}), kXs);
  expect_same(parse_function("const(2,1)"), SF::constant(Complex(2, 1)), kXs);
  expect_same(parse_function("plateau(1,0.5)"), SF::plateau(1, 0.5), kXs);
  expect_same(parse_function("weight(2)"), SF::weight(2), kXs);
  expect_same(parse_function("dilate(bump(1),2)"), SF::bump(1).dilate(2), kXs);
  expect_same(parse_function("translate(gauss(1),0.5)"), SF::gaussian(1).translate(0.5), kXs);
  expect_same(parse_function("d[2](gauss(1))"), SF::gaussian(1).derivative({2}), kXs);
}

TEST(Literals, Arithmetic) {
  expect_same(parse_function("2*gauss(1) - cexp(1)*bump(2)"),
              SF::gaussian(1).scaled(2.0) - SF::complex_exp(1) * SF::bump(2), kXs);
  expect_same(parse_function("-(gauss(1) + 1)"),
              (SF::gaussian(1) + SF::constant(1.0)).scaled(-1.0), kXs);
  expect_same(parse_function("cexp(pi)"), SF::complex_exp(M_PI), kXs);
  expect_same(parse_function(" gauss( 1 ) * 0.5 "), SF::gaussian(1).scaled(0.5), kXs);
}

TEST(Literals, MultiDimensional) {
  SF f = parse_function("cexp([1,-2]) * gauss(1)", 2);
  SF g = SF::complex_exp(Point{1.0, -2.0}) * SF::gaussian(1, 2);
  for (Point p : {Point{0.1, 0.2}, Point{-1.0, 0.5}}) EXPECT_NEAR(std::abs(f(p) - g(p)), 0.0, 1e-14);
  SF t = parse_function("translate(bump(1),[0.5,0])", 2);
  EXPECT_NEAR(std::abs(t(Point{0.5, 0.0}) - SF::bump(1, 2)(Point{0.0, 0.0})), 0.0, 1e-15);
  EXPECT_THROW(parse_function("poly(1,2)", 2), ParseError);
  EXPECT_THROW(parse_function("cexp([1,2,3])", 2), ParseError);
}

TEST(Literals, FunctionErrors) {
  for (const char* bad : {"", "gauss(", "gauss(1", "bump()", "foo(1)", "gauss(1) +", "1 2",
                          "d[](gauss(1))", "chirp(1)", "plateau(1)", "d[1,0](gauss(1))"}) {
    EXPECT_THROW(parse_function(bad), ParseError) << bad;
  }
  try {
    parse_function("gauss(1) * foo");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 11u);
  }
}

TEST(Literals, Distributions) {
  SF phi = SF::gaussian(1) * SF::complex_exp(0.5);
  DistributionRep t = parse_distribution("2*d[1]dirac(0.5) - fn(bump(1)) + dirac(0)");
  DistributionRep want = DistributionRep::dirac({0.5}, {1}).scaled(2.0) +
                         DistributionRep::function(SF::bump(1)).scaled(-1.0) +
                         DistributionRep::dirac({0.0});
  EXPECT_NEAR(std::abs(pair(phi, t) - pair(phi, want)), 0.0, 1e-12);
  DistributionRep d2 = parse_distribution("d[2,0]dirac([0,1])", 2);
  EXPECT_EQ(d2.terms().front().alpha, (MultiIndex{2, 0}));
  for (const char* bad : {"dirac", "dirac(0", "2*", "d[1]", "fn(gauss(1)", "delta(0)"}) {
    EXPECT_THROW(parse_distribution(bad), ParseError) << bad;
  }
}

TEST(Literals, Seminorms) {
  EXPECT_EQ(seminorm_label(parse_seminorm("pS(0,2)")), "pS(0,2)");
  EXPECT_EQ(seminorm_label(parse_seminorm("pLp(1,inf)")), "pLp(1,inf)");
  EXPECT_EQ(seminorm_label(parse_seminorm("pD(2,0.5)")), "pD(2,0.5)");
  EXPECT_EQ(seminorm_label(parse_seminorm("pE(3,1)")), "pE(3,1)");
  auto om = parse_seminorm("pOM(1,gauss(1))");
  ASSERT_TRUE(std::holds_alternative<OMNorm>(om));
  EXPECT_EQ(std::get<OMNorm>(om).m, 1);
  auto s2 = parse_seminorm("pS(1,[2,0])", 2);
  EXPECT_EQ(std::get<SNorm>(s2).beta, (MultiIndex{2, 0}));
  for (const char* bad : {"pS(0)", "pX(1,2)", "pLp(1,0.5)", "pD(1,-1)", "pS(-1,0)", "pE(1)"}) {
    EXPECT_THROW(parse_seminorm(bad), ParseError) << bad;
  }
}

TEST(Literals, LabelsRoundTrip) {
  for (const char* text : {"pS(0,2)", "pLp(2,3)", "pLp(0,inf)", "pD(1,0.25)", "pE(2,1.5)"}) {
    EXPECT_EQ(seminorm_label(parse_seminorm(text)), text);
  }
}

}  // namespace
}  // namespace distcalc
