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
#include <set>

#include "distcalc/errors.hpp"
#include "distcalc/witnesses.hpp"

namespace distcalc {
namespace {

Space sp(const char* token) { return parse_space(token); }
constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(Witnesses, LookupExamples) {
  EXPECT_EQ(witness_for(sp("D"), sp("E"), Op::kMultiply).id, WitnessId::kProp1);
  EXPECT_THROW(witness_for(sp("OM"), sp("OM"), Op::kMultiply), NoKnownWitness);
  auto w = witness_for(sp("S'"), sp("OC'"), Op::kConvolve);
  EXPECT_EQ(w.id, WitnessId::kProp6Oscillation);
  EXPECT_TRUE(w.via_fourier);
  EXPECT_THROW(witness_for(sp("S'"), sp("D'"), Op::kConvolve), NoKnownWitness);
  EXPECT_EQ(witness_for(sp("D'"), sp("E'"), Op::kConvolve).id, WitnessId::kProp7ShiftedDeltas);
  EXPECT_EQ(witness_for(sp("OC"), sp("OC"), Op::kMultiply).id, WitnessId::kProp4Chirp);
}

TEST(Witnesses, LabelsRoundTrip) {
  for (int i = 0; i <= static_cast<int>(WitnessId::kRem5Item14); ++i) {
    auto id = static_cast<WitnessId>(i);
    EXPECT_EQ(parse_witness_label(witness_label(id)), id);
  }
  EXPECT_EQ(witness_label(WitnessId::kProp2Scaling), "W_Prop2_scaling");
  for (auto v : {WitnessVerdict::kDiverges, WitnessVerdict::kZeroDenominator,
                 WitnessVerdict::kFailed}) {
    EXPECT_EQ(parse_witness_verdict(witness_verdict_label(v)), v);
  }
}

TEST(Witnesses, Judge) {
  EXPECT_EQ(judge({2, 4, 8}, {1, 1, 1}), WitnessVerdict::kDiverges);
  EXPECT_EQ(judge({2, 3.9, 8}, {1, 1, 1}), WitnessVerdict::kFailed);
  EXPECT_EQ(judge({2, 4, 8}, {1, 1, 0.5}), WitnessVerdict::kDiverges);
  EXPECT_EQ(judge({1, 1, 1}, {0, 0, 0}), WitnessVerdict::kZeroDenominator);
  EXPECT_EQ(judge({1, 0, 1}, {0, 0, 0}), WitnessVerdict::kFailed);
  EXPECT_EQ(judge({1, 1, 1}, {0, 1e-300, 0}), WitnessVerdict::kFailed);
  EXPECT_EQ(judge({8, 4, 2}, {1, 1, 1}), WitnessVerdict::kFailed);
}

TEST(Witnesses, Prop6Law) {
  auto w = witness_for(sp("D'"), sp("E"), Op::kMultiply);
  ASSERT_EQ(w.id, WitnessId::kProp6Oscillation);
  WitnessOptions opt;
  opt.order = 2;
  opt.start = 2;
  auto r = run_witness(w, 3, opt);
  ASSERT_EQ(r.params, (std::vector<double>{2, 4, 8}));
  for (std::size_t i = 0; i < 3; ++i) {
    double c = r.params[i];
    EXPECT_NEAR(r.numerators[i], std::pow(c, 3), 1e-9 * std::pow(c, 3));
    EXPECT_NEAR(r.ratios[i] / r.ratios[0], c / 2, 1e-9);
  }
  EXPECT_EQ(r.verdict, WitnessVerdict::kDiverges);
}

TEST(Witnesses, Prop7ZeroDenominator) {
  auto w = witness_for(sp("D'"), sp("E'"), Op::kConvolve);
  for (int steps : {3, 5}) {
    auto r = run_witness(w, steps);
    EXPECT_EQ(r.verdict, WitnessVerdict::kZeroDenominator);
    for (std::size_t i = 0; i < r.numerators.size(); ++i) {
      EXPECT_EQ(r.denominators[i], 0.0);
      EXPECT_GT(r.numerators[i], 1e-12);
      EXPECT_EQ(r.numerators[i], r.numerators[0]);
      EXPECT_EQ(r.ratios[i], kInf);
    }
  }
}

TEST(Witnesses, Prop2Diverges) {
  auto w = witness_for(sp("D"), sp("E'"), Op::kConvolve);
  ASSERT_EQ(w.id, WitnessId::kProp2Scaling);
  WitnessOptions opt;
  opt.order = 1;
  auto r = run_witness(w, 3, opt);
  EXPECT_EQ(r.params, (std::vector<double>{2, 4, 8}));
  EXPECT_EQ(r.verdict, WitnessVerdict::kDiverges);
  for (std::size_t i = 1; i < r.ratios.size(); ++i) {
    EXPECT_GE(r.ratios[i] / r.ratios[i - 1], kDivergenceFactor * (1 - kDivergenceSlack));
  }
}

TEST(Witnesses, StepsPrecondition) {
  auto w = witness_for(sp("D"), sp("E"), Op::kMultiply);
  EXPECT_THROW(run_witness(w, 2), Error);
}

// Every discontinuous table cell and every discontinuous fact has a family
// whose report diverges or has a vanishing denominator.
TEST(Witnesses, EveryDiscontinuityIsWitnessed) {
  std::set<std::string> seen;
  for (const TableEntry& row : table()) {
    for (Op op : {Op::kMultiply, Op::kConvolve}) {
      const auto& v = op == Op::kMultiply ? row.mul_verdict : row.conv_verdict;
      if (v.value != Verdict::kDiscontinuous) continue;
      const Space& partner = op == Op::kMultiply ? row.multiplier : row.convolutor;
      auto w = witness_for(row.space, partner, op);
      auto r = run_witness(w, 3);
      EXPECT_NE(r.verdict, WitnessVerdict::kFailed) << row.space.token() << " " << op_token(op);
    }
  }
  for (const MapFact& f : known_discontinuous_maps()) {
    auto w = witness_for(f);
    auto r = run_witness(w, 3);
    EXPECT_NE(r.verdict, WitnessVerdict::kFailed) << describe(f);
    seen.insert(r.family);
  }
  EXPECT_EQ(seen.size(), 8u);
}

TEST(Witnesses, ReportJsonRoundTrip) {
  for (auto [a, b, op] : {std::tuple{"D'", "E", Op::kMultiply},
                          std::tuple{"D'", "E'", Op::kConvolve},
                          std::tuple{"D", "E'", Op::kConvolve}}) {
    auto r = run_witness(witness_for(sp(a), sp(b), op), 3);
    EXPECT_EQ(witness_report_from_json(to_json(r)), r);
    EXPECT_EQ(to_json(run_witness(witness_for(sp(a), sp(b), op), 3)), to_json(r));
  }
}

TEST(Witnesses, BoundsHoldForContinuousMaps) {
  int checked = 0;
  for (const MapFact& f : known_continuous_maps()) {
    auto rep = check_continuity_bound(f, 100, 1);
    if (rep.skipped) continue;
    ++checked;
    EXPECT_EQ(rep.violations, 0) << describe(f) << " max ratio " << rep.max_ratio;
    EXPECT_EQ(rep.checked, 100) << describe(f);
  }
  EXPECT_GE(checked, 5);
}

TEST(Witnesses, BoundExamples) {
  auto om = check_continuity_bound({sp("OM"), sp("OM"), Op::kMultiply, sp("OM"), PropRef::kProp5},
                                   100, 42);
  EXPECT_FALSE(om.skipped);
  EXPECT_EQ(om.violations, 0);
  EXPECT_LE(om.max_ratio, 1 + 1e-9);
  auto li = check_continuity_bound(
      {sp("D_Linf"), sp("D_Linf"), Op::kMultiply, sp("D_Linf"), PropRef::kProp3}, 100, 42);
  EXPECT_FALSE(li.skipped);
  EXPECT_EQ(li.violations, 0);
  auto ep = check_continuity_bound({sp("E'"), sp("E'"), Op::kConvolve, sp("E'"), PropRef::kProp3},
                                   100, 42);
  EXPECT_FALSE(ep.skipped);
  EXPECT_EQ(ep.violations, 0);
  auto again = check_continuity_bound(
      {sp("OM"), sp("OM"), Op::kMultiply, sp("OM"), PropRef::kProp5}, 100, 42);
  EXPECT_EQ(to_json(again), to_json(om));
}

TEST(Witnesses, OcCauchy) {
  auto r = oc_cauchy_check(1, {4, 16}, {8, 32});
  ASSERT_EQ(r.sups.size(), 2u);
  EXPECT_LT(r.sups[1], r.sups[0]);
  EXPECT_TRUE(r.strictly_decreasing);
  EXPECT_FALSE(r.chirp_in_oc);
  EXPECT_TRUE(r.chirp_in_om);
  auto same = oc_cauchy_check(2, {4, 8}, {4, 8});
  for (double s : same.sups) EXPECT_EQ(s, 0.0);
  EXPECT_THROW(oc_cauchy_check(3, {4}, {8}), Error);
  EXPECT_THROW(oc_cauchy_check(1, {4, 8}, {8}), Error);
}

}  // namespace
}  // namespace distcalc
