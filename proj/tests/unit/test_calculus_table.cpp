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

#include <algorithm>
#include <fstream>
#include <sstream>

#include "distcalc/calculus_table.hpp"
#include "distcalc/errors.hpp"

namespace distcalc {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Space sp(const char* token) { return parse_space(token); }

TEST(CalculusTable, MultiplierExamples) {
  EXPECT_EQ(multiplier_space(sp("S")), sp("OM"));
  EXPECT_EQ(multiplier_space(sp("D'_Lq")), sp("D_Linf"));
  EXPECT_EQ(multiplier_space(sp("E")), sp("E"));
  EXPECT_EQ(multiplier_space(sp("D_Linf")), sp("D_Linf"));
}

TEST(CalculusTable, ConvolutorExamples) {
  EXPECT_EQ(convolutor_space(sp("S")), sp("OC'"));
  EXPECT_EQ(convolutor_space(sp("D'")), sp("E'"));
  EXPECT_EQ(convolutor_space(sp("OM")), sp("OM'"));
}

TEST(CalculusTable, FlagExamples) {
  auto d = table_flag(sp("D"), Op::kMultiply);
  EXPECT_EQ(d.value, Verdict::kDiscontinuous);
  EXPECT_EQ(prop_number(d.ref), 1);
  EXPECT_EQ(d.target, sp("D"));
  auto om = table_flag(sp("OM"), Op::kMultiply);
  EXPECT_EQ(om.value, Verdict::kContinuous);
  EXPECT_EQ(prop_number(om.ref), 5);
  auto ocp = table_flag(sp("OC'"), Op::kConvolve);
  EXPECT_EQ(ocp.value, Verdict::kContinuous);
  EXPECT_EQ(prop_number(ocp.ref), 5);
}

TEST(CalculusTable, FlagTotality) {
  for (const Space& e : all_spaces(1)) {
    for (Op op : {Op::kMultiply, Op::kConvolve}) {
      auto v = table_flag(e, op);
      EXPECT_NE(v.value, Verdict::kHypocontinuousOnlyKnown) << e.token();
      EXPECT_EQ(v.target, e);
      EXPECT_GE(prop_number(v.ref), 1);
    }
  }
}

TEST(CalculusTable, MultiplierContainment) {
  for (const char* t : {"OC", "OM", "E", "D_Linf"}) {
    EXPECT_TRUE(includes(multiplier_space(sp(t)), sp(t))) << t;
  }
  for (const char* t : {"D", "S", "D_Lp", "Bdot"}) {
    EXPECT_FALSE(includes(multiplier_space(sp(t)), sp(t))) << t;
  }
}

TEST(CalculusTable, DualMultipliersAgree) {
  for (const char* t : {"OM", "OC", "S", "D", "E"}) {
    EXPECT_EQ(multiplier_space(*dual(sp(t))), multiplier_space(sp(t))) << t;
  }
}

TEST(CalculusTable, FourierTransfer) {
  for (const char* t : {"OM", "OC"}) {
    EXPECT_EQ(convolutor_space(fourier_image(sp(t))), fourier_image(multiplier_space(sp(t))))
        << t;
  }
}

TEST(CalculusTable, ContinuousMapExamples) {
  auto cont = known_continuous_maps();
  auto has = [&](const char* a, const char* b, Op op, const char* t) {
    return std::any_of(cont.begin(), cont.end(), [&](const MapFact& f) {
      return f.a == sp(a) && f.b == sp(b) && f.op == op && f.target == sp(t);
    });
  };
  EXPECT_TRUE(has("D", "D", Op::kMultiply, "D"));
  EXPECT_TRUE(has("S", "S", Op::kConvolve, "S"));
  EXPECT_TRUE(has("D", "D", Op::kConvolve, "D"));
  EXPECT_TRUE(has("D", "E'", Op::kConvolve, "E'"));
  EXPECT_TRUE(has("E'", "E'", Op::kConvolve, "E'"));
  EXPECT_FALSE(has("D", "E", Op::kMultiply, "D"));
}

TEST(CalculusTable, DiscontinuousMapExamples) {
  auto dis = known_discontinuous_maps();
  auto ref_of = [&](const char* a, const char* b, Op op, const char* t) -> std::optional<PropRef> {
    for (const MapFact& f : dis) {
      if (f.a == sp(a) && f.b == sp(b) && f.op == op && f.target == sp(t)) return f.ref;
    }
    return std::nullopt;
  };
  EXPECT_EQ(ref_of("D'", "E'", Op::kConvolve, "D'"), PropRef::kProp7);
  EXPECT_EQ(ref_of("D", "E", Op::kConvolve, "E"), PropRef::kRemark3);
  EXPECT_EQ(ref_of("E'", "D_Linf", Op::kMultiply, "D'"), PropRef::kProp6);
  int prop2 = 0;
  int prop6 = 0;
  for (const MapFact& f : dis) {
    prop2 += f.ref == PropRef::kProp2;
    prop6 += f.ref == PropRef::kProp6;
  }
  EXPECT_GE(prop2, 7);
  EXPECT_GE(prop6, 6);
}

TEST(CalculusTable, NoFactIsBothContinuousAndDiscontinuous) {
  auto cont = known_continuous_maps();
  for (const MapFact& d : known_discontinuous_maps()) {
    for (const MapFact& c : cont) {
      EXPECT_FALSE(c.a == d.a && c.b == d.b && c.op == d.op && c.target == d.target)
          << describe(d);
    }
  }
}

TEST(CalculusTable, EveryFlagHasAFact) {
  auto cont = known_continuous_maps();
  auto dis = known_discontinuous_maps();
  for (const TableEntry& row : table()) {
    for (Op op : {Op::kMultiply, Op::kConvolve}) {
      const auto& v = op == Op::kMultiply ? row.mul_verdict : row.conv_verdict;
      const Space& partner = op == Op::kMultiply ? row.multiplier : row.convolutor;
      const auto& facts = v.value == Verdict::kContinuous ? cont : dis;
      bool found = std::any_of(facts.begin(), facts.end(), [&](const MapFact& f) {
        return f.op == op && f.target == row.space &&
               ((f.a == row.space && f.b == partner) || (f.a == partner && f.b == row.space));
      });
      EXPECT_TRUE(found) << row.space.token() << " " << op_token(op);
    }
  }
}

TEST(CalculusTable, TextGolden) {
  std::string golden = slurp(std::string(DISTCALC_GOLDEN_DIR) + "/table.txt");
  EXPECT_EQ(emit_table(TableFormat::kText), golden);
  std::istringstream lines(golden);
  std::string first;
  std::getline(lines, first);
  EXPECT_EQ(first, "D | E x(1) | E' x(2)");
  EXPECT_NE(golden.find("OC' | OC x(6) | OC' o(5)\n"), std::string::npos);
}

TEST(CalculusTable, JsonGoldenAndRoundTrip) {
  std::string golden = slurp(std::string(DISTCALC_GOLDEN_DIR) + "/table.json");
  std::string json = emit_table(TableFormat::kJson);
  EXPECT_EQ(json, golden);
  auto rows = table_from_json(json);
  EXPECT_EQ(rows.size(), 14u);
  EXPECT_EQ(rows, table());
}

TEST(CalculusTable, LabelsRoundTrip) {
  for (int i = 0; i <= static_cast<int>(PropRef::kVacuous); ++i) {
    auto r = static_cast<PropRef>(i);
    EXPECT_EQ(parse_prop_label(prop_label(r)), r);
  }
  for (Verdict v : {Verdict::kContinuous, Verdict::kDiscontinuous,
                    Verdict::kHypocontinuousOnlyKnown}) {
    EXPECT_EQ(parse_verdict_label(verdict_label(v)), v);
  }
  EXPECT_EQ(parse_op("mul"), Op::kMultiply);
  EXPECT_EQ(parse_op("conv"), Op::kConvolve);
  EXPECT_THROW(parse_op("plus"), Error);
}

TEST(CalculusTable, ConcreteExponentsAccepted) {
  EXPECT_EQ(multiplier_space(Space::DLp(2)), sp("D_Linf"));
  EXPECT_EQ(convolutor_space(Space::DPrimeLq(3)).kind(), Kind::kDPrimeL1);
}

}  // namespace
}  // namespace distcalc
