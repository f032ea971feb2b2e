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

#include "distcalc/calculus_table.hpp"

#include <array>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "distcalc/errors.hpp"

namespace distcalc {
namespace {

using json = nlohmann::json;

constexpr std::array<std::pair<PropRef, const char*>, 26> kLabels{{
    {PropRef::kProp1, "Prop 1"},
    {PropRef::kProp2, "Prop 2"},
    {PropRef::kProp3, "Prop 3"},
    {PropRef::kProp4, "Prop 4"},
    {PropRef::kProp5, "Prop 5"},
    {PropRef::kProp6, "Prop 6"},
    {PropRef::kProp7, "Prop 7"},
    {PropRef::kRemark2, "Remark 2"},
    {PropRef::kRemark3, "Remark 3"},
    {PropRef::kRemark5Item1, "Remark 5 item 1"},
    {PropRef::kRemark5Item2, "Remark 5 item 2"},
    {PropRef::kRemark5Item3, "Remark 5 item 3"},
    {PropRef::kRemark5Item4, "Remark 5 item 4"},
    {PropRef::kRemark5Item5, "Remark 5 item 5"},
    {PropRef::kRemark5Item6, "Remark 5 item 6"},
    {PropRef::kRemark5Item7, "Remark 5 item 7"},
    {PropRef::kRemark5Item8, "Remark 5 item 8"},
    {PropRef::kRemark5Item9, "Remark 5 item 9"},
    {PropRef::kRemark5Item10, "Remark 5 item 10"},
    {PropRef::kRemark5Item11, "Remark 5 item 11"},
    {PropRef::kRemark5Item12, "Remark 5 item 12"},
    {PropRef::kRemark5Item13, "Remark 5 item 13"},
    {PropRef::kRemark5Item14, "Remark 5 item 14"},
    {PropRef::kExtraList, "Extra list"},
    {PropRef::kHypocontinuity, "Hypocontinuity"},
    {PropRef::kVacuous, "Vacuous"},
}};

struct Row {
  Kind space;
  Kind multiplier;
  bool mul_continuous;
  PropRef mul_ref;
  Kind convolutor;
  bool conv_continuous;
  PropRef conv_ref;
};

// Row order and cells exactly as printed in the multiplier-convolutor table.
constexpr std::array<Row, 14> kRows{{
    {Kind::kD, Kind::kE, false, PropRef::kProp1, Kind::kEPrime, false, PropRef::kProp2},
    {Kind::kS, Kind::kOM, false, PropRef::kProp2, Kind::kOCPrime, false, PropRef::kProp2},
    {Kind::kDLp, Kind::kDLInf, true, PropRef::kProp3, Kind::kDPrimeL1, false, PropRef::kProp2},
    {Kind::kBDot, Kind::kDLInf, true, PropRef::kProp3, Kind::kDPrimeL1, false, PropRef::kProp2},
    {Kind::kOC, Kind::kOC, false, PropRef::kProp4, Kind::kOCPrime, false, PropRef::kProp2},
    {Kind::kOM, Kind::kOM, true, PropRef::kProp5, Kind::kOMPrime, false, PropRef::kProp2},
    {Kind::kE, Kind::kE, true, PropRef::kProp3, Kind::kEPrime, false, PropRef::kProp2},
    {Kind::kEPrime, Kind::kE, false, PropRef::kProp6, Kind::kEPrime, true, PropRef::kProp3},
    {Kind::kOMPrime, Kind::kOM, false, PropRef::kProp6, Kind::kOMPrime, false, PropRef::kProp4},
    {Kind::kOCPrime, Kind::kOC, false, PropRef::kProp6, Kind::kOCPrime, true, PropRef::kProp5},
    {Kind::kDPrimeL1, Kind::kDLInf, false, PropRef::kProp6, Kind::kDPrimeL1, true, PropRef::kProp3},
    {Kind::kDPrimeLq, Kind::kDLInf, false, PropRef::kProp6, Kind::kDPrimeL1, true, PropRef::kProp3},
    {Kind::kSPrime, Kind::kOM, false, PropRef::kProp6, Kind::kOCPrime, false, PropRef::kProp6},
    {Kind::kDPrime, Kind::kE, false, PropRef::kProp6, Kind::kEPrime, false, PropRef::kProp7},
}};

const Row* find_row(Kind k) {
  for (const auto& r : kRows) {
    if (r.space == k) return &r;
  }
  return nullptr;
}

ContinuityVerdict flag_verdict(bool continuous, PropRef ref, const Space& target) {
  return {continuous ? Verdict::kContinuous : Verdict::kDiscontinuous, target, ref};
}

std::string flag_text(const ContinuityVerdict& v) {
  return std::string(v.value == Verdict::kContinuous ? "o" : "x") + "(" +
         std::to_string(prop_number(v.ref)) + ")";
}

}  // namespace

std::string op_token(Op op) { return op == Op::kMultiply ? "mul" : "conv"; }

Op parse_op(const std::string& token) {
  if (token == "mul" || token == "*" || token == "Multiply") return Op::kMultiply;
  if (token == "conv" || token == "Convolve") return Op::kConvolve;
  throw ParseError("unknown operation '" + token + "' (expected mul or conv)", 0);
}

std::string prop_label(PropRef ref) {
  for (const auto& [r, label] : kLabels) {
    if (r == ref) return label;
  }
  return "?";
}

PropRef parse_prop_label(const std::string& label) {
  for (const auto& [r, l] : kLabels) {
    if (label == l) return r;
  }
  throw ParseError("unknown reference label '" + label + "'", 0);
}

int prop_number(PropRef ref) {
  switch (ref) {
    case PropRef::kProp1: return 1;
    case PropRef::kProp2: return 2;
    case PropRef::kProp3: return 3;
    case PropRef::kProp4: return 4;
    case PropRef::kProp5: return 5;
    case PropRef::kProp6: return 6;
    case PropRef::kProp7: return 7;
    default: return 0;
  }
}

std::string verdict_label(Verdict v) {
  switch (v) {
    case Verdict::kContinuous: return "Continuous";
    case Verdict::kDiscontinuous: return "Discontinuous";
    case Verdict::kHypocontinuousOnlyKnown: return "HypocontinuousOnlyKnown";
  }
  return "?";
}

Verdict parse_verdict_label(const std::string& label) {
  for (Verdict v : {Verdict::kContinuous, Verdict::kDiscontinuous,
                    Verdict::kHypocontinuousOnlyKnown}) {
    if (verdict_label(v) == label) return v;
  }
  throw ParseError("unknown verdict '" + label + "'", 0);
}

std::string describe(const MapFact& f) {
  return f.a.token() + " x " + f.b.token() + " -" + op_token(f.op) + "-> " + f.target.token();
}

Space multiplier_space(const Space& e) {
  if (e.kind() == Kind::kDLInf) return Space(Kind::kDLInf, e.dimension());
  const Row* r = find_row(e.kind());
  if (r == nullptr) throw Error("no multiplier space for " + e.token());
  return Space(r->multiplier, e.dimension());
}

Space convolutor_space(const Space& e) {
  if (e.kind() == Kind::kDLInf) return Space(Kind::kDPrimeL1, e.dimension());
  const Row* r = find_row(e.kind());
  if (r == nullptr) throw Error("no convolutor space for " + e.token());
  return Space(r->convolutor, e.dimension());
}

ContinuityVerdict table_flag(const Space& e, Op op) {
  const Row* r = find_row(e.kind());
  if (r == nullptr) throw Error(e.token() + " is not a table space");
  if (op == Op::kMultiply) return flag_verdict(r->mul_continuous, r->mul_ref, e);
  return flag_verdict(r->conv_continuous, r->conv_ref, e);
}

std::vector<TableEntry> table(int dimension) {
  std::vector<TableEntry> rows;
  for (const auto& r : kRows) {
    Space e(r.space, dimension);
    rows.push_back({e, Space(r.multiplier, dimension), flag_verdict(r.mul_continuous, r.mul_ref, e),
                    Space(r.convolutor, dimension),
                    flag_verdict(r.conv_continuous, r.conv_ref, e)});
  }
  return rows;
}

std::vector<MapFact> known_continuous_maps(int n) {
  auto s = [n](Kind k) { return Space(k, n); };
  const Op mul = Op::kMultiply;
  const Op conv = Op::kConvolve;
  std::vector<MapFact> facts;
  // 'o' cells of the table.
  for (const auto& r : kRows) {
    if (r.mul_continuous) facts.push_back({s(r.space), s(r.multiplier), mul, s(r.space), r.mul_ref});
    if (r.conv_continuous)
      facts.push_back({s(r.space), s(r.convolutor), conv, s(r.space), r.conv_ref});
  }
  // D_Lp × D_L∞ → D_Lp holds up to p = ∞.
  facts.push_back({s(Kind::kDLInf), s(Kind::kDLInf), mul, s(Kind::kDLInf), PropRef::kProp3});
  facts.push_back({s(Kind::kS), s(Kind::kS), mul, s(Kind::kS), PropRef::kExtraList});
  facts.push_back({s(Kind::kBDot), s(Kind::kBDot), mul, s(Kind::kBDot), PropRef::kExtraList});
  facts.push_back({s(Kind::kDLp), s(Kind::kDLp), mul, s(Kind::kDLp), PropRef::kExtraList});
  facts.push_back({s(Kind::kS), s(Kind::kS), conv, s(Kind::kS), PropRef::kExtraList});
  facts.push_back(
      {Space::DLp(1, n), Space::DLp(1, n), conv, Space::DLp(1, n), PropRef::kExtraList});
  facts.push_back({s(Kind::kD), s(Kind::kD), conv, s(Kind::kD), PropRef::kRemark5Item1});
  facts.push_back({s(Kind::kD), s(Kind::kEPrime), conv, s(Kind::kEPrime), PropRef::kRemark5Item2});
  facts.push_back(
      {s(Kind::kEPrime), s(Kind::kEPrime), conv, s(Kind::kEPrime), PropRef::kRemark5Item3});
  facts.push_back({s(Kind::kD), s(Kind::kD), mul, s(Kind::kD), PropRef::kRemark5Item11});
  facts.push_back({s(Kind::kE), s(Kind::kE), mul, s(Kind::kE), PropRef::kRemark5Item12});
  return facts;
}

std::vector<MapFact> known_discontinuous_maps(int n) {
  auto s = [n](Kind k) { return Space(k, n); };
  const Op mul = Op::kMultiply;
  const Op conv = Op::kConvolve;
  std::vector<MapFact> facts;
  // 'x' cells of the table. The S-row multiplication is the map singled
  // out in Remark 2 (separately but not jointly continuous).
  for (const auto& r : kRows) {
    if (!r.mul_continuous) {
      PropRef ref = r.space == Kind::kS ? PropRef::kRemark2 : r.mul_ref;
      facts.push_back({s(r.space), s(r.multiplier), mul, s(r.space), ref});
    }
    if (!r.conv_continuous)
      facts.push_back({s(r.space), s(r.convolutor), conv, s(r.space), r.conv_ref});
  }
  // Reductions used inside the proofs.
  facts.push_back({s(Kind::kDLInf), s(Kind::kDPrimeL1), conv, s(Kind::kDLInf), PropRef::kProp2});
  facts.push_back({s(Kind::kD), s(Kind::kEPrime), conv, s(Kind::kE), PropRef::kProp2});
  facts.push_back({s(Kind::kEPrime), s(Kind::kDLInf), mul, s(Kind::kDPrime), PropRef::kProp6});
  // Ehrenpreis list.
  facts.push_back({s(Kind::kD), s(Kind::kE), conv, s(Kind::kE), PropRef::kRemark3});
  facts.push_back({s(Kind::kD), s(Kind::kDPrime), conv, s(Kind::kE), PropRef::kRemark5Item5});
  facts.push_back({s(Kind::kDPrime), s(Kind::kD), conv, s(Kind::kDPrime), PropRef::kRemark5Item9});
  facts.push_back(
      {s(Kind::kE), s(Kind::kEPrime), conv, s(Kind::kDPrime), PropRef::kRemark5Item10});
  facts.push_back({s(Kind::kD), s(Kind::kDPrime), mul, s(Kind::kEPrime), PropRef::kRemark5Item14});
  return facts;
}

std::string emit_table(TableFormat format, int dimension) {
  const auto rows = table(dimension);
  if (format == TableFormat::kText) {
    std::ostringstream out;
    for (const auto& r : rows) {
      out << r.space.token() << " | " << r.multiplier.token() << " " << flag_text(r.mul_verdict)
          << " | " << r.convolutor.token() << " " << flag_text(r.conv_verdict) << "\n";
    }
    return out.str();
  }
  json doc = json::array();
  for (const auto& r : rows) {
    doc.push_back({
        {"space", r.space.token()},
        {"multiplier", r.multiplier.token()},
        {"mul_flag", r.mul_verdict.value == Verdict::kContinuous ? "o" : "x"},
        {"mul_ref", prop_label(r.mul_verdict.ref)},
        {"convolutor", r.convolutor.token()},
        {"conv_flag", r.conv_verdict.value == Verdict::kContinuous ? "o" : "x"},
        {"conv_ref", prop_label(r.conv_verdict.ref)},
    });
  }
  return doc.dump(2) + "\n";
}

std::vector<TableEntry> table_from_json(const std::string& text, int dimension) {
  const json doc = json::parse(text);
  auto flag = [](const std::string& f) {
    if (f == "o") return Verdict::kContinuous;
    if (f == "x") return Verdict::kDiscontinuous;
    throw ParseError("bad flag '" + f + "'", 0);
  };
  std::vector<TableEntry> rows;
  for (const auto& r : doc) {
    Space e = parse_space(r.at("space").get<std::string>(), dimension);
    rows.push_back({
        e,
        parse_space(r.at("multiplier").get<std::string>(), dimension),
        {flag(r.at("mul_flag")), e, parse_prop_label(r.at("mul_ref"))},
        parse_space(r.at("convolutor").get<std::string>(), dimension),
        {flag(r.at("conv_flag")), e, parse_prop_label(r.at("conv_ref"))},
    });
  }
  return rows;
}

}  // namespace distcalc
