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

// Multiplier and convolutor spaces of the fourteen spaces, the o/x
// joint-continuity flags and the catalogue of proved continuous and
// discontinuous bilinear maps.

#ifndef DISTCALC_CALCULUS_TABLE_HPP_
#define DISTCALC_CALCULUS_TABLE_HPP_

#include <string>
#include <vector>

#include "distcalc/space.hpp"

namespace distcalc {

enum class Op { kMultiply, kConvolve };

std::string op_token(Op op);  // "mul" / "conv"
Op parse_op(const std::string& token);

// Where a fact is proved. Closed enumeration; labels are stable output.
enum class PropRef {
  kProp1,
  kProp2,
  kProp3,
  kProp4,
  kProp5,
  kProp6,
  kProp7,
  kRemark2,
  kRemark3,
  kRemark5Item1,
  kRemark5Item2,
  kRemark5Item3,
  kRemark5Item4,
  kRemark5Item5,
  kRemark5Item6,
  kRemark5Item7,
  kRemark5Item8,
  kRemark5Item9,
  kRemark5Item10,
  kRemark5Item11,
  kRemark5Item12,
  kRemark5Item13,
  kRemark5Item14,
  kExtraList,       // continuous algebras listed outside the table
  kHypocontinuity,  // blanket fact: every table map is hypocontinuous
  kVacuous,         // leaves of an expression tree
};

std::string prop_label(PropRef ref);
PropRef parse_prop_label(const std::string& label);

// Proposition number printed in the table, e.g. 1 for "x(1)".
int prop_number(PropRef ref);

enum class Verdict { kContinuous, kDiscontinuous, kHypocontinuousOnlyKnown };

std::string verdict_label(Verdict v);
Verdict parse_verdict_label(const std::string& label);

struct ContinuityVerdict {
  Verdict value = Verdict::kHypocontinuousOnlyKnown;
  Space target;
  PropRef ref = PropRef::kHypocontinuity;

  friend bool operator==(const ContinuityVerdict&, const ContinuityVerdict&) = default;
};

struct TableEntry {
  Space space;
  Space multiplier;
  ContinuityVerdict mul_verdict;
  Space convolutor;
  ContinuityVerdict conv_verdict;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

// A bilinear map a × b → target together with the reference proving its
// (dis)continuity.
struct MapFact {
  Space a;
  Space b;
  Op op;
  Space target;
  PropRef ref;

  friend bool operator==(const MapFact&, const MapFact&) = default;
};

std::string describe(const MapFact& fact);

// M(e) and C(e). Defined for the table spaces and D_L∞; concrete D_Lp /
// D'_Lq exponents are accepted.
Space multiplier_space(const Space& e);
Space convolutor_space(const Space& e);

// Table cell flag for a table space (target = e).
ContinuityVerdict table_flag(const Space& e, Op op);

// The fourteen rows in table order.
std::vector<TableEntry> table(int dimension = 1);

std::vector<MapFact> known_continuous_maps(int dimension = 1);
std::vector<MapFact> known_discontinuous_maps(int dimension = 1);

enum class TableFormat { kText, kJson };

// Byte-stable rendering. Text: one line per row, "E | M o(n) | C x(n)".
std::string emit_table(TableFormat format, int dimension = 1);

// Inverse of the JSON rendering.
std::vector<TableEntry> table_from_json(const std::string& json, int dimension = 1);

}  // namespace distcalc

#endif  // DISTCALC_CALCULUS_TABLE_HPP_
