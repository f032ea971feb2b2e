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

// Counterexample families for the discontinuous multiplication and
// convolution maps, explicit bound checks for the continuous ones, and the
// O_C Cauchy-sequence check for the chirp.

#ifndef DISTCALC_WITNESSES_HPP_
#define DISTCALC_WITNESSES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "distcalc/calculus_table.hpp"
#include "distcalc/seminorms.hpp"
#include "distcalc/space.hpp"

namespace distcalc {

enum class WitnessId {
  kProp1,
  kProp2Scaling,
  kProp4Chirp,
  kProp6Oscillation,
  kProp7ShiftedDeltas,
  kRem3ConvDE,
  kRem5Item9,
  kRem5Item14,
};

// "W_Prop1", "W_Prop2_scaling", ...
std::string witness_label(WitnessId id);
WitnessId parse_witness_label(const std::string& label);

struct WitnessFamily {
  WitnessId id;
  MapFact map;            // the discontinuous map being witnessed
  std::string parameter;  // name of the parameter axis
  bool via_fourier = false;
  std::string description;
};

// Throws NoKnownWitness when the map is continuous, undecided or not
// admissible.
WitnessFamily witness_for(const Space& a, const Space& b, Op op);
// The family for one catalogued discontinuous map (target included).
WitnessFamily witness_for(const MapFact& fact);

enum class WitnessVerdict { kDiverges, kZeroDenominator, kFailed };

std::string witness_verdict_label(WitnessVerdict v);  // "diverges", ...
WitnessVerdict parse_witness_verdict(const std::string& label);

struct WitnessReport {
  std::string family;
  std::string map;
  std::vector<double> params;
  std::vector<double> numerators;
  std::vector<double> denominators;
  std::vector<double> ratios;  // +inf where the denominator is 0
  WitnessVerdict verdict = WitnessVerdict::kFailed;
  std::vector<std::string> notes;

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

// Ratio growth required per parameter doubling for a "diverges" verdict.
inline constexpr double kDivergenceFactor = 2.0;
// Relative slack on that factor, absorbing grid rounding in linear laws.
inline constexpr double kDivergenceSlack = 1e-9;

// "diverges": ratios strictly increasing, each step at least
// kDivergenceFactor, last/first >= kDivergenceFactor^(steps-1);
// "zero-denominator": every denominator exactly 0 and numerator > 1e-12.
WitnessVerdict judge(const std::vector<double>& numerators,
                     const std::vector<double>& denominators);

struct WitnessOptions {
  GridSpec grid;
  int order = -1;      // m0 / m / l; -1 picks the family default
  double start = 0.0;  // first parameter value; 0 picks the family default
};

// Runs `steps` >= 3 parameter values, doubling (or stepping, for shifts).
WitnessReport run_witness(const WitnessFamily& w, int steps, const WitnessOptions& options = {});

std::string to_json(const WitnessReport& r);
WitnessReport witness_report_from_json(const std::string& json);

struct BoundReport {
  std::string map;
  std::string seminorms;
  int trials = 0;
  int checked = 0;
  double constant = 0.0;           // C
  double max_ratio = 0.0;          // max of lhs / (C·rhs)
  int violations = 0;
  bool skipped = false;
  std::string note;
};

// p1(b(v,w)) <= C·p2(v)·p3(w) for `trials` seeded random pairs. Maps
// without a modelled seminorm system are skipped with a note.
BoundReport check_continuity_bound(const MapFact& map, int trials, std::uint64_t seed = 1,
                                   const GridSpec& grid = {});

std::string to_json(const BoundReport& r);

struct CauchyReport {
  int l = 1;
  std::vector<double> r_values;
  std::vector<double> s_values;
  // sup_{|α|<=l} ||∂^α((f_r - f_s)(1+|x|²)^{-l-1})||_∞ per pair.
  std::vector<double> sups;
  bool strictly_decreasing = false;
  bool chirp_in_oc = false;
  bool chirp_in_om = false;
  std::string oc_reason;
};

// f_r(x) = e^{i x²} φ(x/r) on R^1 with φ = plateau(1, 1/2). Requires
// 0 <= l <= 2 and equally long r/s lists.
CauchyReport oc_cauchy_check(int l, const std::vector<double>& r_values,
                             const std::vector<double>& s_values);

std::string to_json(const CauchyReport& r);

}  // namespace distcalc

#endif  // DISTCALC_WITNESSES_HPP_
