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

// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.

#ifndef DISTCALC_TESTS_ORACLES_VALUES_HPP_
#define DISTCALC_TESTS_ORACLES_VALUES_HPP_

namespace oracle {

inline constexpr double kSNorm02Gauss = 0.3678794411714423216;
inline constexpr double kL2Gauss = 1.1195151349202476285;
inline constexpr double kL1Gauss = 1.7724538509055160273;
inline constexpr double kBumpMass = 0.44399381616807943782;
inline constexpr double kBumpSup = 0.3678794411714423216;
inline constexpr double kBumpD1Sup = 0.79842975183359954417;
inline constexpr double kBumpD2Sup = 7.7497049416941454347;
inline constexpr double kBumpL2 = 0.36480970497643599772;
inline constexpr double kGaussD1Sup = 0.85776388496070679648;
inline constexpr double kGaussD2Sup = 2.0;
inline constexpr double kSNorm11Gauss = 0.73575888234288464319;
inline constexpr double kPlateauAt1 = 0.5;
inline constexpr double kPlateauAt1p25 = 0.12296728327732907809;
inline constexpr double kGaussConvGaussL2 = 1.6685814329591031149;

}  // namespace oracle

#endif  // DISTCALC_TESTS_ORACLES_VALUES_HPP_
