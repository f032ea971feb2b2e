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

// The fourteen function and distribution spaces of the multiplier-convolutor
// calculus, the continuous-inclusion order between them, the strong-dual
// pairing and the Fourier images.

#ifndef DISTCALC_SPACE_HPP_
#define DISTCALC_SPACE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace distcalc {

enum class Kind {
  kD,
  kS,
  kDLp,
  kBDot,
  kDLInf,
  kOC,
  kOM,
  kE,
  kEPrime,
  kOMPrime,
  kOCPrime,
  kDPrimeL1,
  kDPrimeLq,
  kSPrime,
  kDPrime,
};

inline constexpr int kNumKinds = 15;

// A space on R^n. D_Lp and D'_Lq carry an exponent; when the exponent is
// absent the space stands for the generic member of the family (the form
// used by the table rows). q may be +infinity.
class Space {
 public:
  Space() = default;
  explicit Space(Kind kind, int dimension = 1,
                 std::optional<double> parameter = std::nullopt);

  static Space DLp(double p, int dimension = 1);
  static Space DPrimeLq(double q, int dimension = 1);

  Kind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  const std::optional<double>& parameter() const { return parameter_; }
  bool parameterized_kind() const;
  bool is_generic() const { return parameterized_kind() && !parameter_; }
  bool is_function_space() const;
  bool is_distribution_space() const { return !is_function_space(); }

  Space with_dimension(int dimension) const;
  Space with_parameter(std::optional<double> parameter) const;

  // Short token, e.g. "D", "D_Lp[1.5]", "OC'", "D'_Lq[inf]".
  std::string token() const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  Kind kind_ = Kind::kD;
  int dimension_ = 1;
  std::optional<double> parameter_;
};

// Inverse of Space::token(). Throws ParseError for unknown tokens or
// parameters outside 1<=p<inf / 1<q<=inf.
Space parse_space(std::string_view token, int dimension = 1);

std::string kind_token(Kind kind);

// True iff `sub` is continuously included in `super`. Throws
// DimensionMismatch when the dimensions differ.
bool includes(const Space& sub, const Space& super);

// The least modelled space containing both arguments, if the set of common
// superspaces has a unique minimum.
std::optional<Space> least_common_superspace(const Space& a, const Space& b);

// Strong-dual partner; nullopt for D_L∞ (its dual is not a distribution
// space).
std::optional<Space> dual(const Space& e);

// S↔S, S'↔S', O_M↔O_C', O_C↔O_M'. Throws NotFourierMapped otherwise.
Space fourier_image(const Space& e);
bool fourier_mapped(const Space& e);

// The fourteen table spaces in table order (D_L∞ excluded).
std::vector<Space> all_spaces(int dimension);

// All modelled kinds (table spaces plus D_L∞), generic parameters.
std::vector<Space> all_kinds(int dimension);

// The raw edges of the inclusion diagram (before closure), generic
// parameters. Exposed for tests and documentation.
std::vector<std::pair<Kind, Kind>> inclusion_edges();

}  // namespace distcalc

#endif  // DISTCALC_SPACE_HPP_
