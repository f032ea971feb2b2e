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

// Finite distributions Σ c·∂^α(carrier) with carrier a point mass or a
// symbolic function, paired against symbolic test functions.

#ifndef DISTCALC_DISTRIBUTIONS_HPP_
#define DISTCALC_DISTRIBUTIONS_HPP_

#include <string>
#include <variant>
#include <vector>

#include "distcalc/multi_index.hpp"
#include "distcalc/space.hpp"
#include "distcalc/symbolic.hpp"

namespace distcalc {

struct PointMass {
  Point location;
};

struct FunctionCarrier {
  SymbolicFunction f;
};

using Carrier = std::variant<PointMass, FunctionCarrier>;

struct DistTerm {
  Complex coeff;
  MultiIndex alpha;
  Carrier carrier;
};

class DistributionRep {
 public:
  // Throws on an empty term list or inconsistent dimensions.
  DistributionRep(int dimension, std::vector<DistTerm> terms);

  // ∂^α δ_{x0}; an empty α means order zero.
  static DistributionRep dirac(const Point& x0, MultiIndex alpha = {});
  static DistributionRep function(const SymbolicFunction& f, MultiIndex alpha = {});

  int dimension() const { return n_; }
  const std::vector<DistTerm>& terms() const { return terms_; }
  bool point_masses_only() const;

  DistributionRep derivative(const MultiIndex& alpha) const;
  DistributionRep scaled(Complex c) const;
  DistributionRep operator+(const DistributionRep& o) const;

  std::string label() const;

 private:
  int n_;
  std::vector<DistTerm> terms_;
};

// A finite stand-in for a bounded subset of a function space.
struct BoundedSetSpec {
  std::vector<SymbolicFunction> members;
  Space ambient = Space(Kind::kD);

  // Members must lie in the ambient space; for D they share a common ball
  // by finiteness. Throws MembershipError otherwise.
  void validate() const;
};

struct PairingOptions {
  double radius = 12.0;      // truncation of R^n for non-compact integrands
  double tolerance = 1e-11;  // relative tolerance of the trapezoid refinement
};

// ⟨φ, T⟩ = Σ c (-1)^{|α|} [∂^αφ(x0) | ∫ ∂^αφ·f]. Throws NumericError when
// an integrand is not absolutely integrable.
Complex pair(const SymbolicFunction& phi, const DistributionRep& t,
             const PairingOptions& options = {});

// f·T through the Leibniz formula
// f ∂^α T = Σ_{β≤α} C(α,β) (-1)^{|β|} ∂^{α-β}((∂^β f) T).
DistributionRep multiply(const SymbolicFunction& f, const DistributionRep& t);

// f ∗ T = Σ c ∂^α f(· - x0). Throws NotSupported for function carriers.
SymbolicFunction convolve_pointmass(const SymbolicFunction& f, const DistributionRep& t);

// S ∗ T when at most one side carries functions:
// ∂^αδ_a ∗ ∂^βδ_b = ∂^{α+β}δ_{a+b}, ∂^α g ∗ ∂^βδ_b = ∂^{α+β} g(· - b).
DistributionRep convolve(const DistributionRep& s, const DistributionRep& t);

// p_B(T) = max_{g∈B} |⟨g, T⟩|.
double dual_seminorm(const DistributionRep& t, const BoundedSetSpec& b,
                     const PairingOptions& options = {});

}  // namespace distcalc

#endif  // DISTCALC_DISTRIBUTIONS_HPP_
