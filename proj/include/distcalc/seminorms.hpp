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

// The seminorm systems of D, S, D_Lp, O_M and E evaluated on symbolic
// functions: exact derivatives, grid suprema with local refinement and
// composite quadrature.

#ifndef DISTCALC_SEMINORMS_HPP_
#define DISTCALC_SEMINORMS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "distcalc/multi_index.hpp"
#include "distcalc/space.hpp"
#include "distcalc/symbolic.hpp"

namespace distcalc {

enum class QuadratureRule { kTrapezoid, kSimpson };

std::string quadrature_label(QuadratureRule rule);
QuadratureRule parse_quadrature(const std::string& token);

struct GridSpec {
  double radius = 4.0;  // R: suprema and integrals over [-R, R]^n
  int points = 512;     // N per axis
  QuadratureRule rule = QuadratureRule::kSimpson;

  void validate() const;  // R > 0, N >= 16; throws GridError
};

// p_{m,ε}(φ) = sup_ν sup_{|x|>=ν, |α|<=m_ν} |∂^αφ(x)| / ε_ν with
// m_ν = m0 + ν and ε_ν = eps0·2^{-ν}.
struct DNorm {
  int m0 = 0;
  double eps0 = 1.0;
};
// sup_{x, |α|<=m} |x^β ∂^αφ(x)|
struct SNorm {
  int m = 0;
  MultiIndex beta;  // empty means 0
};
// sup_{|α|<=m} ||∂^α f||_p, p = inf allowed.
struct LpNorm {
  int m = 0;
  double p = 2.0;
};
// sup_{|α|<=m} ||ψ ∂^α f||_∞ with ψ ∈ S.
struct OMNorm {
  int m = 0;
  SymbolicFunction psi;
};
// sup_{|x|<=K, |α|<=m} |∂^α f(x)|
struct ESeminorm {
  int m = 0;
  double radius = 1.0;
};

using SeminormSpec = std::variant<DNorm, SNorm, LpNorm, OMNorm, ESeminorm>;

// Literal form, e.g. "pS(0,2)", "pLp(1,inf)".
std::string seminorm_label(const SeminormSpec& spec);

// The space the seminorm is defined on.
Space seminorm_space(const SeminormSpec& spec, int dimension);

// Checks membership of f in the seminorm's space (MembershipError), then
// evaluates. Compactly supported f are gridded on their support box, which
// must fit in [-R, R]^n (GridError otherwise).
double eval_seminorm(const SeminormSpec& spec, const SymbolicFunction& f,
                     const GridSpec& grid = {});

bool seminorm_is_norm(const SeminormSpec& spec);

// ||f||_p; p = inf is a grid supremum. Throws NumericError for finite p when
// |f|^p is not integrable.
double lp_norm(const SymbolicFunction& f, double p, const GridSpec& grid = {});

// sup |f| over [-R, R]^n (or the support box), refined around the largest
// grid values.
double sup_norm(const SymbolicFunction& f, const GridSpec& grid = {});

// sup of |f| over the closed ball of radius `radius`.
double sup_on_ball(const SymbolicFunction& f, double radius, const GridSpec& grid = {});

// sup of h over `box` restricted to points where mask(x) holds.
double grid_sup(const std::function<double(const Point&)>& h, const Box& box, int points,
                const std::function<bool(const Point&)>& mask = {});

}  // namespace distcalc

#endif  // DISTCALC_SEMINORMS_HPP_
