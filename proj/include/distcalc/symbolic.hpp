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

// Closed-form smooth functions on R^n with exact derivatives.
//
// A function is a finite sum of terms P(x)·F_1(x)···F_k(x) where P is a
// complex polynomial and each F_i belongs to one of a few parametrised
// families. Every family is closed under ∂_j, dilation x ↦ cx and
// translation x ↦ x - x0 up to a polynomial prefactor, so derivatives stay
// in the same representation and are exact.

#ifndef DISTCALC_SYMBOLIC_HPP_
#define DISTCALC_SYMBOLIC_HPP_

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "distcalc/multi_index.hpp"
#include "distcalc/space.hpp"

namespace distcalc {

using Complex = std::complex<double>;
using Point = std::vector<double>;

class Polynomial {
 public:
  explicit Polynomial(int dimension = 1) : n_(dimension) {}

  static Polynomial constant(int dimension, Complex c);
  static Polynomial monomial(int dimension, const MultiIndex& exponent, Complex c);
  // c · (x_axis - shift)
  static Polynomial coordinate(int dimension, int axis, Complex c = 1.0, double shift = 0.0);
  // c_0 + c_1 x + c_2 x^2 + ... on R^1.
  static Polynomial univariate(const std::vector<Complex>& coefficients);

  int dimension() const { return n_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;
  // Total degree counting only the axes with free[axis] == true.
  int degree_in(const std::vector<bool>& free) const;
  const std::map<MultiIndex, Complex>& coefficients() const { return coeffs_; }

  Complex evaluate(const Point& x) const;
  Polynomial partial(int axis) const;
  Polynomial dilate(double c) const;             // x ↦ p(cx)
  Polynomial translate(const Point& x0) const;   // x ↦ p(x - x0)
  Polynomial scaled(Complex c) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void add(const MultiIndex& e, Complex c);

  int n_;
  std::map<MultiIndex, Complex> coeffs_;
};

namespace factor {

// e^{-rate·|x-center|²}
struct Gauss {
  double rate;
  Point center;
};
// e^{i frequency·x}
struct Oscillation {
  Point frequency;
};
// e^{i rate·|x-center|²}
struct Chirp {
  double rate;
  Point center;
};
// s^{-power}·e^{-1/s} with s = 1 - |x-center|²/radius² (radial, axis < 0) or
// s = 1 - (x_axis - center_axis)²/radius²; zero where s <= 0.
struct Bump {
  double radius;
  Point center;
  int axis;
  int power;
};
// (1_{[-half_width, half_width]} * b_width)(x_axis - center) where b_width
// is the unit-mass bump of radius `width`: equal to 1 for
// |x_axis - center| <= half_width - width, 0 beyond half_width + width.
struct Plateau {
  int axis;
  double half_width;
  double width;
  double center;
};
// (1 + rate·|x-center|²)^{-power}
struct Weight {
  double rate;
  Point center;
  int power;
};

}  // namespace factor

using Factor = std::variant<factor::Gauss, factor::Oscillation, factor::Chirp, factor::Bump,
                            factor::Plateau, factor::Weight>;

struct Term {
  Polynomial poly;
  std::vector<Factor> factors;
};

enum class DecayClass { kCompactSupport, kRapidDecay, kTendsToZero, kBounded, kPolynomialGrowth };

std::string decay_label(DecayClass d);

// Polynomial growth of ∂^α f at infinity, bounded by |x|^{base + slope·|α|}
// over the unconfined directions. slope == 0 means one exponent serves every
// derivative order (the O_C situation); slope > 0 means the exponent has to
// grow with |α| (O_M but not O_C).
struct GrowthProfile {
  DecayClass decay = DecayClass::kCompactSupport;
  int base = 0;
  int slope = 0;
  int free_dimensions = 0;

  bool uniform() const { return slope == 0; }
  // Smallest k with (1+|x|²)^{-k} ∂^α f ∈ C_0 for |α| = order.
  int exponent(int order) const;
  // Growth order of ∂^α f; meaningless for compact/rapid profiles.
  int growth(int order) const { return base + slope * order; }
  bool decays_rapidly() const {
    return decay == DecayClass::kCompactSupport || decay == DecayClass::kRapidDecay;
  }
};

struct Box {
  std::vector<std::pair<double, double>> bounds;
};

class SymbolicFunction {
 public:
  SymbolicFunction() : SymbolicFunction(1) {}
  explicit SymbolicFunction(int dimension);  // the zero function

  // exp(-1/(1-|x|²/r²)) inside the ball of radius r.
  static SymbolicFunction bump(double radius, int dimension = 1);
  // exp(-a|x|²)
  static SymbolicFunction gaussian(double rate, int dimension = 1);
  // Σ c_k x^k on R^1.
  static SymbolicFunction polynomial(const std::vector<Complex>& coefficients);
  static SymbolicFunction polynomial(const Polynomial& p);
  // exp(i c·x)
  static SymbolicFunction complex_exp(const Point& frequency);
  static SymbolicFunction complex_exp(double frequency) { return complex_exp(Point{frequency}); }
  // exp(i|x|²)
  static SymbolicFunction chirp(int dimension = 1);
  static SymbolicFunction constant(Complex value, int dimension = 1);
  // Π_j plateau(x_j): 1 on the cube |x_j| <= a - ε, 0 outside |x_j| <= a + ε.
  static SymbolicFunction plateau(double half_width, double width, int dimension = 1);
  // (1+|x|²)^{-k}
  static SymbolicFunction weight(int power, int dimension = 1);

  int dimension() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const std::string& label() const { return label_; }
  SymbolicFunction with_label(std::string label) const;

  Complex evaluate(const Point& x) const;
  Complex operator()(const Point& x) const { return evaluate(x); }
  Complex operator()(double x) const { return evaluate(Point{x}); }

  SymbolicFunction partial(int axis) const;
  SymbolicFunction derivative(const MultiIndex& alpha) const;
  SymbolicFunction dilate(double c) const;          // x ↦ f(cx), c > 0
  SymbolicFunction translate(const Point& x0) const;  // x ↦ f(x - x0)
  SymbolicFunction translate(double x0) const { return translate(Point{x0}); }
  SymbolicFunction scaled(Complex c) const;

  SymbolicFunction operator+(const SymbolicFunction& o) const;
  SymbolicFunction operator-(const SymbolicFunction& o) const;
  SymbolicFunction operator*(const SymbolicFunction& o) const;

  GrowthProfile growth_profile() const;
  // A box containing the support, when the support is compact.
  std::optional<Box> support_box() const;
  // Radius of a centred ball containing the support.
  std::optional<double> support_radius() const;
  // True when no term carries a compactly supported factor, so the function
  // is real-analytic and cannot vanish on an open set unless it is zero.
  bool analytic() const;

 private:
  SymbolicFunction(int dimension, std::vector<Term> terms, std::string label);
  void normalize();

  int n_;
  std::vector<Term> terms_;
  std::string label_;
};

// Mass of the unit bump exp(-1/(1-t²)) on [-1, 1].
double unit_bump_mass();

struct Membership {
  bool member;
  std::string reason;
};

// Decides f ∈ e for the function spaces D, S, D_Lp, Ḃ, D_L∞, O_C, O_M, E
// from the growth profile. Throws MembershipError for distribution spaces
// or a generic D_Lp.
Membership membership(const SymbolicFunction& f, const Space& e);

}  // namespace distcalc

#endif  // DISTCALC_SYMBOLIC_HPP_
