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

#include "distcalc/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "distcalc/errors.hpp"
#include "distcalc/format.hpp"

namespace distcalc {
namespace {

constexpr Complex kI{0.0, 1.0};

std::string num(double v) { return format_number(v); }

std::string point_label(const Point& p) { return format_point(p); }

std::string complex_label(Complex c) {
  if (c.imag() == 0.0) return num(c.real());
  return "const(" + num(c.real()) + "," + num(c.imag()) + ")";
}

double unit_bump(double t) {
  double s = 1.0 - t * t;
  return s > 0.0 ? std::exp(-1.0 / s) : 0.0;
}

double bump_integral(double lo, double hi) {
  lo = std::max(lo, -1.0);
  hi = std::min(hi, 1.0);
  if (hi <= lo) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(unit_bump, lo, hi, 4,
                                                                        1e-13);
}

double squared_distance(const Point& x, const Point& c) {
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r += (x[i] - c[i]) * (x[i] - c[i]);
  return r;
}

Point add_points(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point scale_point(const Point& a, double c) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

// ------------------------------------------------------------ per-factor

Complex evaluate_factor(const Factor& f, const Point& x) {
  return std::visit(
      [&](const auto& g) -> Complex {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, factor::Gauss>) {
          return std::exp(-g.rate * squared_distance(x, g.center));
        } else if constexpr (std::is_same_v<T, factor::Oscillation>) {
          double phase = 0.0;
          for (std::size_t i = 0; i < x.size(); ++i) phase += g.frequency[i] * x[i];
          return {std::cos(phase), std::sin(phase)};
        } else if constexpr (std::is_same_v<T, factor::Chirp>) {
          double phase = g.rate * squared_distance(x, g.center);
          return {std::cos(phase), std::sin(phase)};
        } else if constexpr (std::is_same_v<T, factor::Bump>) {
          double u;
          if (g.axis < 0) {
            u = squared_distance(x, g.center) / (g.radius * g.radius);
          } else {
            double d = x[g.axis] - g.center[g.axis];
            u = d * d / (g.radius * g.radius);
          }
          double s = 1.0 - u;
          if (s <= 0.0) return 0.0;
          return std::exp(-1.0 / s - g.power * std::log(s));
        } else if constexpr (std::is_same_v<T, factor::Plateau>) {
          double t = x[g.axis] - g.center;
          double lo = (t - g.half_width) / g.width;
          double hi = (t + g.half_width) / g.width;
          if (lo <= -1.0 && hi >= 1.0) return 1.0;
          if (hi <= -1.0 || lo >= 1.0) return 0.0;
          return bump_integral(lo, hi) / unit_bump_mass();
        } else {
          double base = 1.0 + g.rate * squared_distance(x, g.center);
          return std::pow(base, -g.power);
        }
      },
      f);
}

std::vector<std::pair<Polynomial, Factor>> partial_factor(const Factor& f, int axis, int n) {
  std::vector<std::pair<Polynomial, Factor>> out;
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, factor::Gauss>) {
          out.emplace_back(Polynomial::coordinate(n, axis, -2.0 * g.rate, g.center[axis]), g);
        } else if constexpr (std::is_same_v<T, factor::Oscillation>) {
          if (g.frequency[axis] != 0.0) {
            out.emplace_back(Polynomial::constant(n, kI * g.frequency[axis]), g);
          }
        } else if constexpr (std::is_same_v<T, factor::Chirp>) {
          out.emplace_back(Polynomial::coordinate(n, axis, 2.0 * kI * g.rate, g.center[axis]), g);
        } else if constexpr (std::is_same_v<T, factor::Bump>) {
          if (g.axis >= 0 && g.axis != axis) return;
          // d/ds (s^{-k} e^{-1/s}) = -k s^{-k-1} e^{-1/s} + s^{-k-2} e^{-1/s},
          // ∂_j s = -2 (x_j - c_j) / r².
          double r2 = g.radius * g.radius;
          if (g.power > 0) {
            factor::Bump next = g;
            next.power = g.power + 1;
            out.emplace_back(
                Polynomial::coordinate(n, axis, 2.0 * g.power / r2, g.center[axis]), next);
          }
          factor::Bump next2 = g;
          next2.power = g.power + 2;
          out.emplace_back(Polynomial::coordinate(n, axis, -2.0 / r2, g.center[axis]), next2);
        } else if constexpr (std::is_same_v<T, factor::Plateau>) {
          if (g.axis != axis) return;
          double scale = 1.0 / (g.width * unit_bump_mass());
          Point left(n, 0.0);
          Point right(n, 0.0);
          left[axis] = g.center - g.half_width;
          right[axis] = g.center + g.half_width;
          out.emplace_back(Polynomial::constant(n, scale), factor::Bump{g.width, left, axis, 0});
          out.emplace_back(Polynomial::constant(n, -scale), factor::Bump{g.width, right, axis, 0});
        } else {
          factor::Weight next = g;
          next.power = g.power + 1;
          out.emplace_back(
              Polynomial::coordinate(n, axis, -2.0 * g.power * g.rate, g.center[axis]), next);
        }
      },
      f);
  return out;
}

Factor dilate_factor(const Factor& f, double c) {
  return std::visit(
      [&](const auto& g) -> Factor {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, factor::Gauss>) {
          return factor::Gauss{g.rate * c * c, scale_point(g.center, 1.0 / c)};
        } else if constexpr (std::is_same_v<T, factor::Oscillation>) {
          return factor::Oscillation{scale_point(g.frequency, c)};
        } else if constexpr (std::is_same_v<T, factor::Chirp>) {
          return factor::Chirp{g.rate * c * c, scale_point(g.center, 1.0 / c)};
        } else if constexpr (std::is_same_v<T, factor::Bump>) {
          return factor::Bump{g.radius / c, scale_point(g.center, 1.0 / c), g.axis, g.power};
        } else if constexpr (std::is_same_v<T, factor::Plateau>) {
          return factor::Plateau{g.axis, g.half_width / c, g.width / c, g.center / c};
        } else {
          return factor::Weight{g.rate * c * c, scale_point(g.center, 1.0 / c), g.power};
        }
      },
      f);
}

std::pair<Complex, Factor> translate_factor(const Factor& f, const Point& x0) {
  return std::visit(
      [&](const auto& g) -> std::pair<Complex, Factor> {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, factor::Oscillation>) {
          double phase = 0.0;
          for (std::size_t i = 0; i < x0.size(); ++i) phase += g.frequency[i] * x0[i];
          return {Complex(std::cos(phase), -std::sin(phase)), g};
        } else if constexpr (std::is_same_v<T, factor::Plateau>) {
          T h = g;
          h.center += x0[g.axis];
          return {1.0, h};
        } else {
          T h = g;
          h.center = add_points(g.center, x0);
          return {1.0, h};
        }
      },
      f);
}

// Total order on factors: by family, then by parameters.
auto factor_key(const Factor& f) {
  return std::visit(
      [](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        std::vector<double> key;
        if constexpr (std::is_same_v<T, factor::Gauss> || std::is_same_v<T, factor::Chirp>) {
          key.push_back(g.rate);
          key.insert(key.end(), g.center.begin(), g.center.end());
        } else if constexpr (std::is_same_v<T, factor::Oscillation>) {
          key = g.frequency;
        } else if constexpr (std::is_same_v<T, factor::Bump>) {
          key = {g.radius, static_cast<double>(g.axis), static_cast<double>(g.power)};
          key.insert(key.end(), g.center.begin(), g.center.end());
        } else if constexpr (std::is_same_v<T, factor::Plateau>) {
          key = {static_cast<double>(g.axis), g.half_width, g.width, g.center};
        } else {
          key = {g.rate, static_cast<double>(g.power)};
          key.insert(key.end(), g.center.begin(), g.center.end());
        }
        return key;
      },
      f);
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  return factor_key(a) < factor_key(b);
}

bool factors_equal(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (factor_less(a[i], b[i]) || factor_less(b[i], a[i])) return false;
  }
  return true;
}

bool factors_less(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), factor_less);
}

// Collapses products inside one family where the family is closed under
// multiplication (exponentials add their exponents, weights their powers).
std::vector<Factor> merge_factors(std::vector<Factor> in) {
  std::sort(in.begin(), in.end(), factor_less);
  std::vector<Factor> out;
  for (auto& f : in) {
    if (!out.empty()) {
      Factor& last = out.back();
      bool merged = false;
      if (auto* a = std::get_if<factor::Oscillation>(&last)) {
        if (auto* b = std::get_if<factor::Oscillation>(&f)) {
          for (std::size_t i = 0; i < a->frequency.size(); ++i) a->frequency[i] += b->frequency[i];
          merged = true;
        }
      } else if (auto* a = std::get_if<factor::Gauss>(&last)) {
        if (auto* b = std::get_if<factor::Gauss>(&f); b && b->center == a->center) {
          a->rate += b->rate;
          merged = true;
        }
      } else if (auto* a = std::get_if<factor::Chirp>(&last)) {
        if (auto* b = std::get_if<factor::Chirp>(&f); b && b->center == a->center) {
          a->rate += b->rate;
          merged = true;
        }
      } else if (auto* a = std::get_if<factor::Weight>(&last)) {
        if (auto* b = std::get_if<factor::Weight>(&f);
            b && b->center == a->center && b->rate == a->rate) {
          a->power += b->power;
          merged = true;
        }
      }
      if (merged) continue;
    }
    out.push_back(std::move(f));
  }
  // Drop factors that became identically 1.
  std::erase_if(out, [](const Factor& f) {
    if (auto* o = std::get_if<factor::Oscillation>(&f)) {
      return std::all_of(o->frequency.begin(), o->frequency.end(),
                         [](double v) { return v == 0.0; });
    }
    if (auto* c = std::get_if<factor::Chirp>(&f)) return c->rate == 0.0;
    if (auto* w = std::get_if<factor::Weight>(&f)) return w->power == 0;
    return false;
  });
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

// Axes along which a factor confines the support; empty when it does not.
std::vector<int> confined_axes(const Factor& f, int n) {
  std::vector<int> axes;
  if (auto* b = std::get_if<factor::Bump>(&f)) {
    if (b->axis < 0) {
      for (int i = 0; i < n; ++i) axes.push_back(i);
    } else {
      axes.push_back(b->axis);
    }
  } else if (auto* p = std::get_if<factor::Plateau>(&f)) {
    axes.push_back(p->axis);
  }
  return axes;
}

struct TermShape {
  bool compact = false;
  bool rapid = false;
  int base = 0;
  int slope = 0;
  int free_dimensions = 0;
};

TermShape term_shape(const Term& t, int n) {
  TermShape shape;
  std::vector<bool> free(n, true);
  for (const auto& f : t.factors) {
    for (int a : confined_axes(f, n)) free[a] = false;
  }
  shape.free_dimensions = static_cast<int>(std::count(free.begin(), free.end(), true));
  if (shape.free_dimensions == 0) {
    shape.compact = true;
    return shape;
  }
  int decay = 0;
  for (const auto& f : t.factors) {
    if (auto* g = std::get_if<factor::Gauss>(&f); g && g->rate > 0.0) shape.rapid = true;
    if (auto* c = std::get_if<factor::Chirp>(&f); c && c->rate != 0.0) shape.slope = 1;
    if (auto* w = std::get_if<factor::Weight>(&f); w && w->rate > 0.0) decay += 2 * w->power;
  }
  shape.base = t.poly.degree_in(free) - decay;
  return shape;
}

}  // namespace

// ------------------------------------------------------------- Polynomial

void Polynomial::add(const MultiIndex& e, Complex c) {
  if (c == 0.0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) coeffs_.erase(it);
  }
}

Polynomial Polynomial::constant(int n, Complex c) {
  Polynomial p(n);
  p.add(MultiIndex(n, 0), c);
  return p;
}

Polynomial Polynomial::monomial(int n, const MultiIndex& e, Complex c) {
  Polynomial p(n);
  p.add(e, c);
  return p;
}

Polynomial Polynomial::coordinate(int n, int axis, Complex c, double shift) {
  Polynomial p(n);
  p.add(unit_index(n, axis), c);
  p.add(MultiIndex(n, 0), -c * shift);
  return p;
}

Polynomial Polynomial::univariate(const std::vector<Complex>& coefficients) {
  Polynomial p(1);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    p.add(MultiIndex{static_cast<int>(k)}, coefficients[k]);
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : coeffs_) d = std::max(d, order(e));
  return d;
}

int Polynomial::degree_in(const std::vector<bool>& free) const {
  int d = -1;
  for (const auto& [e, c] : coeffs_) {
    int s = 0;
    for (int i = 0; i < n_; ++i) {
      if (free[i]) s += e[i];
    }
    d = std::max(d, s);
  }
  return d;
}

Complex Polynomial::evaluate(const Point& x) const {
  Complex sum = 0.0;
  for (const auto& [e, c] : coeffs_) {
    double m = 1.0;
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    }
    sum += c * m;
  }
  return sum;
}

Polynomial Polynomial::partial(int axis) const {
  Polynomial p(n_);
  for (const auto& [e, c] : coeffs_) {
    if (e[axis] == 0) continue;
    MultiIndex d = e;
    --d[axis];
    p.add(d, c * static_cast<double>(e[axis]));
  }
  return p;
}

Polynomial Polynomial::dilate(double c) const {
  Polynomial p(n_);
  for (const auto& [e, v] : coeffs_) p.add(e, v * std::pow(c, order(e)));
  return p;
}

Polynomial Polynomial::translate(const Point& x0) const {
  Polynomial result(n_);
  for (const auto& [e, c] : coeffs_) {
    Polynomial m = constant(n_, c);
    for (int i = 0; i < n_; ++i) {
      Polynomial shifted = coordinate(n_, i, 1.0, x0[i]);
      for (int k = 0; k < e[i]; ++k) m = m * shifted;
    }
    result = result + m;
  }
  return result;
}

Polynomial Polynomial::scaled(Complex c) const {
  Polynomial p(n_);
  for (const auto& [e, v] : coeffs_) p.add(e, v * c);
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p = *this;
  for (const auto& [e, c] : o.coeffs_) p.add(e, c);
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial p(n_);
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) {
      MultiIndex e(n_);
      for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      p.add(e, c1 * c2);
    }
  }
  return p;
}

// --------------------------------------------------------- GrowthProfile

std::string decay_label(DecayClass d) {
  switch (d) {
    case DecayClass::kCompactSupport: return "CompactSupport";
    case DecayClass::kRapidDecay: return "RapidDecay";
    case DecayClass::kTendsToZero: return "TendsToZero";
    case DecayClass::kBounded: return "Bounded";
    case DecayClass::kPolynomialGrowth: return "PolynomialGrowth";
  }
  return "?";
}

int GrowthProfile::exponent(int order) const {
  if (decays_rapidly()) return 0;
  int g = growth(order);
  return g < 0 ? 0 : g / 2 + 1;
}

double unit_bump_mass() {
  static const double mass = bump_integral(-1.0, 1.0);
  return mass;
}

// ------------------------------------------------------- SymbolicFunction

SymbolicFunction::SymbolicFunction(int dimension) : n_(dimension), label_("const(0)") {
  if (dimension < 1) throw Error("dimension must be >= 1");
}

SymbolicFunction::SymbolicFunction(int dimension, std::vector<Term> terms, std::string label)
    : n_(dimension), terms_(std::move(terms)), label_(std::move(label)) {
  normalize();
}

SymbolicFunction SymbolicFunction::with_label(std::string label) const {
  SymbolicFunction f = *this;
  f.label_ = std::move(label);
  return f;
}

void SymbolicFunction::normalize() {
  for (auto& t : terms_) t.factors = merge_factors(std::move(t.factors));
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return factors_less(a.factors, b.factors); });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && factors_equal(merged.back().factors, t.factors)) {
      merged.back().poly = merged.back().poly + t.poly;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.poly.is_zero(); });
  terms_ = std::move(merged);
}

SymbolicFunction SymbolicFunction::bump(double radius, int n) {
  if (!(radius > 0.0)) throw Error("bump radius must be positive");
  return SymbolicFunction(
      n, {Term{Polynomial::constant(n, 1.0), {factor::Bump{radius, Point(n, 0.0), -1, 0}}}},
      "bump(" + num(radius) + ")");
}

SymbolicFunction SymbolicFunction::gaussian(double rate, int n) {
  if (!(rate > 0.0)) throw Error("gaussian rate must be positive");
  return SymbolicFunction(n, {Term{Polynomial::constant(n, 1.0), {factor::Gauss{rate, Point(n, 0.0)}}}},
                          "gauss(" + num(rate) + ")");
}

SymbolicFunction SymbolicFunction::polynomial(const std::vector<Complex>& coefficients) {
  std::string label = "poly(";
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k) label += ",";
    label += num(coefficients[k].real());
  }
  return SymbolicFunction(1, {Term{Polynomial::univariate(coefficients), {}}}, label + ")");
}

SymbolicFunction SymbolicFunction::polynomial(const Polynomial& p) {
  return SymbolicFunction(p.dimension(), {Term{p, {}}}, "poly");
}

SymbolicFunction SymbolicFunction::complex_exp(const Point& frequency) {
  const int n = static_cast<int>(frequency.size());
  return SymbolicFunction(n, {Term{Polynomial::constant(n, 1.0), {factor::Oscillation{frequency}}}},
                          "cexp(" + point_label(frequency) + ")");
}

SymbolicFunction SymbolicFunction::chirp(int n) {
  return SymbolicFunction(n, {Term{Polynomial::constant(n, 1.0), {factor::Chirp{1.0, Point(n, 0.0)}}}},
                          "chirp");
}

SymbolicFunction SymbolicFunction::constant(Complex value, int n) {
  std::string label = value.imag() == 0.0
                          ? "const(" + num(value.real()) + ")"
                          : "const(" + num(value.real()) + "," + num(value.imag()) + ")";
  return SymbolicFunction(n, {Term{Polynomial::constant(n, value), {}}}, label);
}

SymbolicFunction SymbolicFunction::plateau(double half_width, double width, int n) {
  if (!(width > 0.0) || !(half_width > width)) {
    throw Error("plateau needs 0 < width < half_width");
  }
  std::vector<Factor> factors;
  for (int axis = 0; axis < n; ++axis) {
    factors.push_back(factor::Plateau{axis, half_width, width, 0.0});
  }
  return SymbolicFunction(n, {Term{Polynomial::constant(n, 1.0), factors}},
                          "plateau(" + num(half_width) + "," + num(width) + ")");
}

SymbolicFunction SymbolicFunction::weight(int power, int n) {
  if (power < 0) throw Error("weight power must be >= 0");
  return SymbolicFunction(
      n, {Term{Polynomial::constant(n, 1.0), {factor::Weight{1.0, Point(n, 0.0), power}}}},
      "weight(" + std::to_string(power) + ")");
}

Complex SymbolicFunction::evaluate(const Point& x) const {
  if (static_cast<int>(x.size()) != n_) throw DimensionMismatch("point has wrong dimension");
  Complex sum = 0.0;
  for (const auto& t : terms_) {
    Complex v = 1.0;
    for (const auto& f : t.factors) {
      v *= evaluate_factor(f, x);
      if (v == 0.0) break;
    }
    if (v == 0.0) continue;
    sum += v * t.poly.evaluate(x);
  }
  return sum;
}

SymbolicFunction SymbolicFunction::partial(int axis) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Polynomial dp = t.poly.partial(axis);
    if (!dp.is_zero()) out.push_back({dp, t.factors});
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      for (auto& [q, g] : partial_factor(t.factors[i], axis, n_)) {
        std::vector<Factor> fs = t.factors;
        fs[i] = g;
        out.push_back({t.poly * q, std::move(fs)});
      }
    }
  }
  return SymbolicFunction(n_, std::move(out), label_);
}

SymbolicFunction SymbolicFunction::derivative(const MultiIndex& alpha) const {
  if (static_cast<int>(alpha.size()) != n_) {
    throw DimensionMismatch("multi-index length differs from dimension");
  }
  SymbolicFunction f = *this;
  for (int axis = 0; axis < n_; ++axis) {
    for (int k = 0; k < alpha[axis]; ++k) f = f.partial(axis);
  }
  f.label_ = order(alpha) == 0 ? label_ : "d" + index_string(alpha) + "(" + label_ + ")";
  return f;
}

SymbolicFunction SymbolicFunction::dilate(double c) const {
  if (!(c > 0.0)) throw Error("dilation factor must be positive");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::vector<Factor> fs;
    for (const auto& f : t.factors) fs.push_back(dilate_factor(f, c));
    out.push_back({t.poly.dilate(c), std::move(fs)});
  }
  return SymbolicFunction(n_, std::move(out), "dilate(" + label_ + "," + num(c) + ")");
}

SymbolicFunction SymbolicFunction::translate(const Point& x0) const {
  if (static_cast<int>(x0.size()) != n_) throw DimensionMismatch("shift has wrong dimension");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Complex coeff = 1.0;
    std::vector<Factor> fs;
    for (const auto& f : t.factors) {
      auto [c, g] = translate_factor(f, x0);
      coeff *= c;
      fs.push_back(std::move(g));
    }
    out.push_back({t.poly.translate(x0).scaled(coeff), std::move(fs)});
  }
  return SymbolicFunction(n_, std::move(out),
                          "translate(" + label_ + "," + point_label(x0) + ")");
}

SymbolicFunction SymbolicFunction::scaled(Complex c) const {
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({t.poly.scaled(c), t.factors});
  return SymbolicFunction(n_, std::move(out), complex_label(c) + "*" + label_);
}

SymbolicFunction SymbolicFunction::operator+(const SymbolicFunction& o) const {
  if (o.n_ != n_) throw DimensionMismatch("sum of functions on different R^n");
  std::vector<Term> out = terms_;
  out.insert(out.end(), o.terms_.begin(), o.terms_.end());
  return SymbolicFunction(n_, std::move(out), "(" + label_ + "+" + o.label_ + ")");
}

SymbolicFunction SymbolicFunction::operator-(const SymbolicFunction& o) const {
  SymbolicFunction neg = o.scaled(-1.0);
  std::vector<Term> out = terms_;
  out.insert(out.end(), neg.terms_.begin(), neg.terms_.end());
  return SymbolicFunction(n_, std::move(out), "(" + label_ + "+-1*" + o.label_ + ")");
}

SymbolicFunction SymbolicFunction::operator*(const SymbolicFunction& o) const {
  if (o.n_ != n_) throw DimensionMismatch("product of functions on different R^n");
  std::vector<Term> out;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      std::vector<Factor> fs = a.factors;
      fs.insert(fs.end(), b.factors.begin(), b.factors.end());
      out.push_back({a.poly * b.poly, std::move(fs)});
    }
  }
  return SymbolicFunction(n_, std::move(out), label_ + "*" + o.label_);
}

GrowthProfile SymbolicFunction::growth_profile() const {
  GrowthProfile p;
  bool any_slow = false;
  for (const auto& t : terms_) {
    TermShape s = term_shape(t, n_);
    if (s.compact) continue;
    if (s.rapid) {
      p.decay = std::max(p.decay, DecayClass::kRapidDecay);
      continue;
    }
    if (!any_slow) {
      p.base = s.base;
      p.slope = s.slope;
      p.free_dimensions = s.free_dimensions;
      any_slow = true;
    } else {
      p.base = std::max(p.base, s.base);
      p.slope = std::max(p.slope, s.slope);
      p.free_dimensions = std::max(p.free_dimensions, s.free_dimensions);
    }
  }
  if (any_slow) {
    DecayClass c = p.base < 0    ? DecayClass::kTendsToZero
                   : p.base == 0 ? DecayClass::kBounded
                                 : DecayClass::kPolynomialGrowth;
    p.decay = std::max(p.decay, c);
  }
  return p;
}

std::optional<Box> SymbolicFunction::support_box() const {
  Box box;
  box.bounds.assign(n_, {0.0, 0.0});
  bool first = true;
  for (const auto& t : terms_) {
    std::vector<std::optional<std::pair<double, double>>> axes(n_);
    auto clip = [&](int axis, double lo, double hi) {
      if (!axes[axis]) {
        axes[axis] = std::make_pair(lo, hi);
      } else {
        axes[axis]->first = std::max(axes[axis]->first, lo);
        axes[axis]->second = std::min(axes[axis]->second, hi);
      }
    };
    for (const auto& f : t.factors) {
      if (auto* b = std::get_if<factor::Bump>(&f)) {
        for (int a : confined_axes(f, n_)) clip(a, b->center[a] - b->radius, b->center[a] + b->radius);
      } else if (auto* p = std::get_if<factor::Plateau>(&f)) {
        double reach = p->half_width + p->width;
        clip(p->axis, p->center - reach, p->center + reach);
      }
    }
    for (int i = 0; i < n_; ++i) {
      if (!axes[i]) return std::nullopt;
      if (first) {
        box.bounds[i] = *axes[i];
      } else {
        box.bounds[i].first = std::min(box.bounds[i].first, axes[i]->first);
        box.bounds[i].second = std::max(box.bounds[i].second, axes[i]->second);
      }
    }
    first = false;
  }
  return box;
}

std::optional<double> SymbolicFunction::support_radius() const {
  if (!support_box()) return std::nullopt;
  double radius = 0.0;
  for (const auto& t : terms_) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> reach(n_, std::numeric_limits<double>::infinity());
    for (const auto& f : t.factors) {
      if (auto* b = std::get_if<factor::Bump>(&f)) {
        if (b->axis < 0) {
          best = std::min(best, std::sqrt(squared_distance(b->center, Point(n_, 0.0))) + b->radius);
        } else {
          reach[b->axis] = std::min(reach[b->axis], std::abs(b->center[b->axis]) + b->radius);
        }
      } else if (auto* p = std::get_if<factor::Plateau>(&f)) {
        reach[p->axis] = std::min(reach[p->axis], std::abs(p->center) + p->half_width + p->width);
      }
    }
    double sq = 0.0;
    for (double r : reach) sq += r * r;
    best = std::min(best, std::sqrt(sq));
    radius = std::max(radius, best);
  }
  return radius;
}

bool SymbolicFunction::analytic() const {
  for (const auto& t : terms_) {
    for (const auto& f : t.factors) {
      if (std::holds_alternative<factor::Bump>(f) || std::holds_alternative<factor::Plateau>(f)) {
        return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------------------- membership

Membership membership(const SymbolicFunction& f, const Space& e) {
  if (!e.is_function_space()) {
    throw MembershipError(e.token() +
                          " is a distribution space; use the distributions module");
  }
  if (e.dimension() != f.dimension()) {
    throw DimensionMismatch("function and space live on different R^n");
  }
  const GrowthProfile g = f.growth_profile();
  const std::string growth = "derivatives of order k grow like |x|^(" + std::to_string(g.base) +
                             (g.slope ? " + k" : "") + ")";
  switch (e.kind()) {
    case Kind::kD:
      if (g.decay == DecayClass::kCompactSupport) return {true, "compact support"};
      return {false, "support is not compact"};
    case Kind::kS:
      if (g.decays_rapidly()) return {true, "every x^b d^a f decays (" + decay_label(g.decay) + ")"};
      return {false, "not rapidly decreasing: " + growth};
    case Kind::kDLp: {
      if (!e.parameter()) throw MembershipError("membership in D_Lp needs a concrete exponent");
      double p = *e.parameter();
      if (g.decays_rapidly()) return {true, "all derivatives decay rapidly"};
      if (g.slope == 0 && g.base * p < -g.free_dimensions) {
        return {true, "all derivatives are O(|x|^" + std::to_string(g.base) + "), p-integrable"};
      }
      return {false, "some derivative is not p-integrable: " + growth};
    }
    case Kind::kBDot:
      if (g.decays_rapidly() || (g.slope == 0 && g.base < 0)) {
        return {true, "every derivative tends to 0"};
      }
      return {false, "some derivative does not tend to 0: " + growth};
    case Kind::kDLInf:
      if (g.decays_rapidly() || (g.slope == 0 && g.base <= 0)) {
        return {true, "every derivative is bounded"};
      }
      return {false, "some derivative is unbounded: " + growth};
    case Kind::kOC:
      if (g.uniform()) {
        return {true, "Uniform(k=" + std::to_string(g.exponent(0)) +
                          "): one weight (1+|x|^2)^-k serves every derivative"};
      }
      return {false, "OrderDependent: " + growth + ", no single exponent k works for all orders"};
    case Kind::kOM:
      return {true, g.uniform() ? "Uniform(k=" + std::to_string(g.exponent(0)) + ")"
                                : "OrderDependent: " + growth};
    case Kind::kE:
      return {true, "smooth"};
    default:
      break;
  }
  throw MembershipError("unsupported space " + e.token());
}

}  // namespace distcalc
