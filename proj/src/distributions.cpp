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

#include "distcalc/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <boost/math/quadrature/trapezoidal.hpp>

#include "distcalc/errors.hpp"
#include "distcalc/format.hpp"

namespace distcalc {
namespace {

MultiIndex normalized_index(MultiIndex alpha, int n) {
  if (alpha.empty()) return MultiIndex(n, 0);
  if (static_cast<int>(alpha.size()) != n) {
    throw DimensionMismatch("multi-index length differs from dimension");
  }
  return alpha;
}

MultiIndex add_indices(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

MultiIndex sub_index(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

int carrier_dimension(const Carrier& c) {
  if (auto* p = std::get_if<PointMass>(&c)) return static_cast<int>(p->location.size());
  return std::get<FunctionCarrier>(c).f.dimension();
}

double sign(const MultiIndex& alpha) { return order(alpha) % 2 == 0 ? 1.0 : -1.0; }

// ∫ g over [lo, hi] (one axis at a time) by refined trapezoid sums.
double integrate_axis(const std::function<double(const Point&)>& g, const Box& box, int axis,
                      Point& x, double tol) {
  const auto [lo, hi] = box.bounds[axis];
  if (hi <= lo) return 0.0;
  auto slice = [&](double t) {
    x[axis] = t;
    if (axis + 1 == static_cast<int>(x.size())) return g(x);
    return integrate_axis(g, box, axis + 1, x, tol);
  };
  try {
    return boost::math::quadrature::trapezoidal(slice, lo, hi, tol, 18);
  } catch (const std::exception& e) {
    throw NumericError(std::string("trapezoid refinement failed: ") + e.what());
  }
}

Complex integrate(const SymbolicFunction& g, const PairingOptions& options) {
  const int n = g.dimension();
  Box box;
  if (auto b = g.support_box()) {
    box = *b;
  } else {
    box.bounds.assign(n, {-options.radius, options.radius});
  }
  Point x(n, 0.0);
  double re = integrate_axis([&](const Point& p) { return g.evaluate(p).real(); }, box, 0, x,
                             options.tolerance);
  double im = integrate_axis([&](const Point& p) { return g.evaluate(p).imag(); }, box, 0, x,
                             options.tolerance);
  return {re, im};
}

void require_integrable(const SymbolicFunction& g) {
  GrowthProfile p = g.growth_profile();
  if (p.decays_rapidly()) return;
  if (p.base < -p.free_dimensions) return;
  throw NumericError("pairing integrand " + g.label() + " is not absolutely integrable");
}

}  // namespace

DistributionRep::DistributionRep(int dimension, std::vector<DistTerm> terms)
    : n_(dimension), terms_(std::move(terms)) {
  if (terms_.empty()) throw Error("a distribution needs at least one term");
  for (auto& t : terms_) {
    t.alpha = normalized_index(std::move(t.alpha), n_);
    if (carrier_dimension(t.carrier) != n_) {
      throw DimensionMismatch("distribution terms live on different R^n");
    }
  }
}

DistributionRep DistributionRep::dirac(const Point& x0, MultiIndex alpha) {
  const int n = static_cast<int>(x0.size());
  return DistributionRep(n, {DistTerm{1.0, std::move(alpha), PointMass{x0}}});
}

DistributionRep DistributionRep::function(const SymbolicFunction& f, MultiIndex alpha) {
  return DistributionRep(f.dimension(), {DistTerm{1.0, std::move(alpha), FunctionCarrier{f}}});
}

bool DistributionRep::point_masses_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const DistTerm& t) {
    return std::holds_alternative<PointMass>(t.carrier);
  });
}

DistributionRep DistributionRep::derivative(const MultiIndex& alpha) const {
  MultiIndex a = normalized_index(alpha, n_);
  std::vector<DistTerm> out = terms_;
  for (auto& t : out) t.alpha = add_indices(t.alpha, a);
  return DistributionRep(n_, std::move(out));
}

DistributionRep DistributionRep::scaled(Complex c) const {
  std::vector<DistTerm> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return DistributionRep(n_, std::move(out));
}

DistributionRep DistributionRep::operator+(const DistributionRep& o) const {
  if (o.n_ != n_) throw DimensionMismatch("sum of distributions on different R^n");
  std::vector<DistTerm> out = terms_;
  out.insert(out.end(), o.terms_.begin(), o.terms_.end());
  return DistributionRep(n_, std::move(out));
}

std::string DistributionRep::label() const {
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const DistTerm& t = terms_[i];
    if (i) s += "+";
    if (t.coeff != Complex(1.0)) {
      s += t.coeff.imag() == 0.0
               ? format_number(t.coeff.real())
               : "(" + format_number(t.coeff.real()) + "+" + format_number(t.coeff.imag()) + "i)";
      s += "*";
    }
    if (order(t.alpha) > 0) s += "d" + index_string(t.alpha);
    if (auto* p = std::get_if<PointMass>(&t.carrier)) {
      s += "dirac(" + format_point(p->location) + ")";
    } else {
      s += "fn(" + std::get<FunctionCarrier>(t.carrier).f.label() + ")";
    }
  }
  return s;
}

void BoundedSetSpec::validate() const {
  for (const auto& g : members) {
    if (ambient.is_function_space()) {
      Membership m = membership(g, ambient.with_dimension(g.dimension()));
      if (!m.member) {
        throw MembershipError(g.label() + " is not in " + ambient.token() + ": " + m.reason);
      }
    }
  }
}

Complex pair(const SymbolicFunction& phi, const DistributionRep& t,
             const PairingOptions& options) {
  if (phi.dimension() != t.dimension()) {
    throw DimensionMismatch("test function and distribution live on different R^n");
  }
  Complex sum = 0.0;
  for (const auto& term : t.terms()) {
    SymbolicFunction d = phi.derivative(term.alpha);
    Complex value;
    if (auto* p = std::get_if<PointMass>(&term.carrier)) {
      value = d.evaluate(p->location);
    } else {
      SymbolicFunction integrand = d * std::get<FunctionCarrier>(term.carrier).f;
      require_integrable(integrand);
      value = integrate(integrand, options);
    }
    sum += term.coeff * sign(term.alpha) * value;
  }
  return sum;
}

DistributionRep multiply(const SymbolicFunction& f, const DistributionRep& t) {
  if (f.dimension() != t.dimension()) {
    throw DimensionMismatch("function and distribution live on different R^n");
  }
  std::vector<DistTerm> out;
  for (const auto& term : t.terms()) {
    for (const auto& beta : sub_indices(term.alpha)) {
      Complex c = term.coeff * binomial(term.alpha, beta) * sign(beta);
      SymbolicFunction db = f.derivative(beta);
      MultiIndex rest = sub_index(term.alpha, beta);
      if (auto* p = std::get_if<PointMass>(&term.carrier)) {
        Complex v = db.evaluate(p->location);
        if (v == 0.0) continue;
        out.push_back({c * v, rest, *p});
      } else {
        SymbolicFunction prod = db * std::get<FunctionCarrier>(term.carrier).f;
        if (prod.is_zero()) continue;
        out.push_back({c, rest, FunctionCarrier{prod}});
      }
    }
  }
  if (out.empty()) {
    // The product vanishes; represent zero as 0·δ_0.
    out.push_back({0.0, MultiIndex(t.dimension(), 0), PointMass{Point(t.dimension(), 0.0)}});
  }
  return DistributionRep(t.dimension(), std::move(out));
}

SymbolicFunction convolve_pointmass(const SymbolicFunction& f, const DistributionRep& t) {
  if (f.dimension() != t.dimension()) {
    throw DimensionMismatch("function and distribution live on different R^n");
  }
  if (!t.point_masses_only()) {
    throw NotSupported("convolution with a function carrier is not modelled");
  }
  SymbolicFunction sum(f.dimension());
  bool first = true;
  for (const auto& term : t.terms()) {
    const auto& x0 = std::get<PointMass>(term.carrier).location;
    SymbolicFunction piece = f.derivative(term.alpha).translate(x0);
    if (term.coeff != Complex(1.0)) piece = piece.scaled(term.coeff);
    sum = first ? piece : sum + piece;
    first = false;
  }
  return sum.with_label(f.label() + "*(" + t.label() + ")");
}

DistributionRep convolve(const DistributionRep& s, const DistributionRep& t) {
  if (s.dimension() != t.dimension()) {
    throw DimensionMismatch("convolution of distributions on different R^n");
  }
  if (!s.point_masses_only() && !t.point_masses_only()) {
    throw NotSupported("convolution of two function carriers is not modelled");
  }
  std::vector<DistTerm> out;
  for (const auto& a : s.terms()) {
    for (const auto& b : t.terms()) {
      Complex c = a.coeff * b.coeff;
      MultiIndex alpha = add_indices(a.alpha, b.alpha);
      const auto* pa = std::get_if<PointMass>(&a.carrier);
      const auto* pb = std::get_if<PointMass>(&b.carrier);
      if (pa && pb) {
        Point loc(pa->location.size());
        for (std::size_t i = 0; i < loc.size(); ++i) loc[i] = pa->location[i] + pb->location[i];
        out.push_back({c, alpha, PointMass{loc}});
      } else if (pa) {
        out.push_back(
            {c, alpha, FunctionCarrier{std::get<FunctionCarrier>(b.carrier).f.translate(pa->location)}});
      } else {
        out.push_back(
            {c, alpha, FunctionCarrier{std::get<FunctionCarrier>(a.carrier).f.translate(pb->location)}});
      }
    }
  }
  return DistributionRep(s.dimension(), std::move(out));
}

double dual_seminorm(const DistributionRep& t, const BoundedSetSpec& b,
                     const PairingOptions& options) {
  double best = 0.0;
  for (const auto& g : b.members) best = std::max(best, std::abs(pair(g, t, options)));
  return best;
}

}  // namespace distcalc
