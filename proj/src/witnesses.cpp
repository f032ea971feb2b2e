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

#include "distcalc/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <boost/math/quadrature/trapezoidal.hpp>
#include <nlohmann/json.hpp>

#include "distcalc/distributions.hpp"
#include "distcalc/errors.hpp"
#include "distcalc/expr.hpp"
#include "distcalc/format.hpp"

namespace distcalc {
namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();
// Relative rounding allowance on lhs <= C·rhs.
constexpr double kBoundSlack = 1e-9;

const std::vector<std::pair<WitnessId, std::string>> kWitnessLabels = {
    {WitnessId::kProp1, "W_Prop1"},
    {WitnessId::kProp2Scaling, "W_Prop2_scaling"},
    {WitnessId::kProp4Chirp, "W_Prop4_chirp"},
    {WitnessId::kProp6Oscillation, "W_Prop6_oscillation"},
    {WitnessId::kProp7ShiftedDeltas, "W_Prop7_shiftedDeltas"},
    {WitnessId::kRem3ConvDE, "W_Rem3_convDE"},
    {WitnessId::kRem5Item9, "W_Rem5_9"},
    {WitnessId::kRem5Item14, "W_Rem5_14"},
};

SymbolicFunction unit_bump() { return SymbolicFunction::bump(1.0); }

// φ = 1 on [-1/2, 1/2], 0 outside [-3/2, 3/2].
SymbolicFunction cutoff() { return SymbolicFunction::plateau(1.0, 0.5); }

// Bounded subset of E used for the dual seminorms on E'.
BoundedSetSpec bounded_in_e() {
  return {{SymbolicFunction::complex_exp(1.0), SymbolicFunction::gaussian(1.0)},
          Space(Kind::kE)};
}

// Bounded subset of D, all supports inside K = [-1, 1].
BoundedSetSpec bounded_in_d() { return {{unit_bump()}, Space(Kind::kD)}; }

GridSpec widened(GridSpec grid, double reach) {
  grid.radius = std::max(grid.radius, reach);
  return grid;
}

double d_norm(const SymbolicFunction& f, const GridSpec& grid, int m0 = 0) {
  return eval_seminorm(DNorm{m0, 1.0}, f, widened(grid, *f.support_radius() + 0.5));
}

WitnessId family_for(const MapFact& fact) {
  switch (fact.ref) {
    case PropRef::kProp1: return WitnessId::kProp1;
    case PropRef::kProp2:
    case PropRef::kRemark2:
    case PropRef::kRemark5Item6:
    case PropRef::kRemark5Item7: return WitnessId::kProp2Scaling;
    case PropRef::kProp4: return WitnessId::kProp4Chirp;
    case PropRef::kProp6:
    case PropRef::kRemark5Item13: return WitnessId::kProp6Oscillation;
    case PropRef::kProp7:
    case PropRef::kRemark5Item8: return WitnessId::kProp7ShiftedDeltas;
    case PropRef::kRemark3:
    case PropRef::kRemark5Item4:
    case PropRef::kRemark5Item5:
    case PropRef::kRemark5Item10: return WitnessId::kRem3ConvDE;
    case PropRef::kRemark5Item9: return WitnessId::kRem5Item9;
    case PropRef::kRemark5Item14: return WitnessId::kRem5Item14;
    default: break;
  }
  throw NoKnownWitness("no counterexample family for " + describe(fact));
}

std::string parameter_name(WitnessId id) {
  switch (id) {
    case WitnessId::kProp2Scaling: return "scaling c";
    case WitnessId::kProp4Chirp: return "radius r";
    case WitnessId::kProp6Oscillation: return "frequency c";
    default: return "shift x0";
  }
}

std::string description(WitnessId id) {
  switch (id) {
    case WitnessId::kProp1:
      return "phi = f = bump(1) shifted to x0 outside K=[-1,1]; p_{2,K}(f) = 0 < pD(phi f)";
    case WitnessId::kProp2Scaling:
      return "f(cx) with f = bump(1), T = d^(m0+1) delta; sup_{|x|<=1}|f(c.)*T| vs "
             "pD(m0,1)(f(c.)) p_B(T), B = {cexp(1), gauss(1)}";
    case WitnessId::kProp4Chirp:
      return "f_r = e^{ix^2} phi(x/r), phi = plateau(1,0.5); ||(1+x^2)^-l d^(2l+1) f_r|| vs the "
             "Cauchy quantity of (f_r, f_2r) with weight (1+x^2)^(-l-1)";
    case WitnessId::kProp6Oscillation:
      return "f = e^{icx}, T = d^(m+1) delta, phi = plateau(1,0.5); |<phi, fT>| = c^(m+1) vs "
             "p_m(f) p_B(T) = c^m p_B(T)";
    case WitnessId::kProp7ShiftedDeltas:
      return "S = delta_{-x1}, T = delta_{x1}, phi0 = bump(1); |<phi0, S*T>| = phi0(0) vs "
             "p_B'(S) p_B(T), B = {bump(1)} vanishing at x1";
    case WitnessId::kRem3ConvDE:
      return "f = bump(1) shifted to x0 (zero on K), phi = bump(1) shifted to -x0; f*phi = "
             "bump*bump is nonzero near 0 while the seminorm of f on K vanishes";
    case WitnessId::kRem5Item9:
      return "T = delta_{x0}, phi = bump(1) shifted to -x0; |<bump(1), phi*T>| > 0 = p_B(T)";
    case WitnessId::kRem5Item14:
      return "T = delta_{x0}, phi = bump(1) shifted to x0; |<1, phi T>| = phi(x0) > 0 = p_B(T)";
  }
  return "";
}

// (f*φ)(x) for f = b(· - x0), φ = b(· + x0) with b even: the integrand
// y ↦ φ(y) b(x - y - x0) is φ times b translated to x - x0.
double shifted_bump_convolution(double x, double x0) {
  SymbolicFunction b = unit_bump();
  SymbolicFunction phi = b.translate(-x0);
  return std::abs(pair(phi, DistributionRep::function(b.translate(x - x0))));
}

SymbolicFunction chirp_cutoff(double r) { return SymbolicFunction::chirp() * cutoff().dilate(1.0 / r); }

// Grid for functions whose modulus is smooth and whose support reaches
// `reach`.
GridSpec reach_grid(double reach) {
  GridSpec g;
  g.radius = reach + 0.5;
  g.points = std::max(1024, static_cast<int>(64 * g.radius));
  return g;
}

double cauchy_quantity(int l, double r, double s) {
  SymbolicFunction d = (chirp_cutoff(r) - chirp_cutoff(s)) * SymbolicFunction::weight(l + 1);
  if (d.is_zero()) return 0.0;
  GridSpec g = reach_grid(1.5 * std::max(r, s));
  double best = 0.0;
  for (int k = 0; k <= l; ++k) best = std::max(best, sup_norm(d.derivative({k}), g));
  return best;
}

}  // namespace

std::string witness_label(WitnessId id) {
  for (const auto& [k, v] : kWitnessLabels) {
    if (k == id) return v;
  }
  return "?";
}

WitnessId parse_witness_label(const std::string& label) {
  for (const auto& [k, v] : kWitnessLabels) {
    if (v == label) return k;
  }
  throw ParseError("unknown witness family '" + label + "'", 0);
}

std::string witness_verdict_label(WitnessVerdict v) {
  switch (v) {
    case WitnessVerdict::kDiverges: return "diverges";
    case WitnessVerdict::kZeroDenominator: return "zero-denominator";
    case WitnessVerdict::kFailed: return "failed";
  }
  return "?";
}

WitnessVerdict parse_witness_verdict(const std::string& label) {
  for (auto v : {WitnessVerdict::kDiverges, WitnessVerdict::kZeroDenominator,
                 WitnessVerdict::kFailed}) {
    if (witness_verdict_label(v) == label) return v;
  }
  throw ParseError("unknown witness verdict '" + label + "'", 0);
}

WitnessFamily witness_for(const Space& a, const Space& b, Op op) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("operands on different R^n");
  const std::optional<Space> natural = natural_result(a, b, op);
  const MapFact* exact = nullptr;
  const auto facts = known_discontinuous_maps(a.dimension());
  for (const auto& f : facts) {
    if (f.op != op) continue;
    bool same = (f.a.kind() == a.kind() && f.b.kind() == b.kind()) ||
                (f.a.kind() == b.kind() && f.b.kind() == a.kind());
    if (!same) continue;
    if (!exact || (natural && f.target.kind() == natural->kind())) exact = &f;
  }
  MapFact fact;
  if (exact) {
    fact = *exact;
  } else {
    if (!natural) {
      throw NoKnownWitness(a.token() + " " + op_token(op) + " " + b.token() + " is not admissible");
    }
    ContinuityVerdict v;
    try {
      v = classify_map(a, b, op, *natural);
    } catch (const NotAdmissible& e) {
      throw NoKnownWitness(e.what());
    }
    if (v.value != Verdict::kDiscontinuous) {
      throw NoKnownWitness(a.token() + " x " + b.token() + " -> " + natural->token() + " (" +
                           op_token(op) + ") is " + verdict_label(v.value) +
                           "; no counterexample exists or none is known");
    }
    fact = MapFact{a, b, op, v.target, v.ref};
  }
  return witness_for(fact);
}

WitnessFamily witness_for(const MapFact& fact) {
  const Op op = fact.op;
  WitnessFamily w;
  w.id = family_for(fact);
  w.map = fact;
  w.parameter = parameter_name(w.id);
  w.via_fourier = fact.ref == PropRef::kRemark2 ||
                  (op == Op::kConvolve &&
                   (w.id == WitnessId::kProp4Chirp || w.id == WitnessId::kProp6Oscillation));
  w.description = description(w.id);
  if (w.via_fourier) w.description += " (transferred by Fourier transform)";
  return w;
}

WitnessVerdict judge(const std::vector<double>& numerators,
                     const std::vector<double>& denominators) {
  const std::size_t k = numerators.size();
  if (k == 0 || denominators.size() != k) return WitnessVerdict::kFailed;
  bool all_zero = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (!(denominators[i] == 0.0 && numerators[i] > 1e-12)) all_zero = false;
  }
  if (all_zero) return WitnessVerdict::kZeroDenominator;
  std::vector<double> ratios;
  for (std::size_t i = 0; i < k; ++i) {
    if (!(denominators[i] > 0.0) || !std::isfinite(numerators[i])) return WitnessVerdict::kFailed;
    ratios.push_back(numerators[i] / denominators[i]);
  }
  const double step = kDivergenceFactor * (1.0 - kDivergenceSlack);
  for (std::size_t i = 1; i < k; ++i) {
    if (!(ratios[i] > ratios[i - 1]) || ratios[i] < step * ratios[i - 1]) {
      return WitnessVerdict::kFailed;
    }
  }
  if (ratios.back() < std::pow(kDivergenceFactor, static_cast<double>(k - 1)) *
                          (1.0 - kDivergenceSlack) * ratios.front()) {
    return WitnessVerdict::kFailed;
  }
  return WitnessVerdict::kDiverges;
}

WitnessReport run_witness(const WitnessFamily& w, int steps, const WitnessOptions& options) {
  if (steps < 3) throw Error("a witness run needs at least 3 steps");
  const GridSpec& grid = options.grid;
  grid.validate();
  WitnessReport rep;
  rep.family = witness_label(w.id);
  rep.map = describe(w.map);
  if (w.via_fourier) rep.notes.push_back("transferred by Fourier transform");

  auto doubling = [&](double start) {
    for (int i = 0; i < steps; ++i) rep.params.push_back(start * std::ldexp(1.0, i));
  };
  auto shifting = [&](double start) {
    for (int i = 0; i < steps; ++i) rep.params.push_back(start + i);
  };
  auto record = [&](double num, double den) {
    rep.numerators.push_back(num);
    rep.denominators.push_back(den);
    rep.ratios.push_back(den == 0.0 ? kInf : num / den);
  };

  switch (w.id) {
    case WitnessId::kProp1: {
      shifting(options.start > 0 ? options.start : 3.0);
      for (double x0 : rep.params) {
        SymbolicFunction f = unit_bump().translate(x0);
        SymbolicFunction phi = unit_bump().translate(x0);
        double num = d_norm(phi * f, grid);
        double den = d_norm(phi, grid) * eval_seminorm(ESeminorm{2, 1.0}, f, grid);
        record(num, den);
      }
      rep.notes.push_back("p = pD(0,1) on D, p~ = pD(0,1), p_{m,K} = pE(2,1)");
      break;
    }
    case WitnessId::kProp2Scaling: {
      const int m0 = options.order >= 0 ? options.order : 1;
      doubling(options.start > 0 ? options.start : 2.0);
      SymbolicFunction f = unit_bump();
      DistributionRep t = DistributionRep::dirac({0.0}, {m0 + 1});
      const double pb = dual_seminorm(t, bounded_in_e());
      const double pf = eval_seminorm(DNorm{m0, 1.0}, f, grid);
      const double sup_gamma = sup_on_ball(f.derivative({m0 + 1}), 1.0, grid);
      for (double c : rep.params) {
        SymbolicFunction ft = f.dilate(c);
        double num = sup_on_ball(convolve_pointmass(ft, t), 1.0, grid);
        double pft = eval_seminorm(DNorm{m0, 1.0}, ft, grid);
        record(num, pft * pb);
        rep.notes.push_back("c=" + format_number(c) + ": pD(f(c.)) = " + format_number(pft) +
                            " <= c^m0 pD(f) = " + format_number(std::pow(c, m0) * pf) +
                            "; numerator / (c^(m0+1) sup|d^gamma f|) = " +
                            format_number(num / (std::pow(c, m0 + 1) * sup_gamma)));
      }
      break;
    }
    case WitnessId::kProp4Chirp: {
      const int l = options.order >= 0 ? options.order : 1;
      if (l > 2) throw Error("W_Prop4_chirp supports l <= 2");
      doubling(options.start > 0 ? options.start : 4.0);
      for (double r : rep.params) {
        SymbolicFunction g =
            SymbolicFunction::weight(l) * chirp_cutoff(r).derivative({2 * l + 1});
        double num = sup_norm(g, reach_grid(1.5 * r));
        double den = cauchy_quantity(l, r, 2 * r);
        record(num, den);
      }
      rep.notes.push_back("numerator grows like r: no single weight (1+x^2)^l controls all "
                          "derivatives of the limit e^{ix^2}");
      rep.notes.push_back("denominator -> 0: (f_r) is Cauchy in O_C");
      break;
    }
    case WitnessId::kProp6Oscillation: {
      const int m = options.order >= 0 ? options.order : 2;
      doubling(options.start > 0 ? options.start : 2.0);
      DistributionRep t = DistributionRep::dirac({0.0}, {m + 1});
      const double pb = dual_seminorm(t, bounded_in_e());
      SymbolicFunction phi = cutoff();
      for (double c : rep.params) {
        SymbolicFunction f = SymbolicFunction::complex_exp(c);
        double num = std::abs(pair(phi, multiply(f, t)));
        double pm = eval_seminorm(LpNorm{m, kInf}, f, grid);
        record(num, pm * pb);
      }
      rep.notes.push_back("p_B(T) = " + format_number(pb));
      break;
    }
    case WitnessId::kProp7ShiftedDeltas: {
      shifting(options.start > 0 ? options.start : 2.0);
      SymbolicFunction phi0 = unit_bump();
      for (double x1 : rep.params) {
        DistributionRep s = DistributionRep::dirac({-x1});
        DistributionRep t = DistributionRep::dirac({x1});
        double num = std::abs(pair(phi0, convolve(s, t)));
        double den = dual_seminorm(s, bounded_in_e()) * dual_seminorm(t, bounded_in_d());
        record(num, den);
      }
      break;
    }
    case WitnessId::kRem3ConvDE: {
      shifting(options.start > 0 ? options.start : 3.0);
      const bool into_dprime = w.map.target.kind() == Kind::kDPrime;
      const bool dprime_operand =
          w.map.a.kind() == Kind::kDPrime || w.map.b.kind() == Kind::kDPrime;
      for (double x0 : rep.params) {
        SymbolicFunction f = unit_bump().translate(x0);
        SymbolicFunction phi = unit_bump().translate(-x0);
        double num;
        if (into_dprime) {
          // |<bump(1), f*φ>| by nested quadrature.
          SymbolicFunction psi0 = unit_bump();
          auto integrand = [&](double x) {
            return psi0.evaluate({x}).real() * shifted_bump_convolution(x, x0);
          };
          num = boost::math::quadrature::trapezoidal(integrand, -1.0, 1.0, 1e-10, 14);
        } else {
          Box k{{{-1.0, 1.0}}};
          num = grid_sup([&](const Point& x) { return shifted_bump_convolution(x[0], x0); }, k,
                         33);
        }
        double den;
        if (into_dprime) {
          den = eval_seminorm(ESeminorm{2, 1.0}, f, grid) *
                dual_seminorm(DistributionRep::function(phi), bounded_in_e());
        } else if (dprime_operand) {
          den = d_norm(phi, grid) * dual_seminorm(DistributionRep::function(f), bounded_in_d());
        } else {
          den = d_norm(phi, grid) * eval_seminorm(ESeminorm{2, 1.0}, f, grid);
        }
        record(num, den);
      }
      rep.notes.push_back(into_dprime ? "target seminorm |<bump(1), .>| on D'"
                                      : "target seminorm sup over |x| <= 1");
      break;
    }
    case WitnessId::kRem5Item9: {
      shifting(options.start > 0 ? options.start : 2.0);
      SymbolicFunction phi0 = unit_bump();
      for (double x0 : rep.params) {
        DistributionRep t = DistributionRep::dirac({x0});
        SymbolicFunction phi = unit_bump().translate(-x0);
        double num = std::abs(pair(phi0, DistributionRep::function(convolve_pointmass(phi, t))));
        double den = dual_seminorm(t, bounded_in_d()) * d_norm(phi, grid);
        record(num, den);
      }
      break;
    }
    case WitnessId::kRem5Item14: {
      shifting(options.start > 0 ? options.start : 2.0);
      for (double x0 : rep.params) {
        DistributionRep t = DistributionRep::dirac({x0});
        SymbolicFunction phi = unit_bump().translate(x0);
        double num = std::abs(pair(SymbolicFunction::constant(1.0), multiply(phi, t)));
        double den = d_norm(phi, grid) * dual_seminorm(t, bounded_in_d());
        record(num, den);
      }
      rep.notes.push_back("target seminorm |<1, .>| on E'");
      break;
    }
  }
  rep.verdict = judge(rep.numerators, rep.denominators);
  return rep;
}

namespace {

json numbers_to_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) {
    if (std::isfinite(x)) {
      a.push_back(x);
    } else {
      a.push_back(nullptr);
    }
  }
  return a;
}

std::vector<double> numbers_from_json(const json& a) {
  std::vector<double> v;
  for (const auto& x : a) v.push_back(x.is_null() ? kInf : x.get<double>());
  return v;
}

}  // namespace

std::string to_json(const WitnessReport& r) {
  json j;
  j["family"] = r.family;
  j["map"] = r.map;
  j["params"] = numbers_to_json(r.params);
  j["numerators"] = numbers_to_json(r.numerators);
  j["denominators"] = numbers_to_json(r.denominators);
  j["ratios"] = numbers_to_json(r.ratios);
  j["verdict"] = witness_verdict_label(r.verdict);
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

WitnessReport witness_report_from_json(const std::string& text) {
  json j = json::parse(text);
  WitnessReport r;
  r.family = j.at("family").get<std::string>();
  r.map = j.at("map").get<std::string>();
  r.params = numbers_from_json(j.at("params"));
  r.numerators = numbers_from_json(j.at("numerators"));
  r.denominators = numbers_from_json(j.at("denominators"));
  r.ratios = numbers_from_json(j.at("ratios"));
  r.verdict = parse_witness_verdict(j.at("verdict").get<std::string>());
  r.notes = j.value("notes", std::vector<std::string>{});
  return r;
}

// ------------------------------------------------------------ bound checks

namespace {

class RandomFunctions {
 public:
  explicit RandomFunctions(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(rng_); }

  SymbolicFunction polynomial() {
    std::vector<Complex> c;
    int degree = integer(0, 2);
    for (int k = 0; k <= degree; ++k) c.emplace_back(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    if (std::abs(c[0]) < 0.1) c[0] += 0.5;
    return SymbolicFunction::polynomial(c);
  }

  // P(x) e^{-a x²}
  SymbolicFunction gaussian_polynomial() {
    return polynomial() * SymbolicFunction::gaussian(uniform(0.1, 1.0));
  }

  // Gaussian-polynomial products, sometimes without the Gaussian.
  SymbolicFunction slowly_increasing() {
    return integer(0, 3) == 0 ? polynomial() : gaussian_polynomial();
  }

  // Bounded with bounded derivatives: oscillation plus a Gaussian bump.
  SymbolicFunction bounded() {
    return SymbolicFunction::complex_exp(uniform(-2.0, 2.0)).scaled(uniform(-1.0, 1.0)) +
           gaussian_polynomial();
  }

  SymbolicFunction smooth() {
    switch (integer(0, 2)) {
      case 0: return gaussian_polynomial();
      case 1: return polynomial() * SymbolicFunction::chirp();
      default: return bounded();
    }
  }

  DistributionRep point_masses() {
    std::vector<DistTerm> terms;
    int count = integer(1, 3);
    for (int i = 0; i < count; ++i) {
      terms.push_back({Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0)), {integer(0, 2)},
                       PointMass{{uniform(-2.0, 2.0)}}});
    }
    return DistributionRep(1, std::move(terms));
  }

 private:
  std::mt19937_64 rng_;
};

enum class BoundKind { kNone, kOM, kLeibnizSup, kLeibnizLp, kE, kS, kEPrimeConv };

}  // namespace

BoundReport check_continuity_bound(const MapFact& input, int trials, std::uint64_t seed,
                                   const GridSpec& grid) {
  grid.validate();
  BoundReport rep;
  rep.map = describe(input);
  rep.trials = trials;
  MapFact map = input;

  std::string via;
  if (map.op == Op::kConvolve && fourier_mapped(map.a) && fourier_mapped(map.b) &&
      fourier_mapped(map.target)) {
    map = MapFact{fourier_image(map.a), fourier_image(map.b), Op::kMultiply,
                  fourier_image(map.target), map.ref};
    via = "checked on the Fourier image " + describe(map) + "; ";
  }

  auto is = [&](Kind a, Kind b, Op op, Kind t) {
    return map.op == op && map.target.kind() == t &&
           ((map.a.kind() == a && map.b.kind() == b) || (map.a.kind() == b && map.b.kind() == a));
  };
  BoundKind kind = BoundKind::kNone;
  double p = kInf;
  if (is(Kind::kOM, Kind::kOM, Op::kMultiply, Kind::kOM)) {
    kind = BoundKind::kOM;
    rep.seminorms = "pOM(k,gauss(1))(fg) <= 2^k pOM(k,gauss(0.5))(f) pOM(k,gauss(0.5))(g)";
  } else if (is(Kind::kDLInf, Kind::kDLInf, Op::kMultiply, Kind::kDLInf) ||
             is(Kind::kBDot, Kind::kDLInf, Op::kMultiply, Kind::kBDot)) {
    kind = BoundKind::kLeibnizSup;
    rep.seminorms = "pLp(m,inf)(fg) <= 2^m pLp(m,inf)(f) pLp(m,inf)(g)";
  } else if (is(Kind::kDLp, Kind::kDLInf, Op::kMultiply, Kind::kDLp)) {
    kind = BoundKind::kLeibnizLp;
    const Space& lp = map.a.kind() == Kind::kDLp ? map.a : map.b;
    p = lp.parameter().value_or(2.0);
    rep.seminorms = "pLp(m," + format_number(p) + ")(fg) <= 2^m pLp(m," + format_number(p) +
                    ")(f) pLp(m,inf)(g)";
  } else if (is(Kind::kE, Kind::kE, Op::kMultiply, Kind::kE)) {
    kind = BoundKind::kE;
    rep.seminorms = "pE(m,1)(fg) <= 2^m pE(m,1)(f) pE(m,1)(g)";
  } else if (is(Kind::kS, Kind::kS, Op::kMultiply, Kind::kS)) {
    kind = BoundKind::kS;
    rep.seminorms = "pS(m,b)(fg) <= 2^m pS(m,b)(f) pS(m,0)(g)";
  } else if (is(Kind::kEPrime, Kind::kEPrime, Op::kConvolve, Kind::kEPrime)) {
    kind = BoundKind::kEPrimeConv;
    rep.seminorms = "<phi, S*T> = <S_x, <T_y, phi(x+y)>> for point-mass S, T";
  }
  if (kind == BoundKind::kNone) {
    rep.skipped = true;
    rep.note = via + "no seminorm system modelled for this map";
    return rep;
  }

  RandomFunctions rnd(seed);
  GridSpec g = grid;
  g.radius = std::max(g.radius, 8.0);
  int max_order = 0;
  for (int trial = 0; trial < trials; ++trial) {
    double lhs = 0.0;
    double rhs = 0.0;
    double c = 1.0;
    switch (kind) {
      case BoundKind::kOM: {
        int k = rnd.integer(0, 3);
        SymbolicFunction f = rnd.slowly_increasing();
        SymbolicFunction h = rnd.slowly_increasing();
        SymbolicFunction psi = SymbolicFunction::gaussian(1.0);
        SymbolicFunction half = SymbolicFunction::gaussian(0.5);
        lhs = eval_seminorm(OMNorm{k, psi}, f * h, g);
        rhs = eval_seminorm(OMNorm{k, half}, f, g) * eval_seminorm(OMNorm{k, half}, h, g);
        c = std::ldexp(1.0, k);
        max_order = std::max(max_order, k);
        break;
      }
      case BoundKind::kLeibnizSup:
      case BoundKind::kLeibnizLp: {
        int m = rnd.integer(0, 4);
        SymbolicFunction f =
            kind == BoundKind::kLeibnizLp ? rnd.gaussian_polynomial() : rnd.bounded();
        SymbolicFunction h = rnd.bounded();
        double q = kind == BoundKind::kLeibnizLp ? p : kInf;
        lhs = eval_seminorm(LpNorm{m, q}, f * h, g);
        rhs = eval_seminorm(LpNorm{m, q}, f, g) * eval_seminorm(LpNorm{m, kInf}, h, g);
        c = std::ldexp(1.0, m);
        max_order = std::max(max_order, m);
        break;
      }
      case BoundKind::kE: {
        int m = rnd.integer(0, 4);
        SymbolicFunction f = rnd.smooth();
        SymbolicFunction h = rnd.smooth();
        lhs = eval_seminorm(ESeminorm{m, 1.0}, f * h, g);
        rhs = eval_seminorm(ESeminorm{m, 1.0}, f, g) * eval_seminorm(ESeminorm{m, 1.0}, h, g);
        c = std::ldexp(1.0, m);
        max_order = std::max(max_order, m);
        break;
      }
      case BoundKind::kS: {
        int m = rnd.integer(0, 3);
        int b = rnd.integer(0, 2);
        SymbolicFunction f = rnd.gaussian_polynomial();
        SymbolicFunction h = rnd.gaussian_polynomial();
        lhs = eval_seminorm(SNorm{m, {b}}, f * h, g);
        rhs = eval_seminorm(SNorm{m, {b}}, f, g) * eval_seminorm(SNorm{m, {0}}, h, g);
        c = std::ldexp(1.0, m);
        max_order = std::max(max_order, m);
        break;
      }
      case BoundKind::kEPrimeConv: {
        DistributionRep s = rnd.point_masses();
        DistributionRep t = rnd.point_masses();
        SymbolicFunction phi = rnd.gaussian_polynomial();
        Complex direct = pair(phi, convolve(s, t));
        // x ↦ <T_y, φ(x+y)> = Σ c (-1)^{|β|} ∂^βφ(x + b)
        SymbolicFunction inner(1);
        for (const auto& term : t.terms()) {
          double sgn = order(term.alpha) % 2 ? -1.0 : 1.0;
          const double b = std::get<PointMass>(term.carrier).location[0];
          inner = inner + phi.derivative(term.alpha).translate(-b).scaled(term.coeff * sgn);
        }
        Complex iterated = pair(inner, s);
        lhs = std::abs(direct - iterated);
        rhs = 1e-9 * (1.0 + std::abs(iterated));
        break;
      }
      case BoundKind::kNone:
        break;
    }
    ++rep.checked;
    double ratio = rhs > 0.0 ? lhs / (c * rhs) : (lhs > 0.0 ? kInf : 0.0);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    if (ratio > 1.0 + kBoundSlack) ++rep.violations;
  }
  rep.constant = std::ldexp(1.0, max_order);
  rep.note = via + (kind == BoundKind::kEPrimeConv
                        ? "exact identity; ratio is |difference| / (1e-9 (1 + |value|))"
                        : "C = 2^k, the one-dimensional Leibniz sum");
  return rep;
}

std::string to_json(const BoundReport& r) {
  json j;
  j["map"] = r.map;
  j["seminorms"] = r.seminorms;
  j["trials"] = r.trials;
  j["checked"] = r.checked;
  j["constant"] = r.constant;
  j["max_ratio"] = r.max_ratio;
  j["violations"] = r.violations;
  j["skipped"] = r.skipped;
  j["note"] = r.note;
  return j.dump(2) + "\n";
}

CauchyReport oc_cauchy_check(int l, const std::vector<double>& r_values,
                             const std::vector<double>& s_values) {
  if (l < 0 || l > 2) throw Error("oc_cauchy_check supports 0 <= l <= 2");
  if (r_values.size() != s_values.size() || r_values.empty()) {
    throw Error("r and s lists must be non-empty and of equal length");
  }
  CauchyReport rep;
  rep.l = l;
  rep.r_values = r_values;
  rep.s_values = s_values;
  for (std::size_t i = 0; i < r_values.size(); ++i) {
    if (!(r_values[i] > 0.0) || !(s_values[i] > 0.0)) throw Error("radii must be positive");
    rep.sups.push_back(cauchy_quantity(l, r_values[i], s_values[i]));
  }
  rep.strictly_decreasing = true;
  for (std::size_t i = 1; i < rep.sups.size(); ++i) {
    if (!(rep.sups[i] < rep.sups[i - 1])) rep.strictly_decreasing = false;
  }
  Membership oc = membership(SymbolicFunction::chirp(), Space(Kind::kOC));
  rep.chirp_in_oc = oc.member;
  rep.oc_reason = oc.reason;
  rep.chirp_in_om = membership(SymbolicFunction::chirp(), Space(Kind::kOM)).member;
  return rep;
}

std::string to_json(const CauchyReport& r) {
  json j;
  j["l"] = r.l;
  j["r"] = r.r_values;
  j["s"] = r.s_values;
  j["sups"] = r.sups;
  j["strictly_decreasing"] = r.strictly_decreasing;
  j["chirp_in_OC"] = r.chirp_in_oc;
  j["chirp_in_OM"] = r.chirp_in_om;
  j["OC_reason"] = r.oc_reason;
  return j.dump(2) + "\n";
}

}  // namespace distcalc
