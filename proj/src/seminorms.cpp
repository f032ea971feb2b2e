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

#include "distcalc/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "distcalc/errors.hpp"
#include "distcalc/format.hpp"

namespace distcalc {
namespace {

constexpr int kRefineSeeds = 8;

std::vector<double> axis_nodes(double lo, double hi, int points) {
  std::vector<double> xs(points);
  if (points == 1 || hi <= lo) {
    std::fill(xs.begin(), xs.end(), lo);
    return xs;
  }
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) xs[i] = lo + i * h;
  xs.back() = hi;
  return xs;
}

// Visits every node of the tensor grid; `visit(point, flat_index)`.
template <typename F>
void for_each_node(const std::vector<std::vector<double>>& axes, F&& visit) {
  const int n = static_cast<int>(axes.size());
  std::vector<int> idx(n, 0);
  Point x(n);
  std::size_t flat = 0;
  while (true) {
    for (int i = 0; i < n; ++i) x[i] = axes[i][idx[i]];
    visit(x, flat++);
    int k = n - 1;
    while (k >= 0 && ++idx[k] == static_cast<int>(axes[k].size())) idx[k--] = 0;
    if (k < 0) break;
  }
}

Box cube(int n, double r) {
  Box b;
  b.bounds.assign(n, {-r, r});
  return b;
}

Box domain_box(const SymbolicFunction& f, const GridSpec& grid) {
  grid.validate();
  if (auto box = f.support_box()) {
    const double slack = 1e-12 * std::max(1.0, grid.radius);
    for (const auto& [lo, hi] : box->bounds) {
      if (lo < -grid.radius - slack || hi > grid.radius + slack) {
        throw GridError("support of " + f.label() + " does not fit in [-" +
                        format_number(grid.radius) + ", " + format_number(grid.radius) +
                        "]^n; increase --radius");
      }
    }
    return *box;
  }
  return cube(f.dimension(), grid.radius);
}

double integrate_grid(const std::function<double(const Point&)>& h, const Box& box,
                      const GridSpec& grid) {
  int points = grid.points;
  if (grid.rule == QuadratureRule::kSimpson && (points - 1) % 2 != 0) ++points;
  std::vector<std::vector<double>> axes;
  std::vector<std::vector<double>> weights;
  for (const auto& [lo, hi] : box.bounds) {
    if (hi <= lo) return 0.0;
    axes.push_back(axis_nodes(lo, hi, points));
    const double step = (hi - lo) / (points - 1);
    std::vector<double> w(points);
    for (int i = 0; i < points; ++i) {
      if (grid.rule == QuadratureRule::kTrapezoid) {
        w[i] = (i == 0 || i == points - 1) ? step / 2 : step;
      } else {
        w[i] = (i == 0 || i == points - 1) ? step / 3 : (i % 2 ? 4 * step / 3 : 2 * step / 3);
      }
    }
    weights.push_back(std::move(w));
  }
  const int n = static_cast<int>(axes.size());
  double sum = 0.0;
  for_each_node(axes, [&](const Point& x, std::size_t flat) {
    double w = 1.0;
    std::size_t rest = flat;
    for (int i = n - 1; i >= 0; --i) {
      w *= weights[i][rest % points];
      rest /= points;
    }
    sum += w * h(x);
  });
  return sum;
}

double norm2(const Point& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

void check_member(const SymbolicFunction& f, const Space& e) {
  Membership m = membership(f, e);
  if (!m.member) throw MembershipError(f.label() + " is not in " + e.token() + ": " + m.reason);
}

}  // namespace

std::string quadrature_label(QuadratureRule rule) {
  return rule == QuadratureRule::kTrapezoid ? "trapezoid" : "simpson";
}

QuadratureRule parse_quadrature(const std::string& token) {
  if (token == "trapezoid") return QuadratureRule::kTrapezoid;
  if (token == "simpson") return QuadratureRule::kSimpson;
  throw ParseError("unknown quadrature rule '" + token + "'", 0);
}

void GridSpec::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw GridError("grid radius must be positive");
  if (points < 16) throw GridError("grid needs at least 16 points per axis");
}

double grid_sup(const std::function<double(const Point&)>& h, const Box& box, int points,
                const std::function<bool(const Point&)>& mask) {
  const int n = static_cast<int>(box.bounds.size());
  std::vector<std::vector<double>> axes;
  std::vector<double> steps;
  for (const auto& [lo, hi] : box.bounds) {
    if (hi < lo) return 0.0;
    axes.push_back(axis_nodes(lo, hi, points));
    steps.push_back(points > 1 ? (hi - lo) / (points - 1) : 0.0);
  }
  auto allowed = [&](const Point& x) { return !mask || mask(x); };

  struct Sample {
    double value;
    Point x;
  };
  std::vector<Sample> samples;
  for_each_node(axes, [&](const Point& x, std::size_t) {
    if (!allowed(x)) return;
    samples.push_back({h(x), x});
  });
  if (samples.empty()) return 0.0;
  std::sort(samples.begin(), samples.end(),
            [](const Sample& a, const Sample& b) { return a.value > b.value; });

  // Seeds: the largest samples, pairwise more than two cells apart.
  std::vector<Sample> seeds;
  for (const auto& s : samples) {
    if (static_cast<int>(seeds.size()) == kRefineSeeds) break;
    bool near = std::any_of(seeds.begin(), seeds.end(), [&](const Sample& t) {
      for (int i = 0; i < n; ++i) {
        if (std::abs(t.x[i] - s.x[i]) > 2.0 * steps[i] + 1e-300) return false;
      }
      return true;
    });
    if (!near) seeds.push_back(s);
  }

  double best = samples.front().value;
  for (auto seed : seeds) {
    std::vector<double> step = steps;
    for (int iter = 0; iter < 200; ++iter) {
      bool moved = false;
      Sample next = seed;
      for (int i = 0; i < n; ++i) {
        for (double dir : {-1.0, 1.0}) {
          Point y = seed.x;
          y[i] = std::clamp(y[i] + dir * step[i], box.bounds[i].first, box.bounds[i].second);
          if (!allowed(y)) continue;
          double v = h(y);
          if (v > next.value) {
            next = {v, y};
            moved = true;
          }
        }
      }
      if (moved) {
        seed = next;
        continue;
      }
      bool tiny = true;
      for (int i = 0; i < n; ++i) {
        step[i] *= 0.5;
        if (step[i] > 1e-10 * std::max(1.0, std::abs(seed.x[i]))) tiny = false;
      }
      if (tiny) break;
    }
    best = std::max(best, seed.value);
  }
  return best;
}

double sup_norm(const SymbolicFunction& f, const GridSpec& grid) {
  if (f.is_zero()) return 0.0;
  return grid_sup([&](const Point& x) { return std::abs(f.evaluate(x)); }, domain_box(f, grid),
                  grid.points);
}

double sup_on_ball(const SymbolicFunction& f, double radius, const GridSpec& grid) {
  grid.validate();
  if (f.is_zero()) return 0.0;
  Box box = cube(f.dimension(), radius);
  if (auto support = f.support_box()) {
    for (int i = 0; i < f.dimension(); ++i) {
      box.bounds[i].first = std::max(box.bounds[i].first, support->bounds[i].first);
      box.bounds[i].second = std::min(box.bounds[i].second, support->bounds[i].second);
      if (box.bounds[i].second < box.bounds[i].first) return 0.0;
    }
  }
  return grid_sup([&](const Point& x) { return std::abs(f.evaluate(x)); }, box, grid.points,
                  [&](const Point& x) { return norm2(x) <= radius * (1 + 1e-15); });
}

double lp_norm(const SymbolicFunction& f, double p, const GridSpec& grid) {
  if (!(p >= 1.0)) throw Error("Lp exponent must be >= 1");
  if (f.is_zero()) return 0.0;
  const GrowthProfile g = f.growth_profile();
  if (std::isinf(p)) {
    if (!g.decays_rapidly() && g.base > 0) {
      throw NumericError(f.label() + " is unbounded");
    }
    return sup_norm(f, grid);
  }
  if (!g.decays_rapidly() && !(g.base * p < -g.free_dimensions)) {
    throw NumericError("|" + f.label() + "|^" + format_number(p) + " is not integrable");
  }
  double integral = integrate_grid(
      [&](const Point& x) { return std::pow(std::abs(f.evaluate(x)), p); }, domain_box(f, grid),
      grid);
  return std::pow(integral, 1.0 / p);
}

std::string seminorm_label(const SeminormSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DNorm>) {
          return "pD(" + std::to_string(s.m0) + "," + format_number(s.eps0) + ")";
        } else if constexpr (std::is_same_v<T, SNorm>) {
          std::string beta = s.beta.empty() ? "0"
                             : s.beta.size() == 1 ? std::to_string(s.beta[0])
                                                  : index_string(s.beta);
          return "pS(" + std::to_string(s.m) + "," + beta + ")";
        } else if constexpr (std::is_same_v<T, LpNorm>) {
          return "pLp(" + std::to_string(s.m) + "," + format_number(s.p) + ")";
        } else if constexpr (std::is_same_v<T, OMNorm>) {
          return "pOM(" + std::to_string(s.m) + "," + s.psi.label() + ")";
        } else {
          return "pE(" + std::to_string(s.m) + "," + format_number(s.radius) + ")";
        }
      },
      spec);
}

Space seminorm_space(const SeminormSpec& spec, int dimension) {
  return std::visit(
      [&](const auto& s) -> Space {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DNorm>) {
          return Space(Kind::kD, dimension);
        } else if constexpr (std::is_same_v<T, SNorm>) {
          return Space(Kind::kS, dimension);
        } else if constexpr (std::is_same_v<T, LpNorm>) {
          return std::isinf(s.p) ? Space(Kind::kDLInf, dimension) : Space::DLp(s.p, dimension);
        } else if constexpr (std::is_same_v<T, OMNorm>) {
          return Space(Kind::kOM, dimension);
        } else {
          return Space(Kind::kE, dimension);
        }
      },
      spec);
}

double eval_seminorm(const SeminormSpec& spec, const SymbolicFunction& f, const GridSpec& grid) {
  grid.validate();
  const int n = f.dimension();
  check_member(f, seminorm_space(spec, n));
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        double best = 0.0;
        if constexpr (std::is_same_v<T, DNorm>) {
          if (s.m0 < 0 || !(s.eps0 > 0.0)) throw Error("pD needs m0 >= 0 and eps0 > 0");
          if (f.is_zero()) return 0.0;
          const Box box = domain_box(f, grid);
          const int last = static_cast<int>(std::floor(*f.support_radius()));
          for (int nu = 0; nu <= last; ++nu) {
            const double eps = s.eps0 * std::ldexp(1.0, -nu);
            for (const auto& alpha : multi_indices_up_to(n, s.m0 + nu)) {
              SymbolicFunction d = f.derivative(alpha);
              double v = grid_sup([&](const Point& x) { return std::abs(d.evaluate(x)); }, box,
                                  grid.points,
                                  [&](const Point& x) { return norm2(x) >= nu; });
              best = std::max(best, v / eps);
            }
          }
        } else if constexpr (std::is_same_v<T, SNorm>) {
          MultiIndex beta = s.beta.empty() ? MultiIndex(n, 0) : s.beta;
          if (static_cast<int>(beta.size()) != n) {
            throw DimensionMismatch("weight multi-index length differs from dimension");
          }
          SymbolicFunction xb = SymbolicFunction::polynomial(Polynomial::monomial(n, beta, 1.0));
          for (const auto& alpha : multi_indices_up_to(n, s.m)) {
            best = std::max(best, sup_norm(xb * f.derivative(alpha), grid));
          }
        } else if constexpr (std::is_same_v<T, LpNorm>) {
          for (const auto& alpha : multi_indices_up_to(n, s.m)) {
            best = std::max(best, lp_norm(f.derivative(alpha), s.p, grid));
          }
        } else if constexpr (std::is_same_v<T, OMNorm>) {
          check_member(s.psi, Space(Kind::kS, n));
          for (const auto& alpha : multi_indices_up_to(n, s.m)) {
            best = std::max(best, sup_norm(s.psi * f.derivative(alpha), grid));
          }
        } else {
          if (!(s.radius >= 0.0)) throw Error("pE needs a ball radius >= 0");
          for (const auto& alpha : multi_indices_up_to(n, s.m)) {
            best = std::max(best, sup_on_ball(f.derivative(alpha), s.radius, grid));
          }
        }
        return best;
      },
      spec);
}

bool seminorm_is_norm(const SeminormSpec& spec) {
  return std::visit(
      [](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OMNorm>) {
          return s.psi.analytic() && !s.psi.is_zero();
        } else if constexpr (std::is_same_v<T, ESeminorm>) {
          return false;
        } else {
          return true;
        }
      },
      spec);
}

}  // namespace distcalc
