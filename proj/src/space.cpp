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

#include "distcalc/space.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "distcalc/errors.hpp"

namespace distcalc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr int idx(Kind k) { return static_cast<int>(k); }

using Closure = std::array<std::array<bool, kNumKinds>, kNumKinds>;

Closure build_closure() {
  Closure c{};
  for (int i = 0; i < kNumKinds; ++i) c[i][i] = true;
  for (const auto& [sub, super] : inclusion_edges()) c[idx(sub)][idx(super)] = true;
  for (int k = 0; k < kNumKinds; ++k)
    for (int i = 0; i < kNumKinds; ++i)
      for (int j = 0; j < kNumKinds; ++j)
        if (c[i][k] && c[k][j]) c[i][j] = true;
  return c;
}

const Closure& closure() {
  static const Closure c = build_closure();
  return c;
}

std::string format_parameter(double v) {
  if (std::isinf(v)) return "inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

void check_parameter(Kind kind, double v) {
  if (kind == Kind::kDLp && !(v >= 1.0 && v < kInf)) {
    throw Error("D_Lp exponent must satisfy 1 <= p < inf, got " + format_parameter(v));
  }
  if (kind == Kind::kDPrimeLq && !(v > 1.0)) {
    throw Error("D'_Lq exponent must satisfy 1 < q <= inf, got " + format_parameter(v));
  }
}

void require_same_dimension(const Space& a, const Space& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("spaces " + a.token() + " (n=" + std::to_string(a.dimension()) +
                            ") and " + b.token() + " (n=" + std::to_string(b.dimension()) +
                            ") live on different R^n");
  }
}

}  // namespace

Space::Space(Kind kind, int dimension, std::optional<double> parameter)
    : kind_(kind), dimension_(dimension), parameter_(parameter) {
  if (dimension < 1) throw Error("dimension must be >= 1");
  if (parameter_) {
    if (!parameterized_kind()) {
      throw Error("space " + kind_token(kind) + " takes no exponent");
    }
    check_parameter(kind, *parameter_);
  }
}

Space Space::DLp(double p, int dimension) { return Space(Kind::kDLp, dimension, p); }

Space Space::DPrimeLq(double q, int dimension) { return Space(Kind::kDPrimeLq, dimension, q); }

bool Space::parameterized_kind() const {
  return kind_ == Kind::kDLp || kind_ == Kind::kDPrimeLq;
}

bool Space::is_function_space() const {
  switch (kind_) {
    case Kind::kD:
    case Kind::kS:
    case Kind::kDLp:
    case Kind::kBDot:
    case Kind::kDLInf:
    case Kind::kOC:
    case Kind::kOM:
    case Kind::kE:
      return true;
    default:
      return false;
  }
}

Space Space::with_dimension(int dimension) const { return Space(kind_, dimension, parameter_); }

Space Space::with_parameter(std::optional<double> parameter) const {
  return Space(kind_, dimension_, parameter);
}

std::string kind_token(Kind kind) {
  switch (kind) {
    case Kind::kD: return "D";
    case Kind::kS: return "S";
    case Kind::kDLp: return "D_Lp";
    case Kind::kBDot: return "Bdot";
    case Kind::kDLInf: return "D_Linf";
    case Kind::kOC: return "OC";
    case Kind::kOM: return "OM";
    case Kind::kE: return "E";
    case Kind::kEPrime: return "E'";
    case Kind::kOMPrime: return "OM'";
    case Kind::kOCPrime: return "OC'";
    case Kind::kDPrimeL1: return "D'_L1";
    case Kind::kDPrimeLq: return "D'_Lq";
    case Kind::kSPrime: return "S'";
    case Kind::kDPrime: return "D'";
  }
  return "?";
}

std::string Space::token() const {
  std::string t = kind_token(kind_);
  if (parameter_) t += "[" + format_parameter(*parameter_) + "]";
  return t;
}

Space parse_space(std::string_view token, int dimension) {
  std::string_view head = token;
  std::optional<double> parameter;
  if (auto open = token.find('['); open != std::string_view::npos) {
    if (token.back() != ']') throw ParseError("unterminated exponent in space token", token.size());
    head = token.substr(0, open);
    std::string_view body = token.substr(open + 1, token.size() - open - 2);
    if (body == "inf") {
      parameter = kInf;
    } else {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
      if (ec != std::errc() || ptr != body.data() + body.size()) {
        throw ParseError("bad exponent '" + std::string(body) + "'", open + 1);
      }
      parameter = v;
    }
  }
  for (int i = 0; i < kNumKinds; ++i) {
    auto kind = static_cast<Kind>(i);
    if (kind_token(kind) == head || (kind == Kind::kBDot && head == "B")) {
      if (parameter && kind != Kind::kDLp && kind != Kind::kDPrimeLq) {
        throw ParseError("space " + std::string(head) + " takes no exponent", head.size());
      }
      try {
        return Space(kind, dimension, parameter);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what(), head.size());
      }
    }
  }
  throw ParseError("unknown space token '" + std::string(token) + "'", 0);
}

std::vector<std::pair<Kind, Kind>> inclusion_edges() {
  return {
      {Kind::kD, Kind::kS},         {Kind::kS, Kind::kDLp},
      {Kind::kDLp, Kind::kBDot},    {Kind::kBDot, Kind::kDLInf},
      {Kind::kDLInf, Kind::kOC},    {Kind::kOC, Kind::kOM},
      {Kind::kOM, Kind::kE},        {Kind::kEPrime, Kind::kOMPrime},
      {Kind::kOMPrime, Kind::kOCPrime}, {Kind::kOCPrime, Kind::kDPrimeL1},
      {Kind::kDPrimeL1, Kind::kDPrimeLq}, {Kind::kDPrimeLq, Kind::kSPrime},
      {Kind::kSPrime, Kind::kDPrime}, {Kind::kD, Kind::kEPrime},
      {Kind::kE, Kind::kDPrime},
  };
}

bool includes(const Space& sub, const Space& super) {
  require_same_dimension(sub, super);
  if (sub.kind() == super.kind()) {
    if (!sub.parameterized_kind()) return true;
    const auto& p = sub.parameter();
    const auto& q = super.parameter();
    if (!p && !q) return true;
    if (p && q) return *p <= *q;
    return false;
  }
  return closure()[idx(sub.kind())][idx(super.kind())];
}

std::optional<Space> least_common_superspace(const Space& a, const Space& b) {
  require_same_dimension(a, b);
  std::vector<Space> candidates = all_kinds(a.dimension());
  for (const Space* s : {&a, &b}) {
    if (s->parameterized_kind() && s->parameter()) candidates.push_back(*s);
  }
  std::vector<Space> common;
  for (const auto& c : candidates) {
    if (includes(a, c) && includes(b, c)) common.push_back(c);
  }
  for (const auto& c : common) {
    bool least = true;
    for (const auto& other : common) {
      if (!includes(c, other)) {
        least = false;
        break;
      }
    }
    if (least) return c;
  }
  return std::nullopt;
}

std::optional<Space> dual(const Space& e) {
  const int n = e.dimension();
  auto conjugate = [](double p) {
    if (p == 1.0) return kInf;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
  };
  switch (e.kind()) {
    case Kind::kD: return Space(Kind::kDPrime, n);
    case Kind::kS: return Space(Kind::kSPrime, n);
    case Kind::kDLp:
      if (!e.parameter()) return Space(Kind::kDPrimeLq, n);
      return Space::DPrimeLq(conjugate(*e.parameter()), n);
    case Kind::kBDot: return Space(Kind::kDPrimeL1, n);
    case Kind::kDLInf: return std::nullopt;
    case Kind::kOC: return Space(Kind::kOCPrime, n);
    case Kind::kOM: return Space(Kind::kOMPrime, n);
    case Kind::kE: return Space(Kind::kEPrime, n);
    case Kind::kEPrime: return Space(Kind::kE, n);
    case Kind::kOMPrime: return Space(Kind::kOM, n);
    case Kind::kOCPrime: return Space(Kind::kOC, n);
    case Kind::kDPrimeL1: return Space(Kind::kBDot, n);
    case Kind::kDPrimeLq:
      if (!e.parameter()) return Space(Kind::kDLp, n);
      return Space::DLp(conjugate(*e.parameter()), n);
    case Kind::kSPrime: return Space(Kind::kS, n);
    case Kind::kDPrime: return Space(Kind::kD, n);
  }
  return std::nullopt;
}

bool fourier_mapped(const Space& e) {
  switch (e.kind()) {
    case Kind::kS:
    case Kind::kSPrime:
    case Kind::kOM:
    case Kind::kOC:
    case Kind::kOCPrime:
    case Kind::kOMPrime:
      return true;
    default:
      return false;
  }
}

Space fourier_image(const Space& e) {
  const int n = e.dimension();
  switch (e.kind()) {
    case Kind::kS: return Space(Kind::kS, n);
    case Kind::kSPrime: return Space(Kind::kSPrime, n);
    case Kind::kOM: return Space(Kind::kOCPrime, n);
    case Kind::kOC: return Space(Kind::kOMPrime, n);
    case Kind::kOCPrime: return Space(Kind::kOM, n);
    case Kind::kOMPrime: return Space(Kind::kOC, n);
    default:
      throw NotFourierMapped("no Fourier image is modelled for " + e.token());
  }
}

std::vector<Space> all_spaces(int dimension) {
  if (dimension < 1) throw Error("dimension must be >= 1");
  std::vector<Space> out;
  for (Kind k : {Kind::kD, Kind::kS, Kind::kDLp, Kind::kBDot, Kind::kOC, Kind::kOM, Kind::kE,
                 Kind::kEPrime, Kind::kOMPrime, Kind::kOCPrime, Kind::kDPrimeL1,
                 Kind::kDPrimeLq, Kind::kSPrime, Kind::kDPrime}) {
    out.emplace_back(k, dimension);
  }
  return out;
}

std::vector<Space> all_kinds(int dimension) {
  std::vector<Space> out;
  for (int i = 0; i < kNumKinds; ++i) out.emplace_back(static_cast<Kind>(i), dimension);
  return out;
}

}  // namespace distcalc
