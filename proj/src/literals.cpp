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

#include "distcalc/literals.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <variant>

#include "distcalc/errors.hpp"
#include "distcalc/format.hpp"

namespace distcalc {
namespace {

// A parsed operand: a bare number or a function.
using Value = std::variant<Complex, SymbolicFunction>;

class Parser {
 public:
  Parser(std::string_view text, int dimension) : text_(text), n_(dimension) {
    if (dimension < 1) throw Error("dimension must be >= 1");
  }

  SymbolicFunction function_literal() {
    Value v = sum();
    return as_function(v);
  }

  DistributionRep distribution() {
    DistributionRep d = dist_term(1.0);
    while (true) {
      if (accept('+')) {
        d = d + dist_term(1.0);
      } else if (accept('-')) {
        d = d + dist_term(-1.0);
      } else {
        return d;
      }
    }
  }

  SeminormSpec seminorm() {
    std::size_t at = skip();
    std::string name = identifier();
    expect('(');
    int m = integer();
    expect(',');
    SeminormSpec spec;
    std::size_t arg = skip();
    if (name == "pD") {
      double eps0 = number();
      if (!(eps0 > 0) || std::isinf(eps0)) throw ParseError("pD needs 0 < eps0 < inf", arg);
      spec = DNorm{m, eps0};
    } else if (name == "pS") {
      MultiIndex beta;
      if (peek() == '[') {
        beta = index_list();
      } else {
        beta = MultiIndex(n_, 0);
        beta[0] = integer();
        if (n_ > 1) throw ParseError("pS needs a multi-index [b1,...] when n > 1", pos_);
      }
      spec = SNorm{m, beta};
    } else if (name == "pLp") {
      double p = number();
      if (!(p >= 1)) throw ParseError("pLp needs 1 <= p <= inf", arg);
      spec = LpNorm{m, p};
    } else if (name == "pOM") {
      spec = OMNorm{m, function_literal()};
    } else if (name == "pE") {
      double k = number();
      if (!(k > 0) || std::isinf(k)) throw ParseError("pE needs a radius 0 < K < inf", arg);
      spec = ESeminorm{m, k};
    } else {
      throw ParseError("unknown seminorm '" + name + "'", at);
    }
    expect(')');
    return spec;
  }

  void finish() {
    if (skip() != text_.size()) {
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    }
  }

 private:
  std::size_t skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  bool starts_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected a name", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  bool starts_number() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
           text_.substr(pos_, 3) == "inf";
  }

  double number() {
    skip();
    double sign = 1.0;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-') sign = -1.0;
      ++pos_;
    }
    if (text_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      return sign * std::numeric_limits<double>::infinity();
    }
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return sign * M_PI;
    }
    double v = 0.0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) throw ParseError("expected a number", pos_);
    pos_ = end - text_.data();
    return sign * v;
  }

  int integer() {
    std::size_t at = skip();
    double v = number();
    if (v != std::floor(v) || v < 0 || v > 1e6) {
      throw ParseError("expected a non-negative integer", at);
    }
    return static_cast<int>(v);
  }

  MultiIndex index_list() {
    std::size_t at = skip();
    expect('[');
    MultiIndex alpha{integer()};
    while (accept(',')) alpha.push_back(integer());
    expect(']');
    if (static_cast<int>(alpha.size()) != n_) {
      throw ParseError("multi-index has " + std::to_string(alpha.size()) +
                           " entries, dimension is " + std::to_string(n_),
                       at);
    }
    return alpha;
  }

  // A scalar, or [x1,...,xn].
  Point point() {
    std::size_t at = skip();
    if (accept('[')) {
      Point p{number()};
      while (accept(',')) p.push_back(number());
      expect(']');
      if (static_cast<int>(p.size()) != n_) throw ParseError("point has wrong dimension", at);
      return p;
    }
    double v = number();
    if (n_ != 1) throw ParseError("a point in R^n needs [x1,...,xn]", at);
    return Point{v};
  }

  SymbolicFunction as_function(const Value& v) {
    if (auto* c = std::get_if<Complex>(&v)) return SymbolicFunction::constant(*c, n_);
    return std::get<SymbolicFunction>(v);
  }

  Value sum() {
    Value v = product();
    while (true) {
      if (accept('+')) {
        Value w = product();
        v = add(v, w, 1.0);
      } else if (accept('-')) {
        Value w = product();
        v = add(v, w, -1.0);
      } else {
        return v;
      }
    }
  }

  Value add(const Value& a, const Value& b, double sign) {
    auto* ca = std::get_if<Complex>(&a);
    auto* cb = std::get_if<Complex>(&b);
    if (ca && cb) return *ca + sign * *cb;
    return sign > 0 ? as_function(a) + as_function(b) : as_function(a) - as_function(b);
  }

  Value product() {
    Value v = unary();
    while (accept('*')) {
      Value w = unary();
      auto* ca = std::get_if<Complex>(&v);
      auto* cb = std::get_if<Complex>(&w);
      if (ca && cb) {
        v = *ca * *cb;
      } else if (ca) {
        v = std::get<SymbolicFunction>(w).scaled(*ca);
      } else if (cb) {
        v = std::get<SymbolicFunction>(v).scaled(*cb);
      } else {
        v = std::get<SymbolicFunction>(v) * std::get<SymbolicFunction>(w);
      }
    }
    return v;
  }

  Value unary() {
    if (accept('-')) {
      Value v = unary();
      if (auto* c = std::get_if<Complex>(&v)) return -*c;
      return std::get<SymbolicFunction>(v).scaled(-1.0);
    }
    if (accept('(')) {
      Value v = sum();
      expect(')');
      return v;
    }
    if (starts_number() && !starts_identifier()) return Complex(number());
    if (text_.substr(skip(), 2) == "pi") return Complex(number());
    return family();
  }

  SymbolicFunction family() {
    std::size_t at = skip();
    std::string name = identifier();
    if (name == "chirp") return SymbolicFunction::chirp(n_);
    if (name == "d") {
      MultiIndex alpha = index_list();
      expect('(');
      SymbolicFunction f = function_literal();
      expect(')');
      return f.derivative(alpha);
    }
    static const std::set<std::string> kFamilies{"bump",  "gauss",  "cexp",   "poly",
                                                 "const", "plateau", "weight", "dilate",
                                                 "translate"};
    if (!kFamilies.count(name)) throw ParseError("unknown function family '" + name + "'", at);
    expect('(');
    SymbolicFunction f;
    try {
      if (name == "bump") {
        f = SymbolicFunction::bump(number(), n_);
      } else if (name == "gauss") {
        f = SymbolicFunction::gaussian(number(), n_);
      } else if (name == "cexp") {
        Point c;
        if (peek() == '[') {
          c = point();
        } else {
          c = Point(n_, 0.0);
          c[0] = number();
        }
        f = SymbolicFunction::complex_exp(c);
      } else if (name == "poly") {
        if (n_ != 1) throw ParseError("poly(...) is univariate", at);
        std::vector<Complex> cs{number()};
        while (accept(',')) cs.emplace_back(number());
        f = SymbolicFunction::polynomial(cs);
      } else if (name == "const") {
        double re = number();
        double im = accept(',') ? number() : 0.0;
        f = SymbolicFunction::constant({re, im}, n_);
      } else if (name == "plateau") {
        double a = number();
        expect(',');
        f = SymbolicFunction::plateau(a, number(), n_);
      } else if (name == "weight") {
        f = SymbolicFunction::weight(integer(), n_);
      } else if (name == "dilate") {
        SymbolicFunction g = function_literal();
        expect(',');
        f = g.dilate(number());
      } else if (name == "translate") {
        SymbolicFunction g = function_literal();
        expect(',');
        f = g.translate(point());
      } else {
        throw ParseError("unknown function family '" + name + "'", at);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), at);
    }
    expect(')');
    return f;
  }

  DistributionRep dist_term(double sign) {
    Complex coeff = sign;
    if (starts_number()) {
      coeff *= number();
      expect('*');
    }
    MultiIndex alpha(n_, 0);
    std::size_t at = skip();
    std::string name = identifier();
    if (name == "d") {
      alpha = index_list();
      at = skip();
      name = identifier();
    }
    expect('(');
    DistributionRep t = [&]() {
      if (name == "dirac") return DistributionRep::dirac(point(), alpha);
      if (name == "fn") return DistributionRep::function(function_literal(), alpha);
      throw ParseError("expected dirac(...) or fn(...)", at);
    }();
    expect(')');
    return coeff == Complex(1.0) ? t : t.scaled(coeff);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolicFunction parse_function(std::string_view text, int dimension) {
  Parser p(text, dimension);
  SymbolicFunction f = p.function_literal();
  p.finish();
  return f;
}

DistributionRep parse_distribution(std::string_view text, int dimension) {
  Parser p(text, dimension);
  DistributionRep d = p.distribution();
  p.finish();
  return d;
}

SeminormSpec parse_seminorm(std::string_view text, int dimension) {
  Parser p(text, dimension);
  SeminormSpec s = p.seminorm();
  p.finish();
  return s;
}

}  // namespace distcalc
