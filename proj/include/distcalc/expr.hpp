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

// Expressions over the distribution calculus: parsing, result-space
// inference and joint-continuity classification.

#ifndef DISTCALC_EXPR_HPP_
#define DISTCALC_EXPR_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "distcalc/calculus_table.hpp"
#include "distcalc/multi_index.hpp"
#include "distcalc/space.hpp"

namespace distcalc {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  struct Atom {
    std::string name;
    Space declared;
  };
  struct Binary {
    Op op;
    ExprPtr left;
    ExprPtr right;
  };
  struct Fourier {
    ExprPtr inner;
  };
  struct Derivative {
    MultiIndex index;
    ExprPtr inner;
  };

  std::variant<Atom, Binary, Fourier, Derivative> node;

  static ExprPtr atom(std::string name, Space declared);
  static ExprPtr mul(ExprPtr left, ExprPtr right);
  static ExprPtr conv(ExprPtr left, ExprPtr right);
  static ExprPtr fourier(ExprPtr inner);
  static ExprPtr derivative(MultiIndex index, ExprPtr inner);
};

bool operator==(const Expr& a, const Expr& b);

// Canonical text; parse(to_string(e)) reproduces e.
std::string to_string(const Expr& e);

// Grammar:
//   expr := unary (('*' | 'conv') unary)*          left-associative
//   unary := '(' name ':' SPACE ')' | '(' expr ')'
//          | 'fourier' '(' expr ')' | 'd' '[' int (',' int)* ']' '(' expr ')'
// Throws ParseError with the offending position.
ExprPtr parse_expr(std::string_view text, int dimension = 1);

struct TraceEntry {
  std::string node;
  std::string rule;
  Space space;
  ContinuityVerdict verdict;
};

struct TypedResult {
  Space space;
  ContinuityVerdict verdict;
  std::vector<TraceEntry> trace;
};

// Natural result space of a ⋅ b / a ∗ b, or nullopt when neither operand
// lies in the multiplier (convolutor) space of the other.
std::optional<Space> natural_result(const Space& a, const Space& b, Op op);
// Like natural_result, but also admits a × b when it embeds componentwise
// into an admissible A × B; the product is then the restriction of the one
// on A × B and lands in the least such natural result.
std::optional<Space> admissible_result(const Space& a, const Space& b, Op op);

// Throws NotAdmissible / NotFourierMapped.
TypedResult infer(const Expr& e);

// Verdict for the bilinear map a × b → target. Throws NotAdmissible when the
// map is neither table-admissible nor covered by a known fact.
ContinuityVerdict classify_map(const Space& a, const Space& b, Op op, const Space& target);

struct AuditItem {
  int item;
  MapFact map;  // map.ref holds the reference the map is proved by
  ContinuityVerdict verdict;
};

// The fourteen maps asserted continuous in Ehrenpreis' list, classified.
std::vector<AuditItem> ehrenpreis_audit();

std::string to_json(const TypedResult& r);
std::string audit_to_json(const std::vector<AuditItem>& items);

}  // namespace distcalc

#endif  // DISTCALC_EXPR_HPP_
