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

#include "distcalc/expr.hpp"

#include <cctype>
#include <utility>

#include <nlohmann/json.hpp>

#include "distcalc/errors.hpp"

namespace distcalc {
namespace {

using json = nlohmann::json;

// ---------------------------------------------------------------- parsing

class Parser {
 public:
  Parser(std::string_view text, int dimension) : text_(text), dimension_(dimension) {}

  ExprPtr parse() {
    ExprPtr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    return end == text_.size() || !(std::isalnum(static_cast<unsigned char>(text_[end])) ||
                                    text_[end] == '_');
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr expression() {
    ExprPtr left = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        left = Expr::mul(left, unary());
      } else if (peek_word("conv")) {
        pos_ += 4;
        left = Expr::conv(left, unary());
      } else {
        return left;
      }
    }
  }

  bool atom_ahead() {
    // '(' identifier ':' ...
    std::size_t save = pos_;
    bool result = false;
    ++pos_;
    skip_space();
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      identifier();
      result = peek(':');
    }
    pos_ = save;
    return result;
  }

  ExprPtr unary() {
    skip_space();
    if (peek('(')) {
      if (atom_ahead()) return atom();
      ++pos_;
      ExprPtr inner = expression();
      expect(')');
      return inner;
    }
    if (peek_word("fourier")) {
      pos_ += 7;
      expect('(');
      ExprPtr inner = expression();
      expect(')');
      return Expr::fourier(inner);
    }
    if (peek_word("d") || (peek('d') && text_.substr(pos_, 2) == "d[")) {
      ++pos_;
      MultiIndex alpha = index();
      if (static_cast<int>(alpha.size()) != dimension_) {
        fail("multi-index length " + std::to_string(alpha.size()) + " differs from dimension " +
             std::to_string(dimension_));
      }
      expect('(');
      ExprPtr inner = expression();
      expect(')');
      return Expr::derivative(std::move(alpha), inner);
    }
    fail("expected an atom '(name:SPACE)', 'fourier(...)', 'd[...](...)' or '('");
  }

  MultiIndex index() {
    expect('[');
    MultiIndex alpha;
    while (true) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer");
      alpha.push_back(std::stoi(std::string(text_.substr(start, pos_ - start))));
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return alpha;
    }
  }

  ExprPtr atom() {
    expect('(');
    std::string name = identifier();
    expect(':');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
    if (pos_ == text_.size()) fail("unterminated atom");
    std::string_view token = text_.substr(start, pos_ - start);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    Space space;
    try {
      space = parse_space(token, dimension_);
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad space token '") + std::string(token) + "'", start);
    }
    ++pos_;
    return Expr::atom(std::move(name), space);
  }

  std::string_view text_;
  int dimension_;
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------ fact lookup

std::vector<MapFact> instantiate(const MapFact& f, const std::vector<Space>& query) {
  std::vector<std::optional<double>> ps{std::nullopt};
  std::vector<std::optional<double>> qs{std::nullopt};
  for (const auto& s : query) {
    if (!s.parameter()) continue;
    if (s.kind() == Kind::kDLp) ps.push_back(s.parameter());
    if (s.kind() == Kind::kDPrimeLq) qs.push_back(s.parameter());
  }
  auto subst = [](const Space& s, const std::optional<double>& p, const std::optional<double>& q) {
    if (!s.is_generic()) return s;
    if (s.kind() == Kind::kDLp) return s.with_parameter(p);
    return s.with_parameter(q);
  };
  std::vector<MapFact> out;
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      out.push_back({subst(f.a, p, q), subst(f.b, p, q), f.op, subst(f.target, p, q), f.ref});
    }
  }
  return out;
}

bool same_pair(const Space& a, const Space& b, const MapFact& f) {
  return (a == f.a && b == f.b) || (a == f.b && b == f.a);
}

bool embeds(const Space& a, const Space& b, const MapFact& f) {
  return (includes(a, f.a) && includes(b, f.b)) || (includes(a, f.b) && includes(b, f.a));
}

std::optional<MapFact> find_discontinuous(const Space& a, const Space& b, Op op,
                                          const Space& target) {
  for (const auto& fact : known_discontinuous_maps(a.dimension())) {
    if (fact.op != op) continue;
    for (const auto& f : instantiate(fact, {a, b, target})) {
      if (same_pair(a, b, f) && f.target == target) return f;
    }
  }
  return std::nullopt;
}

// Continuous fact whose domain contains a × b; `accept` filters on the
// fact's target. Exact-pair facts win over embedded ones.
template <class Accept>
std::optional<MapFact> find_continuous(const Space& a, const Space& b, Op op,
                                       const std::vector<Space>& query, Accept accept) {
  std::optional<MapFact> embedded;
  for (const auto& fact : known_continuous_maps(a.dimension())) {
    if (fact.op != op) continue;
    for (const auto& f : instantiate(fact, query)) {
      if (!accept(f.target)) continue;
      if (same_pair(a, b, f)) return f;
      if (!embedded && embeds(a, b, f)) embedded = f;
    }
  }
  return embedded;
}

bool pair_has_fact(const Space& a, const Space& b, Op op) {
  for (const auto& fact : known_discontinuous_maps(a.dimension())) {
    if (fact.op != op) continue;
    for (const auto& f : instantiate(fact, {a, b})) {
      if (same_pair(a, b, f)) return true;
    }
  }
  return find_continuous(a, b, op, {a, b}, [](const Space&) { return true; }).has_value();
}

struct NodeVerdict {
  ContinuityVerdict verdict;
  std::string rule;
};

NodeVerdict lookup_at_result(const Space& a, const Space& b, Op op, const Space& result) {
  if (auto f = find_discontinuous(a, b, op, result)) {
    return {{Verdict::kDiscontinuous, result, f->ref}, "known discontinuous: " + describe(*f)};
  }
  if (auto f = find_continuous(a, b, op, {a, b, result},
                               [&](const Space& t) { return includes(t, result); })) {
    return {{Verdict::kContinuous, result, f->ref}, "continuous via " + describe(*f)};
  }
  if (auto f = find_continuous(a, b, op, {a, b, result},
                               [&](const Space& t) { return includes(result, t); })) {
    return {{Verdict::kContinuous, f->target, f->ref},
            "continuous into larger target via " + describe(*f)};
  }
  return {{Verdict::kHypocontinuousOnlyKnown, result, PropRef::kHypocontinuity},
          "no joint-continuity fact; hypocontinuous"};
}

struct InferState {
  std::vector<TraceEntry> trace;
  std::optional<ContinuityVerdict> first_discontinuous;
  bool all_continuous = true;
  std::optional<ContinuityVerdict> root_binary;
};

Space infer_node(const Expr& e, InferState& st, bool is_root_binary_path);

Space infer_node(const Expr& e, InferState& st, bool root_path) {
  return std::visit(
      [&](const auto& n) -> Space {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Atom>) {
          st.trace.push_back({to_string(e), "atom", n.declared,
                              {Verdict::kContinuous, n.declared, PropRef::kVacuous}});
          return n.declared;
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          Space a = infer_node(*n.left, st, false);
          Space b = infer_node(*n.right, st, false);
          auto result = admissible_result(a, b, n.op);
          const Space& m_a = n.op == Op::kMultiply ? multiplier_space(a) : convolutor_space(a);
          const Space& m_b = n.op == Op::kMultiply ? multiplier_space(b) : convolutor_space(b);
          if (!result) {
            throw NotAdmissible(to_string(e) + ": neither " + b.token() + " ⊆ " + m_a.token() +
                                " nor " + a.token() + " ⊆ " + m_b.token());
          }
          NodeVerdict v = lookup_at_result(a, b, n.op, *result);
          if (!natural_result(a, b, n.op)) v.rule = "restricted from a larger domain; " + v.rule;
          st.trace.push_back({to_string(e), v.rule, *result, v.verdict});
          if (v.verdict.value == Verdict::kDiscontinuous && !st.first_discontinuous) {
            st.first_discontinuous = v.verdict;
          }
          bool usable = v.verdict.value == Verdict::kContinuous &&
                        (root_path || includes(v.verdict.target, *result));
          if (!usable) st.all_continuous = false;
          if (root_path) st.root_binary = v.verdict;
          return *result;
        } else if constexpr (std::is_same_v<T, Expr::Fourier>) {
          Space inner = infer_node(*n.inner, st, root_path);
          Space image = fourier_image(inner);
          if (root_path && st.root_binary && fourier_mapped(st.root_binary->target)) {
            st.root_binary->target = fourier_image(st.root_binary->target);
          }
          st.trace.push_back({to_string(e), "fourier image " + inner.token() + " -> " +
                                                image.token(),
                              image, {Verdict::kContinuous, image, PropRef::kVacuous}});
          return image;
        } else {
          Space inner = infer_node(*n.inner, st, root_path);
          if (static_cast<int>(n.index.size()) != inner.dimension()) {
            throw DimensionMismatch("multi-index length differs from dimension");
          }
          st.trace.push_back({to_string(e), "derivative preserves " + inner.token(), inner,
                              {Verdict::kContinuous, inner, PropRef::kVacuous}});
          return inner;
        }
      },
      e.node);
}

json verdict_json(const ContinuityVerdict& v) {
  return {{"verdict", verdict_label(v.value)},
          {"target", v.target.token()},
          {"ref", prop_label(v.ref)}};
}

}  // namespace

ExprPtr Expr::atom(std::string name, Space declared) {
  return std::make_shared<Expr>(Expr{Atom{std::move(name), declared}});
}
ExprPtr Expr::mul(ExprPtr l, ExprPtr r) {
  return std::make_shared<Expr>(Expr{Binary{Op::kMultiply, std::move(l), std::move(r)}});
}
ExprPtr Expr::conv(ExprPtr l, ExprPtr r) {
  return std::make_shared<Expr>(Expr{Binary{Op::kConvolve, std::move(l), std::move(r)}});
}
ExprPtr Expr::fourier(ExprPtr inner) {
  return std::make_shared<Expr>(Expr{Fourier{std::move(inner)}});
}
ExprPtr Expr::derivative(MultiIndex index, ExprPtr inner) {
  return std::make_shared<Expr>(Expr{Derivative{std::move(index), std::move(inner)}});
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Expr::Atom>) {
          return x.name == y.name && x.declared == y.declared;
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          return x.op == y.op && *x.left == *y.left && *x.right == *y.right;
        } else if constexpr (std::is_same_v<T, Expr::Fourier>) {
          return *x.inner == *y.inner;
        } else {
          return x.index == y.index && *x.inner == *y.inner;
        }
      },
      a.node);
}

std::string to_string(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Atom>) {
          return "(" + n.name + ":" + n.declared.token() + ")";
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          std::string right = to_string(*n.right);
          if (std::holds_alternative<Expr::Binary>(n.right->node)) right = "(" + right + ")";
          return to_string(*n.left) + (n.op == Op::kMultiply ? " * " : " conv ") + right;
        } else if constexpr (std::is_same_v<T, Expr::Fourier>) {
          return "fourier(" + to_string(*n.inner) + ")";
        } else {
          std::string s = "d[";
          for (std::size_t i = 0; i < n.index.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(n.index[i]);
          }
          return s + "](" + to_string(*n.inner) + ")";
        }
      },
      e.node);
}

ExprPtr parse_expr(std::string_view text, int dimension) {
  return Parser(text, dimension).parse();
}

std::optional<Space> natural_result(const Space& a, const Space& b, Op op) {
  const Space m_a = op == Op::kMultiply ? multiplier_space(a) : convolutor_space(a);
  const Space m_b = op == Op::kMultiply ? multiplier_space(b) : convolutor_space(b);
  const bool left_fires = includes(b, m_a);
  const bool right_fires = includes(a, m_b);
  if (left_fires && right_fires) {
    if (includes(b, a) && !includes(a, b)) return b;
    return a;
  }
  if (left_fires) return a;
  if (right_fires) return b;
  return std::nullopt;
}

std::optional<Space> admissible_result(const Space& a, const Space& b, Op op) {
  if (auto direct = natural_result(a, b, op)) return direct;
  std::vector<Space> ups_a{a};
  std::vector<Space> ups_b{b};
  for (const auto& k : all_kinds(a.dimension())) {
    if (k != a && includes(a, k)) ups_a.push_back(k);
    if (k != b && includes(b, k)) ups_b.push_back(k);
  }
  std::vector<Space> results;
  for (const auto& big_a : ups_a) {
    for (const auto& big_b : ups_b) {
      if (auto r = natural_result(big_a, big_b, op)) results.push_back(*r);
    }
  }
  for (const auto& r : results) {
    bool least = true;
    for (const auto& other : results) least = least && includes(r, other);
    if (least) return r;
  }
  return std::nullopt;
}

TypedResult infer(const Expr& e) {
  InferState st;
  Space space = infer_node(e, st, true);
  ContinuityVerdict verdict;
  if (st.first_discontinuous) {
    verdict = *st.first_discontinuous;
  } else if (!st.root_binary) {
    verdict = {Verdict::kContinuous, space, PropRef::kVacuous};
  } else if (st.all_continuous) {
    verdict = *st.root_binary;
  } else {
    verdict = {Verdict::kHypocontinuousOnlyKnown, space, PropRef::kHypocontinuity};
  }
  return {space, verdict, std::move(st.trace)};
}

ContinuityVerdict classify_map(const Space& a, const Space& b, Op op, const Space& target) {
  includes(a, b);
  includes(a, target);
  if (!admissible_result(a, b, op) && !pair_has_fact(a, b, op)) {
    throw NotAdmissible(a.token() + " x " + b.token() + " is not admissible for " + op_token(op));
  }
  if (auto f = find_discontinuous(a, b, op, target)) {
    return {Verdict::kDiscontinuous, target, f->ref};
  }
  if (auto f = find_continuous(a, b, op, {a, b, target},
                               [&](const Space& t) { return includes(t, target); })) {
    return {Verdict::kContinuous, target, f->ref};
  }
  return {Verdict::kHypocontinuousOnlyKnown, target, PropRef::kHypocontinuity};
}

std::vector<AuditItem> ehrenpreis_audit() {
  auto s = [](Kind k) { return Space(k, 1); };
  const Op mul = Op::kMultiply;
  const Op conv = Op::kConvolve;
  const std::vector<MapFact> maps{
      {s(Kind::kD), s(Kind::kD), conv, s(Kind::kD), PropRef::kRemark5Item1},
      {s(Kind::kD), s(Kind::kEPrime), conv, s(Kind::kEPrime), PropRef::kRemark5Item2},
      {s(Kind::kEPrime), s(Kind::kEPrime), conv, s(Kind::kEPrime), PropRef::kProp3},
      {s(Kind::kD), s(Kind::kE), conv, s(Kind::kE), PropRef::kRemark3},
      {s(Kind::kD), s(Kind::kDPrime), conv, s(Kind::kE), PropRef::kRemark5Item5},
      {s(Kind::kD), s(Kind::kEPrime), conv, s(Kind::kD), PropRef::kProp2},
      {s(Kind::kE), s(Kind::kEPrime), conv, s(Kind::kE), PropRef::kProp2},
      {s(Kind::kDPrime), s(Kind::kEPrime), conv, s(Kind::kDPrime), PropRef::kProp7},
      {s(Kind::kDPrime), s(Kind::kD), conv, s(Kind::kDPrime), PropRef::kRemark5Item9},
      {s(Kind::kE), s(Kind::kEPrime), conv, s(Kind::kDPrime), PropRef::kRemark5Item10},
      {s(Kind::kD), s(Kind::kD), mul, s(Kind::kD), PropRef::kRemark5Item11},
      {s(Kind::kE), s(Kind::kE), mul, s(Kind::kE), PropRef::kProp3},
      {s(Kind::kDPrime), s(Kind::kE), mul, s(Kind::kDPrime), PropRef::kProp6},
      {s(Kind::kD), s(Kind::kDPrime), mul, s(Kind::kEPrime), PropRef::kRemark5Item14},
  };
  std::vector<AuditItem> items;
  int number = 1;
  for (const auto& m : maps) {
    items.push_back({number++, m, classify_map(m.a, m.b, m.op, m.target)});
  }
  return items;
}

std::string to_json(const TypedResult& r) {
  json trace = json::array();
  for (const auto& t : r.trace) {
    json entry = verdict_json(t.verdict);
    entry["node"] = t.node;
    entry["rule"] = t.rule;
    entry["space"] = t.space.token();
    trace.push_back(entry);
  }
  json doc = {{"space", r.space.token()},
              {"verdict", verdict_label(r.verdict.value)},
              {"target", r.verdict.target.token()},
              {"ref", prop_label(r.verdict.ref)},
              {"trace", trace}};
  return doc.dump(2) + "\n";
}

std::string audit_to_json(const std::vector<AuditItem>& items) {
  json rows = json::array();
  int continuous = 0;
  for (const auto& it : items) {
    if (it.verdict.value == Verdict::kContinuous) ++continuous;
    json row = verdict_json(it.verdict);
    row["item"] = it.item;
    row["map"] = describe(it.map);
    row["proved_by"] = prop_label(it.map.ref);
    rows.push_back(row);
  }
  json doc = {{"items", rows},
              {"continuous", continuous},
              {"total", static_cast<int>(items.size())}};
  return doc.dump(2) + "\n";
}

}  // namespace distcalc
