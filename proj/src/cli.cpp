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

#include "distcalc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "distcalc/calculus_table.hpp"
#include "distcalc/distributions.hpp"
#include "distcalc/errors.hpp"
#include "distcalc/expr.hpp"
#include "distcalc/format.hpp"
#include "distcalc/literals.hpp"
#include "distcalc/seminorms.hpp"
#include "distcalc/symbolic.hpp"
#include "distcalc/witnesses.hpp"

namespace distcalc {
namespace {

using nlohmann::json;

constexpr const char* kGrammar = R"(Grammars
  SPACE     D S D_Lp D_Lp[p] Bdot D_Linf OC OM E E' OM' OC' D'_L1 D'_Lq D'_Lq[q] S' D'
  OP        mul | conv
  EXPR      unary (('*' | 'conv') unary)*
            unary := (name:SPACE) | (EXPR) | fourier(EXPR) | d[a1,...](EXPR)
  FUNCTION  bump(r) gauss(a) cexp(c|[c1,...]) chirp poly(c0,c1,...) const(v[,im])
            plateau(a,eps) weight(k) dilate(FUNCTION,c) translate(FUNCTION,x|[x1,...])
            d[a1,...](FUNCTION), combined with + - * and parentheses
  DIST      [num*][d[a1,...]]dirac(x0) | [num*][d[a1,...]]fn(FUNCTION), joined by + or -
  SEMINORM  pD(m0,eps0) pS(m,beta) pLp(m,p|inf) pOM(m,FUNCTION) pE(m,K)
Exit codes: 0 success, 1 domain error, 2 usage error.
)";

struct Common {
  std::string format = "text";
  bool json = false;
  int dim = 1;
  double radius = GridSpec{}.radius;
  int points = GridSpec{}.points;
  std::string quad = "simpson";
  int steps = 4;
  int order = -1;
  std::uint64_t seed = 1;
  int trials = 100;

  bool as_json() const { return json || format == "json"; }
  GridSpec grid() const { return {radius, points, parse_quadrature(quad)}; }
};

std::string trace_text(const TypedResult& r) {
  std::ostringstream s;
  s << "space: " << r.space.token() << "\n";
  s << "verdict: " << verdict_label(r.verdict.value) << " (" << prop_label(r.verdict.ref)
    << ") target " << r.verdict.target.token() << "\n";
  s << "trace:\n";
  for (const auto& t : r.trace) {
    s << "  " << t.node << " | " << t.rule << " | " << t.space.token() << " | "
      << verdict_label(t.verdict.value) << " (" << prop_label(t.verdict.ref) << ")\n";
  }
  return s.str();
}

std::string audit_text(const std::vector<AuditItem>& items) {
  std::ostringstream s;
  int continuous = 0;
  for (const auto& it : items) {
    if (it.verdict.value == Verdict::kContinuous) ++continuous;
    s << std::setw(2) << it.item << "  " << describe(it.map) << "  " << prop_label(it.map.ref)
      << "  " << verdict_label(it.verdict.value) << "\n";
  }
  s << continuous << " of " << items.size() << " continuous\n";
  return s.str();
}

std::string report_text(const WitnessReport& r) {
  std::ostringstream s;
  s << r.family << "  " << r.map << "\n";
  s << "param | numerator | denominator | ratio\n";
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    s << format_number(r.params[i]) << " | " << format_number(r.numerators[i]) << " | "
      << format_number(r.denominators[i]) << " | " << format_number(r.ratios[i]) << "\n";
  }
  for (const auto& n : r.notes) s << "note: " << n << "\n";
  s << "verdict: " << witness_verdict_label(r.verdict) << "\n";
  return s.str();
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--json", c.json, "same as --format json");
  cmd->add_option("--dim", c.dim, "dimension n of R^n")->check(CLI::Range(1, 8));
}

void add_grid(CLI::App* cmd, Common& c) {
  cmd->add_option("--radius", c.radius, "truncation radius R");
  cmd->add_option("--points", c.points, "grid points per axis N (>= 16)");
  cmd->add_option("--quad", c.quad, "quadrature rule")
      ->check(CLI::IsMember({"trapezoid", "simpson"}));
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplier and convolutor calculus of the Schwartz spaces", "distcalc"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Common c;

  auto* table = app.add_subcommand("table", "multiplier-convolutor table");
  add_common(table, c);

  std::string expr_text;
  auto* infer_cmd = app.add_subcommand("infer", "result space and continuity of an expression");
  infer_cmd->add_option("expr", expr_text, "EXPR")->required();
  add_common(infer_cmd, c);

  std::string a_tok, b_tok, op_tok, target_tok;
  auto* classify = app.add_subcommand("classify", "continuity of the bilinear map A x B -> target");
  classify->add_option("A", a_tok)->required();
  classify->add_option("B", b_tok)->required();
  classify->add_option("op", op_tok)->required();
  classify->add_option("target", target_tok);
  add_common(classify, c);

  auto* witness = app.add_subcommand("witness", "run the counterexample family of a map");
  witness->add_option("A", a_tok)->required();
  witness->add_option("B", b_tok)->required();
  witness->add_option("op", op_tok)->required();
  witness->add_option("--steps", c.steps, "parameter values (>= 3)");
  witness->add_option("--order", c.order, "derivative order m0 / m / l");
  add_common(witness, c);
  add_grid(witness, c);

  std::string spec_text, fn_text, dist_text, space_tok;
  auto* seminorm = app.add_subcommand("seminorm", "evaluate a seminorm on a function");
  seminorm->add_option("spec", spec_text, "SEMINORM")->required();
  seminorm->add_option("function", fn_text, "FUNCTION")->required();
  add_common(seminorm, c);
  add_grid(seminorm, c);

  auto* member = app.add_subcommand("membership", "decide whether a function lies in a space");
  member->add_option("function", fn_text, "FUNCTION")->required();
  member->add_option("space", space_tok, "SPACE")->required();
  add_common(member, c);

  auto* audit = app.add_subcommand("audit-ehrenpreis", "classify Ehrenpreis' fourteen maps");
  add_common(audit, c);

  auto* pair_cmd = app.add_subcommand("pair", "evaluate <phi, T>");
  pair_cmd->add_option("function", fn_text, "FUNCTION")->required();
  pair_cmd->add_option("distribution", dist_text, "DIST")->required();
  add_common(pair_cmd, c);

  auto* bound = app.add_subcommand("bound", "randomized check of a continuity estimate");
  bound->add_option("A", a_tok)->required();
  bound->add_option("B", b_tok)->required();
  bound->add_option("op", op_tok)->required();
  bound->add_option("target", target_tok);
  bound->add_option("--trials", c.trials, "random pairs");
  bound->add_option("--seed", c.seed, "random seed");
  add_common(bound, c);
  add_grid(bound, c);

  std::vector<double> r_values{4, 8, 16, 32};
  int cauchy_l = 1;
  auto* cauchy = app.add_subcommand("oc-cauchy", "Cauchy check of e^{ix^2} phi(x/r) in O_C");
  cauchy->add_option("--l", cauchy_l, "derivative order (<= 2)");
  cauchy->add_option("--r", r_values, "radii r; s = 2r")->delimiter(',');
  add_common(cauchy, c);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    const int n = c.dim;
    auto space = [&](const std::string& tok) { return parse_space(tok, n); };
    if (table->parsed()) {
      out << emit_table(c.as_json() ? TableFormat::kJson : TableFormat::kText, n);
    } else if (infer_cmd->parsed()) {
      TypedResult r = infer(*parse_expr(expr_text, n));
      out << (c.as_json() ? to_json(r) : trace_text(r));
    } else if (classify->parsed()) {
      Space a = space(a_tok), b = space(b_tok);
      Op op = parse_op(op_tok);
      Space target;
      if (target_tok.empty()) {
        auto natural = natural_result(a, b, op);
        if (!natural) throw NotAdmissible(a.token() + " " + op_tok + " " + b.token() + " is not admissible");
        target = *natural;
      } else {
        target = space(target_tok);
      }
      ContinuityVerdict v = classify_map(a, b, op, target);
      if (c.as_json()) {
        json j = {{"map", describe({a, b, op, target, v.ref})},
                  {"verdict", verdict_label(v.value)},
                  {"target", v.target.token()},
                  {"ref", prop_label(v.ref)}};
        out << j.dump(2) << "\n";
      } else {
        out << verdict_label(v.value) << " (" << prop_label(v.ref) << ") target "
            << v.target.token() << "\n";
      }
    } else if (witness->parsed()) {
      WitnessFamily w = witness_for(space(a_tok), space(b_tok), parse_op(op_tok));
      WitnessOptions o;
      o.grid = c.grid();
      o.order = c.order;
      WitnessReport r = run_witness(w, c.steps, o);
      out << (c.as_json() ? to_json(r) : report_text(r));
    } else if (seminorm->parsed()) {
      SeminormSpec spec = parse_seminorm(spec_text, n);
      SymbolicFunction f = parse_function(fn_text, n);
      double v = eval_seminorm(spec, f, c.grid());
      if (c.as_json()) {
        json j = {{"seminorm", seminorm_label(spec)}, {"function", f.label()}, {"value", v},
                  {"is_norm", seminorm_is_norm(spec)}};
        out << j.dump(2) << "\n";
      } else {
        out << format_number(v) << "\n";
      }
    } else if (member->parsed()) {
      SymbolicFunction f = parse_function(fn_text, n);
      Space e = space(space_tok);
      Membership m = membership(f, e);
      if (c.as_json()) {
        json j = {{"function", f.label()}, {"space", e.token()}, {"member", m.member},
                  {"reason", m.reason}};
        out << j.dump(2) << "\n";
      } else {
        out << (m.member ? "true" : "false") << ": " << m.reason << "\n";
      }
    } else if (audit->parsed()) {
      auto items = ehrenpreis_audit();
      out << (c.as_json() ? audit_to_json(items) : audit_text(items));
    } else if (pair_cmd->parsed()) {
      SymbolicFunction f = parse_function(fn_text, n);
      DistributionRep t = parse_distribution(dist_text, n);
      Complex v = pair(f, t);
      if (c.as_json()) {
        json j = {{"function", f.label()}, {"distribution", t.label()}, {"re", v.real()},
                  {"im", v.imag()}};
        out << j.dump(2) << "\n";
      } else {
        out << format_number(v.real());
        if (v.imag() != 0.0) out << (v.imag() < 0 ? " - " : " + ") << format_number(std::abs(v.imag())) << "i";
        out << "\n";
      }
    } else if (bound->parsed()) {
      Space a = space(a_tok), b = space(b_tok);
      Op op = parse_op(op_tok);
      Space target;
      if (target_tok.empty()) {
        auto natural = natural_result(a, b, op);
        if (!natural) throw NotAdmissible(a.token() + " " + op_tok + " " + b.token() + " is not admissible");
        target = *natural;
      } else {
        target = space(target_tok);
      }
      ContinuityVerdict v = classify_map(a, b, op, target);
      if (v.value != Verdict::kContinuous) {
        throw NotSupported("bound checks apply to continuous maps; this one is " +
                           verdict_label(v.value));
      }
      BoundReport r = check_continuity_bound({a, b, op, target, v.ref}, c.trials, c.seed, c.grid());
      if (c.as_json()) {
        out << to_json(r);
      } else if (r.skipped) {
        out << "skipped: " << r.note << "\n";
      } else {
        out << r.seminorms << "\n"
            << r.checked << " pairs, max lhs/(C rhs) = " << format_number(r.max_ratio) << ", "
            << r.violations << " violations\n"
            << r.note << "\n";
      }
    } else if (cauchy->parsed()) {
      std::vector<double> s_values;
      for (double r : r_values) s_values.push_back(2 * r);
      CauchyReport r = oc_cauchy_check(cauchy_l, r_values, s_values);
      if (c.as_json()) {
        out << to_json(r);
      } else {
        for (std::size_t i = 0; i < r.sups.size(); ++i) {
          out << "(r,s)=(" << format_number(r.r_values[i]) << "," << format_number(r.s_values[i])
              << ") sup=" << format_number(r.sups[i]) << "\n";
        }
        out << "strictly decreasing: " << (r.strictly_decreasing ? "true" : "false") << "\n"
            << "chirp in OC: " << (r.chirp_in_oc ? "true" : "false") << " (" << r.oc_reason
            << ")\nchirp in OM: " << (r.chirp_in_om ? "true" : "false") << "\n";
      }
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n" << kGrammar;
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace distcalc
