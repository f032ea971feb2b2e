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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "distcalc/calculus_table.hpp"
#include "distcalc/cli.hpp"
#include "distcalc/distributions.hpp"
#include "distcalc/errors.hpp"
#include "distcalc/expr.hpp"
#include "distcalc/literals.hpp"
#include "distcalc/seminorms.hpp"
#include "distcalc/space.hpp"
#include "distcalc/symbolic.hpp"
#include "distcalc/witnesses.hpp"

namespace py = pybind11;
using namespace distcalc;

namespace {

py::object loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

py::dict verdict_dict(const ContinuityVerdict& v) {
  py::dict d;
  d["verdict"] = verdict_label(v.value);
  d["target"] = v.target.token();
  d["ref"] = prop_label(v.ref);
  return d;
}

GridSpec grid(double radius, int points, const std::string& quad) {
  GridSpec g{radius, points, parse_quadrature(quad)};
  g.validate();
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiplier and convolutor calculus of the Schwartz spaces";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<NotAdmissible>(m, "NotAdmissible", base.ptr());
  py::register_exception<NotFourierMapped>(m, "NotFourierMapped", base.ptr());
  py::register_exception<NotSupported>(m, "NotSupported", base.ptr());
  py::register_exception<NoKnownWitness>(m, "NoKnownWitness", base.ptr());
  py::register_exception<MembershipError>(m, "MembershipError", base.ptr());
  py::register_exception<GridError>(m, "GridError", base.ptr());
  py::register_exception<NumericError>(m, "NumericError", base.ptr());

  m.def("spaces", [](int n) {
    std::vector<std::string> out;
    for (const auto& s : all_spaces(n)) out.push_back(s.token());
    return out;
  }, py::arg("dimension") = 1);
  m.def("includes", [](const std::string& a, const std::string& b, int n) {
    return includes(parse_space(a, n), parse_space(b, n));
  }, py::arg("sub"), py::arg("sup"), py::arg("dimension") = 1);
  m.def("dual", [](const std::string& a, int n) -> std::optional<std::string> {
    auto d = dual(parse_space(a, n));
    if (!d) return std::nullopt;
    return d->token();
  }, py::arg("space"), py::arg("dimension") = 1);
  m.def("fourier_image", [](const std::string& a, int n) {
    return fourier_image(parse_space(a, n)).token();
  }, py::arg("space"), py::arg("dimension") = 1);
  m.def("least_common_superspace", [](const std::string& a, const std::string& b, int n)
            -> std::optional<std::string> {
    auto s = least_common_superspace(parse_space(a, n), parse_space(b, n));
    if (!s) return std::nullopt;
    return s->token();
  }, py::arg("a"), py::arg("b"), py::arg("dimension") = 1);

  m.def("table", [](bool as_text) -> py::object {
    if (as_text) return py::str(emit_table(TableFormat::kText));
    return loads(emit_table(TableFormat::kJson));
  }, py::arg("text") = false);
  m.def("multiplier_space", [](const std::string& a) {
    return multiplier_space(parse_space(a)).token();
  });
  m.def("convolutor_space", [](const std::string& a) {
    return convolutor_space(parse_space(a)).token();
  });

  m.def("infer", [](const std::string& text, int n) {
    return loads(to_json(infer(*parse_expr(text, n))));
  }, py::arg("expr"), py::arg("dimension") = 1);
  m.def("classify", [](const std::string& a, const std::string& b, const std::string& op,
                       const std::string& target, int n) {
    return verdict_dict(
        classify_map(parse_space(a, n), parse_space(b, n), parse_op(op), parse_space(target, n)));
  }, py::arg("a"), py::arg("b"), py::arg("op"), py::arg("target"), py::arg("dimension") = 1);
  m.def("audit_ehrenpreis", []() { return loads(audit_to_json(ehrenpreis_audit())); });

  m.def("membership", [](const std::string& fn, const std::string& space, int n) {
    Membership r = membership(parse_function(fn, n), parse_space(space, n));
    return py::make_tuple(r.member, r.reason);
  }, py::arg("function"), py::arg("space"), py::arg("dimension") = 1);
  m.def("evaluate", [](const std::string& fn, const std::vector<double>& x) {
    return parse_function(fn, static_cast<int>(x.size())).evaluate(x);
  }, py::arg("function"), py::arg("x"));
  m.def("seminorm", [](const std::string& spec, const std::string& fn, int n, double radius,
                       int points, const std::string& quad) {
    return eval_seminorm(parse_seminorm(spec, n), parse_function(fn, n),
                         grid(radius, points, quad));
  }, py::arg("spec"), py::arg("function"), py::arg("dimension") = 1, py::arg("radius") = 4.0,
        py::arg("points") = 512, py::arg("quad") = "simpson");
  m.def("pair", [](const std::string& fn, const std::string& dist, int n) {
    return pair(parse_function(fn, n), parse_distribution(dist, n));
  }, py::arg("function"), py::arg("distribution"), py::arg("dimension") = 1);

  m.def("witness", [](const std::string& a, const std::string& b, const std::string& op,
                      int steps, int order, double start) {
    WitnessOptions opt;
    opt.order = order;
    opt.start = start;
    return loads(to_json(run_witness(witness_for(parse_space(a), parse_space(b), parse_op(op)),
                                     steps, opt)));
  }, py::arg("a"), py::arg("b"), py::arg("op"), py::arg("steps") = 4, py::arg("order") = -1,
        py::arg("start") = 0.0);
  m.def("bound", [](const std::string& a, const std::string& b, const std::string& op,
                    const std::string& target, int trials, std::uint64_t seed) {
    MapFact f{parse_space(a), parse_space(b), parse_op(op), parse_space(target),
              PropRef::kHypocontinuity};
    return loads(to_json(check_continuity_bound(f, trials, seed)));
  }, py::arg("a"), py::arg("b"), py::arg("op"), py::arg("target"), py::arg("trials") = 100,
        py::arg("seed") = 1);
  m.def("oc_cauchy", [](int l, const std::vector<double>& r, const std::vector<double>& s) {
    return loads(to_json(oc_cauchy_check(l, r, s)));
  }, py::arg("l"), py::arg("r_values"), py::arg("s_values"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = dispatch(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
