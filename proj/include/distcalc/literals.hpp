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

// Text literals for functions, distributions and seminorms.
//
//   function     := product (('+' | '-') product)*
//   product      := unary ('*' unary)*
//   unary        := '-' unary | number | '(' function ')' | family
//   family       := bump(r) | gauss(a) | cexp(c | [c1,...]) | chirp
//                 | poly(c0,c1,...) | const(v [, im]) | plateau(a, eps)
//                 | weight(k) | dilate(function, c)
//                 | translate(function, x | [x1,...]) | d[a1,...](function)
//   distribution := dterm (('+' | '-') dterm)*
//   dterm        := [number '*'] ['d' '[' int,... ']'] (dirac(point) | fn(function))
//   seminorm     := pD(m0, eps0) | pS(m, beta | [b1,...]) | pLp(m, p | inf)
//                 | pOM(m, function) | pE(m, K)

#ifndef DISTCALC_LITERALS_HPP_
#define DISTCALC_LITERALS_HPP_

#include <string_view>

#include "distcalc/distributions.hpp"
#include "distcalc/seminorms.hpp"
#include "distcalc/symbolic.hpp"

namespace distcalc {

// All throw ParseError with the offending position.
SymbolicFunction parse_function(std::string_view text, int dimension = 1);
DistributionRep parse_distribution(std::string_view text, int dimension = 1);
SeminormSpec parse_seminorm(std::string_view text, int dimension = 1);

}  // namespace distcalc

#endif  // DISTCALC_LITERALS_HPP_
