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

#ifndef DISTCALC_MULTI_INDEX_HPP_
#define DISTCALC_MULTI_INDEX_HPP_

#include <string>
#include <vector>

namespace distcalc {

// α ∈ N_0^n.
using MultiIndex = std::vector<int>;

inline int order(const MultiIndex& alpha) {
  int s = 0;
  for (int a : alpha) s += a;
  return s;
}

// All α ∈ N_0^n with |α| <= m, in graded lexicographic order.
std::vector<MultiIndex> multi_indices_up_to(int n, int m);

// All β <= α componentwise.
std::vector<MultiIndex> sub_indices(const MultiIndex& alpha);

// Product of binomials C(α_i, β_i).
double binomial(const MultiIndex& alpha, const MultiIndex& beta);
double binomial(int n, int k);

MultiIndex unit_index(int n, int axis, int power = 1);

std::string index_string(const MultiIndex& alpha);  // "[1,0]"

}  // namespace distcalc

#endif  // DISTCALC_MULTI_INDEX_HPP_
