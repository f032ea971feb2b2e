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

#include "distcalc/multi_index.hpp"

#include <functional>

namespace distcalc {

std::vector<MultiIndex> multi_indices_up_to(int n, int m) {
  std::vector<MultiIndex> out;
  MultiIndex current(n, 0);
  for (int total = 0; total <= m; ++total) {
    std::function<void(int, int)> fill = [&](int axis, int remaining) {
      if (axis == n - 1) {
        current[axis] = remaining;
        out.push_back(current);
        return;
      }
      for (int k = remaining; k >= 0; --k) {
        current[axis] = k;
        fill(axis + 1, remaining - k);
      }
    };
    fill(0, total);
  }
  return out;
}

std::vector<MultiIndex> sub_indices(const MultiIndex& alpha) {
  std::vector<MultiIndex> out{MultiIndex(alpha.size(), 0)};
  for (std::size_t axis = 0; axis < alpha.size(); ++axis) {
    std::vector<MultiIndex> next;
    for (const auto& beta : out) {
      for (int k = 0; k <= alpha[axis]; ++k) {
        MultiIndex b = beta;
        b[axis] = k;
        next.push_back(b);
      }
    }
    out = std::move(next);
  }
  return out;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double binomial(const MultiIndex& alpha, const MultiIndex& beta) {
  double r = 1.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) r *= binomial(alpha[i], beta[i]);
  return r;
}

MultiIndex unit_index(int n, int axis, int power) {
  MultiIndex e(n, 0);
  e[axis] = power;
  return e;
}

std::string index_string(const MultiIndex& alpha) {
  std::string s = "[";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(alpha[i]);
  }
  return s + "]";
}

}  // namespace distcalc
