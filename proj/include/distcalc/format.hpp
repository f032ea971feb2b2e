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

// Shortest round-trip formatting of numbers and points for labels.

#ifndef DISTCALC_FORMAT_HPP_
#define DISTCALC_FORMAT_HPP_

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

namespace distcalc {

inline std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

// "x" in one dimension, "[x,y,...]" otherwise.
inline std::string format_point(const std::vector<double>& p) {
  if (p.size() == 1) return format_number(p[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += format_number(p[i]);
  }
  return s + "]";
}

}  // namespace distcalc

#endif  // DISTCALC_FORMAT_HPP_
