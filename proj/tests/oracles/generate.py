# Copyright 2026 The distcalc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates tests/oracles/values.hpp with mpmath at 40 digits.

The values are frozen; the C++ tests compare against the header and never
call into this script.
"""

import sys

import mpmath as mp

mp.mp.dps = 40


def bump(x):
    x = mp.mpf(x)
    return mp.exp(-1 / (1 - x * x)) if abs(x) < 1 else mp.mpf(0)


def dbump(k, x):
    return mp.diff(bump, x, k)


def sup(f, a, b):
    # Dense scan then a local maximisation of the best cell.
    n = 4000
    xs = [a + (b - a) * mp.mpf(i) / n for i in range(n + 1)]
    best = max(xs, key=lambda t: abs(f(t)))
    lo, hi = best - (b - a) / n, best + (b - a) / n
    for _ in range(200):
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        if abs(f(m1)) < abs(f(m2)):
            lo = m1
        else:
            hi = m2
    return abs(f((lo + hi) / 2))


def main():
    vals = {}
    vals["kSNorm02Gauss"] = sup(lambda x: x * x * mp.exp(-x * x), 0, 4)
    vals["kL2Gauss"] = mp.quad(lambda x: mp.exp(-2 * x * x), [-mp.inf, mp.inf]) ** mp.mpf(0.5)
    vals["kL1Gauss"] = mp.quad(lambda x: mp.exp(-x * x), [-mp.inf, mp.inf])
    vals["kBumpMass"] = mp.quad(bump, [-1, 0, 1])
    vals["kBumpSup"] = bump(0)
    vals["kBumpD1Sup"] = sup(lambda x: dbump(1, x), -0.999, 0.999)
    vals["kBumpD2Sup"] = sup(lambda x: dbump(2, x), -0.999, 0.999)
    vals["kBumpL2"] = mp.quad(lambda x: bump(x) ** 2, [-1, 0, 1]) ** mp.mpf(0.5)
    vals["kGaussD1Sup"] = sup(lambda x: mp.diff(lambda t: mp.exp(-t * t), x, 1), -4, 4)
    vals["kGaussD2Sup"] = sup(lambda x: mp.diff(lambda t: mp.exp(-t * t), x, 2), -4, 4)
    vals["kSNorm11Gauss"] = max(
        sup(lambda x: x * mp.exp(-x * x), -4, 4),
        sup(lambda x: x * mp.diff(lambda t: mp.exp(-t * t), x, 1), -4, 4))
    # Plateau(1, 1/2) at x: integral of the unit bump of width 1/2 over [x-1, x+1].
    def plateau(x):
        lo = max((x - 1) / mp.mpf(0.5), -1)
        hi = min((x + 1) / mp.mpf(0.5), 1)
        if hi <= lo:
            return mp.mpf(0)
        return mp.quad(bump, [lo, hi]) / vals["kBumpMass"]
    vals["kPlateauAt1"] = plateau(mp.mpf(1))
    vals["kPlateauAt1p25"] = plateau(mp.mpf(1.25))
    vals["kGaussConvGaussL2"] = mp.quad(
        lambda x: (mp.sqrt(mp.pi / 2) * mp.exp(-x * x / 2)) ** 2, [-mp.inf, mp.inf]) ** mp.mpf(0.5)

    out = sys.stdout
    out.write("// Copyright 2026 The distcalc Authors\n")
    out.write("//\n// Licensed under the Apache License, Version 2.0 (the \"License\");\n")
    out.write("// you may not use this file except in compliance with the License.\n")
    out.write("// You may obtain a copy of the License at\n//\n")
    out.write("//      http://www.apache.org/licenses/LICENSE-2.0\n//\n")
    out.write("// Unless required by applicable law or agreed to in writing, software\n")
    out.write("// distributed under the License is distributed on an \"AS IS\" BASIS,\n")
    out.write("// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.\n")
    out.write("// See the License for the specific language governing permissions and\n")
    out.write("// limitations under the License.\n\n")
    out.write("// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.\n\n")
    out.write("#ifndef DISTCALC_TESTS_ORACLES_VALUES_HPP_\n#define DISTCALC_TESTS_ORACLES_VALUES_HPP_\n\n")
    out.write("namespace oracle {\n\n")
    for k, v in vals.items():
        out.write(f"inline constexpr double {k} = {mp.nstr(v, 20)};\n")
    out.write("\n}  // namespace oracle\n\n#endif  // DISTCALC_TESTS_ORACLES_VALUES_HPP_\n")


if __name__ == "__main__":
    main()
