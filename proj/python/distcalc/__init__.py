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

"""Python bindings for the distcalc multiplier-convolutor calculus.

Spaces, functions, distributions and seminorms are passed as the same text
literals the command-line tool accepts.
"""

from distcalc._core import (
    DimensionMismatch,
    Error,
    GridError,
    MembershipError,
    NoKnownWitness,
    NotAdmissible,
    NotFourierMapped,
    NotSupported,
    NumericError,
    ParseError,
    audit_ehrenpreis,
    bound,
    classify,
    convolutor_space,
    dual,
    evaluate,
    fourier_image,
    includes,
    infer,
    least_common_superspace,
    membership,
    multiplier_space,
    oc_cauchy,
    pair,
    run_cli,
    seminorm,
    spaces,
    table,
    witness,
)

__all__ = [
    "DimensionMismatch",
    "Error",
    "GridError",
    "MembershipError",
    "NoKnownWitness",
    "NotAdmissible",
    "NotFourierMapped",
    "NotSupported",
    "NumericError",
    "ParseError",
    "audit_ehrenpreis",
    "bound",
    "classify",
    "convolutor_space",
    "dual",
    "evaluate",
    "fourier_image",
    "includes",
    "infer",
    "least_common_superspace",
    "membership",
    "multiplier_space",
    "oc_cauchy",
    "pair",
    "run_cli",
    "seminorm",
    "spaces",
    "table",
    "witness",
]
