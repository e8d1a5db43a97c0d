# Copyright 2026 The qleak Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the qleak leakage-checking toolkit."""

import json as _json

from ._core import (
    Cnf,
    QleakError,
    benchmark_case,
    brute_force,
    crossover_density,
    crossover_fixed_m,
    dpll_solve,
    encode,
    estimate,
    grover_run,
    hoeffding_radius,
    optimal_iterations,
    resource_table,
    run_cli,
    success_probability,
)
from ._core import bbht_solve as _bbht_solve
from ._core import certify as _certify


def bbht_solve(cnf, **kwargs):
    """Runs BBHT search and returns the report as a dict."""
    return _json.loads(_bbht_solve(cnf, **kwargs))


def certify(counts, n, delta=0.01):
    """Certifies a {bitstring: count} histogram; returns the report as a dict."""
    return _json.loads(_certify(counts, n, delta))


__all__ = [
    "Cnf",
    "QleakError",
    "bbht_solve",
    "benchmark_case",
    "brute_force",
    "certify",
    "crossover_density",
    "crossover_fixed_m",
    "dpll_solve",
    "encode",
    "estimate",
    "grover_run",
    "hoeffding_radius",
    "optimal_iterations",
    "resource_table",
    "run_cli",
    "success_probability",
]
