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

import math

import pytest

import qleak


def test_dimacs_round_trip_and_solvers():
    cnf = qleak.Cnf.from_dimacs("p cnf 2 1\n1 2 0\n")
    assert cnf.num_vars == 2 and cnf.num_clauses == 1
    assert qleak.Cnf.from_dimacs(cnf.to_dimacs()) == cnf
    assert cnf.clauses() == [[1, 2]]
    assert qleak.brute_force(cnf) == {"status": "SAT", "witness": "01", "solution_count": 3}
    assert qleak.dpll_solve(cnf)["status"] == "SAT"
    assert cnf.evaluate("10") and cnf.evaluate([0, 1]) and not cnf.evaluate("00")


def test_errors_surface_as_value_errors():
    with pytest.raises(qleak.QleakError, match="out of range|exceeds"):
        qleak.Cnf.from_dimacs("p cnf 2 1\n3 0\n")
    with pytest.raises(ValueError):
        qleak.hoeffding_radius(100, 0.0)


def test_benchmarks_and_grover():
    case1 = qleak.benchmark_case(1)
    assert case1["cnf"].num_vars == 5 and case1["expected_k"] == 2
    run = qleak.grover_run(case1["cnf"], iterations=3, shots=500, seed=1)
    assert abs(run["marked_mass"] - qleak.success_probability(5, 2, 3)) < 1e-9
    assert sum(run["counts"].values()) == 500
    assert [qleak.optimal_iterations(n, 2) for n in (5, 6, 7)] == [3, 4, 6]


def test_bbht_and_certify():
    case1 = qleak.benchmark_case(1)
    report = qleak.bbht_solve(case1["cnf"], seed=7)
    assert report["verdict"] == "SAT"
    assert case1["cnf"].evaluate(report["witness"])

    unsat = qleak.benchmark_case(4)
    report = qleak.bbht_solve(unsat["cnf"], seed=7)
    assert report["verdict"] == "BudgetExhausted" and report["witness"] is None
    cert = qleak.certify({format(i, "05b"): 625 for i in range(32)}, 5)
    assert cert["verdict"] == "ConsistentWithUnsat"
    assert math.isclose(qleak.hoeffding_radius(20000, 0.01), 0.010730, abs_tol=1e-6)


def test_resources_and_cli():
    est = qleak.estimate(80, 640)
    assert est["q_log"] == 721 and est["c_q"] == 3995
    assert f"{est['t_q']:.2e}" == "3.45e+15"
    assert abs(qleak.crossover_density(20) - 16.8) < 0.1
    assert "1.08" in qleak.resource_table("csv")
    code, out, _ = qleak.run_cli(["solve-classical", "--case", "1"])
    assert code == 0 and out.startswith("SAT")
    assert qleak.run_cli(["generate", "--case", "9"])[0] == 2
