// Copyright 2026 The qleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qleak/bbht.hpp"
#include "qleak/certify.hpp"
#include "qleak/cli.hpp"
#include "qleak/cnf.hpp"
#include "qleak/error.hpp"
#include "qleak/grover.hpp"
#include "qleak/leakage.hpp"
#include "qleak/resources.hpp"
#include "qleak/solver.hpp"

namespace py = pybind11;
using namespace qleak;

namespace {

py::dict solve_dict(const SolveResult &r) {
  py::dict d;
  d["status"] = std::string(to_string(r.status));
  d["witness"] = r.witness ? py::object(py::str(r.witness->to_string())) : py::none();
  d["solution_count"] = r.solution_count ? py::object(py::int_(*r.solution_count)) : py::none();
  return d;
}

py::dict counts_dict(const Histogram &h) {
  py::dict d;
  for (const auto &[outcome, count] : h.counts()) d[py::str(h.bitstring(outcome))] = count;
  return d;
}

Assignment to_assignment(const py::object &x) {
  if (py::isinstance<py::str>(x)) return Assignment::from_string(x.cast<std::string>());
  return Assignment(x.cast<std::vector<std::uint8_t>>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Leakage CNFs, simulated Grover/BBHT search, UNSAT certification, resources";

  py::register_exception<Error>(m, "QleakError", PyExc_ValueError);

  py::class_<Cnf>(m, "Cnf")
      .def_static("from_dimacs", &parse_dimacs, py::arg("text"))
      .def("to_dimacs", &emit_dimacs)
      .def_property_readonly("num_vars", &Cnf::num_vars)
      .def_property_readonly("num_clauses", &Cnf::num_clauses)
      .def(
          "clauses",
          [](const Cnf &cnf) {
            std::vector<std::vector<long long>> out;
            for (const auto &c : cnf.clauses()) {
              auto &lits = out.emplace_back();
              for (const auto &l : c.literals()) lits.push_back(l.to_dimacs());
            }
            return out;
          },
          "Clauses as lists of signed DIMACS literals")
      .def(
          "evaluate", [](const Cnf &cnf, const py::object &x) { return cnf.evaluate(to_assignment(x)); },
          py::arg("assignment"), "Assignment as a bitstring or a list of 0/1")
      .def("__eq__", [](const Cnf &a, const Cnf &b) { return a == b; })
      .def("__repr__", [](const Cnf &c) {
        return "Cnf(num_vars=" + std::to_string(c.num_vars()) +
               ", num_clauses=" + std::to_string(c.num_clauses()) + ")";
      });

  m.def("brute_force", [](const Cnf &cnf) { return solve_dict(brute_force(cnf)); });
  m.def("dpll_solve", [](const Cnf &cnf) { return solve_dict(dpll_solve(cnf)); });

  m.def(
      "benchmark_case",
      [](int number) {
        const auto inst = benchmark_case(number);
        py::dict d;
        d["label"] = inst.label;
        d["cnf"] = inst.cnf;
        d["expected_k"] = inst.expected_k;
        std::vector<std::string> witnesses;
        for (const auto &w : inst.expected_witnesses) witnesses.push_back(w.to_string());
        d["expected_witnesses"] = witnesses;
        d["metadata_json"] = metadata_json(inst);
        return d;
      },
      py::arg("number"), "Case 1-3, or 4 for the UNSAT control");

  m.def(
      "encode",
      [](const std::string &mode, bool keys_differ, int plaintext, std::uint32_t pad,
         const std::string &relation, std::uint32_t state_bits, std::uint32_t steps) {
        LeakageSpec spec;
        spec.mode = parse_property_mode(mode);
        spec.keys_must_differ = keys_differ;
        spec.plaintext = static_cast<std::uint8_t>(plaintext);
        spec.padding_vars = pad;
        spec.relation = parse_relation_encoding(relation);
        spec.state_bits = state_bits;
        spec.unroll_steps = steps;
        const auto inst = encode(spec);
        return py::make_tuple(inst.cnf, inst.expected_k);
      },
      py::arg("mode") = "notequal", py::arg("keys_differ") = false, py::arg("plaintext") = 1,
      py::arg("pad") = 0, py::arg("relation") = "direct", py::arg("state_bits") = 1,
      py::arg("steps") = 1, "Returns (cnf, expected_k)");

  m.def("optimal_iterations", &optimal_iterations, py::arg("n"), py::arg("k"));
  m.def("success_probability", &success_probability, py::arg("n"), py::arg("k"), py::arg("r"));

  m.def(
      "grover_run",
      [](const Cnf &cnf, std::uint64_t iterations, std::uint64_t shots, std::uint64_t seed,
         bool gate_level, double noise_flip) {
        GroverConfig config;
        config.iterations = iterations;
        config.shots = shots;
        config.seed = seed;
        config.use_gate_level = gate_level;
        if (noise_flip > 0.0) config.noise = NoiseModel{noise_flip};
        const auto run = grover_run(cnf, config);
        py::dict d;
        d["probabilities"] = run.probabilities;
        d["marked_mass"] = run.marked_mass;
        d["counts"] = counts_dict(run.histogram);
        return d;
      },
      py::arg("cnf"), py::arg("iterations"), py::arg("shots") = 2000, py::arg("seed") = 0,
      py::arg("gate_level") = false, py::arg("noise_flip") = 0.0);

  m.def(
      "bbht_solve",
      [](const Cnf &cnf, std::uint64_t seed, std::uint64_t shots, std::uint64_t budget,
         bool gate_level, double noise_flip, const std::string &candidate) {
        BbhtOptions options;
        options.seed = seed;
        options.shots_per_trial = shots;
        if (budget > 0) options.budget = budget;
        options.gate_level = gate_level;
        if (noise_flip > 0.0) options.noise = NoiseModel{noise_flip};
        options.candidate = parse_candidate_rule(candidate);
        return report_json(bbht_solve(cnf, options));
      },
      py::arg("cnf"), py::arg("seed") = 0, py::arg("shots") = 2000, py::arg("budget") = 0,
      py::arg("gate_level") = false, py::arg("noise_flip") = 0.0, py::arg("candidate") = "mode",
      "BBHT report as a JSON string");

  m.def("hoeffding_radius", &hoeffding_radius, py::arg("shots"), py::arg("delta"));
  m.def(
      "certify",
      [](const std::map<std::string, std::uint64_t> &counts, unsigned n, double delta) {
        Histogram h(n);
        for (const auto &[bits, count] : counts) {
          if (bits.size() != n) throw Error(Errc::LengthMismatch, "bitstring width differs from n");
          h.add(Assignment::from_string(bits).to_index(), count);
        }
        return certify(h, delta).to_json();
      },
      py::arg("counts"), py::arg("n"), py::arg("delta") = 0.01,
      "Certification report as a JSON string");

  m.def(
      "estimate",
      [](std::uint64_t n_eff, std::uint64_t m_clauses, std::uint64_t k) {
        const auto e = estimate({n_eff, m_clauses, k});
        py::dict d;
        d["q_log"] = e.q_log;
        d["c_q"] = e.c_q;
        d["r_q"] = e.r_q;
        d["t_q"] = e.t_q;
        d["alpha_min"] = e.alpha_min;
        return d;
      },
      py::arg("n_eff"), py::arg("m"), py::arg("k") = 1);
  m.def("crossover_density", &crossover_density, py::arg("rho"));
  m.def("crossover_fixed_m", &crossover_fixed_m, py::arg("m"));
  m.def(
      "resource_table",
      [](const std::string &format) {
        return emit_table(reference_resource_rows(),
                          format == "csv" ? TableFormat::Csv : TableFormat::Text);
      },
      py::arg("format") = "text");

  m.def(
      "run_cli",
      [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr)");
}
