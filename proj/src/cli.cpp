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

#include "qleak/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <json.hpp>
#include <set>

#include "qleak/bbht.hpp"
#include "qleak/certify.hpp"
#include "qleak/cnf.hpp"
#include "qleak/error.hpp"
#include "qleak/leakage.hpp"
#include "qleak/resources.hpp"
#include "qleak/rng.hpp"
#include "qleak/solver.hpp"

namespace qleak::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct SpecFlags {
  int case_number = 0;
  std::string mode = "notequal";
  bool keys_differ = false;
  int plaintext = 1;
  std::uint32_t pad = 0;
  std::string encoding = "direct";
  std::uint32_t state_bits = 1;
  std::uint32_t steps = 1;
};

struct QuantumFlags {
  std::uint64_t shots = 2000;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool gate_level = false;
  std::string ancilla = "violation";
  std::string candidate = "mode";
  double noise_flip = 0.0;
};

void add_spec_flags(CLI::App *app, SpecFlags &f) {
  app->add_option("--case", f.case_number, "Benchmark case (1-3, 4 = UNSAT control)")
      ->check(CLI::Range(1, 4));
  app->add_option("--mode", f.mode, "Leakage property")
      ->check(CLI::IsMember({"equal", "notequal"}));
  app->add_flag("--keys-differ", f.keys_differ, "Require the two keys to differ");
  app->add_option("--plaintext", f.plaintext, "Shared plaintext bit")->check(CLI::Range(0, 1));
  app->add_option("--pad", f.pad, "Unconstrained-then-fixed padding variables");
  app->add_option("--encoding", f.encoding, "Relation clauses")
      ->check(CLI::IsMember({"direct", "indicator"}));
  app->add_option("--state-bits", f.state_bits, "State width")->check(CLI::Range(1, 8));
  app->add_option("--steps", f.steps, "Unrolled rounds")->check(CLI::Range(1, 8));
}

void add_quantum_flags(CLI::App *app, QuantumFlags &f) {
  app->add_option("--shots", f.shots, "Shots per Grover run")->check(CLI::PositiveNumber);
  app->add_option("--seed", f.seed, "Base seed");
  app->add_option("--budget", f.budget, "BBHT trial budget (0 = default)");
  app->add_flag("--gate-level", f.gate_level, "Simulate the ancilla-based oracle circuit");
  app->add_option("--ancilla", f.ancilla, "Clause ancilla encoding")
      ->check(CLI::IsMember({"violation", "satisfaction"}));
  app->add_option("--candidate", f.candidate, "Candidate rule per trial")
      ->check(CLI::IsMember({"mode", "single-shot"}));
  app->add_option("--noise-flip", f.noise_flip, "Readout flip probability")
      ->check(CLI::Range(0.0, 0.4999999));
}

LeakageInstance instance_from(const SpecFlags &f) {
  if (f.case_number != 0) return benchmark_case(f.case_number);
  LeakageSpec spec;
  spec.state_bits = f.state_bits;
  spec.unroll_steps = f.steps;
  spec.mode = parse_property_mode(f.mode);
  spec.keys_must_differ = f.keys_differ;
  spec.plaintext = static_cast<std::uint8_t>(f.plaintext);
  spec.padding_vars = f.pad;
  spec.relation = parse_relation_encoding(f.encoding);
  return encode(spec);
}

Cnf load_cnf(const std::string &input, const SpecFlags &f) {
  if (!input.empty()) return read_dimacs_file(input);
  return instance_from(f).cnf;
}

BbhtOptions bbht_options(const QuantumFlags &f) {
  BbhtOptions o;
  o.shots_per_trial = f.shots;
  o.seed = f.seed;
  if (f.budget > 0) o.budget = f.budget;
  o.gate_level = f.gate_level;
  o.encoding = f.ancilla == "satisfaction" ? ClauseEncoding::SatisfactionBits
                                           : ClauseEncoding::ViolationBits;
  o.candidate = parse_candidate_rule(f.candidate);
  if (f.noise_flip > 0.0) o.noise = NoiseModel{f.noise_flip};
  return o;
}

fs::path prepare_dir(const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error(Errc::Io, "cannot create output directory " + dir);
  }
  return fs::path(dir);
}

void write_file(const fs::path &path, std::string_view contents) {
  write_text_file(path.string(), contents);
}

int cmd_generate(const SpecFlags &f, const std::string &out_dir, std::ostream &out) {
  const auto inst = instance_from(f);
  const auto dir = prepare_dir(out_dir.empty() ? "." : out_dir);
  const auto cnf_path = dir / (inst.label + ".cnf");
  const auto meta_path = dir / (inst.label + ".json");
  write_file(cnf_path, emit_dimacs(inst.cnf));
  write_file(meta_path, metadata_json(inst));
  out << "wrote " << cnf_path.string() << " (n=" << inst.cnf.num_vars()
      << ", m=" << inst.cnf.num_clauses() << ", expected_K=" << inst.expected_k << ")\n";
  return kOk;
}

int cmd_solve_classical(const Cnf &cnf, const std::string &solver,
                        const std::string &out_dir, std::ostream &out) {
  const SolveResult r = solver == "brute" ? brute_force(cnf) : dpll_solve(cnf);
  Json j;
  j["solver"] = solver;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness ? Json(r.witness->to_string()) : Json(nullptr);
  j["solution_count"] = r.solution_count ? Json(*r.solution_count) : Json(nullptr);
  out << to_string(r.status);
  if (r.witness) out << ' ' << r.witness->to_string();
  if (r.solution_count) out << " K=" << *r.solution_count;
  out << '\n';
  if (!out_dir.empty()) write_file(prepare_dir(out_dir) / "classical.json", j.dump(2) + "\n");
  return kOk;
}

int cmd_solve_quantum(const Cnf &cnf, const QuantumFlags &f, const std::string &out_dir,
                      std::ostream &out) {
  const BbhtReport report = bbht_solve(cnf, bbht_options(f));
  if (!out_dir.empty()) {
    const auto dir = prepare_dir(out_dir);
    write_file(dir / "report.json", report_json(report));
    write_file(dir / "histogram.csv", report.aggregated.to_csv());
  }
  if (report.verdict == BbhtVerdict::Sat) {
    out << "SAT witness=" << report.witness->to_string() << " tries=" << report.tries() << '\n';
    return kOk;
  }
  out << "BudgetExhausted tries=" << report.tries() << '\n';
  return kBudgetExhausted;
}

int cmd_certify(const std::string &input, double delta, const std::string &out_dir,
                std::ostream &out) {
  const Histogram hist = Histogram::from_csv(read_text_file(input));
  const HistogramReport report = certify(hist, delta);
  out << report.to_json();
  if (!out_dir.empty()) write_file(prepare_dir(out_dir) / "certify.json", report.to_json());
  return kOk;
}

struct ResourceFlags {
  std::vector<std::uint64_t> n_eff;
  std::vector<std::uint64_t> m;
  std::uint64_t density = 8;
  std::uint64_t k = 1;
  std::string format = "text";
  double rho = 0.0;
  std::uint64_t crossover_m = 0;
};

int cmd_resources(const ResourceFlags &f, const std::string &out_dir, std::ostream &out) {
  std::vector<ResidualInstance> rows;
  if (f.n_eff.empty()) {
    rows = reference_resource_rows();
    for (auto &row : rows) row.k = f.k;
  } else {
    if (!f.m.empty() && f.m.size() != f.n_eff.size()) {
      throw Error(Errc::InvalidArgument, "--m needs one value per --n-eff");
    }
    for (std::size_t i = 0; i < f.n_eff.size(); ++i) {
      const std::uint64_t m = f.m.empty() ? f.density * f.n_eff[i] : f.m[i];
      rows.push_back({f.n_eff[i], m, f.k});
    }
  }
  out << emit_table(rows, f.format == "csv" ? TableFormat::Csv : TableFormat::Text);
  if (f.rho > 0.0) out << "crossover_density(" << f.rho << ") = " << crossover_density(f.rho) << '\n';
  if (f.crossover_m > 0) {
    out << "crossover_fixed_m(" << f.crossover_m << ") = " << crossover_fixed_m(f.crossover_m)
        << '\n';
  }
  if (!out_dir.empty()) {
    const auto dir = prepare_dir(out_dir);
    write_file(dir / "resources.csv", emit_table(rows, TableFormat::Csv));
    write_file(dir / "resources.txt", emit_table(rows, TableFormat::Text));
  }
  return kOk;
}

int cmd_reproduce(const QuantumFlags &f, std::uint64_t repeats, double delta,
                  const std::string &out_dir, std::ostream &out) {
  if (repeats < 1) throw Error(Errc::InvalidArgument, "--repeats must be at least 1");
  const auto dir = prepare_dir(out_dir.empty() ? "reproduce" : out_dir);
  Json summary;
  summary["seed"] = f.seed;
  summary["shots"] = f.shots;
  summary["repeats"] = repeats;
  auto &cases = summary["cases"] = Json::array();

  const auto benchmarks = paper_benchmarks();
  for (std::size_t c = 0; c < benchmarks.size(); ++c) {
    const auto &inst = benchmarks[c];
    const Qubit n = inst.cnf.num_vars();
    const SolveResult classical = dpll_solve(inst.cnf);

    Histogram aggregate(n);
    std::set<std::string> witnesses;
    std::vector<std::uint64_t> tries;
    bool all_valid = true;
    std::uint64_t sat_runs = 0;
    for (std::uint64_t rep = 0; rep < repeats; ++rep) {
      auto options = bbht_options(f);
      options.seed = derive_seed(derive_seed(f.seed, c + 1), rep);
      const BbhtReport report = bbht_solve(inst.cnf, options);
      aggregate.merge(report.final_histogram());
      tries.push_back(report.tries());
      if (report.verdict == BbhtVerdict::Sat) {
        ++sat_runs;
        witnesses.insert(report.witness->to_string());
        all_valid = all_valid && inst.cnf.evaluate(*report.witness);
      }
    }
    write_file(dir / (inst.label + "_histogram.csv"), aggregate.to_csv());

    const HistogramReport cert = certify(aggregate, delta);
    std::set<std::string> models, amplified;
    for (const auto &w : inst.expected_witnesses) models.insert(w.to_string());
    for (const auto &[outcome, count] : aggregate.counts()) {
      const double p = static_cast<double>(count) / static_cast<double>(aggregate.total());
      if (p > cert.threshold) amplified.insert(aggregate.bitstring(outcome));
    }
    const bool subset = std::includes(models.begin(), models.end(), witnesses.begin(),
                                      witnesses.end());
    double mean_tries = 0.0;
    for (auto t : tries) mean_tries += static_cast<double>(t);
    mean_tries /= static_cast<double>(tries.size());

    Json j;
    j["label"] = inst.label;
    j["n"] = n;
    j["m"] = inst.cnf.num_clauses();
    j["expected_k"] = inst.expected_k;
    j["dpll_status"] = to_string(classical.status);
    j["dpll_witness"] = classical.witness ? Json(classical.witness->to_string()) : Json(nullptr);
    j["bbht_sat_runs"] = sat_runs;
    j["tries"] = tries;
    j["mean_tries"] = mean_tries;
    j["witnesses"] = witnesses;
    j["witnesses_valid"] = all_valid;
    j["witnesses_are_models"] = subset;
    j["amplified_bitstrings"] = amplified;
    j["amplified_equals_models"] = amplified == models;
    j["status_agrees"] = (sat_runs > 0) == (classical.status == SolveStatus::Sat);
    j["certify_verdict"] = to_string(cert.verdict);
    cases.push_back(j);

    out << inst.label << ": dpll=" << to_string(classical.status) << " bbht_sat=" << sat_runs
        << '/' << repeats << " mean_tries=" << mean_tries
        << " certify=" << to_string(cert.verdict) << '\n';
    if (inst.expected_k == 0) {
      write_file(dir / "unsat_certify.json", cert.to_json());
      out << "  " << cert.verdict_line() << '\n';
    }
  }

  const auto rows = reference_resource_rows();
  write_file(dir / "resources.csv", emit_table(rows, TableFormat::Csv));
  write_file(dir / "resources.txt", emit_table(rows, TableFormat::Text));
  out << emit_table(rows, TableFormat::Text);
  write_file(dir / "summary.json", summary.dump(2) + "\n");
  out << "wrote " << (dir / "summary.json").string() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Two-trace leakage checking with simulated Grover search", "qleak"};
  app.require_subcommand(1);
  app.fallthrough(false);

  SpecFlags spec;
  QuantumFlags quantum;
  ResourceFlags resources;
  std::string input, out_dir, solver = "dpll";
  std::uint64_t repeats = 10;
  double delta = 0.01;

  auto *generate = app.add_subcommand("generate", "Write a leakage CNF and its metadata");
  add_spec_flags(generate, spec);
  generate->add_option("--out", out_dir, "Output directory");

  auto *classical = app.add_subcommand("solve-classical", "Solve a CNF classically");
  classical->add_option("input", input, "DIMACS file (otherwise built from flags)");
  add_spec_flags(classical, spec);
  classical->add_option("--solver", solver)->check(CLI::IsMember({"dpll", "brute"}));
  classical->add_option("--out", out_dir, "Output directory");

  auto *quantum_cmd = app.add_subcommand("solve-quantum", "Run BBHT Grover search");
  quantum_cmd->add_option("input", input, "DIMACS file (otherwise built from flags)");
  add_spec_flags(quantum_cmd, spec);
  add_quantum_flags(quantum_cmd, quantum);
  quantum_cmd->add_option("--out", out_dir, "Output directory");

  auto *certify_cmd = app.add_subcommand("certify", "UNSAT evidence from a histogram CSV");
  certify_cmd->add_option("input", input, "Histogram CSV")->required();
  certify_cmd->add_option("--delta", delta, "Failure probability")
      ->check(CLI::Range(1e-300, 1.0));
  certify_cmd->add_option("--out", out_dir, "Output directory");

  auto *resources_cmd = app.add_subcommand("resources", "Projected logical resources");
  resources_cmd->add_option("--n-eff", resources.n_eff, "Residual variable counts");
  resources_cmd->add_option("--m", resources.m, "Clause counts, one per --n-eff");
  resources_cmd->add_option("--density", resources.density, "m / n_eff when --m is absent");
  resources_cmd->add_option("--k", resources.k, "Solution count")->check(CLI::PositiveNumber);
  resources_cmd->add_option("--format", resources.format)
      ->check(CLI::IsMember({"text", "csv"}));
  resources_cmd->add_option("--rho", resources.rho, "Report crossover_density(rho)");
  resources_cmd->add_option("--crossover-m", resources.crossover_m,
                            "Report crossover_fixed_m(m)");
  resources_cmd->add_option("--out", out_dir, "Output directory");

  auto *reproduce = app.add_subcommand("reproduce", "Run every benchmark and emit reports");
  add_quantum_flags(reproduce, quantum);
  reproduce->add_option("--repeats", repeats, "Runs per case")->check(CLI::PositiveNumber);
  reproduce->add_option("--delta", delta, "Failure probability")->check(CLI::Range(1e-300, 1.0));
  reproduce->add_option("--out", out_dir, "Output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  try {
    if (generate->parsed()) return cmd_generate(spec, out_dir, out);
    if (classical->parsed()) {
      return cmd_solve_classical(load_cnf(input, spec), solver, out_dir, out);
    }
    if (quantum_cmd->parsed()) {
      return cmd_solve_quantum(load_cnf(input, spec), quantum, out_dir, out);
    }
    if (certify_cmd->parsed()) return cmd_certify(input, delta, out_dir, out);
    if (resources_cmd->parsed()) return cmd_resources(resources, out_dir, out);
    if (reproduce->parsed()) return cmd_reproduce(quantum, repeats, delta, out_dir, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::Io:
        return kIoFailure;
      case Errc::TooManyQubits:
        return kTooManyQubits;
      default:
        return kInvalidArguments;
    }
  }
  return kInvalidArguments;
}

}  // namespace qleak::cli
