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

// Acceptance harness: one PASS/FAIL line per criterion. With no arguments
// every criterion runs; a single number selects one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qleak/bbht.hpp"
#include "qleak/certify.hpp"
#include "qleak/cli.hpp"
#include "qleak/grover.hpp"
#include "qleak/leakage.hpp"
#include "qleak/resources.hpp"
#include "qleak/rng.hpp"
#include "qleak/solver.hpp"
#include "support/fuzz.hpp"

namespace {

using namespace qleak;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char *format, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c, d);
  return buf;
}

bool same_3sig(double a, double b) {
  const int e = static_cast<int>(std::floor(std::log10(std::abs(b))));
  const double scale = std::pow(10.0, e - 2);
  return std::round(a / scale) == std::round(b / scale);
}

// Resource table reproduction through the CLI.
Outcome criterion1() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"resources", "--format", "csv"}, out, err);
  o.require(code == 0, "resources command failed");
  struct Row {
    std::uint64_t n, q;
    double r;
    std::uint64_t c;
    double t, alpha;
  };
  const Row expected[] = {{16, 145, 2.01e2, 795, 1.60e5, 1.08},
                       {32, 289, 5.15e4, 1595, 8.21e7, 0.82},
                       {64, 577, 3.37e9, 3195, 1.08e13, 0.68},
                       {80, 721, 8.64e11, 3995, 3.45e15, 0.65},
                       {128, 1153, 1.45e19, 6395, 9.27e22, 0.60}};
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  std::size_t matched = 0;
  for (const auto &p : expected) {
    if (!std::getline(lines, line)) break;
    unsigned long long n, m, q, c;
    double r, t, alpha;
    if (std::sscanf(line.c_str(), "%llu,%llu,%llu,%lf,%llu,%lf,%lf", &n, &m, &q, &r, &c, &t,
                    &alpha) != 7) {
      o.require(false, "unparsable row: " + line);
      continue;
    }
    const bool ok = n == p.n && m == 8 * p.n && q == p.q && c == p.c && same_3sig(r, p.r) &&
                    same_3sig(t, p.t) && std::abs(alpha - p.alpha) < 0.005;
    o.require(ok, "row n_eff=" + std::to_string(p.n) + " differs: " + line);
    matched += ok;
  }
  o.detail = std::to_string(matched) + "/5 rows match to 3 significant digits" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const double rho = crossover_density(20.0);
  const double fixed = crossover_fixed_m(200);
  o.require(std::abs(rho - 16.8) <= 0.1, "crossover_density(20) off");
  o.require(std::abs(fixed - 15.29) <= 0.01, "crossover_fixed_m(200) off");
  o.detail = fmt("crossover_density(20)=%.4f, crossover_fixed_m(200)=%.4f", rho, fixed) +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::uint64_t r5 = optimal_iterations(5, 2), r6 = optimal_iterations(6, 2),
                      r7 = optimal_iterations(7, 2);
  o.require(r5 == 3 && r6 == 4 && r7 == 6, "r* differs from {3,4,6}");
  double worst = 0.0;
  std::size_t checks = 0;
  for (Qubit n = 1; n <= 10; ++n) {
    for (std::uint32_t j : {0U, 1U, 2U}) {
      if (j > n) continue;
      const std::uint64_t k = std::uint64_t{1} << j;
      const Cnf cnf = testing::cnf_with_power_of_two_models(n, j, 0x2b5);
      GroverSearch search(cnf);
      const std::uint64_t rmax = 2 * optimal_iterations(n, k);
      for (std::uint64_t r = 0; r <= rmax; ++r) {
        const auto probs =
            search.evolve(r, false, ClauseEncoding::ViolationBits).probabilities();
        double mass = 0.0;
        for (std::size_t x = 0; x < probs.size(); ++x) {
          if (search.oracle().is_marked(x)) mass += probs[x];
        }
        worst = std::max(worst, std::abs(mass - success_probability(n, k, r)));
        ++checks;
      }
    }
  }
  o.require(worst < 1e-9, "rotation law violated");
  o.detail = "r*=(" + std::to_string(r5) + "," + std::to_string(r6) + "," + std::to_string(r7) +
             "), " + std::to_string(checks) + " (n,K,r) points, max |mass - sin^2| = " +
             fmt("%.2e", worst) + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// Largest deviation from (-1)^F(x)|x>|0> over all basis inputs.
double oracle_deviation(const Cnf &cnf, ClauseEncoding encoding) {
  const OracleCircuit oc = build_gate_oracle(cnf, encoding);
  const Qubit n = cnf.num_vars();
  const Qubit anc = oc.width() - n;
  const DirectOracle direct(cnf);
  double worst = 0.0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    StateVector gate = StateVector::basis(oc.width(), x << anc);
    gate.apply(oc.circuit);
    StateVector ref = StateVector::basis(oc.width(), x << anc);
    direct.apply(ref);
    double dev = 0.0;
    for (std::size_t i = 0; i < gate.size(); ++i) dev = std::max(dev, std::abs(gate[i] - ref[i]));
    worst = std::max(worst, dev);
  }
  return worst;
}

Outcome criterion4() {
  Outcome o;
  std::vector<Cnf> formulas;
  const auto c1 = benchmark_case(1), c2 = benchmark_case(2);
  const Qubit w1 = build_gate_oracle(c1.cnf, ClauseEncoding::ViolationBits).width();
  const Qubit w2 = build_gate_oracle(c2.cnf, ClauseEncoding::ViolationBits).width();
  o.require(w1 == 17 && w2 == 21, "widths differ from 17/21");
  formulas.push_back(c1.cnf);
  formulas.push_back(c2.cnf);
  Rng rng(404);
  for (int i = 0; i < 50; ++i) {
    const auto n = 1 + static_cast<std::uint32_t>(rng.below(6));
    formulas.push_back(testing::random_cnf(rng, n, rng.below(15)));
  }
  double worst = 0.0;
  for (const auto &cnf : formulas) {
    for (auto enc : {ClauseEncoding::ViolationBits, ClauseEncoding::SatisfactionBits}) {
      worst = std::max(worst, oracle_deviation(cnf, enc));
    }
  }
  o.require(worst < 1e-9, "gate oracle deviates from the phase oracle");
  o.detail = "widths " + std::to_string(w1) + "/" + std::to_string(w2) + ", " +
             std::to_string(formulas.size()) + " CNFs x 2 encodings, max amplitude deviation " +
             fmt("%.2e", worst) + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t agreements = 0, instances = 0;
  auto check_instance = [&](const Cnf &cnf, std::uint64_t seed) {
    const auto truth = brute_force(cnf);
    const auto dpll = dpll_solve(cnf);
    BbhtOptions options;
    options.seed = seed;
    const auto report = bbht_solve(cnf, options);
    const bool sat = report.verdict == BbhtVerdict::Sat;
    if (sat && !cnf.evaluate(*report.witness)) o.require(false, "invalid witness");
    const bool agree = sat == (truth.status == SolveStatus::Sat) && truth.status == dpll.status;
    ++instances;
    agreements += agree;
  };
  const auto benchmarks = paper_benchmarks();
  for (const auto &inst : benchmarks) check_instance(inst.cnf, 1);
  Rng rng(505);
  for (int i = 0; i < 200; ++i) {
    const auto n = 1 + static_cast<std::uint32_t>(rng.below(10));
    const Cnf cnf = testing::random_cnf(rng, n, rng.below(4 * n + 1));
    check_instance(cnf, rng.below(1U << 30));
  }
  o.require(agreements == instances, "verdict disagreement");

  std::string means;
  for (int c = 0; c < 3; ++c) {
    std::uint64_t successes = 0, tries = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      BbhtOptions options;
      options.seed = seed;
      const auto report = bbht_solve(benchmarks[c].cnf, options);
      successes += report.verdict == BbhtVerdict::Sat;
      tries += report.tries();
      if (report.witness && !benchmarks[c].cnf.evaluate(*report.witness)) {
        o.require(false, "invalid benchmark witness");
      }
    }
    const double mean = static_cast<double>(tries) / 100.0;
    o.require(successes >= 99, benchmarks[c].label + " success below 99/100");
    o.require(mean >= 1.0 && mean <= 4.0, benchmarks[c].label + " mean tries outside [1,4]");
    means += (c ? ", " : "") + benchmarks[c].label + " " + std::to_string(successes) +
             "/100 mean tries " + fmt("%.2f", mean);
  }
  o.detail = std::to_string(agreements) + "/" + std::to_string(instances) +
             " verdicts agree; " + means + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// Final-trial histograms of `repeats` BBHT runs, summed.
Histogram unsat_aggregate(const Cnf &cnf, std::uint64_t seed, std::uint64_t repeats) {
  Histogram total(cnf.num_vars());
  for (std::uint64_t rep = 0; rep < repeats; ++rep) {
    BbhtOptions options;
    options.seed = derive_seed(seed, rep);
    total.merge(bbht_solve(cnf, options).final_histogram());
  }
  return total;
}

Outcome criterion6() {
  Outcome o;
  const auto control = benchmark_case(4);
  o.require(control.cnf.num_vars() == 5 && control.expected_k == 0, "control is not n=5, K=0");
  const double eps = hoeffding_radius(20000, 0.01);
  o.require(std::abs(eps - 0.01073) < 5e-6, "Hoeffding radius off");
  o.require(std::abs(1.0 / 32 + eps - 0.0420) < 5e-5, "threshold off");
  int flat = 0;
  double chi_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Histogram h = unsat_aggregate(control.cnf, derive_seed(606, seed), 10);
    if (h.total() != 20000) o.require(false, "aggregate is not 20000 shots");
    const auto report = certify(h, 0.01);
    flat += report.verdict == CertifyVerdict::ConsistentWithUnsat;
    chi_sum += report.chi2_stat;
  }
  const double chi_mean = chi_sum / 100.0;
  o.require(flat >= 98, "ConsistentWithUnsat in fewer than 98 runs");
  o.require(std::abs(chi_mean - 31.0) <= 3.0, "chi-square mean outside 31 +/- 3");
  o.detail = fmt("eps=%.6f, threshold=%.4f, ConsistentWithUnsat %.0f/100, mean chi2=%.2f (dof 31)",
                 eps, 1.0 / 32 + eps, flat, chi_mean) +
             "; control m=" + std::to_string(control.cnf.num_clauses()) +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto case1 = benchmark_case(1);
  int sat = 0, false_sat = 0, noisy_candidates = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    BbhtOptions options;
    options.seed = seed;
    options.noise = NoiseModel{0.05};
    const auto report = bbht_solve(case1.cnf, options);
    for (const auto &t : report.trials) noisy_candidates += !t.classical_check;
    if (report.verdict == BbhtVerdict::Sat) {
      ++sat;
      false_sat += !case1.cnf.evaluate(*report.witness);
    }
  }
  o.require(false_sat == 0, "noise produced a false SAT");
  o.detail = std::to_string(sat) + "/100 SAT, " + std::to_string(false_sat) +
             " invalid witnesses, " + std::to_string(noisy_candidates) +
             " candidates rejected by the classical check";
  return o;
}

}  // namespace

int main(int argc, char **argv) {
  struct Criterion {
    const char *name;
    std::function<Outcome()> run;
    double time_limit_s;
  };
  const std::vector<Criterion> criteria = {
      {"resource table reproduction", criterion1, 1.0},
      {"crossover values", criterion2, 1.0},
      {"iteration-count law", criterion3, 30.0},
      {"oracle equivalence", criterion4, 300.0},
      {"witness agreement", criterion5, 600.0},
      {"UNSAT certification", criterion6, 300.0},
      {"noise robustness", criterion7, 120.0},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "usage: %s [criterion 1-%zu]\n", argv[0], criteria.size());
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    outcome.require(secs < criteria[i].time_limit_s, "over the time limit");
    std::printf("[%s] criterion %zu (%s): %s [%.2fs, limit %.0fs]\n",
                outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, outcome.detail.c_str(),
                secs, criteria[i].time_limit_s);
    all = all && outcome.pass;
  }
  return all ? 0 : 1;
}
