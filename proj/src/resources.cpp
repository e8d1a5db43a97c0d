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

#include "qleak/resources.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qleak/error.hpp"

namespace qleak {

void ResidualInstance::validate() const {
  if (n_eff == 0 || m == 0 || k == 0) {
    throw Error(Errc::InvalidArgument, "n_eff, m and K must be positive");
  }
}

ResourceEstimate estimate(const ResidualInstance &inst) {
  inst.validate();
  ResourceEstimate e;
  e.q_log = inst.n_eff + inst.m + 1;
  e.c_q = 6 * inst.m + 2 * inst.n_eff - 5;
  const double n = static_cast<double>(inst.n_eff);
  const double log2_k = std::log2(static_cast<double>(inst.k));
  e.log2_r_q = std::log2(std::numbers::pi / 4.0) + 0.5 * (n - log2_k);
  e.log2_t_q = e.log2_r_q + std::log2(static_cast<double>(e.c_q));
  if (inst.n_eff > 60) {
    e.r_q = std::exp2(e.log2_r_q);
    e.t_q = std::exp2(e.log2_t_q);
  } else {
    e.r_q = std::numbers::pi / 4.0 *
            std::sqrt(std::ldexp(1.0, static_cast<int>(inst.n_eff)) /
                      static_cast<double>(inst.k));
    e.t_q = e.r_q * static_cast<double>(e.c_q);
  }
  e.alpha_min = e.log2_t_q / n;
  return e;
}

double crossover_density(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw Error(Errc::InvalidArgument, "rho must be positive");
  }
  auto f = [rho](double n) { return std::exp2(n / 2.0) - rho * n; };
  // f is convex with its minimum here; the larger root lies to the right
  const double n_min = 2.0 * std::log2(2.0 * rho / std::numbers::ln2);
  double lo = std::max(1.0, n_min);
  double hi = 200.0;
  if (lo >= hi || f(lo) > 0.0 || f(hi) < 0.0) {
    throw Error(Errc::NoRoot, "2^(n/2) = rho n has no root on [1, 200]");
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double crossover_fixed_m(std::uint64_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "m must be positive");
  return 2.0 * std::log2(static_cast<double>(m));
}

std::vector<ResidualInstance> reference_resource_rows() {
  std::vector<ResidualInstance> rows;
  for (std::uint64_t n : {16, 32, 64, 80, 128}) rows.push_back({n, 8 * n, 1});
  return rows;
}

std::string format_sci(double log10_value) {
  if (!std::isfinite(log10_value)) return "0.00e+00";
  double exponent = std::floor(log10_value);
  double mantissa = std::pow(10.0, log10_value - exponent);
  mantissa = std::round(mantissa * 100.0) / 100.0;
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fe%c%02d", mantissa, exponent < 0 ? '-' : '+',
                static_cast<int>(std::abs(exponent)));
  return buf;
}

std::string emit_table(const std::vector<ResidualInstance> &rows, TableFormat format) {
  static constexpr std::array<const char *, 7> kHeader = {
      "n_eff", "m", "q_log", "R_Q", "C_Q", "T_Q", "alpha_min"};
  std::vector<std::array<std::string, 7>> cells;
  for (const auto &row : rows) {
    const auto e = estimate(row);
    char alpha[32];
    std::snprintf(alpha, sizeof alpha, "%.2f", e.alpha_min);
    cells.push_back({std::to_string(row.n_eff), std::to_string(row.m),
                     std::to_string(e.q_log),
                     format_sci(e.log2_r_q * std::numbers::ln2 / std::numbers::ln10),
                     std::to_string(e.c_q),
                     format_sci(e.log2_t_q * std::numbers::ln2 / std::numbers::ln10),
                     alpha});
  }

  std::ostringstream out;
  if (format == TableFormat::Csv) {
    for (std::size_t c = 0; c < kHeader.size(); ++c) out << (c ? "," : "") << kHeader[c];
    out << '\n';
    for (const auto &row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << '\n';
    }
    return out.str();
  }

  std::array<std::size_t, 7> width{};
  for (std::size_t c = 0; c < kHeader.size(); ++c) {
    width[c] = std::string_view(kHeader[c]).size();
    for (const auto &row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](auto get) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string s = get(c);
      if (c) out << "  ";
      out << std::string(width[c] - s.size(), ' ') << s;
    }
    out << '\n';
  };
  line([&](std::size_t c) { return std::string(kHeader[c]); });
  for (const auto &row : cells) line([&](std::size_t c) { return row[c]; });
  return out.str();
}

}  // namespace qleak
