/*
   Copyright 2026 The idealcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "idealcount/constants.hpp"
#include "idealcount/field.hpp"
#include "idealcount/golden_tables.hpp"
#include "idealcount/ideal_counter.hpp"
#include "idealcount/quadrature.hpp"
#include "idealcount/report_io.hpp"
#include "idealcount/residue.hpp"
#include "idealcount/verifier.hpp"

namespace idealcount::cli {
namespace {

constexpr int kMaxDegree = 1000;
constexpr double kDefaultIntegralTol = 1e-6;
constexpr double kDefaultProbeTol = 1e-9;

struct Outcome {
  std::string body;
  bool pass = true;
  double worst_case = 0.0;
  std::string check_name;
};

const char* command_name(Command c) {
  switch (c) {
    case Command::constants: return "constants";
    case Command::table: return "table";
    case Command::count: return "count";
    case Command::verify: return "verify";
    case Command::integral: return "integral";
    case Command::probe: return "probe";
  }
  return "?";
}

FieldSpec load_with_warnings(const std::string& path, std::ostream& err) {
  FieldSpec field = load_field(path);
  for (const auto& w : field.warnings) err << "warning: " << path << ": " << w << '\n';
  return field;
}

TauTable sieve_or_cache(const FieldSpec& field, std::uint64_t X, const std::optional<std::string>& cache,
                        std::ostream& err) {
  if (cache) {
    if (auto hit = load_tau_cache(field, X, *cache)) return std::move(*hit);
  }
  TauTable table = tau_sieve(field, X);
  if (cache) {
    try {
      save_tau_cache(table, *cache);
    } catch (const Error& e) {
      err << "warning: could not write cache: " << e.what() << '\n';
    }
  }
  return table;
}

Outcome run_constants(const RunConfig& cfg) {
  const auto [lo, hi] = *cfg.n_range;
  std::vector<ConstantRow> rows;
  Outcome o;
  o.check_name = "constants_chain";
  for (int n = lo; n <= hi; ++n) {
    const ConstantRow& r = constant_row(n);
    rows.push_back(r);
    // q8 <= q6 e^{1/n} <= lambda_K < lambda_S
    const LogMagnitude mid = r.q6 * LogMagnitude::from_log(1.0 / n);
    const bool ok = r.q8_upper <= mid && mid <= r.lambda_K && r.lambda_K < r.lambda_S;
    o.pass = o.pass && ok;
    o.worst_case = std::max(o.worst_case, (r.q8_upper / r.lambda_K).to_double());
  }
  o.body = cfg.format == Format::csv ? constants_csv(rows) : constants_json(rows);
  return o;
}

Outcome run_table(const RunConfig& cfg) {
  const TableReport report = reproduce_table(parse_table_id(*cfg.table_id));
  Outcome o;
  o.check_name = "table_" + to_string(report.id);
  o.body = cfg.format == Format::csv ? table_csv(report) : table_json(report);
  o.pass = !cfg.check || report.pass;
  o.worst_case = report.worst_rel_diff;
  return o;
}

Outcome run_count(const RunConfig& cfg, std::ostream& err) {
  const FieldSpec field = load_with_warnings(*cfg.field_path, err);
  const double x = *cfg.x_max;
  const auto X = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(x)));
  const TauTable table = sieve_or_cache(field, X, cfg.cache_path, err);
  const CountSummary s = summarize_count(table, x);
  Outcome o;
  o.check_name = "count";
  o.body = cfg.format == Format::csv ? count_csv(s) : count_json(s);
  o.worst_case = static_cast<double>(s.ideal_count);
  return o;
}

Outcome run_verify(const RunConfig& cfg, std::ostream& err) {
  const FieldSpec field = load_with_warnings(*cfg.field_path, err);
  const double x_max = cfg.x_max.value_or(1e6);
  const int points = cfg.points.value_or(50);
  const TauTable table = sieve_or_cache(field, static_cast<std::uint64_t>(std::ceil(x_max)), cfg.cache_path, err);
  const BoundReport report = bound_report(table, kappa_for(table), x_max, points);
  Outcome o;
  o.check_name = "verify_" + field.label;
  o.body = cfg.format == Format::csv ? bound_csv(report) : bound_json(report);
  o.pass = report.pass;
  o.worst_case = report.max_ratio;
  return o;
}

Outcome run_integral(const RunConfig& cfg) {
  const double tol = cfg.tol.value_or(kDefaultIntegralTol);
  std::vector<IntegralRow> rows;
  if (cfg.eta) {
    rows.push_back({*cfg.eta, upsilon_integral(*cfg.eta)});
  } else {
    // 0.010, 0.011, ..., 0.450
    for (int k = 10; k <= 450; ++k) {
      const double eta = k / 1000.0;
      rows.push_back({eta, upsilon_integral(eta)});
    }
  }
  Outcome o;
  o.check_name = "upsilon_integral";
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i].result;
    o.pass = o.pass && r.value <= kUpsilonIntegralBound && r.est_error <= tol;
    if (r.value > rows[argmax].result.value) argmax = i;
  }
  if (!cfg.eta) o.pass = o.pass && argmax + 1 == rows.size();
  o.worst_case = rows[argmax].result.value;
  o.body = cfg.format == Format::csv ? integral_csv(rows) : integral_json(rows, tol, o.pass);
  return o;
}

Outcome run_probe(const RunConfig& cfg) {
  std::vector<double> uppers = cfg.uppers;
  std::vector<double> mus = cfg.mus;
  if (uppers.empty()) uppers = {1.0, 10.0, 100.0, 1000.0};
  if (mus.empty())
    for (int mu = -5; mu <= 5; ++mu) mus.push_back(mu);
  const auto rows = satz204_sweep(uppers, mus, cfg.tol.value_or(kDefaultProbeTol));
  Outcome o;
  o.check_name = "probe_satz204";
  for (const auto& r : rows) {
    o.pass = o.pass && r.below_bound;
    o.worst_case = std::max(o.worst_case, r.result.value);
  }
  o.body = cfg.format == Format::csv ? probe_csv(rows) : probe_json(rows);
  return o;
}

void write_text(const std::string& text, const std::optional<std::string>& path, std::ostream& fallback) {
  if (!path) {
    fallback << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + *path);
  f << text;
  if (!f) throw UsageError("failed writing " + *path);
}

}  // namespace

std::pair<int, int> parse_n_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("bad degree range '" + text + "' (expected A..B)");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  const std::pair<int, int> range{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (range.first > range.second) throw UsageError("empty degree range '" + text + "'");
  return range;
}

void check_config(const RunConfig& cfg) {
  if (cfg.tol && !(*cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  switch (cfg.command) {
    case Command::constants:
      if (!cfg.n_range) throw UsageError("constants: --n A..B is required");
      if (cfg.n_range->first > cfg.n_range->second) throw UsageError("constants: empty degree range");
      if (cfg.n_range->first < 2) throw DegreeTooSmall(cfg.n_range->first);
      if (cfg.n_range->second > kMaxDegree)
        throw UsageError("constants: degrees above " + std::to_string(kMaxDegree) + " are not supported");
      break;
    case Command::table:
      if (!cfg.table_id) throw UsageError("table: --id T1..T5 is required");
      break;
    case Command::count:
      if (!cfg.field_path) throw UsageError("count: --field is required");
      if (!cfg.x_max) throw UsageError("count: --x is required");
      if (!(*cfg.x_max >= 0.0)) throw UsageError("count: --x must be non-negative");
      break;
    case Command::verify:
      if (!cfg.field_path) throw UsageError("verify: --field is required");
      if (cfg.x_max && !(*cfg.x_max >= 2.0)) throw UsageError("verify: --xmax must be at least 2");
      if (cfg.points && *cfg.points < 1) throw UsageError("verify: --points must be positive");
      break;
    case Command::integral:
      break;
    case Command::probe:
      if (cfg.probe_name != "satz204") throw UsageError("probe: unknown probe '" + cfg.probe_name + "'");
      for (double u : cfg.uppers)
        if (!(u > 0.0)) throw UsageError("probe: every --U must be positive");
      break;
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    check_config(cfg);
    Outcome o;
    switch (cfg.command) {
      case Command::constants: o = run_constants(cfg); break;
      case Command::table: o = run_table(cfg); break;
      case Command::count: o = run_count(cfg, err); break;
      case Command::verify: o = run_verify(cfg, err); break;
      case Command::integral: o = run_integral(cfg); break;
      case Command::probe: o = run_probe(cfg); break;
    }
    write_text(o.body, cfg.out_path, out);
    if (cfg.summary_path)
      write_text(summary_json(o.check_name, o.pass, o.worst_case, cfg.out_path.value_or("-")), cfg.summary_path, out);
    if (!o.pass) err << command_name(cfg.command) << ": check failed\n";
    return o.pass ? kExitPass : kExitCheckFailed;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << " (partial value " << e.partial().value << ", est_error "
        << e.partial().est_error << ")\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

std::string columns_help(Command command) {
  switch (command) {
    case Command::constants:
      return "CSV columns: n,lambda_S,lambda_K,a7,q1,a12,a13,q2,q3,q4,q5,q6,q7_upper,q8_upper,v1,v2,v3,alpha,"
             "xi1,xi2,xi3,xi4";
    case Command::table: return "CSV columns: table,n,column,computed,printed,rel_diff,ok,note";
    case Command::count: return "CSV columns: field,x,I,tau_max,tau_max_at,zero_count";
    case Command::verify:
      return "CSV columns: x,I,kappa_x,error,rhs_improved,rhs_sunley,ratio,q1_rhs,below1_lhs,below1_rhs,"
             "above1_lhs,above1_rhs,log_lhs,log_rhs,checks_ok";
    case Command::integral: return "CSV columns: eta,value,est_error,evaluations,below_bound";
    case Command::probe: return "CSV columns: U,mu,modulus,est_error,below_26";
  }
  return {};
}

}  // namespace idealcount::cli
