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

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli.hpp"

namespace ic = idealcount::cli;

namespace {

void add_output_options(CLI::App* sub, ic::RunConfig& cfg) {
  static const std::map<std::string, ic::Format> formats{{"csv", ic::Format::csv}, {"json", ic::Format::json}};
  sub->add_option("--format", cfg.format, "Output format: csv (default) or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->type_name("FORMAT");
  sub->add_option("--out", cfg.out_path, "Write results here instead of stdout");
  sub->add_option("--summary", cfg.summary_path,
                  "Also write a JSON summary {check_name, pass, worst_case, details_path}");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit ideal-counting constants, table reproduction and bound verification"};
  app.require_subcommand(1);
  app.footer("Exit status: 0 all checks pass, 1 a check failed, 2 input error.");

  ic::RunConfig cfg;
  std::string n_range;

  auto* constants = app.add_subcommand("constants", "Evaluate every named constant for a range of degrees");
  constants->add_option("--n", n_range, "Degree or range A..B")->required();
  constants->footer(ic::columns_help(ic::Command::constants));

  auto* table = app.add_subcommand("table", "Recompute one of the five reference tables");
  table->add_option("--id", cfg.table_id, "T1..T5")->required();
  table->add_flag("--check", cfg.check, "Exit 1 unless every cell matches within 1e-5");
  table->footer(ic::columns_help(ic::Command::table));

  auto* count = app.add_subcommand("count", "Count ideals of norm <= x");
  count->add_option("--field", cfg.field_path, "Field description (JSON)")->required();
  count->add_option("--x", cfg.x_max, "Norm limit")->required();
  count->add_option("--cache", cfg.cache_path, "Binary tau cache file (read, or written after sieving)");
  count->footer(ic::columns_help(ic::Command::count));

  auto* verify = app.add_subcommand("verify", "Check the main error-term bound on a geometric grid");
  verify->add_option("--field", cfg.field_path, "Field description (JSON)")->required();
  verify->add_option("--xmax", cfg.x_max, "Largest x (default 1e6)");
  verify->add_option("--points", cfg.points, "Grid points (default 50)");
  verify->add_option("--cache", cfg.cache_path, "Binary tau cache file");
  verify->footer(ic::columns_help(ic::Command::verify));

  auto* integral = app.add_subcommand("integral", "Evaluate the eta-integral; without --eta sweep 0.010..0.450");
  integral->add_option("--eta", cfg.eta, "Single eta in [0.01, 0.45]");
  integral->add_option("--tol", cfg.tol, "Largest accepted quadrature error estimate (default 1e-6)");
  integral->footer(ic::columns_help(ic::Command::integral));

  auto* probe = app.add_subcommand("probe", "Numeric probes");
  probe->add_option("name", cfg.probe_name, "Probe name (satz204)")->required();
  probe->add_option("--U", cfg.uppers, "Upper limits (default 1 10 100 1000)")->delimiter(',');
  probe->add_option("--mu", cfg.mus, "Values of mu (default -5..5)")->delimiter(',');
  probe->add_option("--tol", cfg.tol, "Quadrature tolerance (default 1e-9)");
  probe->footer(ic::columns_help(ic::Command::probe));

  for (auto* sub : {constants, table, count, verify, integral, probe}) add_output_options(sub, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, std::cout, std::cerr);
    return code == 0 ? ic::kExitPass : ic::kExitInputError;
  }

  try {
    if (constants->parsed()) {
      cfg.command = ic::Command::constants;
      cfg.n_range = ic::parse_n_range(n_range);
    } else if (table->parsed()) {
      cfg.command = ic::Command::table;
    } else if (count->parsed()) {
      cfg.command = ic::Command::count;
    } else if (verify->parsed()) {
      cfg.command = ic::Command::verify;
    } else if (integral->parsed()) {
      cfg.command = ic::Command::integral;
    } else {
      cfg.command = ic::Command::probe;
    }
  } catch (const ic::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ic::kExitInputError;
  }
  return ic::run(cfg, std::cout, std::cerr);
}
