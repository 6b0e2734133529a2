#include <iostream>

#include "CLI11.hpp"
#include "mlam/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "mlam: trapezoidal fuzzy demand fitting and lambda-weighted "
      "inventory optimization"};
  app.require_subcommand(1);

  mlam::cli::FitOptions fit_options;
  CLI::App* fit = app.add_subcommand(
      "fit", "fit trapezoidal demands from a demand-sample CSV");
  fit->add_option("input", fit_options.input_path,
                  "sample CSV: header row of item names, numeric rows")
      ->required();
  fit->add_option("output", fit_options.output_path,
                  "fitted-demands CSV path, '-' for stdout (default)");

  mlam::cli::SolveOptions solve_options;
  CLI::App* solve = app.add_subcommand(
      "solve", "solve the inventory problem from a config file");
  solve->add_option("config", solve_options.config_path, "run config file")
      ->required();
  solve->add_option("--lambda", solve_options.lambdas,
                    "optimism weight, decimal or fraction like 1/3 "
                    "(repeatable; overrides the config list)");
  solve->add_flag("--oracle-check", solve_options.oracle_check,
                  "revalidate every E(1/D) against numerical integration");
  solve->add_option("--output,-o", solve_options.output_path,
                    "output path, '-' for stdout (default)");

  mlam::cli::SweepOptions sweep_options;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate optimal orders over a lambda grid");
  sweep->add_option("config", sweep_options.config_path, "run config file")
      ->required();
  sweep->add_option("--from", sweep_options.from_lambda,
                    "grid start (default 0)");
  sweep->add_option("--to", sweep_options.to_lambda, "grid end (default 1)");
  sweep->add_option("--steps", sweep_options.steps,
                    "grid size, at least 2 (default 11)");
  sweep->add_option("--output,-o", sweep_options.output_path,
                    "output path, '-' for stdout (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? mlam::cli::exit_ok : mlam::cli::exit_config;
  }

  if (fit->parsed()) {
    return mlam::cli::run_fit(fit_options, std::cout, std::cerr);
  }
  if (solve->parsed()) {
    return mlam::cli::run_solve(solve_options, std::cout, std::cerr);
  }
  return mlam::cli::run_sweep(sweep_options, std::cout, std::cerr);
}
