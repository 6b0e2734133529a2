#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlam::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_io = 2;      // unreadable input / unwritable output
inline constexpr int exit_config = 3;  // parse, config and usage errors
inline constexpr int exit_oracle = 4;  // closed form disagrees with quadrature
inline constexpr int exit_domain = 5;  // demand support not strictly positive

struct FitOptions {
  std::string input_path;
  std::string output_path = "-";  // "-" writes to the provided out stream
};

struct SolveOptions {
  std::string config_path;
  std::vector<std::string> lambdas;  // overrides the config list when nonempty
  bool oracle_check = false;
  std::string output_path = "-";
};

struct SweepOptions {
  std::string config_path;
  double from_lambda = 0.0;
  double to_lambda = 1.0;
  int steps = 11;
  std::string output_path = "-";
};

/// Fits one trapezoid per CSV column and writes `name,a,b,alpha,beta` rows.
/// Columns whose fitted support is not strictly positive get a warning on
/// err but are still written.
int run_fit(const FitOptions& options, std::ostream& out, std::ostream& err);

/// Solves the configured model for each lambda and writes per-item tables
/// (text or CSV per the config). With oracle_check, every E(1/D) is
/// recomputed by quadrature first and a relative deviation above 1e-6
/// aborts with exit_oracle.
int run_solve(const SolveOptions& options, std::ostream& out,
              std::ostream& err);

/// Tabulates x* per item over an evenly spaced lambda grid.
int run_sweep(const SweepOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace mlam::cli
