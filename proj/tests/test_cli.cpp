#include "mlam/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "doctest.h"
#include "test_support.hpp"

using mlam::cli::FitOptions;
using mlam::cli::SolveOptions;
using mlam::cli::SweepOptions;
using mlam::cli::run_fit;
using mlam::cli::run_solve;
using mlam::cli::run_sweep;
using testsupport::TempDir;

namespace {

const std::string kSamplesCsv =
    "Item1,Item2,Item3,Item4,Item5,Item6,Item7,Item8,Item9,Item10\n"
    "35,20,30,25,28,33,18,18,31,20\n"
    "30,30,50,25,32,37,27,28,33,27\n"
    "15,35,28,36,25,20,33,17,25,31\n"
    "25,35,40,35,35,40,35,20,30,37\n"
    "25,28,25,32,50,37,28,19,35,35\n"
    "28,25,42,27,45,28,28,37,35,37\n"
    "31,27,36,35,43,35,35,27,22,35\n"
    "30,24,39,28,27,35,24,37,27,25\n"
    "44,33,44,28,32,22,39,30,29,25\n"
    "37,34,37,44,44,32,47,36,28,37\n"
    "23,17,22,33,32,29,31,31,45,19\n";

const std::string kFittedGolden =
    "name,a,b,alpha,beta\n"
    "Item1,28,30,9,10.5\n"
    "Item2,27,30,8.5,5\n"
    "Item3,36,39,12.5,8\n"
    "Item4,28,33,3,7\n"
    "Item5,32,35,6,12.5\n"
    "Item6,32,35,11,3.5\n"
    "Item7,28,33,7,10\n"
    "Item8,27,30,9.5,7\n"
    "Item9,29,31,5.5,9\n"
    "Item10,27,35,7.5,2\n";

struct RefItem {
  const char* name;
  const char* d;
  const char* c;
  const char* h;
  const char* demand;  // a, b, alpha, beta
};

constexpr RefItem kItems[] = {
    {"Item1", "12", "2", "0.5", "28, 30, 9, 10.5"},
    {"Item2", "11", "1", "0.6", "27, 30, 8.5, 5"},
    {"Item3", "14", "3", "0.5", "36, 39, 12.5, 5"},
    {"Item4", "10", "4", "0.8", "28, 32, 3, 4"},
    {"Item5", "11", "5", "0.9", "32, 35, 6, 10"},
    {"Item6", "10", "3", "0.9", "32, 35, 11, 2"},
    {"Item7", "12", "2", "0.5", "28, 33, 7, 6"},
    {"Item8", "15", "1", "0.6", "27, 30, 9.5, 7"},
    {"Item9", "13", "3", "0.7", "29, 31, 5.5, 4"},
    {"Item10", "13", "4", "0.9", "27, 35, 7.5, 2"},
};

constexpr double kOrdersCredibilistic[] = {668.76, 486.88, 961.42, 371.9,
                                           409.19, 336.3,  696.25, 661.32,
                                           541.63, 405.88};

std::string reference_config(bool inline_demands,
                             const std::string& fitted_name = "fitted.csv") {
  std::string text = "lambdas = 1/3, 1/2, 2/3\noutput_format = csv\n";
  for (const auto& item : kItems) {
    text += std::string("[item ") + item.name + "]\n";
    text += std::string("d = ") + item.d + "\n";
    text += std::string("c = ") + item.c + "\n";
    text += std::string("h = ") + item.h + "\n";
    if (inline_demands) {
      text += std::string("demand = ") + item.demand + "\n";
    } else {
      text += "demand_ref = " + fitted_name + "\n";
    }
  }
  return text;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    rows.push_back(std::move(cells));
  }
  return rows;
}

struct Invocation {
  int exit_code;
  std::string out;
  std::string err;
};

Invocation invoke_solve(const SolveOptions& options) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_solve(options, out, err);
  return {code, out.str(), err.str()};
}

Invocation invoke_binary(const TempDir& dir, const std::string& args) {
  const std::string out_path = (dir.path() / "cmd_out.txt").string();
  const std::string err_path = (dir.path() / "cmd_err.txt").string();
  const std::string command = std::string(MLAM_CLI_BIN) + " " + args + " >" +
                              out_path + " 2>" + err_path;
  const int raw = std::system(command.c_str());
  const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return {code, dir.read(out_path), dir.read(err_path)};
}

}  // namespace

TEST_CASE("fit writes the fitted-demands CSV") {
  TempDir dir;
  dir.write("samples.csv", kSamplesCsv);
  FitOptions options;
  options.input_path = (dir.path() / "samples.csv").string();

  std::ostringstream out;
  std::ostringstream err;
  CHECK(run_fit(options, out, err) == 0);
  CHECK(out.str() == kFittedGolden);
  CHECK(err.str().empty());

  // same bytes when writing to a file
  options.output_path = (dir.path() / "fitted.csv").string();
  std::ostringstream out2;
  CHECK(run_fit(options, out2, err) == 0);
  CHECK(out2.str().empty());
  CHECK(dir.read(dir.path() / "fitted.csv") == kFittedGolden);
}

TEST_CASE("fit error handling") {
  TempDir dir;
  std::ostringstream out;
  std::ostringstream err;

  FitOptions missing;
  missing.input_path = (dir.path() / "nope.csv").string();
  CHECK(run_fit(missing, out, err) == mlam::cli::exit_io);
  CHECK(err.str().find("cannot read") != std::string::npos);

  FitOptions header_only;
  header_only.input_path = dir.write("empty.csv", "a,b\n").string();
  err.str("");
  CHECK(run_fit(header_only, out, err) == mlam::cli::exit_config);
  CHECK(err.str().find("no data rows") != std::string::npos);

  // unwritable output
  FitOptions unwritable;
  unwritable.input_path = dir.write("ok.csv", "a\n1\n2\n").string();
  unwritable.output_path = (dir.path() / "no" / "dir" / "out.csv").string();
  err.str("");
  CHECK(run_fit(unwritable, out, err) == mlam::cli::exit_io);
}

TEST_CASE("fit warns on columns unusable for reciprocal expectations") {
  TempDir dir;
  FitOptions options;
  options.input_path =
      dir.write("neg.csv", "bad,good\n-5,10\n-1,11\n0,12\n2,13\n4,14\n").string();
  std::ostringstream out;
  std::ostringstream err;
  CHECK(run_fit(options, out, err) == 0);
  CHECK(err.str().find("warning") != std::string::npos);
  CHECK(err.str().find("bad") != std::string::npos);
  CHECK(err.str().find("good") == std::string::npos);
  // the row is still emitted
  CHECK(out.str().find("bad,") != std::string::npos);
}

TEST_CASE("solve reproduces the published credibilistic orders") {
  TempDir dir;
  SolveOptions options;
  options.config_path =
      dir.write("run.conf", reference_config(true)).string();
  options.lambdas = {"1/2"};
  const Invocation result = invoke_solve(options);
  REQUIRE(result.exit_code == 0);

  const auto rows = parse_csv(result.out);
  REQUIRE(rows.size() == 12);  // header + 10 items + total
  CHECK(rows[0][0] == "lambda");
  CHECK(rows[0][10] == "x_star");
  for (int i = 0; i < 10; ++i) {
    CHECK(rows[1 + i][1] == kItems[i].name);
    const double x_star = std::stod(rows[1 + i][10]);
    const double published = kOrdersCredibilistic[i];
    CHECK(std::abs(x_star - published) / published <= 0.005);
  }
  CHECK(rows[11][1] == "(total)");
}

TEST_CASE("solve honours the config lambda list and emits one block per "
          "lambda") {
  TempDir dir;
  SolveOptions options;
  options.config_path = dir.write("run.conf", reference_config(true)).string();
  const Invocation result = invoke_solve(options);
  REQUIRE(result.exit_code == 0);
  const auto rows = parse_csv(result.out);
  CHECK(rows.size() == 1 + 3 * 11);  // header + 3 lambda blocks
}

TEST_CASE("solve passes the oracle check across the lambda range") {
  TempDir dir;
  SolveOptions options;
  options.config_path = dir.write("run.conf", reference_config(true)).string();
  options.lambdas = {"0", "1/3", "1/2", "2/3", "1"};
  options.oracle_check = true;
  const Invocation result = invoke_solve(options);
  CHECK(result.exit_code == 0);
  CHECK(result.err.empty());
}

TEST_CASE("solve exit codes") {
  TempDir dir;
  std::ostringstream out;
  std::ostringstream err;

  SolveOptions missing;
  missing.config_path = (dir.path() / "nope.conf").string();
  CHECK(run_solve(missing, out, err) == mlam::cli::exit_io);

  SolveOptions broken;
  broken.config_path = dir.write("broken.conf", "nonsense\n").string();
  CHECK(run_solve(broken, out, err) == mlam::cli::exit_config);

  SolveOptions no_lambda;
  no_lambda.config_path =
      dir.write("nolambda.conf",
                "[item a]\nd=1\nc=0\nh=1\ndemand = 2, 3, 1, 1\n")
          .string();
  CHECK(run_solve(no_lambda, out, err) == mlam::cli::exit_config);

  SolveOptions bad_lambda;
  bad_lambda.config_path =
      dir.write("run.conf", reference_config(true)).string();
  bad_lambda.lambdas = {"1.5"};
  CHECK(run_solve(bad_lambda, out, err) == mlam::cli::exit_config);

  // a - alpha <= 0 violates the positive-demand requirement
  SolveOptions nonpositive;
  nonpositive.config_path =
      dir.write("nonpos.conf",
                "lambdas = 0.5\n[item a]\nd=1\nc=0\nh=1\n"
                "demand = 2, 3, 2, 1\n")
          .string();
  CHECK(run_solve(nonpositive, out, err) == mlam::cli::exit_domain);
}

TEST_CASE("fit output consumed by reference equals inlining the fits") {
  TempDir dir;
  dir.write("samples.csv", kSamplesCsv);

  FitOptions fit_options;
  fit_options.input_path = (dir.path() / "samples.csv").string();
  fit_options.output_path = (dir.path() / "fitted.csv").string();
  std::ostringstream sink;
  std::ostringstream err;
  REQUIRE(run_fit(fit_options, sink, err) == 0);

  // inline the exact fitted values (they differ from the published table
  // in the cells that table prints inconsistently)
  std::string inline_text = "lambdas = 1/2\noutput_format = csv\n";
  const char* fitted_demands[] = {
      "28, 30, 9, 10.5", "27, 30, 8.5, 5", "36, 39, 12.5, 8", "28, 33, 3, 7",
      "32, 35, 6, 12.5", "32, 35, 11, 3.5", "28, 33, 7, 10", "27, 30, 9.5, 7",
      "29, 31, 5.5, 9",  "27, 35, 7.5, 2"};
  std::string ref_text = "lambdas = 1/2\noutput_format = csv\n";
  for (int i = 0; i < 10; ++i) {
    const auto& item = kItems[i];
    const std::string common = std::string("[item ") + item.name + "]\nd = " +
                               item.d + "\nc = " + item.c + "\nh = " + item.h +
                               "\n";
    inline_text += common + "demand = " + fitted_demands[i] + "\n";
    ref_text += common + "demand_ref = fitted.csv\n";
  }

  SolveOptions inline_options;
  inline_options.config_path = dir.write("inline.conf", inline_text).string();
  SolveOptions ref_options;
  ref_options.config_path = dir.write("ref.conf", ref_text).string();

  const Invocation inline_run = invoke_solve(inline_options);
  const Invocation ref_run = invoke_solve(ref_options);
  REQUIRE(inline_run.exit_code == 0);
  REQUIRE(ref_run.exit_code == 0);
  CHECK(inline_run.out == ref_run.out);
}

TEST_CASE("solve output is deterministic byte for byte") {
  TempDir dir;
  SolveOptions options;
  options.config_path = dir.write("run.conf", reference_config(true)).string();
  const Invocation first = invoke_solve(options);
  const Invocation second = invoke_solve(options);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.err == second.err);
}

TEST_CASE("text output formats x* with two decimals") {
  TempDir dir;
  SolveOptions options;
  options.config_path =
      dir.write("run.conf",
                "lambdas = 1/2\n[item Item1]\nd = 12\nc = 2\nh = 0.5\n"
                "demand = 28, 30, 9, 10.5\n")
          .string();
  const Invocation result = invoke_solve(options);
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.find("lambda = 0.5\n") != std::string::npos);
  CHECK(result.out.find("669.77") != std::string::npos);
  CHECK(result.out.find("total expected profit") != std::string::npos);
}

TEST_CASE("sweep emits a monotone lambda grid") {
  TempDir dir;
  SweepOptions options;
  options.config_path = dir.write("run.conf", reference_config(true)).string();
  options.from_lambda = 0.0;
  options.to_lambda = 1.0;
  options.steps = 11;
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(run_sweep(options, out, err) == 0);

  const auto rows = parse_csv(out.str());
  REQUIRE(rows.size() == 12);  // header + 11 grid points
  REQUIRE(rows[0].size() == 11);
  CHECK(rows[1][0] == "0");
  CHECK(rows[11][0] == "1");
  for (std::size_t c = 1; c < rows[0].size(); ++c) {
    for (std::size_t r = 2; r < rows.size(); ++r) {
      CHECK(std::stod(rows[r][c]) <= std::stod(rows[r - 1][c]));
    }
  }
}

TEST_CASE("sweep of a crisp item is flat") {
  TempDir dir;
  SweepOptions options;
  options.config_path =
      dir.write("run.conf",
                "lambdas = 0.5\noutput_format = csv\n[item only]\n"
                "d = 1\nc = 0\nh = 1\ndemand = 42, 42, 0, 0\n")
          .string();
  options.steps = 5;
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(run_sweep(options, out, err) == 0);
  const auto rows = parse_csv(out.str());
  REQUIRE(rows.size() == 6);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    CHECK(std::stod(rows[r][1]) == doctest::Approx(42.0).epsilon(1e-12));
  }
}

TEST_CASE("sweep usage errors") {
  TempDir dir;
  SweepOptions options;
  options.config_path = dir.write("run.conf", reference_config(true)).string();
  std::ostringstream out;
  std::ostringstream err;

  options.steps = 1;
  CHECK(run_sweep(options, out, err) == mlam::cli::exit_config);

  options.steps = 11;
  options.from_lambda = 0.7;
  options.to_lambda = 0.3;
  CHECK(run_sweep(options, out, err) == mlam::cli::exit_config);

  options.from_lambda = 0.0;
  options.to_lambda = 1.5;
  CHECK(run_sweep(options, out, err) == mlam::cli::exit_config);
}

TEST_CASE("the installed binary wires the subcommands") {
  TempDir dir;
  dir.write("samples.csv", kSamplesCsv);
  dir.write("run.conf", reference_config(true));

  const Invocation help = invoke_binary(dir, "--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("fit") != std::string::npos);

  const Invocation bad_flag = invoke_binary(dir, "solve --bogus");
  CHECK(bad_flag.exit_code == mlam::cli::exit_config);

  const Invocation no_sub = invoke_binary(dir, "");
  CHECK(no_sub.exit_code == mlam::cli::exit_config);

  const std::string samples = (dir.path() / "samples.csv").string();
  const std::string fitted = (dir.path() / "fitted.csv").string();
  const Invocation fit = invoke_binary(dir, "fit " + samples + " " + fitted);
  CHECK(fit.exit_code == 0);
  CHECK(dir.read(dir.path() / "fitted.csv") == kFittedGolden);

  const std::string config = (dir.path() / "run.conf").string();
  const Invocation solve =
      invoke_binary(dir, "solve " + config + " --lambda 1/2 --oracle-check");
  CHECK(solve.exit_code == 0);
  CHECK(solve.out.find("x_star") != std::string::npos);

  const Invocation sweep =
      invoke_binary(dir, "sweep " + config + " --steps 3");
  CHECK(sweep.exit_code == 0);

  const Invocation bad_steps =
      invoke_binary(dir, "sweep " + config + " --steps 1");
  CHECK(bad_steps.exit_code == mlam::cli::exit_config);
}
