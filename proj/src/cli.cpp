#include "mlam/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "mlam/config.hpp"
#include "mlam/expectation.hpp"
#include "mlam/ingestion.hpp"
#include "mlam/inventory.hpp"
#include "mlam/text_format.hpp"

namespace mlam::cli {

namespace {

int write_to_sink(const std::string& path, std::ostream& fallback,
                  std::ostream& err,
                  const std::function<void(std::ostream&)>& writer) {
  if (path.empty() || path == "-") {
    writer(fallback);
    fallback.flush();
    return exit_ok;
  }
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return exit_io;
  }
  writer(file);
  file.flush();
  if (!file) {
    err << "error: failed while writing '" << path << "'\n";
    return exit_io;
  }
  return exit_ok;
}

// Left-aligned columns, two spaces apart, no trailing blanks.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string text;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) {
        line.append(width[c] - row[c].size(), ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    text += line;
    text += '\n';
  }
  return text;
}

std::string format_demand(const TrapezoidalFuzzyNumber& demand) {
  return "(" + format_shortest(demand.core_left()) + "," +
         format_shortest(demand.core_right()) + "," +
         format_shortest(demand.left_spread()) + "," +
         format_shortest(demand.right_spread()) + ")";
}

std::string format_compact(double value) {
  char buffer[64];
  const int n = std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return std::string(buffer, buffer + n);
}

void render_solutions_text(const InventoryModel& model,
                           const std::vector<Solution>& solutions,
                           std::ostream& out) {
  bool first = true;
  for (const auto& solution : solutions) {
    if (!first) out << '\n';
    first = false;
    out << "lambda = " << format_shortest(solution.lambda.value()) << '\n';
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"item", "d", "c", "h", "demand(a,b,alpha,beta)",
                    "E[1/D]", "x*", "profit"});
    for (std::size_t i = 0; i < solution.items.size(); ++i) {
      const InventoryItem& item = model.items()[i];
      const ItemSolution& solved = solution.items[i];
      rows.push_back({item.name(), format_shortest(item.unit_revenue()),
                      format_shortest(item.fixed_cost()),
                      format_shortest(item.holding_cost()),
                      format_demand(item.demand()),
                      format_compact(solved.expected_reciprocal),
                      format_fixed(solved.order_quantity, 2),
                      format_fixed(solved.expected_profit, 2)});
    }
    out << render_table(rows);
    out << "total expected profit: "
        << format_fixed(solution.total_expected_profit, 2) << '\n';
  }
}

void render_solutions_csv(const InventoryModel& model,
                          const std::vector<Solution>& solutions,
                          std::ostream& out) {
  out << "lambda,item,d,c,h,a,b,alpha,beta,expected_reciprocal,x_star,"
         "expected_profit\n";
  for (const auto& solution : solutions) {
    const std::string lambda = format_shortest(solution.lambda.value());
    for (std::size_t i = 0; i < solution.items.size(); ++i) {
      const InventoryItem& item = model.items()[i];
      const ItemSolution& solved = solution.items[i];
      const TrapezoidalFuzzyNumber& demand = item.demand();
      out << lambda << ',' << item.name() << ','
          << format_shortest(item.unit_revenue()) << ','
          << format_shortest(item.fixed_cost()) << ','
          << format_shortest(item.holding_cost()) << ','
          << format_shortest(demand.core_left()) << ','
          << format_shortest(demand.core_right()) << ','
          << format_shortest(demand.left_spread()) << ','
          << format_shortest(demand.right_spread()) << ','
          << format_shortest(solved.expected_reciprocal) << ','
          << format_shortest(solved.order_quantity) << ','
          << format_shortest(solved.expected_profit) << '\n';
    }
    out << lambda << ",(total),,,,,,,,,,"
        << format_shortest(solution.total_expected_profit) << '\n';
  }
}

void render_sweep_text(const InventoryModel& model,
                       const std::vector<Solution>& solutions,
                       std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"lambda"};
  for (const auto& item : model.items()) header.push_back(item.name());
  rows.push_back(std::move(header));
  for (const auto& solution : solutions) {
    std::vector<std::string> row{format_shortest(solution.lambda.value())};
    for (const auto& solved : solution.items) {
      row.push_back(format_fixed(solved.order_quantity, 2));
    }
    rows.push_back(std::move(row));
  }
  out << render_table(rows);
}

void render_sweep_csv(const InventoryModel& model,
                      const std::vector<Solution>& solutions,
                      std::ostream& out) {
  out << "lambda";
  for (const auto& item : model.items()) out << ',' << item.name();
  out << '\n';
  for (const auto& solution : solutions) {
    out << format_shortest(solution.lambda.value());
    for (const auto& solved : solution.items) {
      out << ',' << format_shortest(solved.order_quantity);
    }
    out << '\n';
  }
}

struct LoadedModel {
  RunConfig config;
  InventoryModel model;
};

// Shared solve/sweep front half: read, parse and materialize the model.
// On failure reports to err and returns the exit code in `status`.
std::optional<LoadedModel> load_model(const std::string& config_path,
                                      std::ostream& err, int& status) {
  std::ifstream file(config_path);
  if (!file) {
    err << "error: cannot read config '" << config_path << "'\n";
    status = exit_io;
    return std::nullopt;
  }
  RunConfig config;
  try {
    config = parse_config(file);
  } catch (const ConfigError& e) {
    err << "error: " << config_path << ": " << e.what() << '\n';
    status = exit_config;
    return std::nullopt;
  }
  try {
    InventoryModel model = build_model(
        config, std::filesystem::path(config_path).parent_path());
    return LoadedModel{std::move(config), std::move(model)};
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    status = exit_io;
  } catch (const NonpositiveSupport& e) {
    err << "error: " << config_path << ": " << e.what() << '\n';
    status = exit_domain;
  } catch (const ConfigError& e) {
    err << "error: " << config_path << ": " << e.what() << '\n';
    status = exit_config;
  } catch (const std::invalid_argument& e) {
    err << "error: " << config_path << ": " << e.what() << '\n';
    status = exit_config;
  }
  return std::nullopt;
}

void report_warnings(const std::vector<Solution>& solutions,
                     std::ostream& err) {
  for (const auto& solution : solutions) {
    for (const auto& warning : solution.warnings) {
      err << "warning: lambda = " << format_shortest(solution.lambda.value())
          << ": " << warning << '\n';
    }
  }
}

}  // namespace

int run_fit(const FitOptions& options, std::ostream& out, std::ostream& err) {
  std::ifstream input(options.input_path, std::ios::binary);
  if (!input) {
    err << "error: cannot read '" << options.input_path << "'\n";
    return exit_io;
  }
  SampleTable table;
  try {
    table = parse_samples(input);
  } catch (const ParseError& e) {
    err << "error: " << options.input_path << ": " << e.what() << '\n';
    return exit_config;
  }

  std::vector<TrapezoidalFuzzyNumber> fits;
  fits.reserve(table.columns.size());
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    const TrapezoidalFuzzyNumber fitted = fit_trapezoid(table.columns[i]);
    if (!fitted.is_positive()) {
      err << "warning: column '" << table.item_names[i]
          << "': fitted support reaches " << format_shortest(fitted.r1())
          << " <= 0; unusable for reciprocal expectations\n";
    }
    fits.push_back(fitted);
  }

  return write_to_sink(options.output_path, out, err, [&](std::ostream& sink) {
    sink << "name,a,b,alpha,beta\n";
    for (std::size_t i = 0; i < fits.size(); ++i) {
      const TrapezoidalFuzzyNumber& fitted = fits[i];
      sink << table.item_names[i] << ','
           << format_shortest(fitted.core_left()) << ','
           << format_shortest(fitted.core_right()) << ','
           << format_shortest(fitted.left_spread()) << ','
           << format_shortest(fitted.right_spread()) << '\n';
    }
  });
}

int run_solve(const SolveOptions& options, std::ostream& out,
              std::ostream& err) {
  int status = exit_ok;
  const auto loaded = load_model(options.config_path, err, status);
  if (!loaded) return status;

  std::vector<Lambda> lambdas;
  if (!options.lambdas.empty()) {
    for (const auto& text : options.lambdas) {
      try {
        lambdas.emplace_back(parse_lambda_value(text));
      } catch (const std::invalid_argument& e) {
        err << "error: --lambda: " << e.what() << '\n';
        return exit_config;
      }
    }
  } else {
    lambdas = loaded->config.lambdas;
  }
  if (lambdas.empty()) {
    err << "error: no lambda given; set 'lambdas' in the config or pass "
           "--lambda\n";
    return exit_config;
  }

  if (options.oracle_check) {
    bool mismatch = false;
    for (const Lambda lam : lambdas) {
      for (const auto& item : loaded->model.items()) {
        const double closed = expected_reciprocal_closed(item.demand(), lam);
        const ExpectationResult quad =
            expected_reciprocal_quadrature(item.demand(), lam);
        const double deviation = std::abs(closed - quad.value) / closed;
        if (deviation > 1e-6) {
          err << "error: oracle mismatch for item '" << item.name()
              << "' at lambda = " << format_shortest(lam.value())
              << ": closed " << format_shortest(closed) << ", quadrature "
              << format_shortest(quad.value) << " (relative deviation "
              << format_compact(deviation) << ")\n";
          mismatch = true;
        }
      }
    }
    if (mismatch) return exit_oracle;
  }

  const std::vector<Solution> solutions = lambda_sweep(loaded->model, lambdas);
  report_warnings(solutions, err);
  return write_to_sink(options.output_path, out, err, [&](std::ostream& sink) {
    if (loaded->config.output_format == OutputFormat::csv) {
      render_solutions_csv(loaded->model, solutions, sink);
    } else {
      render_solutions_text(loaded->model, solutions, sink);
    }
  });
}

int run_sweep(const SweepOptions& options, std::ostream& out,
              std::ostream& err) {
  if (!(options.from_lambda >= 0.0 && options.from_lambda <= options.to_lambda &&
        options.to_lambda <= 1.0)) {
    err << "error: need 0 <= --from <= --to <= 1\n";
    return exit_config;
  }
  if (options.steps < 2) {
    err << "error: --steps must be at least 2\n";
    return exit_config;
  }

  int status = exit_ok;
  const auto loaded = load_model(options.config_path, err, status);
  if (!loaded) return status;

  std::vector<Lambda> lambdas;
  lambdas.reserve(static_cast<std::size_t>(options.steps));
  for (int j = 0; j < options.steps; ++j) {
    double value =
        options.from_lambda +
        (options.to_lambda - options.from_lambda) *
            (static_cast<double>(j) / static_cast<double>(options.steps - 1));
    if (j == options.steps - 1) value = options.to_lambda;
    value = std::clamp(value, options.from_lambda, options.to_lambda);
    lambdas.emplace_back(value);
  }

  const std::vector<Solution> solutions = lambda_sweep(loaded->model, lambdas);
  report_warnings(solutions, err);
  return write_to_sink(options.output_path, out, err, [&](std::ostream& sink) {
    if (loaded->config.output_format == OutputFormat::csv) {
      render_sweep_csv(loaded->model, solutions, sink);
    } else {
      render_sweep_text(loaded->model, solutions, sink);
    }
  });
}

}  // namespace mlam::cli
