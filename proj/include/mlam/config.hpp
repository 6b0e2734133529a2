#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mlam/fuzzy.hpp"
#include "mlam/inventory.hpp"

namespace mlam {

/// Config or referenced-file content error; line is 1-based, 0 when the
/// error is not tied to a specific line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, std::size_t line);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { text_table, csv };

/// Demand taken from a row of a fitted-demands CSV (`name,a,b,alpha,beta`).
/// An empty row name means "the row named like the item".
struct DemandRef {
  std::string path;
  std::string row;
};

struct ItemConfig {
  std::string name;
  double unit_revenue = 0.0;
  double fixed_cost = 0.0;
  double holding_cost = 0.0;
  std::optional<TrapezoidalFuzzyNumber> demand;  // inline form
  std::optional<DemandRef> demand_ref;           // exactly one of the two
};

/// Parsed run configuration. The lambda list may be empty when the caller
/// is expected to supply one (e.g. via --lambda overrides).
struct RunConfig {
  std::vector<ItemConfig> items;
  std::vector<Lambda> lambdas;
  OutputFormat output_format = OutputFormat::text_table;
};

/// Parses the flat key = value config format:
///
///   lambdas = 1/3, 1/2, 2/3
///   output_format = text          # or csv
///
///   [item Item1]
///   d = 12
///   c = 2
///   h = 0.5
///   demand = 28, 30, 9, 10.5      # a, b, alpha, beta
///   # demand_r   = 19, 28, 30, 40.5      (endpoint form r1..r4)
///   # demand_ref = fitted.csv            (row 'Item1')
///   # demand_ref = fitted.csv:Other      (explicit row name)
///
/// '#' starts a comment. Unknown or duplicate keys are errors.
RunConfig parse_config(std::istream& source);

/// Lambda weight from a decimal ("0.5") or a simple fraction ("1/3").
/// Throws std::invalid_argument when malformed or outside [0, 1].
double parse_lambda_value(std::string_view text);

/// Rows of a fitted-demands CSV as written by the fit command.
std::vector<std::pair<std::string, TrapezoidalFuzzyNumber>>
parse_fitted_demands(std::istream& source);

/// Resolves demand references (relative to base_dir) and materializes the
/// inventory model. Throws IoError when a referenced file cannot be read,
/// ConfigError for unresolvable rows, and NonpositiveSupport /
/// std::invalid_argument for values the model rejects.
InventoryModel build_model(const RunConfig& config,
                           const std::filesystem::path& base_dir);

}  // namespace mlam
