#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlam/fuzzy.hpp"

namespace mlam {

class EmptySample : public std::invalid_argument {
 public:
  EmptySample() : std::invalid_argument("sample must not be empty") {}
};

/// CSV error with 1-based location; row 1 is the header.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t row, std::size_t column);

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// Raw demand observations, one column per item. All columns have the same
/// length (the CSV format rejects ragged rows) and contain only finite
/// values.
struct SampleTable {
  std::vector<std::string> item_names;
  std::vector<std::vector<double>> columns;
};

/// k-th sample percentile, k in [0, 100], by linear interpolation at rank
/// h = (n - 1) k / 100 on the sorted sample (the inclusive scheme). Exact
/// order statistic when h is integral. Throws EmptySample.
double percentile(std::span<const double> sample, double k);

/// Fits a trapezoidal fuzzy number from sample percentiles:
///   core [P40, P60], spreads alpha = P40 - P5, beta = P95 - P60,
/// i.e. the canonical shape (P5, P40, P60, P95). The fit itself accepts any
/// sample; a result with r1 <= 0 is unusable for reciprocal expectations
/// and is rejected later by the solver.
TrapezoidalFuzzyNumber fit_trapezoid(std::span<const double> sample);

/// Parses a demand-sample CSV: header row of item names, then numeric
/// rows, comma-separated with '.' as the decimal point. Accepts an
/// optional UTF-8 BOM and LF or CRLF line endings. Every data row must
/// match the header arity. Throws ParseError with the offending location.
SampleTable parse_samples(std::istream& source);

}  // namespace mlam
