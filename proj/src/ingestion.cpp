#include "mlam/ingestion.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>

namespace mlam {

namespace {

double percentile_sorted(const std::vector<double>& sorted, double k) {
  const std::size_t n = sorted.size();
  const double rank = static_cast<double>(n - 1) * (k / 100.0);
  const auto lower = static_cast<std::size_t>(rank);
  const double frac = rank - static_cast<double>(lower);
  if (lower + 1 >= n) return sorted.back();
  return sorted[lower] + frac * (sorted[lower + 1] - sorted[lower]);
}

std::vector<double> sorted_copy(std::span<const double> sample) {
  if (sample.empty()) throw EmptySample();
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

void check_percentile_rank(double k) {
  if (!(k >= 0.0 && k <= 100.0)) {
    throw std::invalid_argument("percentile rank must lie in [0, 100]");
  }
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  return text;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      return cells;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double parse_cell(std::string_view cell, std::size_t row, std::size_t col) {
  if (cell.empty()) throw ParseError("empty cell", row, col);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw ParseError("not a number: '" + std::string(cell) + "'", row, col);
  }
  if (!std::isfinite(value)) {
    throw ParseError("value must be finite: '" + std::string(cell) + "'",
                     row, col);
  }
  return value;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t row,
                       std::size_t column)
    : std::runtime_error("row " + std::to_string(row) + ", column " +
                         std::to_string(column) + ": " + message),
      row_(row),
      column_(column) {}

double percentile(std::span<const double> sample, double k) {
  check_percentile_rank(k);
  return percentile_sorted(sorted_copy(sample), k);
}

TrapezoidalFuzzyNumber fit_trapezoid(std::span<const double> sample) {
  const std::vector<double> sorted = sorted_copy(sample);
  const double p5 = percentile_sorted(sorted, 5.0);
  const double p40 = percentile_sorted(sorted, 40.0);
  const double p60 = percentile_sorted(sorted, 60.0);
  const double p95 = percentile_sorted(sorted, 95.0);
  // Percentiles are monotone in the rank, so this is a valid shape.
  return TrapezoidalFuzzyNumber(p5, p40, p60, p95);
}

SampleTable parse_samples(std::istream& source) {
  std::string text(std::istreambuf_iterator<char>(source), {});
  std::string_view rest(text);
  if (rest.starts_with("\xEF\xBB\xBF")) rest.remove_prefix(3);

  std::vector<std::string_view> lines;
  while (!rest.empty()) {
    const std::size_t eol = rest.find('\n');
    std::string_view line =
        eol == std::string_view::npos ? rest : rest.substr(0, eol);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back(line);
    if (eol == std::string_view::npos) break;
    rest.remove_prefix(eol + 1);
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();

  if (lines.empty()) throw ParseError("empty file", 1, 1);

  SampleTable table;
  const std::vector<std::string_view> header = split_cells(lines.front());
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i].empty()) {
      throw ParseError("empty item name in header", 1, i + 1);
    }
    table.item_names.emplace_back(header[i]);
  }
  table.columns.resize(header.size());

  if (lines.size() == 1) {
    throw ParseError("no data rows after the header", 2, 1);
  }
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::size_t row = r + 1;  // 1-based, header included
    const std::vector<std::string_view> cells = split_cells(lines[r]);
    if (cells.size() != header.size()) {
      const std::size_t col = std::min(cells.size(), header.size()) + 1;
      throw ParseError("expected " + std::to_string(header.size()) +
                           " cells, got " + std::to_string(cells.size()),
                       row, col);
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      table.columns[c].push_back(parse_cell(cells[c], row, c + 1));
    }
  }
  return table;
}

}  // namespace mlam
