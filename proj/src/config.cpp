#include "mlam/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <utility>

namespace mlam {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

// Splits on commas and/or whitespace, skipping empty tokens.
std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  const auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t';
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || is_sep(text[i])) {
      if (i > start) tokens.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return tokens;
}

double parse_number(std::string_view text, const std::string& what,
                    std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ConfigError(what + ": not a finite number: '" + std::string(text) +
                          "'",
                      line);
  }
  return value;
}

std::vector<double> parse_numbers(std::string_view text, std::size_t count,
                                  const std::string& what, std::size_t line) {
  const auto tokens = split_list(text);
  if (tokens.size() != count) {
    throw ConfigError(what + ": expected " + std::to_string(count) +
                          " values, got " + std::to_string(tokens.size()),
                      line);
  }
  std::vector<double> values;
  values.reserve(count);
  for (const auto token : tokens) {
    values.push_back(parse_number(token, what, line));
  }
  return values;
}

// Per-item parse scratch that tracks which keys were seen.
struct ItemScratch {
  ItemConfig config;
  std::size_t line = 0;  // of the section header
  bool has_d = false, has_c = false, has_h = false;
};

ItemConfig finish_item(ItemScratch&& scratch) {
  const auto require = [&](bool present, const char* key) {
    if (!present) {
      throw ConfigError("item '" + scratch.config.name + "': missing key '" +
                            key + "'",
                        scratch.line);
    }
  };
  require(scratch.has_d, "d");
  require(scratch.has_c, "c");
  require(scratch.has_h, "h");
  if (!scratch.config.demand && !scratch.config.demand_ref) {
    throw ConfigError("item '" + scratch.config.name +
                          "': needs one of demand, demand_r, demand_ref",
                      scratch.line);
  }
  return std::move(scratch.config);
}

}  // namespace

ConfigError::ConfigError(const std::string& message, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

double parse_lambda_value(std::string_view text) {
  text = trim(text);
  const auto parse_part = [&](std::string_view part) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw std::invalid_argument("malformed lambda: '" + std::string(text) +
                                  "'");
    }
    return value;
  };
  double value = 0.0;
  const std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    const double num = parse_part(trim(text.substr(0, slash)));
    const double den = parse_part(trim(text.substr(slash + 1)));
    if (den == 0.0) {
      throw std::invalid_argument("lambda fraction with zero denominator: '" +
                                  std::string(text) + "'");
    }
    value = num / den;
  } else {
    value = parse_part(text);
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("lambda must lie in [0, 1]: '" +
                                std::string(text) + "'");
  }
  return value;
}

RunConfig parse_config(std::istream& source) {
  RunConfig config;
  std::vector<ItemScratch> items;
  std::set<std::string, std::less<>> names;
  std::set<std::string> top_seen;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(source, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("unterminated section header", line_no);
      }
      const std::string_view inner = trim(line.substr(1, line.size() - 2));
      if (!inner.starts_with("item ") && inner != "item") {
        throw ConfigError("unknown section '[" + std::string(inner) + "]'",
                          line_no);
      }
      const std::string_view name = trim(inner.substr(4));
      if (name.empty()) {
        throw ConfigError("item section needs a name: [item <name>]",
                          line_no);
      }
      if (!names.emplace(name).second) {
        throw ConfigError("duplicate item name '" + std::string(name) + "'",
                          line_no);
      }
      ItemScratch scratch;
      scratch.config.name = std::string(name);
      scratch.line = line_no;
      items.push_back(std::move(scratch));
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value'", line_no);
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("expected 'key = value'", line_no);
    }

    if (items.empty()) {
      if (!top_seen.insert(key).second) {
        throw ConfigError("duplicate key '" + key + "'", line_no);
      }
      if (key == "lambdas") {
        for (const auto token : split_list(value)) {
          try {
            config.lambdas.emplace_back(parse_lambda_value(token));
          } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what(), line_no);
          }
        }
        if (config.lambdas.empty()) {
          throw ConfigError("lambdas: empty list", line_no);
        }
      } else if (key == "output_format") {
        if (value == "text" || value == "text_table") {
          config.output_format = OutputFormat::text_table;
        } else if (value == "csv") {
          config.output_format = OutputFormat::csv;
        } else {
          throw ConfigError("output_format must be 'text' or 'csv'", line_no);
        }
      } else {
        throw ConfigError("unknown key '" + key + "' before any [item] "
                          "section",
                          line_no);
      }
      continue;
    }

    ItemScratch& item = items.back();
    const auto set_once = [&](bool& flag) {
      if (flag) {
        throw ConfigError("item '" + item.config.name + "': duplicate key '" +
                              key + "'",
                          line_no);
      }
      flag = true;
    };
    const auto set_demand_once = [&]() {
      if (item.config.demand || item.config.demand_ref) {
        throw ConfigError("item '" + item.config.name +
                              "': demand already specified",
                          line_no);
      }
    };
    if (key == "d") {
      set_once(item.has_d);
      item.config.unit_revenue = parse_number(value, key, line_no);
    } else if (key == "c") {
      set_once(item.has_c);
      item.config.fixed_cost = parse_number(value, key, line_no);
    } else if (key == "h") {
      set_once(item.has_h);
      item.config.holding_cost = parse_number(value, key, line_no);
    } else if (key == "demand") {
      set_demand_once();
      const auto v = parse_numbers(value, 4, key, line_no);
      try {
        item.config.demand =
            TrapezoidalFuzzyNumber::from_core_spread(v[0], v[1], v[2], v[3]);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what(), line_no);
      }
    } else if (key == "demand_r") {
      set_demand_once();
      const auto v = parse_numbers(value, 4, key, line_no);
      try {
        item.config.demand = TrapezoidalFuzzyNumber(v[0], v[1], v[2], v[3]);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what(), line_no);
      }
    } else if (key == "demand_ref") {
      set_demand_once();
      DemandRef ref;
      const std::size_t colon = value.rfind(':');
      if (colon != std::string_view::npos && colon > 0 &&
          colon + 1 < value.size()) {
        ref.path = std::string(trim(value.substr(0, colon)));
        ref.row = std::string(trim(value.substr(colon + 1)));
      } else {
        ref.path = std::string(value);
      }
      item.config.demand_ref = std::move(ref);
    } else {
      throw ConfigError("unknown item key '" + key + "'", line_no);
    }
  }

  if (items.empty()) {
    throw ConfigError("config defines no [item] sections", 0);
  }
  config.items.reserve(items.size());
  for (auto& scratch : items) {
    config.items.push_back(finish_item(std::move(scratch)));
  }
  return config;
}

std::vector<std::pair<std::string, TrapezoidalFuzzyNumber>>
parse_fitted_demands(std::istream& source) {
  std::vector<std::pair<std::string, TrapezoidalFuzzyNumber>> rows;
  std::string raw;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(source, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "name,a,b,alpha,beta") {
        throw ConfigError("fitted-demands file must start with the header "
                          "'name,a,b,alpha,beta'",
                          line_no);
      }
      saw_header = true;
      continue;
    }
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string_view::npos) {
        cells.push_back(trim(line.substr(start)));
        break;
      }
      cells.push_back(trim(line.substr(start, comma - start)));
      start = comma + 1;
    }
    if (cells.size() != 5 || cells[0].empty()) {
      throw ConfigError("fitted-demands row must be name,a,b,alpha,beta",
                        line_no);
    }
    double v[4];
    for (int i = 0; i < 4; ++i) {
      v[i] = parse_number(cells[i + 1], "fitted demand", line_no);
    }
    try {
      rows.emplace_back(std::string(cells[0]),
                        TrapezoidalFuzzyNumber::from_core_spread(v[0], v[1],
                                                                 v[2], v[3]));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what(), line_no);
    }
  }
  if (!saw_header) {
    throw ConfigError("empty fitted-demands file", 0);
  }
  return rows;
}

InventoryModel build_model(const RunConfig& config,
                           const std::filesystem::path& base_dir) {
  using FittedRows =
      std::vector<std::pair<std::string, TrapezoidalFuzzyNumber>>;
  std::map<std::string, FittedRows> cache;

  std::vector<InventoryItem> items;
  items.reserve(config.items.size());
  for (const auto& item : config.items) {
    std::optional<TrapezoidalFuzzyNumber> demand = item.demand;
    if (!demand) {
      const DemandRef& ref = *item.demand_ref;
      auto [it, inserted] = cache.try_emplace(ref.path);
      if (inserted) {
        std::filesystem::path path(ref.path);
        if (path.is_relative()) path = base_dir / path;
        std::ifstream in(path);
        if (!in) {
          throw IoError("cannot read fitted-demands file '" + path.string() +
                        "'");
        }
        it->second = parse_fitted_demands(in);
      }
      const std::string& row = ref.row.empty() ? item.name : ref.row;
      for (const auto& [name, fitted] : it->second) {
        if (name == row) {
          demand = fitted;
          break;
        }
      }
      if (!demand) {
        throw ConfigError("item '" + item.name + "': no row '" + row +
                              "' in '" + ref.path + "'",
                          0);
      }
    }
    items.emplace_back(item.name, item.unit_revenue, item.fixed_cost,
                       item.holding_cost, *demand);
  }
  return InventoryModel(std::move(items));
}

}  // namespace mlam
