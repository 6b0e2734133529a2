#include "mlam/inventory.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace mlam {

InventoryItem::InventoryItem(std::string name, double unit_revenue,
                             double fixed_cost, double holding_cost,
                             TrapezoidalFuzzyNumber demand)
    : name_(std::move(name)),
      unit_revenue_(unit_revenue),
      fixed_cost_(fixed_cost),
      holding_cost_(holding_cost),
      demand_(demand) {
  if (name_.empty()) {
    throw std::invalid_argument("inventory item needs a nonempty name");
  }
  if (!(unit_revenue >= 0.0) || !std::isfinite(unit_revenue)) {
    throw std::invalid_argument("item '" + name_ +
                                "': unit revenue d must be >= 0");
  }
  if (!(fixed_cost >= 0.0) || !std::isfinite(fixed_cost)) {
    throw std::invalid_argument("item '" + name_ +
                                "': fixed cost c must be >= 0");
  }
  if (!(holding_cost > 0.0) || !std::isfinite(holding_cost)) {
    throw std::invalid_argument("item '" + name_ +
                                "': holding cost h must be > 0");
  }
  if (!demand_.is_positive()) throw NonpositiveSupport(demand_.r1());
}

InventoryModel::InventoryModel(std::vector<InventoryItem> items)
    : items_(std::move(items)) {
  if (items_.empty()) {
    throw std::invalid_argument("inventory model needs at least one item");
  }
  std::unordered_set<std::string> seen;
  for (const auto& item : items_) {
    if (!seen.insert(item.name()).second) {
      throw std::invalid_argument("duplicate item name '" + item.name() +
                                  "'");
    }
  }
}

double expected_profit(const InventoryItem& item, double order_quantity,
                       Lambda lam) {
  const double reciprocal = expected_reciprocal_closed(item.demand(), lam);
  return item.unit_revenue() * order_quantity - item.fixed_cost() -
         0.5 * item.holding_cost() * order_quantity * order_quantity *
             reciprocal;
}

Solution solve(const InventoryModel& model, Lambda lam) {
  Solution result{lam, {}, 0.0, {}};
  result.items.reserve(model.size());
  for (const auto& item : model.items()) {
    const double reciprocal = expected_reciprocal_closed(item.demand(), lam);
    const double curvature = item.holding_cost() * reciprocal;
    if (!(curvature > 0.0)) {
      // h > 0 and E(1/D) > 0 by construction; a nonpositive product would
      // mean the objective is not strictly concave.
      throw std::logic_error("item '" + item.name() +
                             "': nonpositive h * E(1/D)");
    }
    double order = 0.0;
    if (item.unit_revenue() == 0.0) {
      result.warnings.push_back("item '" + item.name() +
                                "': zero unit revenue, boundary optimum "
                                "x* = 0");
    } else {
      order = item.unit_revenue() / curvature;
    }
    result.items.push_back({item.name(), order, reciprocal,
                            expected_profit(item, order, lam)});
  }
  for (const auto& solved : result.items) {
    result.total_expected_profit += solved.expected_profit;
  }
  return result;
}

std::vector<Solution> lambda_sweep(const InventoryModel& model,
                                   const std::vector<Lambda>& lambdas) {
  if (lambdas.empty()) {
    throw std::invalid_argument("lambda sweep needs at least one lambda");
  }
  std::vector<Solution> solutions;
  solutions.reserve(lambdas.size());
  for (const Lambda lam : lambdas) {
    solutions.push_back(solve(model, lam));
  }
  return solutions;
}

}  // namespace mlam
