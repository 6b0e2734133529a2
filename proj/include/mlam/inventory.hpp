#pragma once

#include <string>
#include <vector>

#include "mlam/expectation.hpp"
#include "mlam/fuzzy.hpp"

namespace mlam {

/// One stocked item: cost parameters plus its fuzzy demand.
///
/// The per-item profit at order quantity x is
///   pi(x, D) = d x - c - (h x^2 / 2) (1/D)
/// with d the unit revenue, c the fixed cost and h the holding cost
/// coefficient. Demand must be strictly positive so that E(1/D) exists.
class InventoryItem {
 public:
  /// Requires unit_revenue >= 0, fixed_cost >= 0, holding_cost > 0 and a
  /// strictly positive demand (throws NonpositiveSupport otherwise).
  InventoryItem(std::string name, double unit_revenue, double fixed_cost,
                double holding_cost, TrapezoidalFuzzyNumber demand);

  const std::string& name() const noexcept { return name_; }
  double unit_revenue() const noexcept { return unit_revenue_; }    // d
  double fixed_cost() const noexcept { return fixed_cost_; }        // c
  double holding_cost() const noexcept { return holding_cost_; }    // h
  const TrapezoidalFuzzyNumber& demand() const noexcept { return demand_; }

 private:
  std::string name_;
  double unit_revenue_;
  double fixed_cost_;
  double holding_cost_;
  TrapezoidalFuzzyNumber demand_;
};

/// An n-item model (n >= 1, unique item names). Items are independent in
/// the objective, so the model is just the ordered collection.
class InventoryModel {
 public:
  explicit InventoryModel(std::vector<InventoryItem> items);

  const std::vector<InventoryItem>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }

 private:
  std::vector<InventoryItem> items_;
};

struct ItemSolution {
  std::string name;
  double order_quantity;        // x*, the profit-maximizing order
  double expected_reciprocal;   // E_lambda(1/D)
  double expected_profit;       // profit at x*
};

struct Solution {
  Lambda lambda;
  std::vector<ItemSolution> items;
  double total_expected_profit;  // sum of the per-item profits, in order
  std::vector<std::string> warnings;
};

/// m_lambda-expected profit of one item at order quantity x >= 0:
///   d x - c - (h x^2 / 2) E_lambda(1/D).
/// Strictly concave in x. Throws NonpositiveSupport via E(1/D) if the
/// demand is not positive (cannot happen for a constructed InventoryItem).
double expected_profit(const InventoryItem& item, double order_quantity,
                       Lambda lam);

/// Maximizes total expected profit over nonnegative orders. The objective
/// separates per item and each term is concave, so the stationary point
///   x* = d / (h E_lambda(1/D))
/// is the unique maximum; an item with d == 0 gets the boundary optimum
/// x* = 0 and a warning instead of an error.
Solution solve(const InventoryModel& model, Lambda lam);

/// One solve per lambda, in the given order.
std::vector<Solution> lambda_sweep(const InventoryModel& model,
                                   const std::vector<Lambda>& lambdas);

}  // namespace mlam
