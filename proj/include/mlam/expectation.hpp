#pragma once

#include <stdexcept>

#include "mlam/fuzzy.hpp"

namespace mlam {

/// Raised when an operation needs a strictly positive fuzzy number
/// (support bounded away from zero, r1 > 0) and the argument is not.
class NonpositiveSupport : public std::domain_error {
 public:
  explicit NonpositiveSupport(double r1);

  double r1() const noexcept { return r1_; }

 private:
  double r1_;
};

enum class EvalMethod { closed_form, quadrature };

struct ExpectationResult {
  double value;
  EvalMethod method;
  /// Estimated absolute error; 0 for closed forms, an upper bound on the
  /// discretization error for quadrature.
  double est_abs_error;
};

/// m_lambda expected value of a trapezoidal fuzzy number:
///   E(xi) = (1 - lambda)(r1 + r2)/2 + lambda (r3 + r4)/2.
/// Affine in lambda, so E at lambda interpolates E at 0 and 1 exactly.
double expected_value_closed(const TrapezoidalFuzzyNumber& d,
                             Lambda lam) noexcept;

/// Same quantity from the defining integral
///   E(xi) = int_{-inf}^{0} [m_lambda(xi >= r) - 1] dr
///         + int_{0}^{inf}   m_lambda(xi >= r) dr
/// by adaptive Simpson quadrature split at the trapezoid vertices.
/// est_abs_error <= 1e-9 * max(1, |value|).
ExpectationResult expected_value_quadrature(const TrapezoidalFuzzyNumber& d,
                                            Lambda lam);

/// m_lambda expected value of the reciprocal 1/D for D > 0:
///   E(1/D) = lambda/(r2 - r1) ln(r2/r1) + (1 - lambda)/(r4 - r3) ln(r4/r3),
/// with each shoulder term continued by its width -> 0 limit (1/r2 and 1/r4
/// respectively), so triangular and crisp demands work unchanged.
/// Strictly positive. Throws NonpositiveSupport unless r1 > 0.
double expected_reciprocal_closed(const TrapezoidalFuzzyNumber& d, Lambda lam);

/// E(1/D) from the defining integral of m_lambda(1/D >= r) over [0, 1/r1],
/// adaptive Simpson split at the reciprocals of the vertices.
/// est_abs_error <= 1e-9 * value. Throws NonpositiveSupport unless r1 > 0.
ExpectationResult expected_reciprocal_quadrature(
    const TrapezoidalFuzzyNumber& d, Lambda lam);

}  // namespace mlam
