#pragma once

#include <stdexcept>

namespace mlam {

/// Optimism weight of the parametric measure
///   m_lambda(A) = lambda * Pos(A) + (1 - lambda) * Nec(A).
/// lambda = 0 is the pure-necessity (pessimistic) end, lambda = 1 the
/// pure-possibility (optimistic) end, and lambda = 1/2 recovers the
/// credibility measure. Construction rejects values outside [0, 1].
class Lambda {
 public:
  explicit Lambda(double value);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Trapezoidal fuzzy number with support [r1, r4] and core [r2, r3].
///
/// Membership is 0 outside the support, 1 on the core, and linear on the
/// shoulders. Triangular (r2 == r3) and crisp (r1 == r4) shapes are the
/// degenerate cases; a zero-width shoulder keeps membership 1 at the
/// collapsed edge and 0 strictly outside, so the threshold measures become
/// right-continuous step functions there.
///
/// The alternate core/spread form (a, b, alpha, beta) denotes the same
/// number as (a - alpha, a, b, b + beta). Spreads given to the alternate
/// constructor are kept verbatim, so converting back is exact.
///
/// Immutable value type; freely copyable across threads.
class TrapezoidalFuzzyNumber {
 public:
  /// Canonical form. Requires r1 <= r2 <= r3 <= r4 (all finite).
  TrapezoidalFuzzyNumber(double r1, double r2, double r3, double r4);

  /// Core/spread form: core [a, b], left spread alpha, right spread beta.
  /// Requires a <= b, alpha >= 0, beta >= 0.
  static TrapezoidalFuzzyNumber from_core_spread(double a, double b,
                                                 double alpha, double beta);

  /// Triangular shape (left, peak, right), i.e. r2 == r3 == peak.
  static TrapezoidalFuzzyNumber triangular(double left, double peak,
                                           double right);

  /// Crisp value: all four parameters equal.
  static TrapezoidalFuzzyNumber crisp(double value);

  double r1() const noexcept { return r1_; }
  double r2() const noexcept { return r2_; }
  double r3() const noexcept { return r3_; }
  double r4() const noexcept { return r4_; }

  double core_left() const noexcept { return r2_; }     // a
  double core_right() const noexcept { return r3_; }    // b
  double left_spread() const noexcept { return alpha_; }
  double right_spread() const noexcept { return beta_; }

  bool is_triangular() const noexcept { return r2_ == r3_; }
  bool is_crisp() const noexcept { return r1_ == r4_; }
  /// True when the whole support is strictly positive (r1 > 0).
  bool is_positive() const noexcept { return r1_ > 0.0; }

  /// Membership grade mu(x).
  double membership(double x) const noexcept;

  // Possibility of the four threshold events, Pos(E) = sup over E of mu.
  double possibility_leq(double x) const noexcept;  // Pos(xi <= x)
  double possibility_geq(double x) const noexcept;  // Pos(xi >= x)
  double possibility_lt(double x) const noexcept;   // Pos(xi <  x)
  double possibility_gt(double x) const noexcept;   // Pos(xi >  x)

  // Necessity by duality: Nec(E) = 1 - Pos(complement of E).
  double necessity_leq(double x) const noexcept;    // 1 - Pos(xi > x)
  double necessity_geq(double x) const noexcept;    // 1 - Pos(xi < x)

  /// m_lambda(xi <= x). Monotone nondecreasing in x; 0 below the support,
  /// 1 above it.
  double m_lambda_leq(Lambda lam, double x) const noexcept;

  /// m_lambda(xi >= x). Monotone nonincreasing in x; 1 below the support,
  /// 0 above it.
  double m_lambda_geq(Lambda lam, double x) const noexcept;

  // Credibility measure, the lambda = 1/2 case.
  double credibility_leq(double x) const noexcept;
  double credibility_geq(double x) const noexcept;

 private:
  TrapezoidalFuzzyNumber(double r1, double r2, double r3, double r4,
                         double alpha, double beta)
      : r1_(r1), r2_(r2), r3_(r3), r4_(r4), alpha_(alpha), beta_(beta) {}

  double r1_, r2_, r3_, r4_;
  double alpha_, beta_;  // shoulder widths, exact for core/spread inputs
};

bool operator==(const TrapezoidalFuzzyNumber& lhs,
                const TrapezoidalFuzzyNumber& rhs) noexcept;

}  // namespace mlam
