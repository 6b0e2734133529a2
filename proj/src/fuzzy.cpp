#include "mlam/fuzzy.hpp"

#include <cmath>
#include <string>

namespace mlam {

namespace {

std::string describe(double r1, double r2, double r3, double r4) {
  return "(" + std::to_string(r1) + ", " + std::to_string(r2) + ", " +
         std::to_string(r3) + ", " + std::to_string(r4) + ")";
}

}  // namespace

Lambda::Lambda(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("lambda must lie in [0, 1], got " +
                                std::to_string(value));
  }
}

TrapezoidalFuzzyNumber::TrapezoidalFuzzyNumber(double r1, double r2, double r3,
                                               double r4)
    : TrapezoidalFuzzyNumber(r1, r2, r3, r4, r2 - r1, r4 - r3) {
  if (!(r1 <= r2 && r2 <= r3 && r3 <= r4) || !std::isfinite(r1) ||
      !std::isfinite(r4)) {
    throw std::invalid_argument("trapezoid parameters must satisfy r1 <= r2 "
                                "<= r3 <= r4 and be finite, got " +
                                describe(r1, r2, r3, r4));
  }
}

TrapezoidalFuzzyNumber TrapezoidalFuzzyNumber::from_core_spread(double a,
                                                                double b,
                                                                double alpha,
                                                                double beta) {
  if (!(alpha >= 0.0 && beta >= 0.0) || !(a <= b) ||
      !std::isfinite(a - alpha) || !std::isfinite(b + beta)) {
    throw std::invalid_argument(
        "core/spread form requires a <= b and alpha, beta >= 0, got " +
        describe(a, b, alpha, beta));
  }
  return TrapezoidalFuzzyNumber(a - alpha, a, b, b + beta, alpha, beta);
}

TrapezoidalFuzzyNumber TrapezoidalFuzzyNumber::triangular(double left,
                                                          double peak,
                                                          double right) {
  return TrapezoidalFuzzyNumber(left, peak, peak, right);
}

TrapezoidalFuzzyNumber TrapezoidalFuzzyNumber::crisp(double value) {
  return TrapezoidalFuzzyNumber(value, value, value, value);
}

double TrapezoidalFuzzyNumber::membership(double x) const noexcept {
  if (x < r1_ || x > r4_) return 0.0;
  if (x >= r2_ && x <= r3_) return 1.0;
  // Shoulder branches: the guards above leave only nondegenerate shoulders,
  // so the divisors are strictly positive.
  if (x < r2_) return (x - r1_) / (r2_ - r1_);
  return (r4_ - x) / (r4_ - r3_);
}

double TrapezoidalFuzzyNumber::possibility_leq(double x) const noexcept {
  if (x < r1_) return 0.0;
  if (x >= r2_) return 1.0;
  return (x - r1_) / (r2_ - r1_);
}

double TrapezoidalFuzzyNumber::possibility_geq(double x) const noexcept {
  if (x > r4_) return 0.0;
  if (x <= r3_) return 1.0;
  return (r4_ - x) / (r4_ - r3_);
}

double TrapezoidalFuzzyNumber::possibility_lt(double x) const noexcept {
  // sup over the open half-line differs from possibility_leq only where the
  // ascending edge jumps, i.e. at a collapsed left shoulder.
  if (x <= r1_) return 0.0;
  if (x > r2_) return 1.0;
  return (x - r1_) / (r2_ - r1_);
}

double TrapezoidalFuzzyNumber::possibility_gt(double x) const noexcept {
  if (x >= r4_) return 0.0;
  if (x < r3_) return 1.0;
  return (r4_ - x) / (r4_ - r3_);
}

double TrapezoidalFuzzyNumber::necessity_leq(double x) const noexcept {
  return 1.0 - possibility_gt(x);
}

double TrapezoidalFuzzyNumber::necessity_geq(double x) const noexcept {
  return 1.0 - possibility_lt(x);
}

double TrapezoidalFuzzyNumber::m_lambda_leq(Lambda lam, double x) const noexcept {
  const double w = lam.value();
  return w * possibility_leq(x) + (1.0 - w) * necessity_leq(x);
}

double TrapezoidalFuzzyNumber::m_lambda_geq(Lambda lam, double x) const noexcept {
  const double w = lam.value();
  return w * possibility_geq(x) + (1.0 - w) * necessity_geq(x);
}

double TrapezoidalFuzzyNumber::credibility_leq(double x) const noexcept {
  return 0.5 * (possibility_leq(x) + necessity_leq(x));
}

double TrapezoidalFuzzyNumber::credibility_geq(double x) const noexcept {
  return 0.5 * (possibility_geq(x) + necessity_geq(x));
}

bool operator==(const TrapezoidalFuzzyNumber& lhs,
                const TrapezoidalFuzzyNumber& rhs) noexcept {
  return lhs.r1() == rhs.r1() && lhs.r2() == rhs.r2() &&
         lhs.r3() == rhs.r3() && lhs.r4() == rhs.r4();
}

}  // namespace mlam
