#include "mlam/expectation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace mlam {

namespace {

struct PartialIntegral {
  double value = 0.0;
  double err = 0.0;
};

// Adaptive Simpson on [a, b] for an integrand that is smooth on the open
// interval. Each accepted subinterval contributes its Richardson-corrected
// estimate; |S_half - S_whole|/15 is banked as the error estimate.
template <typename F>
void refine(const F& f, double a, double fa, double m, double fm, double b,
            double fb, double whole, double tol, int depth,
            PartialIntegral& acc) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h12 = (b - a) / 12.0;
  const double left = h12 * (fa + 4.0 * flm + fm);
  const double right = h12 * (fm + 4.0 * frm + fb);
  const double delta = (left + right) - whole;
  if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
    acc.value += left + right + delta / 15.0;
    acc.err += std::abs(delta) / 15.0;
    return;
  }
  refine(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1, acc);
  refine(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1, acc);
}

template <typename F>
PartialIntegral integrate_adaptive(const F& f, double a, double b,
                                   double tol) {
  PartialIntegral acc;
  if (!(a < b)) return acc;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  refine(f, a, fa, m, fm, b, fb, whole, tol, 48, acc);
  return acc;
}

// ln(v / (v - w)) / w continued by its limit 1/v at w == 0. The log1p route
// keeps full precision for narrow shoulders, where v/(v - w) rounds to 1.
double log_over_width(double v, double w) {
  if (w == 0.0) return 1.0 / v;
  const double x = w / v;
  if (x > 0.5) return std::log(v / (v - w)) / w;
  return -std::log1p(-x) / w;
}

}  // namespace

NonpositiveSupport::NonpositiveSupport(double r1)
    : std::domain_error("fuzzy number must be strictly positive (r1 > 0), "
                        "got r1 = " +
                        std::to_string(r1)),
      r1_(r1) {}

double expected_value_closed(const TrapezoidalFuzzyNumber& d,
                             Lambda lam) noexcept {
  const double w = lam.value();
  return (1.0 - w) * (0.5 * (d.r1() + d.r2())) +
         w * (0.5 * (d.r3() + d.r4()));
}

ExpectationResult expected_value_quadrature(const TrapezoidalFuzzyNumber& d,
                                            Lambda lam) {
  // The integrand m_lambda(xi >= r) is identically 1 below r1 and 0 above
  // r4, so the two defining integrals reduce to exact stretches plus a
  // piecewise-linear core split at the vertices.
  const double tol = 1e-9;
  double value = 0.0;
  double err = 0.0;
  if (d.r1() > 0.0) value += d.r1();  // ones on [0, r1]
  if (d.r4() < 0.0) value += d.r4();  // minus ones on [r4, 0]

  const double span = d.r4() - d.r1();
  const std::array<double, 4> vertex{d.r1(), d.r2(), d.r3(), d.r4()};
  const auto above = [&](double r) { return d.m_lambda_geq(lam, r); };
  const auto above_less_one = [&](double r) {
    return d.m_lambda_geq(lam, r) - 1.0;
  };
  for (int i = 0; i + 1 < 4; ++i) {
    const double lo = vertex[i];
    const double hi = vertex[i + 1];
    if (!(lo < hi)) continue;
    // half a share each for the positive and negative clips of this piece
    const double share = 0.5 * tol * ((hi - lo) / span);
    const double plo = std::max(lo, 0.0);
    const double phi = std::max(hi, 0.0);
    if (plo < phi) {
      const auto part = integrate_adaptive(above, plo, phi, share);
      value += part.value;
      err += part.err;
    }
    const double nlo = std::min(lo, 0.0);
    const double nhi = std::min(hi, 0.0);
    if (nlo < nhi) {
      const auto part = integrate_adaptive(above_less_one, nlo, nhi, share);
      value += part.value;
      err += part.err;
    }
  }
  return {value, EvalMethod::quadrature, err};
}

double expected_reciprocal_closed(const TrapezoidalFuzzyNumber& d,
                                  Lambda lam) {
  if (!d.is_positive()) throw NonpositiveSupport(d.r1());
  const double w = lam.value();
  return w * log_over_width(d.r2(), d.left_spread()) +
         (1.0 - w) * log_over_width(d.r4(), d.right_spread());
}

ExpectationResult expected_reciprocal_quadrature(
    const TrapezoidalFuzzyNumber& d, Lambda lam) {
  if (!d.is_positive()) throw NonpositiveSupport(d.r1());
  // m_lambda(1/D >= r) equals m_lambda(D <= 1/r): identically 1 on
  // [0, 1/r4], 0 beyond 1/r1, and one smooth piece per branch of the
  // threshold measure in between.
  const double inv1 = 1.0 / d.r1();
  const double inv4 = 1.0 / d.r4();
  double value = inv4;  // exact stretch of ones
  double err = 0.0;
  const double span = inv1 - inv4;
  if (span > 0.0) {
    const double tol = 1e-9 * inv4;  // the result is at least 1/r4
    const std::array<std::pair<double, double>, 3> branch{
        {{d.r3(), d.r4()}, {d.r2(), d.r3()}, {d.r1(), d.r2()}}};
    for (const auto& [xlo, xhi] : branch) {
      if (!(xlo < xhi)) continue;
      const double rlo = 1.0 / xhi;
      const double rhi = 1.0 / xlo;
      // Clamp 1/r into this branch's x-interval so endpoint rounding cannot
      // stray across a measure jump at a collapsed neighbouring shoulder.
      const auto f = [&d, lam, lo = xlo, hi = xhi](double r) {
        return d.m_lambda_leq(lam, std::clamp(1.0 / r, lo, hi));
      };
      const auto part =
          integrate_adaptive(f, rlo, rhi, tol * ((rhi - rlo) / span));
      value += part.value;
      err += part.err;
    }
  }
  return {value, EvalMethod::quadrature, err};
}

}  // namespace mlam
