#include "tilekit/steinhaus.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace tilekit {

namespace {

double sinc_sq(double u) {
  // removable singularity at 0
  if (std::abs(u) < 1e-12) return 1.0;
  const double s = std::sin(std::numbers::pi * u) / (std::numbers::pi * u);
  return s * s;
}

}  // namespace

double evaluate(const FejerSumFunction& f, double x) {
  if (f.c1 <= 0 || f.c1 >= 1 || f.c2 <= 0 || f.c2 >= 1)
    throw std::invalid_argument("half-bases must lie in (0, 1)");
  return f.c1 * sinc_sq(f.c1 * x) + f.c2 * sinc_sq(f.c2 * x);
}

double translate_sum(const FejerSumFunction& f, double x, long long n_max) {
  if (n_max < 0) throw std::invalid_argument("N must be nonnegative");
  double s = 0.0;
  for (long long n = -n_max; n <= n_max; ++n) s += evaluate(f, x - static_cast<double>(n));
  return s;
}

double positivity_scan(const FejerSumFunction& f, double step, double x0, double x1) {
  if (step <= 0) throw std::invalid_argument("step must be positive");
  double mn = std::numeric_limits<double>::infinity();
  for (double x = x0; x <= x1 + step / 2; x += step) mn = std::min(mn, evaluate(f, x));
  return mn;
}

}  // namespace tilekit
