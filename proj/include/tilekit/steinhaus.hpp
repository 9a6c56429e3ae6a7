// A strictly positive function tiling R with Z: the sum of two Fejer
// kernels whose Fourier transforms are triangles with incommensurable base
// lengths supported in (-1, 1). The translate sum over Z converges to the
// constant level f^(0) = 2.

#ifndef TILEKIT_STEINHAUS_HPP
#define TILEKIT_STEINHAUS_HPP

#include <stdexcept>

namespace tilekit {

// f(x) = c1 sinc^2(c1 x) + c2 sinc^2(c2 x), sinc(u) = sin(pi u)/(pi u).
// Requires 0 < c1, c2 < 1 and c1/c2 irrational (a configuration contract,
// not a runtime check). The kernels' zeros never coincide, so f > 0.
struct FejerSumFunction {
  double c1 = 0.5;
  double c2 = 0.7071067811865476;  // sqrt(2)/2
};

double evaluate(const FejerSumFunction& f, double x);

// sum over |n| <= N of f(x - n); converges to 2 with O(1/N) error.
double translate_sum(const FejerSumFunction& f, double x, long long n_max);

// minimum of f over {x0 + i*step : x0 + i*step <= x1}
double positivity_scan(const FejerSumFunction& f, double step, double x0, double x1);

}  // namespace tilekit

#endif  // TILEKIT_STEINHAUS_HPP
