#include <doctest.h>

#include <cmath>

#include "tilekit/steinhaus.hpp"

using namespace tilekit;

TEST_SUITE_BEGIN("steinhaus");

TEST_CASE("evaluate") {
  FejerSumFunction f;
  CHECK(evaluate(f, 0.0) == doctest::Approx(f.c1 + f.c2).epsilon(1e-12));
  // first kernel vanishes at x = 2 = 1/c1; only the second contributes
  const double at2 = evaluate(f, 2.0);
  const double second = f.c2 * std::pow(std::sin(std::numbers::pi * f.c2 * 2.0) /
                                            (std::numbers::pi * f.c2 * 2.0),
                                        2.0);
  CHECK(at2 == doctest::Approx(second).epsilon(1e-12));
  CHECK(evaluate(f, 10.37) > 0.0);
}

TEST_CASE("translate sums approach level 2") {
  FejerSumFunction f;
  CHECK(translate_sum(f, 0.3, 0) == doctest::Approx(evaluate(f, 0.3)));
  CHECK(std::abs(translate_sum(f, 0.5, 10000) - 2.0) <= 1e-2);
  // constancy: two sample points give the same limit
  const double d = translate_sum(f, 0.123, 10000) - translate_sum(f, 0.789, 10000);
  CHECK(std::abs(d) <= 2e-2);
}

TEST_CASE("empirical tail bound K/N over deterministic samples") {
  FejerSumFunction f;
  for (long long n : {100LL, 1000LL, 10000LL}) {
    for (int i = 0; i < 100; ++i) {
      const double x = (i + 0.5) / 100.0;
      const double dev = std::abs(translate_sum(f, x, n) - 2.0);
      CHECK(dev <= 100.0 / static_cast<double>(n));
    }
  }
}

TEST_CASE("positivity scan") {
  FejerSumFunction f;
  CHECK(positivity_scan(f, 1e-3, 0.0, 50.0) > 0.0);
  CHECK(positivity_scan(f, 1.0, 0.0, 0.0) == doctest::Approx(f.c1 + f.c2));
  // near the zeros of the first kernel the second keeps f positive
  for (double x : {2.0, 4.0, 6.0, 8.0}) CHECK(evaluate(f, x) > 0.0);
}

TEST_SUITE_END();
