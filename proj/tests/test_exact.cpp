#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "tilekit/exact.hpp"

using namespace tilekit;

TEST_SUITE_BEGIN("exact");

TEST_CASE("euler_phi basics") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(7) == 6);
  // brute-force count of j < 12 coprime to 12
  Int count = 0;
  for (Int j = 1; j <= 12; ++j)
    if (std::gcd(j, Int{12}) == 1) ++count;
  CHECK(count == 4);
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("euler_phi agrees with coprime counting up to 200") {
  for (Int d = 1; d <= 200; ++d) {
    Int count = 0;
    for (Int j = 1; j <= d; ++j)
      if (std::gcd(j, d) == 1) ++count;
    CHECK(euler_phi(d) == count);
  }
}

TEST_CASE("cyclotomic polynomials, small orders") {
  CHECK(cyclotomic_poly(1).poly == IntPoly({-1, 1}));
  CHECK(cyclotomic_poly(2).poly == IntPoly({1, 1}));
  CHECK(cyclotomic_poly(4).poly == IntPoly({1, 0, 1}));
  CHECK(cyclotomic_poly(6).poly == IntPoly({1, -1, 1}));
  CHECK(cyclotomic_poly(6).poly.to_string() == "1 - x + x^2");
  CHECK(cyclotomic_poly(105).poly.coeff(7) == -2);  // first coefficient outside {-1,0,1}
}

TEST_CASE("product of Phi_d over divisors reconstructs x^n - 1") {
  for (Int n = 1; n <= 200; ++n) {
    IntPoly prod({1});
    for (Int d : divisors(n)) prod = prod * cyclotomic_poly(d).poly;
    CHECK(prod == IntPoly::x_power_minus_one(static_cast<std::size_t>(n)));
  }
}

TEST_CASE("degree and totient growth estimate") {
  for (Int d = 1; d <= 500; ++d) {
    const auto phi = euler_phi(d);
    CHECK(static_cast<Int>(cyclotomic_poly(d).poly.degree()) == phi);
    CHECK(phi <= d);
    if (d >= 16)
      CHECK(0.25 * static_cast<double>(d) / std::log(std::log(static_cast<double>(d))) <=
            static_cast<double>(phi));
  }
}

TEST_CASE("mask polynomial") {
  auto m = mask_polynomial(FiniteSetZ::from_ints({0, 2, 3, 5}));
  CHECK(m.poly == IntPoly({1, 0, 1, 1, 0, 1}));
  CHECK(mask_polynomial(FiniteSetZ::from_ints({0})).poly == IntPoly({1}));
  CHECK(mask_polynomial(FiniteSetZ::from_ints({0, 1})).poly == IntPoly({1, 1}));
  // 0/1 coefficients and A(1) = |A|
  for (const auto& c : m.poly.coeffs()) CHECK((c == 0 || c == 1));
  CHECK(m.poly.eval_at_one() == 4);
}

TEST_CASE("cyclotomic divisors of {0,2,3,5} are {2,4,6}") {
  auto ds = cyclotomic_divisors(FiniteSetZ::from_ints({0, 2, 3, 5}));
  CHECK(ds == std::vector<Int>{2, 4, 6});
  // product identity Phi_2 Phi_4 Phi_6 = mask
  IntPoly prod({1});
  for (Int s : ds) prod = prod * cyclotomic_poly(s).poly;
  CHECK(prod == mask_polynomial(FiniteSetZ::from_ints({0, 2, 3, 5})).poly);
}

TEST_CASE("cyclotomic divisors, degenerate cases") {
  CHECK(cyclotomic_divisors(FiniteSetZ::from_ints({0})).empty());
  // all s with phi(s) <= 3 checked by division
  CHECK(cyclotomic_divisors(FiniteSetZ::from_ints({0, 1, 3})).empty());
}

TEST_CASE("zero_set_zn worked example") {
  auto z = zero_set_zn(GroupSubset::from_residues(12, {0, 2, 3, 5}));
  CHECK(z == std::vector<Int>{2, 3, 6, 9, 10});
}

TEST_CASE("zero_set_zn trivial cases") {
  CHECK(zero_set_zn(GroupSubset::from_residues(6, {0, 1, 2, 3, 4, 5})) ==
        std::vector<Int>{1, 2, 3, 4, 5});
  CHECK(zero_set_zn(GroupSubset::from_residues(8, {0})).empty());
}

TEST_CASE("zero_set_zn equals the numeric DFT zero set") {
  // exhaustive for n <= 16
  for (Int n = 1; n <= 16; ++n) {
    for (Int mask = 1; mask < (Int{1} << n); ++mask) {
      std::vector<Int> elems;
      for (Int i = 0; i < n; ++i)
        if (mask & (Int{1} << i)) elems.push_back(i);
      auto z = zero_set_zn(GroupSubset::from_residues(n, elems));
      std::vector<Int> numeric;
      for (Int k = 1; k < n; ++k)
        if (std::abs(oracle::dft_zn(elems, n, k)) < 1e-6) numeric.push_back(k);
      REQUIRE(z == numeric);
    }
  }
  oracle::Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    const Int n = 9 + rng.below(22);  // 9..30
    std::vector<Int> elems;
    for (Int i = 0; i < n; ++i)
      if (rng.next() & 1) elems.push_back(i);
    if (elems.empty()) elems.push_back(rng.below(n));
    auto z = zero_set_zn(GroupSubset::from_residues(n, elems));
    std::vector<Int> numeric;
    for (Int k = 1; k < n; ++k)
      if (std::abs(oracle::dft_zn(elems, n, k)) < 1e-6) numeric.push_back(k);
    CHECK(z == numeric);
  }
}

TEST_CASE("zero set is a union of cyclotomic classes") {
  oracle::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Int n = 2 + rng.below(29);
    std::vector<Int> elems;
    for (Int i = 0; i < n; ++i)
      if (rng.next() & 1) elems.push_back(i);
    if (elems.empty()) elems.push_back(0);
    auto z = zero_set_zn(GroupSubset::from_residues(n, elems));
    std::set<Int> zs(z.begin(), z.end());
    for (Int k : z)
      for (Int j = 1; j < n; ++j)
        if (std::gcd(j, n) == std::gcd(k, n)) CHECK(zs.count(j) == 1);
  }
}

TEST_CASE("char_sum_is_zero examples") {
  CHECK(char_sum_is_zero(GroupSubset::from_residues(6, {0, 1, 2}), {2}));
  CHECK_FALSE(char_sum_is_zero(GroupSubset::from_residues(6, {0, 1, 2}), {0}));
  GroupSubset s(4, 2, {{0, 0}, {1, 1}});
  CHECK(char_sum_is_zero(s, {2, 0}));
  CHECK_FALSE(char_sum_is_zero(s, {1, 0}));
}

TEST_CASE("char_sum_is_zero agrees with numeric evaluation") {
  oracle::Rng rng(13);
  for (int t = 0; t < 500; ++t) {
    const Int n = 2 + rng.below(12);
    const int d = 1 + static_cast<int>(rng.below(3));
    std::vector<std::vector<Int>> elems;
    const Int count = 1 + rng.below(6);
    for (Int i = 0; i < count; ++i) {
      std::vector<Int> v;
      for (int c = 0; c < d; ++c) v.push_back(rng.below(n));
      elems.push_back(std::move(v));
    }
    GroupSubset s(n, d, std::move(elems));
    std::vector<Int> q;
    for (int c = 0; c < d; ++c) q.push_back(rng.below(n));
    const bool exact = char_sum_is_zero(s, q);
    const bool numeric = std::abs(oracle::char_sum_numeric(s, q)) < 1e-8;
    CHECK(exact == numeric);
  }
}

TEST_CASE("canonical form and translation") {
  FiniteSetZ a = FiniteSetZ::from_ints({5, 7, 8, 10});
  CHECK_FALSE(a.is_canonical());
  CHECK(a.normalized() == FiniteSetZ::from_ints({0, 2, 3, 5}));
  CHECK(a.normalized().diameter() == 5);
  CHECK_THROWS_AS(FiniteSetZ::from_ints({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(mask_polynomial(a), std::invalid_argument);
}

TEST_CASE("group subset reduction and ordering") {
  GroupSubset s = GroupSubset::from_residues(6, {8, -1, 2});
  CHECK(s.residues() == std::vector<Int>{2, 5});  // 8 = 2 mod 6 deduplicates
  CHECK(s.translated({1}).residues() == std::vector<Int>{0, 3});
}

TEST_SUITE_END();
