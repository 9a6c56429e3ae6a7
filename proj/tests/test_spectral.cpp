#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tilekit/spectral.hpp"

using namespace tilekit;

TEST_SUITE_BEGIN("spectral");

TEST_CASE("fourier matrices") {
  auto f1 = fourier_matrix(1);
  CHECK(f1.exponents == std::vector<std::vector<Int>>{{0}});
  auto f2 = fourier_matrix(2);
  CHECK(f2.exponents == std::vector<std::vector<Int>>{{0, 0}, {0, 1}});
  for (Int k = 1; k <= 16; ++k)
    CHECK(is_complex_hadamard(to_complex(fourier_matrix(k)), 1e-9));
}

TEST_CASE("is_complex_hadamard rejections") {
  ComplexMatrix id{2, {1, 0, 0, 1}};
  CHECK_FALSE(is_complex_hadamard(id));
  ComplexMatrix ones{2, {1, 1, 1, 1}};
  CHECK_FALSE(is_complex_hadamard(ones));
}

TEST_CASE("log-Hadamard predicate") {
  CHECK(is_log_hadamard(phase_matrix(fourier_matrix(3))));
  PhaseMatrix zero{2, {mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(0)}};
  CHECK_FALSE(is_log_hadamard(zero));
  PhaseMatrix logf2{2, {mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(1, 2)}};
  CHECK(is_log_hadamard(logf2));
}

TEST_CASE("EXP/LOG round trip on rational phases") {
  for (Int k : {Int{2}, Int{3}, Int{6}, Int{12}}) {
    PhaseMatrix r = phase_matrix(fourier_matrix(k));
    PhaseMatrix back = log_matrix(to_complex(r));
    REQUIRE(back.size == r.size);
    for (std::size_t i = 0; i < r.phases.size(); ++i) CHECK(back.phases[i] == r.phases[i]);
  }
}

TEST_CASE("spectral pair {0,1,2} / {0,2,4} in Z_6 reconstructs log F_3") {
  GroupSubset s = GroupSubset::from_residues(6, {0, 1, 2});
  GroupSubset qq = GroupSubset::from_residues(6, {0, 2, 4});
  CHECK(spectral_pair_check(s, qq));
  PhaseMatrix pm = spectral_phase_matrix(s, qq);
  PhaseMatrix logf3 = phase_matrix(fourier_matrix(3));
  REQUIRE(pm.size == 3);
  for (std::size_t i = 0; i < 9; ++i) CHECK(pm.phases[i] == logf3.phases[i]);
  // symmetry: S is a spectrum of Q
  CHECK(spectral_pair_check(qq, s));
}

TEST_CASE("spectral pair checks in Z_4") {
  CHECK(spectral_pair_check(GroupSubset::from_residues(4, {0, 1}),
                            GroupSubset::from_residues(4, {0, 2})));
  CHECK_FALSE(spectral_pair_check(GroupSubset::from_residues(4, {0, 1}),
                                  GroupSubset::from_residues(4, {0, 1})));
}

TEST_CASE("find_spectrum") {
  auto q1 = find_spectrum(GroupSubset::from_residues(4, {0, 1}));
  REQUIRE(q1.has_value());
  CHECK(q1->residues() == std::vector<Int>{0, 2});
  auto q2 = find_spectrum(GroupSubset::from_residues(6, {0, 1, 2}));
  REQUIRE(q2.has_value());
  CHECK(q2->residues() == std::vector<Int>{0, 2, 4});
  CHECK_FALSE(find_spectrum(GroupSubset::from_residues(6, {0, 1, 3})).has_value());
}

TEST_CASE("power spectrum tiling identity") {
  CHECK(power_spectrum_tiling_check(GroupSubset::from_residues(6, {0, 1, 2}),
                                    GroupSubset::from_residues(6, {0, 2, 4})));
  // full group: level n^2
  CHECK(power_spectrum_tiling_check(GroupSubset::from_residues(4, {0, 1, 2, 3}),
                                    GroupSubset::from_residues(4, {0, 1, 2, 3})));
  CHECK_THROWS_AS(
      power_spectrum_tiling_check(GroupSubset::from_residues(4, {0, 1}),
                                  GroupSubset::from_residues(4, {0, 1})),
      std::invalid_argument);
}

TEST_CASE("unitarity of certified pairs") {
  GroupSubset s = GroupSubset::from_residues(6, {0, 1, 2});
  GroupSubset qq = GroupSubset::from_residues(6, {0, 2, 4});
  REQUIRE(spectral_pair_check(s, qq));
  ComplexMatrix u = to_complex(spectral_phase_matrix(s, qq));
  const std::size_t r = u.size;
  for (auto& z : u.entries) z /= std::sqrt(static_cast<double>(r));
  // || U* U - I ||_inf <= 1e-8
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::complex<double> dot = 0;
      for (std::size_t c = 0; c < r; ++c) dot += std::conj(u.at(c, i)) * u.at(c, j);
      const double expect = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs(dot - std::complex<double>(expect)) <= 1e-8);
    }
}

TEST_CASE("tiles_group") {
  auto c = tiles_group(GroupSubset::from_residues(6, {0, 1, 2}));
  REQUIRE(c.has_value());
  CHECK(c->residues() == std::vector<Int>{0, 3});
  GroupSubset s22(2, 2, {{0, 0}, {1, 0}});
  auto c2 = tiles_group(s22);
  REQUIRE(c2.has_value());
  CHECK(c2->elements() == std::vector<std::vector<Int>>{{0, 0}, {0, 1}});
  // cardinality obstruction in Z_3^5
  GroupSubset s35(3, 5, {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {2, 0, 0, 0, 0},
                         {0, 1, 0, 0, 0}, {0, 2, 0, 0, 0}, {1, 1, 0, 0, 0}});
  CHECK_FALSE(tiles_group(s35).has_value());
}

TEST_CASE("butson searches") {
  auto f2 = find_butson(2, 2);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].exponents == fourier_matrix(2).exponents);
  CHECK(find_butson(3, 2).empty());
  auto b63 = find_butson(6, 3, std::size_t{1});
  REQUIRE_FALSE(b63.empty());
  CHECK(is_complex_hadamard(to_complex(b63[0]), 1e-9));
  CHECK(is_log_hadamard(phase_matrix(b63[0])));
  // dephased canonical form
  for (std::size_t c = 0; c < 6; ++c) CHECK(b63[0].exponents[0][c] == 0);
  for (std::size_t r = 0; r < 6; ++r) CHECK(b63[0].exponents[r][0] == 0);
}

TEST_CASE("spectral non-tile pipeline in Z_3^5") {
  SpectralPair p = spectral_non_tile_z3_5();
  CHECK(p.n == 3);
  CHECK(p.d == 5);
  CHECK(p.s.size() == 6);
  CHECK(p.q.size() == 6);
  CHECK(spectral_pair_check(p.s, p.q));
  CHECK_FALSE(tiles_group(p.s).has_value());
  CHECK(power_spectrum_tiling_check(p.s, p.q));
}

TEST_CASE("exact and numeric hadamard checks agree on perturbations") {
  oracle::Rng rng(29);
  for (int t = 0; t < 50; ++t) {
    const Int k = 2 + rng.below(5);
    const Int q = 2 + rng.below(4);
    ButsonMatrix m;
    m.size = static_cast<std::size_t>(k);
    m.root_order = q;
    for (Int r = 0; r < k; ++r) {
      std::vector<Int> row;
      for (Int c = 0; c < k; ++c) row.push_back(rng.below(q));
      m.exponents.push_back(std::move(row));
    }
    CHECK(is_log_hadamard(phase_matrix(m)) == is_complex_hadamard(to_complex(m), 1e-9));
  }
}

TEST_SUITE_END();
