// Complex Hadamard and Butson matrices, log-Hadamard phase matrices,
// spectral pairs in Z_n^d, the power-spectrum tiling identity, and the
// spectral-but-not-tiling construction in Z_3^5.

#ifndef TILEKIT_SPECTRAL_HPP
#define TILEKIT_SPECTRAL_HPP

#include <complex>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "tilekit/exact.hpp"

namespace tilekit {

struct ComplexMatrix {
  std::size_t size = 0;
  std::vector<std::complex<double>> entries;  // row-major

  std::complex<double>& at(std::size_t j, std::size_t m) { return entries[j * size + m]; }
  const std::complex<double>& at(std::size_t j, std::size_t m) const {
    return entries[j * size + m];
  }
};

// Entry-wise phases rho_{j,m} in [0,1); EXP(2 pi i R) reconstructs the
// unit-modulus matrix exactly in phase.
struct PhaseMatrix {
  std::size_t size = 0;
  std::vector<mpq_class> phases;  // row-major

  mpq_class& at(std::size_t j, std::size_t m) { return phases[j * size + m]; }
  const mpq_class& at(std::size_t j, std::size_t m) const { return phases[j * size + m]; }
};

// k x k exponent matrix over Z_q; EXP(2 pi i E / q) is complex Hadamard.
struct ButsonMatrix {
  std::size_t size = 0;
  Int root_order = 1;
  std::vector<std::vector<Int>> exponents;
};

// S subset of Z_n^d with spectrum Q: (1/n) Q S is log-Hadamard, i.e. all
// pairwise differences of Q lie in the zero set of the character sum of S.
struct SpectralPair {
  Int n = 1;
  int d = 1;
  GroupSubset s;
  GroupSubset q;
};

struct SearchFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kHadamardTol = 1e-9;

ButsonMatrix fourier_matrix(Int k);

ComplexMatrix to_complex(const ButsonMatrix& m);
ComplexMatrix to_complex(const PhaseMatrix& m);
PhaseMatrix log_matrix(const ComplexMatrix& m);  // entry-wise phases, rounded to rationals
PhaseMatrix phase_matrix(const ButsonMatrix& m);

bool is_complex_hadamard(const ComplexMatrix& h, double tol = kHadamardTol);

// Exact when every phase is rational with a moderate denominator (always the
// case for PhaseMatrix as stored, up to the 10^6 lcm cap); otherwise falls
// back to the numeric Hadamard test.
bool is_log_hadamard(const PhaseMatrix& r);

// Exact pairwise test of q_j - q_k lying in the character zero set of S;
// asserted equal to is_log_hadamard of (1/n) Q S.
bool spectral_pair_check(const GroupSubset& s, const GroupSubset& q);

// (1/n) Q S as a phase matrix.
PhaseMatrix spectral_phase_matrix(const GroupSubset& s, const GroupSubset& q);

// Lexicographically least Q with 0 in Q, |Q| = |S| and all pairwise
// differences in the zero set; nullopt if none exists (exhaustive clique
// search over the dual group).
std::optional<GroupSubset> find_spectrum(const GroupSubset& s);

// sum_{q in Q} |chi_S^|^2 (x - q) = |S|^2 for every x in the dual group;
// verified exactly and numerically (tolerance 1e-8).
bool power_spectrum_tiling_check(const GroupSubset& s, const GroupSubset& q);

// Lexicographically least complement of S in Z_n^d containing 0, or nullopt.
std::optional<GroupSubset> tiles_group(const GroupSubset& s);

// Dephased Butson matrices BH(k, q) (zero first row and column, remaining
// rows lexicographically increasing), in search order, up to limit.
std::vector<ButsonMatrix> find_butson(Int k, Int q, std::optional<std::size_t> limit = {});

// Spectral non-tile in Z_3^5: the six columns of a dephased BH(6,3), rows
// 1..5, form S; Q = {0, e_1, .., e_5} is a spectrum; |S| = 6 does not divide
// 3^5, so S has no tiling complement.
SpectralPair spectral_non_tile_z3_5();

}  // namespace tilekit

#endif  // TILEKIT_SPECTRAL_HPP
