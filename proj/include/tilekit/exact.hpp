// Exact integer / cyclotomic arithmetic: mask polynomials, cyclotomic
// polynomials, and exact DFT zero sets over Z_n and Z_n^d.
//
// Everything in this header is decision-grade: zero tests are performed in
// Z[x] / Z[zeta_n], never with floating point.

#ifndef TILEKIT_EXACT_HPP
#define TILEKIT_EXACT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tilekit {

using Int = long long;

// ---------------------------------------------------------------------------
// Integer polynomials (dense, arbitrary-precision coefficients)
// ---------------------------------------------------------------------------

// Coefficient vector, index = exponent, no trailing zeros (zero poly = {}).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<int> coeffs);
  static IntPoly x_power_minus_one(std::size_t n);  // x^n - 1

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is undefined; callers must check is_zero()
  std::size_t degree() const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& coeff(std::size_t i) const;
  mpz_class eval_at_one() const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  // Euclidean division by a monic divisor; returns {quotient, remainder}.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;
  bool divisible_by_monic(const IntPoly& divisor) const;

  std::string to_string() const;  // human-readable, lowest degree first

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

// Finite subset of Z, strictly increasing, nonempty. Canonical form is
// translated so the least element is 0.
class FiniteSetZ {
 public:
  explicit FiniteSetZ(std::vector<mpz_class> elements);
  static FiniteSetZ from_ints(const std::vector<Int>& elements);

  const std::vector<mpz_class>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_canonical() const { return elements_.front() == 0; }
  FiniteSetZ normalized() const;        // translate so min = 0
  FiniteSetZ translated(const mpz_class& c) const;
  mpz_class diameter() const;           // max - min

  bool operator==(const FiniteSetZ& o) const { return elements_ == o.elements_; }

 private:
  std::vector<mpz_class> elements_;
};

// A(x) = sum_{a in A} x^a for a canonical set A; all coefficients 0/1.
struct MaskPolynomial {
  IntPoly poly;
};

// Cyclotomic polynomial Phi_d, monic of degree phi(d).
struct CyclotomicPolynomial {
  Int order = 1;
  IntPoly poly;
};

// Finite subset of Z_n^d; elements are d-vectors with coordinates reduced
// into [0, n), stored sorted lexicographically without duplicates.
class GroupSubset {
 public:
  GroupSubset(Int modulus, int dim, std::vector<std::vector<Int>> elements);
  static GroupSubset from_residues(Int modulus, const std::vector<Int>& elems);

  Int modulus() const { return n_; }
  int dim() const { return d_; }
  const std::vector<std::vector<Int>>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const std::vector<Int>& v) const;

  // d = 1 convenience view
  std::vector<Int> residues() const;

  GroupSubset translated(const std::vector<Int>& c) const;
  bool operator==(const GroupSubset& o) const;
  bool operator<(const GroupSubset& o) const;  // lexicographic on elements

 private:
  Int n_;
  int d_;
  std::vector<std::vector<Int>> elems_;
};

// Element of Z[zeta_n] stored as a coefficient vector of length phi(n),
// i.e. reduced mod Phi_n. Zero element <=> all coefficients zero.
class CyclotomicResidue {
 public:
  explicit CyclotomicResidue(Int order);

  Int order() const { return n_; }
  const std::vector<mpz_class>& coeffs() const;
  bool is_zero() const;

  // Adds c * zeta_n^e (e arbitrary; reduced mod n, then mod Phi_n lazily).
  void add_root_power(Int exponent, const mpz_class& c = 1);
  void add(const CyclotomicResidue& o);

  // Residue equal to the rational integer c.
  static CyclotomicResidue from_integer(Int order, const mpz_class& c);
  bool equals_integer(const mpz_class& c) const;

 private:
  void reduce() const;  // idempotent reduction mod Phi_n

  Int n_;
  mutable std::vector<mpz_class> raw_;     // coefficients of zeta^0..zeta^{n-1}
  mutable std::vector<mpz_class> coeffs_;  // reduced, length phi(n)
  mutable bool dirty_ = false;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// Euler's totient, via trial-division factorization.
Int euler_phi(Int d);

// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<Int, int>> factorize(Int n);

// Divisors of n, ascending.
std::vector<Int> divisors(Int n);

// Phi_d, computed by dividing x^d - 1 by the product of Phi_e over proper
// divisors e of d. Results are cached process-wide.
CyclotomicPolynomial cyclotomic_poly(Int d);

MaskPolynomial mask_polynomial(const FiniteSetZ& a);

// All s > 1 with Phi_s | A(x), ascending. Search space is bounded by
// s <= 2*D^2 since phi(s) >= sqrt(s/2) and phi(s) <= deg A = D is necessary.
std::vector<Int> cyclotomic_divisors(const FiniteSetZ& a);

// { k in Z_n : DFT of the indicator of A vanishes at k }, exact.
// The zero set is a union of cyclotomic classes { k : gcd(k,n) fixed }.
std::vector<Int> zero_set_zn(const GroupSubset& a);

// Exact test of sum_{s in S} zeta_n^{-q.s} = 0.
bool char_sum_is_zero(const GroupSubset& s, const std::vector<Int>& q);

// Zero set of the d-dimensional DFT of the indicator of S, exact:
// all q in Z_n^d (as flat row-major index order) with char sum zero.
std::vector<std::vector<Int>> zero_set_group(const GroupSubset& s);

}  // namespace tilekit

#endif  // TILEKIT_EXACT_HPP
