// Tilings of the cyclic group Z_n: verification, complement search with
// cyclotomic pruning, periodicity, the good-group classification, and
// enumeration of tilings with two aperiodic factors.

#ifndef TILEKIT_CYCLIC_HPP
#define TILEKIT_CYCLIC_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tilekit/exact.hpp"

namespace tilekit {

struct CyclicTiling {
  Int n = 1;
  GroupSubset a;
  GroupSubset b;
};

struct GoodGroupVerdict {
  Int n = 1;
  bool is_good = false;
  std::string pattern;  // one of "p^m q", "pqrs", "p^2 q r", "p^2 q^2", or ""
};

struct CardinalityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// True iff every element of Z_n has exactly one representation a + b.
// When true, the Fourier condition Z_n = {0} u Z(A^) u Z(B^) is also
// computed; disagreement between the two routes is an internal error.
bool verify_tiling_zn(const GroupSubset& a, const GroupSubset& b, Int n);

// All complements B of A in Z_n with 0 in B, sorted lexicographically,
// truncated at limit. Throws CardinalityMismatch if |A| does not divide n.
std::vector<GroupSubset> find_complements(const GroupSubset& a, Int n,
                                          std::optional<std::size_t> limit = {});

// Streaming form of the complement search; cover-least-uncovered backtracking
// with residual-divisibility and forced-cyclotomic-divisor pruning. The
// callback returns false to stop the search. Complements arrive in search
// order, not sorted.
void for_each_complement(const GroupSubset& a, Int n,
                         const std::function<bool(const GroupSubset&)>& fn);

bool complement_exists(const GroupSubset& a, Int n);

// Smallest k with 0 < k < n and A + k = A, or nullopt. Such k divides n.
std::optional<Int> is_periodic_subset(const GroupSubset& a, Int n);

// Sands' classification: Z_n is good iff n divides one of pqrs, p^2qr,
// p^2q^2, p^mq (p,q,r,s distinct primes).
GoodGroupVerdict is_good_group(Int n);

// All tilings Z_n = A + B with 0 in A and 0 in B, each pair reported in the
// canonical translate form (lexicographically least among (A-a, B-b)), both
// factor orders included, deduplicated and sorted. Exhaustive backtracking;
// meant for moderate n. Used as the enumeration backbone for the aperiodic
// search and for desk-scale sweeps.
std::vector<CyclicTiling> enumerate_tilings(Int n);

struct VuzaOptions {
  std::optional<std::size_t> limit;
  // The good-group theorem guarantees a periodic factor in good groups, so
  // the search is skipped there. Disable to force the full search.
  bool use_good_group_shortcut = true;
  // Skip factor-size pairs where one cardinality is a prime power (the
  // complement of a prime-power-size factor is always periodic).
  bool use_prime_power_size_shortcut = true;
};

// Tilings Z_n = A + B with both factors aperiodic, canonical translate form,
// deduplicated; ordered by ascending smaller factor size, then
// lexicographically, truncated at limit.
std::vector<CyclicTiling> enumerate_vuza(Int n, std::optional<std::size_t> limit = {},
                                         const VuzaOptions& opts = {});

}  // namespace tilekit

#endif  // TILEKIT_CYCLIC_HPP
