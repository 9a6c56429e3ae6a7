// Deciding whether a finite set of integers tiles Z at level 1, by two
// independent routes that must agree:
//   - a deterministic state graph on diameter-wide membership windows
//     (every level-1 tiling of Z is periodic, with period at most 2^D);
//   - cyclotomic divisors of the mask polynomial, which bound the minimal
//     period by t = prod s_i and reduce the decision to cyclic groups.

#ifndef TILEKIT_LINE_HPP
#define TILEKIT_LINE_HPP

#include <optional>

#include "tilekit/cyclic.hpp"
#include "tilekit/exact.hpp"

namespace tilekit {

struct TilingCertificate1D {
  FiniteSetZ tile;      // canonical tile A
  Int period = 1;       // M
  GroupSubset residues; // B subset of Z_M with A + B = Z_M; Lambda = B + MZ
};

struct DiameterTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidCertificate : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr Int kDefaultMaxDiameter = 24;

// Reads TILEKIT_MAX_STATES (cap on window states, default 2^24).
std::size_t max_state_budget();

// Window state graph decision. Returns a certificate with the minimal period
// over all tilings and the lexicographically least complement translate, or
// nullopt if A does not tile Z. Throws DiameterTooLarge past the caps.
std::optional<TilingCertificate1D> decide_tiles_line_stategraph(
    const FiniteSetZ& a, Int max_diameter = kDefaultMaxDiameter);

// Cyclotomic-divisor decision: A tiles Z iff a complement exists in Z_M for
// some divisor M of t = prod of the cyclotomic divisor orders of A; the
// least such M is the minimal period.
std::optional<TilingCertificate1D> decide_tiles_line_cyclotomic(const FiniteSetZ& a);

// t = prod of cyclotomic divisor orders; any tiling of Z by A has minimal
// period at most t (and in fact dividing t).
Int period_bound_cyclotomic(const FiniteSetZ& a);

// Reduces a certificate to the minimal period of Lambda = B + MZ.
// Idempotent. Throws InvalidCertificate if the input fails verification.
TilingCertificate1D minimal_period(const TilingCertificate1D& cert);

// Verification of a 1D certificate through the cyclic-tiling module.
bool verify_certificate(const TilingCertificate1D& cert);

// Lexicographically least translate (B - b) mod m over b in B; the result
// always contains 0.
std::vector<Int> canonical_translate(std::vector<Int> b, Int m);

}  // namespace tilekit

#endif  // TILEKIT_LINE_HPP
