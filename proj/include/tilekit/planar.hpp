// Bounded decision procedure for translational tilings of Z^2 by a finite
// set, plus generators for the classic shifted-column tiling and the
// four-coset interleaving with no period vectors at all.

#ifndef TILEKIT_PLANAR_HPP
#define TILEKIT_PLANAR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tilekit/exact.hpp"

namespace tilekit {

using Point2 = std::pair<Int, Int>;

// Finite subset of Z^2, canonical form translated so min x = min y = 0.
class LatticeSet2D {
 public:
  explicit LatticeSet2D(std::vector<Point2> points);
  const std::vector<Point2>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  LatticeSet2D normalized() const;
  bool is_canonical() const;
  Int diameter() const;  // max coordinate extent

 private:
  std::vector<Point2> pts_;
};

// Lambda = (aZ)x(bZ) + reps, a direct sum; A + Lambda tiles Z^2.
struct PeriodicComplement2D {
  Int a = 1, b = 1;
  std::vector<Point2> reps;  // inside [0,a) x [0,b)
};

struct Decision2D {
  enum class Verdict { YES, NO, UNKNOWN };
  Verdict verdict = Verdict::UNKNOWN;
  std::optional<PeriodicComplement2D> certificate;  // for YES
  std::optional<Int> witness_n;                     // for NO
};

struct PlanarLimits {
  Int max_n = 12;
  Int max_period = 12;
  long long node_budget = 20'000'000;  // per search, backtracking nodes
};

// Periodic-certificate search over the (a,b) grid, and independently a
// ladder of window-cover searches whose failure witnesses a non-tile.
// Exhausted bounds give UNKNOWN, never an exception.
Decision2D decide_tiles_z2(const LatticeSet2D& a, const PlanarLimits& limits = {});

// Exact check of a YES certificate: one fundamental a x b box is covered
// exactly once by A + Lambda (equivalent, by periodicity, to the enlarged
// verification window).
bool verify_periodic_complement(const LatticeSet2D& a, const PeriodicComplement2D& c);

// Exhaustive re-check of a NO witness at window size n; independent of the
// path taken inside decide_tiles_z2. Returns true if no cover of Q_n exists.
bool verify_no_witness(const LatticeSet2D& a, Int n, long long node_budget = 50'000'000);

// Translate locations of the square tiling of Z^2 by {0,1}^2 in which the
// column x in {0,1} is shifted up by one unit: keeps the period (0,2),
// destroys the period (2,0). All locations meeting [-R, R]^2.
std::vector<Point2> shift_column_tiling(Int window_radius);

// Translate locations for A = {(0,0),(2,0),(0,2),(2,2)} interleaving four
// coset tilings (two regular, one column-shifted, one row-shifted); the
// resulting tiling of Z^2 has no period vectors. All locations meeting
// [-R, R]^2.
std::vector<Point2> generate_aperiodic_tiling(Int window_radius);

// Coverage multiplicity of cell under translates of A at locations lambda.
// Returns true iff every cell of [-r, r]^2 is covered exactly once.
bool covers_window_exactly_once(const LatticeSet2D& a, const std::vector<Point2>& locations,
                                Int r);

// True iff v behaves as a period of the location set on the core window:
// (L n core) + v == L n (core + v), core = [-core_r, core_r]^2.
bool window_period(const std::vector<Point2>& locations, Int core_r, Point2 v);

}  // namespace tilekit

#endif  // TILEKIT_PLANAR_HPP
