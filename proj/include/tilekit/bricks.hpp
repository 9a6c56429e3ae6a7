// Exact decision and construction for tiling the open unit square
// Q = (-1/2, 1/2)^2 by translates of two rectangular brick types, plus an
// exact rational verifier. A tiling exists iff the square can be cut along
// one axis into two rectangles each tileable by a single brick type.

#ifndef TILEKIT_BRICKS_HPP
#define TILEKIT_BRICKS_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tilekit/exact.hpp"

namespace tilekit {

using Rational = mpq_class;

struct Brick {
  Rational w, h;  // a1 x a2 (width x height), positive rationals
};

enum class BrickMode { AOnly, BOnly, HorizontalCut, VerticalCut, None };

struct BrickDecision {
  bool tileable = false;
  BrickMode mode = BrickMode::None;
  Int k = 0, l = 0;        // cut rows/columns of each type, for the cut modes
  Rational cut;            // cut coordinate measured from the box edge
};

struct RectPlacement {
  char type = 'A';         // 'A' or 'B'
  Rational x, y;           // lower-left corner inside Q
};

struct NotTileable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Clause order: A alone, B alone, horizontal cut (k rows of A below, l rows
// of B above, k a2 + l b2 = 1 with minimal k), vertical cut (transposed).
BrickDecision decide_two_bricks(const Brick& a, const Brick& b);

// Explicit placements realizing a positive decision; throws NotTileable on
// a negative one. Output passes verify_rect_tiling.
std::vector<RectPlacement> construct_separated_tiling(const BrickDecision& d,
                                                      const Brick& a, const Brick& b);

// Exact rational sweep: placements lie inside Q, interiors are pairwise
// disjoint, total area is 1 and the union covers Q.
bool verify_rect_tiling(const std::vector<RectPlacement>& placements, const Brick& a,
                        const Brick& b);

// Zero set of the Fourier transform of a centered c1 x c2 box: true iff
// xi is a nonzero integer multiple of 1/c1 or eta of 1/c2.
bool box_zero_set_contains(const Rational& c1, const Rational& c2, const Rational& xi,
                           const Rational& eta);

std::string to_string(BrickMode m);

}  // namespace tilekit

#endif  // TILEKIT_BRICKS_HPP
