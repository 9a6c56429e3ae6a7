#include "tilekit/bricks.hpp"

#include <algorithm>
#include <set>

namespace tilekit {

namespace {

Rational rat(Int x) { return Rational(static_cast<long>(x)); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool reciprocal_is_integer(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("brick dimensions must be positive");
  return q.get_num() == 1;
}

// minimal k >= 0 with k*u + l*v = 1 for some integer l >= 0
std::optional<std::pair<Int, Int>> min_k_solution(const Rational& u, const Rational& v) {
  for (Int k = 0; rat(k) * u <= 1; ++k) {
    Rational lv = (Rational(1) - rat(k) * u) / v;
    if (is_integer(lv) && lv >= 0)
      return std::make_pair(k, static_cast<Int>(lv.get_num().get_si()));
  }
  return std::nullopt;
}

}  // namespace

BrickDecision decide_two_bricks(const Brick& a, const Brick& b) {
  if (a.w <= 0 || a.h <= 0 || b.w <= 0 || b.h <= 0)
    throw std::invalid_argument("brick dimensions must be positive");
  BrickDecision d;
  if (reciprocal_is_integer(a.w) && reciprocal_is_integer(a.h)) {
    d.tileable = true;
    d.mode = BrickMode::AOnly;
    return d;
  }
  if (reciprocal_is_integer(b.w) && reciprocal_is_integer(b.h)) {
    d.tileable = true;
    d.mode = BrickMode::BOnly;
    return d;
  }
  if (reciprocal_is_integer(a.w) && reciprocal_is_integer(b.w)) {
    if (auto kl = min_k_solution(a.h, b.h)) {
      d.tileable = true;
      d.mode = BrickMode::HorizontalCut;
      d.k = kl->first;
      d.l = kl->second;
      d.cut = rat(kl->first) * a.h;
      return d;
    }
  }
  if (reciprocal_is_integer(a.h) && reciprocal_is_integer(b.h)) {
    if (auto kl = min_k_solution(a.w, b.w)) {
      d.tileable = true;
      d.mode = BrickMode::VerticalCut;
      d.k = kl->first;
      d.l = kl->second;
      d.cut = rat(kl->first) * a.w;
      return d;
    }
  }
  return d;
}

namespace {

const Rational kHalf(1, 2);

// rows of a single brick type filling [x0, x0+width) x [y0, y0+rows*bh)
void fill_rows(std::vector<RectPlacement>& out, char type, const Rational& bw,
               const Rational& bh, const Rational& y0, Int rows) {
  const Rational cols_q = Rational(1) / bw;
  const Int cols = static_cast<Int>(cols_q.get_num().get_si());
  for (Int r = 0; r < rows; ++r)
    for (Int c = 0; c < cols; ++c)
      out.push_back({type, -kHalf + rat(c) * bw, y0 + rat(r) * bh});
}

void fill_cols(std::vector<RectPlacement>& out, char type, const Rational& bw,
               const Rational& bh, const Rational& x0, Int cols) {
  const Rational rows_q = Rational(1) / bh;
  const Int rows = static_cast<Int>(rows_q.get_num().get_si());
  for (Int c = 0; c < cols; ++c)
    for (Int r = 0; r < rows; ++r)
      out.push_back({type, x0 + rat(c) * bw, -kHalf + rat(r) * bh});
}

}  // namespace

std::vector<RectPlacement> construct_separated_tiling(const BrickDecision& d, const Brick& a,
                                                      const Brick& b) {
  if (!d.tileable) throw NotTileable("decision is negative");
  std::vector<RectPlacement> out;
  switch (d.mode) {
    case BrickMode::AOnly: {
      const Rational rows_q = Rational(1) / a.h;
      fill_rows(out, 'A', a.w, a.h, -kHalf, static_cast<Int>(rows_q.get_num().get_si()));
      break;
    }
    case BrickMode::BOnly: {
      const Rational rows_q = Rational(1) / b.h;
      fill_rows(out, 'B', b.w, b.h, -kHalf, static_cast<Int>(rows_q.get_num().get_si()));
      break;
    }
    case BrickMode::HorizontalCut: {
      fill_rows(out, 'A', a.w, a.h, -kHalf, d.k);
      fill_rows(out, 'B', b.w, b.h, -kHalf + rat(d.k) * a.h, d.l);
      break;
    }
    case BrickMode::VerticalCut: {
      fill_cols(out, 'A', a.w, a.h, -kHalf, d.k);
      fill_cols(out, 'B', b.w, b.h, -kHalf + rat(d.k) * a.w, d.l);
      break;
    }
    case BrickMode::None:
      throw NotTileable("decision is negative");
  }
  if (!verify_rect_tiling(out, a, b))
    throw std::logic_error("constructed brick tiling failed verification");
  return out;
}

bool verify_rect_tiling(const std::vector<RectPlacement>& placements, const Brick& a,
                        const Brick& b) {
  // grid refinement by all placement edges and the box boundary
  std::set<Rational> xs{-kHalf, kHalf}, ys{-kHalf, kHalf};
  Rational area = 0;
  for (const auto& p : placements) {
    const Brick& br = (p.type == 'A') ? a : b;
    if (p.x < -kHalf || p.y < -kHalf || p.x + br.w > kHalf || p.y + br.h > kHalf)
      return false;
    xs.insert(p.x);
    xs.insert(p.x + br.w);
    ys.insert(p.y);
    ys.insert(p.y + br.h);
    area += br.w * br.h;
  }
  if (area != 1) return false;
  std::vector<Rational> gx(xs.begin(), xs.end()), gy(ys.begin(), ys.end());
  for (std::size_t i = 0; i + 1 < gx.size(); ++i)
    for (std::size_t j = 0; j + 1 < gy.size(); ++j) {
      // midpoint of the refined cell lies in exactly one placement
      const Rational cx = (gx[i] + gx[i + 1]) / 2, cy = (gy[j] + gy[j + 1]) / 2;
      int hits = 0;
      for (const auto& p : placements) {
        const Brick& br = (p.type == 'A') ? a : b;
        if (cx > p.x && cx < p.x + br.w && cy > p.y && cy < p.y + br.h) ++hits;
      }
      if (hits != 1) return false;
    }
  return true;
}

bool box_zero_set_contains(const Rational& c1, const Rational& c2, const Rational& xi,
                           const Rational& eta) {
  if (c1 <= 0 || c2 <= 0) throw std::invalid_argument("box dimensions must be positive");
  auto nonzero_multiple = [](const Rational& v, const Rational& step) {
    if (v == 0) return false;
    return is_integer(v / step);
  };
  return nonzero_multiple(xi, Rational(1) / c1) || nonzero_multiple(eta, Rational(1) / c2);
}

std::string to_string(BrickMode m) {
  switch (m) {
    case BrickMode::AOnly: return "A-only";
    case BrickMode::BOnly: return "B-only";
    case BrickMode::HorizontalCut: return "horizontal-cut";
    case BrickMode::VerticalCut: return "vertical-cut";
    case BrickMode::None: return "none";
  }
  return "none";
}

}  // namespace tilekit
