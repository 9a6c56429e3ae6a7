// Test-only oracles, kept independent of the library's decision paths:
// brute-force enumerations, floating-point DFTs, and a grid exact-cover
// tiler for brick pairs.

#ifndef TILEKIT_TESTS_ORACLES_HPP
#define TILEKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <vector>

#include "tilekit/bricks.hpp"
#include "tilekit/exact.hpp"

namespace tilekit::oracle {

// Floating-point DFT of the indicator of A in Z_n at frequency k.
inline std::complex<double> dft_zn(const std::vector<Int>& a, Int n, Int k) {
  std::complex<double> s = 0;
  for (Int x : a) {
    double ang = -2.0 * std::numbers::pi * static_cast<double>(k) *
                 static_cast<double>(x) / static_cast<double>(n);
    s += std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

// Multi-dimensional character sum, floating point.
inline std::complex<double> char_sum_numeric(const GroupSubset& s,
                                             const std::vector<Int>& q) {
  std::complex<double> acc = 0;
  for (const auto& e : s.elements()) {
    Int dot = 0;
    for (int i = 0; i < s.dim(); ++i) dot += q[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)];
    double ang = -2.0 * std::numbers::pi * static_cast<double>(dot) /
                 static_cast<double>(s.modulus());
    acc += std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

// All complements of A in Z_n containing 0, by direct subset enumeration.
inline std::vector<std::vector<Int>> complements_brute(const std::vector<Int>& a, Int n) {
  std::vector<std::vector<Int>> out;
  if (a.empty() || n % static_cast<Int>(a.size()) != 0) return out;
  const Int want = n / static_cast<Int>(a.size());
  std::vector<Int> b{0};
  std::function<void(Int)> rec = [&](Int next) {
    if (static_cast<Int>(b.size()) == want) {
      std::vector<int> hits(static_cast<std::size_t>(n), 0);
      for (Int x : a)
        for (Int y : b) ++hits[static_cast<std::size_t>(((x + y) % n + n) % n)];
      if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }))
        out.push_back(b);
      return;
    }
    for (Int e = next; e < n; ++e) {
      b.push_back(e);
      rec(e + 1);
      b.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

// Exact-cover tiler for two brick types on the lcm-denominator grid.
// Placements in a tiling of the unit square are grid-aligned because every
// lower-left corner is a nonnegative integer combination of brick extents.
inline bool bricks_tile_brute(const Brick& a, const Brick& b) {
  auto den = [](const Rational& r) { return r.get_den().get_si(); };
  long lcm = 1;
  for (long d : {den(a.w), den(a.h), den(b.w), den(b.h)}) lcm = std::lcm(lcm, d);
  const long w = lcm;
  auto cells = [&](const Rational& r) -> long {
    Rational scaled = r * static_cast<long>(lcm);
    return scaled.get_den() == 1 ? scaled.get_num().get_si() : -1;
  };
  const long aw = cells(a.w), ah = cells(a.h), bw = cells(b.w), bh = cells(b.h);
  std::vector<char> covered(static_cast<std::size_t>(w) * w, 0);
  auto idx = [w](long x, long y) { return static_cast<std::size_t>(x) * w + static_cast<std::size_t>(y); };
  auto fits = [&](long x, long y, long pw, long ph) {
    if (pw <= 0 || ph <= 0 || x + pw > w || y + ph > w) return false;
    for (long i = x; i < x + pw; ++i)
      for (long j = y; j < y + ph; ++j)
        if (covered[idx(i, j)]) return false;
    return true;
  };
  auto mark = [&](long x, long y, long pw, long ph, char v) {
    for (long i = x; i < x + pw; ++i)
      for (long j = y; j < y + ph; ++j) covered[idx(i, j)] = v;
  };
  std::function<bool()> dfs = [&]() -> bool {
    long fx = -1, fy = -1;
    for (long x = 0; x < w && fx < 0; ++x)
      for (long y = 0; y < w; ++y)
        if (!covered[idx(x, y)]) { fx = x; fy = y; break; }
    if (fx < 0) return true;
    for (auto [pw, ph] : {std::pair{aw, ah}, std::pair{bw, bh}}) {
      if (!fits(fx, fy, pw, ph)) continue;
      mark(fx, fy, pw, ph, 1);
      if (dfs()) return true;
      mark(fx, fy, pw, ph, 0);
    }
    return false;
  };
  return dfs();
}

// Independent re-check of a planar non-tile witness: can translates of the
// tile cover the window [-n, n]^2 without overlap? Recursion targets the
// *highest* uncovered window cell and explores translates in reverse order,
// so it shares no search path with the library implementation.
inline bool window_coverable(const std::vector<std::pair<Int, Int>>& tile, Int n) {
  Int diam = 0;
  for (const auto& [x, y] : tile) diam = std::max({diam, x, y});
  const Int lo = -n - 2 * diam, hi = n + 2 * diam;
  const Int w = hi - lo + 1;
  std::vector<char> covered(static_cast<std::size_t>(w) * w, 0);
  auto idx = [&](Int x, Int y) {
    return static_cast<std::size_t>(x - lo) * w + static_cast<std::size_t>(y - lo);
  };
  std::function<bool()> rec = [&]() -> bool {
    Int cx = n + 1, cy = 0;
    for (Int x = n; x >= -n && cx > n; --x)
      for (Int y = n; y >= -n; --y)
        if (!covered[idx(x, y)]) { cx = x; cy = y; break; }
    if (cx > n) return true;
    for (auto it = tile.rbegin(); it != tile.rend(); ++it) {
      const Int lx = cx - it->first, ly = cy - it->second;
      if (lx < -n - diam || lx > n + diam || ly < -n - diam || ly > n + diam) continue;
      bool ok = true;
      for (const auto& [px, py] : tile)
        if (covered[idx(lx + px, ly + py)]) { ok = false; break; }
      if (!ok) continue;
      for (const auto& [px, py] : tile) covered[idx(lx + px, ly + py)] = 1;
      if (rec()) return true;
      for (const auto& [px, py] : tile) covered[idx(lx + px, ly + py)] = 0;
    }
    return false;
  };
  return rec();
}

// Deterministic pseudo-random stream (64-bit splitmix), used instead of a
// seeded std RNG so the suites never depend on library implementations.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  Int below(Int n) { return static_cast<Int>(next() % static_cast<std::uint64_t>(n)); }
};

}  // namespace tilekit::oracle

#endif  // TILEKIT_TESTS_ORACLES_HPP
