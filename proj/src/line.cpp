#include "tilekit/line.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace tilekit {

std::size_t max_state_budget() {
  if (const char* env = std::getenv("TILEKIT_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << kDefaultMaxDiameter;
}

std::vector<Int> canonical_translate(std::vector<Int> b, Int m) {
  std::sort(b.begin(), b.end());
  std::vector<Int> best;
  for (Int shift : b) {
    std::vector<Int> cand;
    cand.reserve(b.size());
    for (Int x : b) cand.push_back(((x - shift) % m + m) % m);
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

namespace {

std::vector<Int> small_elements(const FiniteSetZ& a) {
  std::vector<Int> v;
  v.reserve(a.size());
  for (const auto& e : a.elements()) {
    if (!e.fits_slong_p()) throw DiameterTooLarge("tile elements exceed machine range");
    v.push_back(e.get_si());
  }
  return v;
}

GroupSubset reduce_mod(const std::vector<Int>& a, Int m) {
  return GroupSubset::from_residues(m, a);
}

bool distinct_mod(const std::vector<Int>& a, Int m) {
  std::vector<Int> r;
  r.reserve(a.size());
  for (Int x : a) r.push_back(((x % m) + m) % m);
  std::sort(r.begin(), r.end());
  return std::adjacent_find(r.begin(), r.end()) == r.end();
}

TilingCertificate1D make_certificate(const FiniteSetZ& a, Int m, std::vector<Int> b) {
  TilingCertificate1D cert{a, m, GroupSubset::from_residues(m, std::move(b))};
  if (!verify_certificate(cert))
    throw std::logic_error("constructed certificate failed verification");
  return cert;
}

}  // namespace

bool verify_certificate(const TilingCertificate1D& cert) {
  const std::vector<Int> a = small_elements(cert.tile.normalized());
  if (!distinct_mod(a, cert.period)) return false;
  return verify_tiling_zn(reduce_mod(a, cert.period), cert.residues, cert.period);
}

// ---------------------------------------------------------------------------
// State-graph decision
// ---------------------------------------------------------------------------

std::optional<TilingCertificate1D> decide_tiles_line_stategraph(const FiniteSetZ& a_in,
                                                                Int max_diameter) {
  const FiniteSetZ a = a_in.normalized();
  const std::vector<Int> elems = small_elements(a);
  const Int diam = elems.back();
  if (diam == 0) return make_certificate(a, 1, {0});
  if (diam > max_diameter)
    throw DiameterTooLarge("tile diameter exceeds the state-graph cap");
  const std::size_t nstates = std::size_t{1} << diam;
  if (nstates > max_state_budget())
    throw DiameterTooLarge("state budget exceeded (TILEKIT_MAX_STATES)");

  // Window state: bit j holds membership of position x - j. The next cell
  // x+1 is covered by window position x+1-a (bit a-1) for each a in A, a>=1;
  // exactly-once coverage forces the next membership bit or kills the state.
  std::uint32_t cover_mask = 0;
  for (Int e : elems)
    if (e >= 1) cover_mask |= std::uint32_t{1} << (e - 1);
  const std::uint32_t wrap = static_cast<std::uint32_t>(nstates - 1);

  auto successor = [&](std::uint32_t s, bool& dead) -> std::uint32_t {
    const int c = std::popcount(s & cover_mask);
    dead = c >= 2;
    const std::uint32_t newbit = (c == 0) ? 1u : 0u;
    return ((s << 1) | newbit) & wrap;
  };

  std::vector<std::uint32_t> stamp(nstates, 0);
  Int best_len = -1;
  std::vector<Int> best_b;

  for (std::size_t v0 = 0; v0 < nstates; ++v0) {
    if (stamp[v0] != 0) continue;
    const std::uint32_t id = static_cast<std::uint32_t>(v0) + 1;
    std::uint32_t u = static_cast<std::uint32_t>(v0);
    bool dead = false;
    while (stamp[u] == 0) {
      stamp[u] = id;
      std::uint32_t nxt = successor(u, dead);
      if (dead) break;
      u = nxt;
    }
    if (dead || stamp[u] != id) continue;
    // new cycle through u: measure it and read off the membership stream
    std::vector<Int> bits;
    std::uint32_t w = u;
    do {
      bool d2 = false;
      std::uint32_t nxt = successor(w, d2);
      bits.push_back(static_cast<Int>(nxt & 1));
      w = nxt;
    } while (w != u);
    const Int len = static_cast<Int>(bits.size());
    std::vector<Int> b;
    for (Int i = 0; i < len; ++i)
      if (bits[static_cast<std::size_t>(i)]) b.push_back(i);
    if (b.empty() || len % static_cast<Int>(a.size()) != 0)
      throw std::logic_error("state-graph cycle is not a tiling");
    b = canonical_translate(std::move(b), len);
    if (best_len < 0 || len < best_len || (len == best_len && b < best_b)) {
      best_len = len;
      best_b = std::move(b);
    }
  }

  if (best_len < 0) return std::nullopt;
  return make_certificate(a, best_len, std::move(best_b));
}

// ---------------------------------------------------------------------------
// Cyclotomic decision
// ---------------------------------------------------------------------------

Int period_bound_cyclotomic(const FiniteSetZ& a_in) {
  const FiniteSetZ a = a_in.normalized();
  Int t = 1;
  for (Int s : cyclotomic_divisors(a)) {
    if (t > std::numeric_limits<Int>::max() / s)
      throw std::overflow_error("cyclotomic period bound overflows");
    t *= s;
  }
  return t;
}

std::optional<TilingCertificate1D> decide_tiles_line_cyclotomic(const FiniteSetZ& a_in) {
  const FiniteSetZ a = a_in.normalized();
  const std::vector<Int> elems = small_elements(a);
  if (elems.back() == 0) return make_certificate(a, 1, {0});
  const Int t = period_bound_cyclotomic(a);
  const Int k = static_cast<Int>(a.size());
  if (t % k != 0) return std::nullopt;

  for (Int m : divisors(t)) {
    if (m % k != 0) continue;
    if (!distinct_mod(elems, m)) continue;
    std::vector<std::vector<Int>> found;
    for_each_complement(reduce_mod(elems, m), m, [&](const GroupSubset& b) {
      found.push_back(b.residues());
      return true;
    });
    if (found.empty()) continue;
    // minimal period reached; report the least canonical complement translate
    std::vector<Int> best;
    for (auto& b : found) {
      std::vector<Int> cand = canonical_translate(std::move(b), m);
      if (best.empty() || cand < best) best = std::move(cand);
    }
    return make_certificate(a, m, std::move(best));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Certificate reduction
// ---------------------------------------------------------------------------

TilingCertificate1D minimal_period(const TilingCertificate1D& cert) {
  if (!verify_certificate(cert)) throw InvalidCertificate("certificate fails verification");
  const auto period = is_periodic_subset(cert.residues, cert.period);
  if (!period) return cert;
  const Int m = *period;
  std::vector<Int> reduced;
  for (Int b : cert.residues.residues()) reduced.push_back(b % m);
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  return make_certificate(cert.tile.normalized(), m, std::move(reduced));
}

}  // namespace tilekit
