#include "tilekit/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tilekit {

namespace {

// Subsets of Z_n as packed bit vectors.
struct BitSubset {
  Int n = 0;
  std::vector<std::uint64_t> w;

  explicit BitSubset(Int n_) : n(n_), w((static_cast<std::size_t>(n_) + 63) / 64, 0) {}

  void set(Int i) { w[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63); }
  bool test(Int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }

  bool disjoint(const BitSubset& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & o.w[i]) return false;
    return true;
  }
  void or_with(const BitSubset& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }
  void andnot_with(const BitSubset& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
  }
  // lowest index not in the set, or n if full
  Int lowest_clear() const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t inv = ~w[i];
      if (i + 1 == w.size() && (n & 63)) inv &= (1ULL << (n & 63)) - 1;
      if (inv) return static_cast<Int>((i << 6) + static_cast<std::size_t>(__builtin_ctzll(inv)));
    }
    return n;
  }
};

BitSubset translate_mask(const std::vector<Int>& a, Int n, Int shift) {
  BitSubset m(n);
  for (Int x : a) m.set(((x + shift) % n + n) % n);
  return m;
}

// Phi_{p^k} | mask(A) iff the counts of A mod p^k are constant on each
// residue class mod p^{k-1}.
bool prime_power_divides_mask(const std::vector<Int>& a, Int pk, Int pk_prev) {
  std::vector<Int> cnt(static_cast<std::size_t>(pk), 0);
  for (Int x : a) ++cnt[static_cast<std::size_t>(x % pk)];
  for (Int j = 0; j < pk_prev; ++j)
    for (Int i = j + pk_prev; i < pk; i += pk_prev)
      if (cnt[static_cast<std::size_t>(i)] != cnt[static_cast<std::size_t>(j)]) return false;
  return true;
}

// Prime powers p^k dividing n (k >= 1) with Phi_{p^k} not dividing mask(A),
// as (p^k, p^{k-1}, p) triples. Every complement's mask must be divisible by
// each of these Phi_{p^k}, which forces the product of their p's to divide
// |B| and forces the mod-p^{k-1} count profile of B to be leveled.
struct ForcedPrimePower {
  Int pk, pk_prev, p;
};

std::vector<ForcedPrimePower> forced_prime_powers(const std::vector<Int>& a, Int n) {
  std::vector<ForcedPrimePower> out;
  for (const auto& [p, e] : factorize(n)) {
    Int pk = 1, prev = 1;
    for (int k = 1; k <= e; ++k) {
      prev = pk;
      pk *= p;
      if (!prime_power_divides_mask(a, pk, prev)) out.push_back({pk, prev, p});
    }
  }
  return out;
}

// Backtracking state for one forced Phi_{p^k}: counts of placed complement
// elements per residue mod p^k, plus the leveling deficiency
// sum over groups of (group max - entry). The final complement must level
// every group, so deficiency > remaining placements prunes the branch.
struct LevelingCounter {
  ForcedPrimePower fp;
  std::vector<Int> cnt;
  Int deficiency = 0;

  explicit LevelingCounter(const ForcedPrimePower& f)
      : fp(f), cnt(static_cast<std::size_t>(f.pk), 0) {}

  Int group_deficiency(Int j) const {
    Int mx = 0;
    for (Int i = j; i < fp.pk; i += fp.pk_prev)
      mx = std::max(mx, cnt[static_cast<std::size_t>(i)]);
    Int d = 0;
    for (Int i = j; i < fp.pk; i += fp.pk_prev)
      d += mx - cnt[static_cast<std::size_t>(i)];
    return d;
  }
  void add(Int b, int delta) {
    Int r = b % fp.pk;
    Int j = r % fp.pk_prev;
    deficiency -= group_deficiency(j);
    cnt[static_cast<std::size_t>(r)] += delta;
    deficiency += group_deficiency(j);
  }
};

struct ComplementSearch {
  Int n;
  std::vector<Int> a;
  std::size_t b_size;
  std::vector<BitSubset> shifts;            // translate mask per shift
  std::vector<LevelingCounter> levelers;
  const std::function<bool(const GroupSubset&)>* fn = nullptr;
  std::vector<Int> chosen;
  bool stopped = false;

  bool deficiency_exceeds_remaining() const {
    const Int remaining = static_cast<Int>(b_size - chosen.size());
    for (const auto& lc : levelers)
      if (lc.deficiency > remaining) return true;
    return false;
  }

  void run() {
    BitSubset covered(n);
    // 0 is required to be in B
    covered.or_with(shifts[0]);
    chosen.push_back(0);
    for (auto& lc : levelers) lc.add(0, +1);
    dfs(covered);
  }

  void dfs(BitSubset& covered) {
    if (stopped) return;
    if (chosen.size() == b_size) {
      Int low = covered.lowest_clear();
      if (low == n) {
        if (!(*fn)(GroupSubset::from_residues(n, chosen))) stopped = true;
      }
      return;
    }
    if (deficiency_exceeds_remaining()) return;
    const Int x = covered.lowest_clear();
    if (x == n) return;
    // candidates: translates b with x in A + b
    std::vector<Int> cands;
    cands.reserve(a.size());
    for (Int ai : a) cands.push_back(((x - ai) % n + n) % n);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (Int b : cands) {
      const BitSubset& tm = shifts[static_cast<std::size_t>(b)];
      if (!covered.disjoint(tm)) continue;
      covered.or_with(tm);
      chosen.push_back(b);
      for (auto& lc : levelers) lc.add(b, +1);
      dfs(covered);
      for (auto& lc : levelers) lc.add(b, -1);
      chosen.pop_back();
      covered.andnot_with(tm);
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_complement(const GroupSubset& a, Int n,
                         const std::function<bool(const GroupSubset&)>& fn) {
  if (a.dim() != 1) throw std::invalid_argument("complement search requires dim 1");
  if (a.modulus() != n) throw std::invalid_argument("modulus mismatch");
  const Int k = static_cast<Int>(a.size());
  if (k == 0 || n % k != 0)
    throw CardinalityMismatch("|A| must divide n");
  const std::vector<Int> elems = a.residues();
  const Int b_size = n / k;

  // root pruning from the forced cyclotomic divisors of the complement
  const auto forced = forced_prime_powers(elems, n);
  Int forced_p_product = 1;
  for (const auto& f : forced) forced_p_product *= f.p;
  if (b_size % forced_p_product != 0) return;

  ComplementSearch s;
  s.n = n;
  s.a = elems;
  s.b_size = static_cast<std::size_t>(b_size);
  s.shifts.reserve(static_cast<std::size_t>(n));
  for (Int b = 0; b < n; ++b) s.shifts.push_back(translate_mask(elems, n, b));
  for (const auto& f : forced) s.levelers.emplace_back(f);
  s.fn = &fn;
  s.run();
}

std::vector<GroupSubset> find_complements(const GroupSubset& a, Int n,
                                          std::optional<std::size_t> limit) {
  std::vector<GroupSubset> out;
  for_each_complement(a, n, [&](const GroupSubset& b) {
    out.push_back(b);
    return true;
  });
  std::sort(out.begin(), out.end());
  if (limit && out.size() > *limit)
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(*limit), out.end());
  return out;
}

bool complement_exists(const GroupSubset& a, Int n) {
  bool found = false;
  for_each_complement(a, n, [&](const GroupSubset&) {
    found = true;
    return false;
  });
  return found;
}

bool verify_tiling_zn(const GroupSubset& a, const GroupSubset& b, Int n) {
  if (a.dim() != 1 || b.dim() != 1) throw std::invalid_argument("verify requires dim 1");
  if (a.modulus() != n || b.modulus() != n) throw std::invalid_argument("modulus mismatch");
  if (static_cast<Int>(a.size() * b.size()) != n) return false;
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (Int x : a.residues())
    for (Int y : b.residues()) ++hits[static_cast<std::size_t>((x + y) % n)];
  const bool direct = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  if (!direct) return false;

  // Fourier cross-check: Z_n = {0} u Z(A^) u Z(B^)
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  covered[0] = 1;
  for (Int k : zero_set_zn(a)) covered[static_cast<std::size_t>(k)] = 1;
  for (Int k : zero_set_zn(b)) covered[static_cast<std::size_t>(k)] = 1;
  if (!std::all_of(covered.begin(), covered.end(), [](char c) { return c == 1; }))
    throw std::logic_error("direct-sum and Fourier tiling conditions disagree");
  return true;
}

std::optional<Int> is_periodic_subset(const GroupSubset& a, Int n) {
  if (a.dim() != 1) throw std::invalid_argument("periodicity requires dim 1");
  if (a.modulus() != n) throw std::invalid_argument("modulus mismatch");
  for (Int k : divisors(n)) {
    if (k == n) break;
    if (k == 0) continue;
    if (a.translated({k}) == a) {
      if (n % k != 0) throw std::logic_error("period does not divide modulus");
      return k;
    }
  }
  return std::nullopt;
}

GoodGroupVerdict is_good_group(Int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> exps;
  for (const auto& [p, e] : factorize(n)) exps.push_back(e);
  std::sort(exps.rbegin(), exps.rend());
  auto fits = [&](std::vector<int> pattern) {
    if (exps.size() > pattern.size()) return false;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > pattern[i]) return false;
    return true;
  };
  // p^m q first: it subsumes the most common small cases
  if (exps.size() <= 2 && (exps.size() < 2 || exps[1] <= 1))
    return {n, true, "p^m q"};
  if (fits({1, 1, 1, 1})) return {n, true, "pqrs"};
  if (fits({2, 1, 1})) return {n, true, "p^2 q r"};
  if (fits({2, 2})) return {n, true, "p^2 q^2"};
  return {n, false, ""};
}

namespace {

// Lexicographically least translate pair (A - a, B - b) over a in A, b in B.
CyclicTiling canonical_pair(Int n, const GroupSubset& a, const GroupSubset& b) {
  std::optional<std::pair<std::vector<Int>, std::vector<Int>>> best;
  for (Int ae : a.residues()) {
    std::vector<Int> av = a.translated({-ae}).residues();
    for (Int be : b.residues()) {
      std::pair<std::vector<Int>, std::vector<Int>> cand{av, b.translated({-be}).residues()};
      if (!best || cand < *best) best = std::move(cand);
    }
  }
  return {n, GroupSubset::from_residues(n, best->first),
          GroupSubset::from_residues(n, best->second)};
}

bool tiling_less(const CyclicTiling& x, const CyclicTiling& y) {
  if (!(x.a == y.a)) return x.a < y.a;
  return x.b < y.b;
}

// Enumerates subsets of {1, .., n-1} of size k-1 (0 is always included),
// calling fn on each full subset {0, e1, ..,}; fn returns false to stop.
bool enumerate_zero_subsets(Int n, Int k,
                            const std::function<bool(const std::vector<Int>&)>& fn) {
  std::vector<Int> cur{0};
  std::function<bool(Int)> rec = [&](Int next) {
    if (static_cast<Int>(cur.size()) == k) return fn(cur);
    for (Int e = next; e <= n - (k - static_cast<Int>(cur.size())); ++e) {
      cur.push_back(e);
      if (!rec(e + 1)) return false;
      cur.pop_back();
    }
    return true;
  };
  return rec(1);
}

}  // namespace

std::vector<CyclicTiling> enumerate_tilings(Int n) {
  std::vector<CyclicTiling> out;
  std::set<std::pair<std::vector<Int>, std::vector<Int>>> seen;
  auto emit = [&](const GroupSubset& a, const GroupSubset& b) {
    for (const CyclicTiling& t : {canonical_pair(n, a, b), canonical_pair(n, b, a)}) {
      auto key = std::make_pair(t.a.residues(), t.b.residues());
      if (seen.insert(key).second) out.push_back(t);
    }
  };
  for (Int k : divisors(n)) {
    if (k * k > n) break;
    enumerate_zero_subsets(n, k, [&](const std::vector<Int>& av) {
      GroupSubset a = GroupSubset::from_residues(n, av);
      for_each_complement(a, n, [&](const GroupSubset& b) {
        emit(a, b);
        return true;
      });
      return true;
    });
  }
  std::sort(out.begin(), out.end(), tiling_less);
  return out;
}

std::vector<CyclicTiling> enumerate_vuza(Int n, std::optional<std::size_t> limit,
                                         const VuzaOptions& opts) {
  std::vector<CyclicTiling> out;
  if (n <= 1) return out;
  if (opts.use_good_group_shortcut && is_good_group(n).is_good) return out;

  auto is_prime_power = [](Int m) { return factorize(m).size() == 1; };
  std::set<std::pair<std::vector<Int>, std::vector<Int>>> seen;
  std::size_t found = 0;

  for (Int k : divisors(n)) {
    if (k * k > n) break;
    const Int l = n / k;
    if (k < 2 || l < 2) continue;
    if (opts.use_prime_power_size_shortcut && (is_prime_power(k) || is_prime_power(l)))
      continue;
    enumerate_zero_subsets(n, k, [&](const std::vector<Int>& av) {
      GroupSubset a = GroupSubset::from_residues(n, av);
      if (is_periodic_subset(a, n)) return true;
      for_each_complement(a, n, [&](const GroupSubset& b) {
        if (is_periodic_subset(b, n)) return true;
        for (const CyclicTiling& t : {canonical_pair(n, a, b), canonical_pair(n, b, a)}) {
          auto key = std::make_pair(t.a.residues(), t.b.residues());
          if (seen.insert(key).second) {
            out.push_back(t);
            ++found;
          }
        }
        return !(limit && found >= *limit);
      });
      return !(limit && found >= *limit);
    });
    if (limit && found >= *limit) break;
  }
  std::sort(out.begin(), out.end(), tiling_less);
  if (limit && out.size() > *limit)
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(*limit), out.end());
  return out;
}

}  // namespace tilekit
