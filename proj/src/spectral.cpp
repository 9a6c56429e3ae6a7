#include "tilekit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>

namespace tilekit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Int int_pow(Int base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<Int> unflatten(Int idx, Int n, int d) {
  std::vector<Int> v(static_cast<std::size_t>(d), 0);
  for (int i = d - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = idx % n;
    idx /= n;
  }
  return v;
}

Int flatten(const std::vector<Int>& v, Int n) {
  Int idx = 0;
  for (Int c : v) idx = idx * n + c;
  return idx;
}

std::vector<Int> sub_mod(const std::vector<Int>& x, const std::vector<Int>& y, Int n) {
  std::vector<Int> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = ((x[i] - y[i]) % n + n) % n;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix representations
// ---------------------------------------------------------------------------

ButsonMatrix fourier_matrix(Int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  ButsonMatrix m;
  m.size = static_cast<std::size_t>(k);
  m.root_order = k;
  m.exponents.assign(m.size, std::vector<Int>(m.size, 0));
  for (Int j = 0; j < k; ++j)
    for (Int c = 0; c < k; ++c)
      m.exponents[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = (j * c) % k;
  return m;
}

ComplexMatrix to_complex(const ButsonMatrix& m) {
  ComplexMatrix h;
  h.size = m.size;
  h.entries.resize(m.size * m.size);
  for (std::size_t j = 0; j < m.size; ++j)
    for (std::size_t c = 0; c < m.size; ++c) {
      double ang = kTwoPi * static_cast<double>(m.exponents[j][c]) /
                   static_cast<double>(m.root_order);
      h.at(j, c) = {std::cos(ang), std::sin(ang)};
    }
  return h;
}

ComplexMatrix to_complex(const PhaseMatrix& m) {
  ComplexMatrix h;
  h.size = m.size;
  h.entries.resize(m.size * m.size);
  for (std::size_t j = 0; j < m.size; ++j)
    for (std::size_t c = 0; c < m.size; ++c) {
      double ang = kTwoPi * m.at(j, c).get_d();
      h.at(j, c) = {std::cos(ang), std::sin(ang)};
    }
  return h;
}

PhaseMatrix phase_matrix(const ButsonMatrix& m) {
  PhaseMatrix r;
  r.size = m.size;
  r.phases.resize(m.size * m.size);
  for (std::size_t j = 0; j < m.size; ++j)
    for (std::size_t c = 0; c < m.size; ++c) {
      mpq_class q(static_cast<long>(m.exponents[j][c]), static_cast<long>(m.root_order));
      q.canonicalize();
      r.at(j, c) = q;
    }
  return r;
}

PhaseMatrix log_matrix(const ComplexMatrix& m) {
  // phases recovered as nearest rationals with denominator up to 720720;
  // exact round trip for every phase matrix whose entries came from roots
  // of unity of order dividing that bound
  constexpr long kMaxDen = 720720;
  PhaseMatrix r;
  r.size = m.size;
  r.phases.resize(m.size * m.size);
  for (std::size_t j = 0; j < m.size; ++j)
    for (std::size_t c = 0; c < m.size; ++c) {
      double ang = std::atan2(m.at(j, c).imag(), m.at(j, c).real()) / kTwoPi;
      if (ang < 0) ang += 1.0;
      long num = std::lround(ang * kMaxDen);
      mpq_class q(num % kMaxDen, kMaxDen);
      q.canonicalize();
      r.at(j, c) = q;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Hadamard predicates
// ---------------------------------------------------------------------------

bool is_complex_hadamard(const ComplexMatrix& h, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const std::size_t k = h.size;
  if (k == 0 || h.entries.size() != k * k) return false;
  for (const auto& z : h.entries)
    if (std::abs(std::abs(z) - 1.0) > tol) return false;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t m = j + 1; m < k; ++m) {
      std::complex<double> dot = 0;
      for (std::size_t c = 0; c < k; ++c) dot += std::conj(h.at(j, c)) * h.at(m, c);
      if (std::abs(dot) > static_cast<double>(k) * tol) return false;
    }
  return true;
}

bool is_log_hadamard(const PhaseMatrix& r) {
  const std::size_t k = r.size;
  if (k == 0 || r.phases.size() != k * k) return false;
  for (const auto& q : r.phases)
    if (q < 0 || q >= 1) return false;
  mpz_class lcm_den = 1;
  for (const auto& q : r.phases) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    lcm_den = l;
  }
  if (!lcm_den.fits_slong_p() || lcm_den.get_si() > 1000000)
    return is_complex_hadamard(to_complex(r));
  const Int m = lcm_den.get_si();
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = j + 1; l < k; ++l) {
      CyclotomicResidue acc(m);
      for (std::size_t c = 0; c < k; ++c) {
        mpq_class diff = r.at(l, c) - r.at(j, c);
        mpq_class scaled = diff * static_cast<long>(m);
        acc.add_root_power(static_cast<Int>(scaled.get_num().get_si()));
      }
      if (!acc.is_zero()) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Spectral pairs
// ---------------------------------------------------------------------------

PhaseMatrix spectral_phase_matrix(const GroupSubset& s, const GroupSubset& q) {
  if (s.modulus() != q.modulus() || s.dim() != q.dim())
    throw std::invalid_argument("spectral pair must live in one group");
  const Int n = s.modulus();
  const std::size_t r = s.size();
  PhaseMatrix pm;
  pm.size = r;
  pm.phases.resize(r * r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t c = 0; c < r; ++c) {
      Int dot = 0;
      for (int i = 0; i < s.dim(); ++i)
        dot = (dot + q.elements()[j][static_cast<std::size_t>(i)] *
                          s.elements()[c][static_cast<std::size_t>(i)]) % n;
      mpq_class ph(static_cast<long>(dot), static_cast<long>(n));
      ph.canonicalize();
      pm.at(j, c) = ph;
    }
  return pm;
}

bool spectral_pair_check(const GroupSubset& s, const GroupSubset& q) {
  if (s.modulus() != q.modulus() || s.dim() != q.dim())
    throw std::invalid_argument("spectral pair must live in one group");
  if (s.size() != q.size()) return false;
  bool exact = true;
  for (std::size_t j = 0; j < q.size() && exact; ++j)
    for (std::size_t l = 0; l < q.size() && exact; ++l) {
      if (j == l) continue;
      auto diff = sub_mod(q.elements()[j], q.elements()[l], s.modulus());
      if (!char_sum_is_zero(s, diff)) exact = false;
    }
  const bool via_log = is_log_hadamard(spectral_phase_matrix(s, q));
  if (exact != via_log)
    throw std::logic_error("character-sum and log-Hadamard spectral checks disagree");
  return exact;
}

std::optional<GroupSubset> find_spectrum(const GroupSubset& s) {
  const Int n = s.modulus();
  const int d = s.dim();
  const Int total = int_pow(n, d);
  const std::size_t r = s.size();
  // adjacency on the dual group through the character zero set
  std::vector<char> in_zero(static_cast<std::size_t>(total), 0);
  for (Int idx = 0; idx < total; ++idx) {
    auto v = unflatten(idx, n, d);
    if (std::all_of(v.begin(), v.end(), [](Int c) { return c == 0; })) continue;
    if (char_sum_is_zero(s, v)) in_zero[static_cast<std::size_t>(idx)] = 1;
  }
  // lexicographic DFS for a clique of size r containing 0
  std::vector<Int> clique{0};
  std::function<bool(Int)> dfs = [&](Int next) -> bool {
    if (clique.size() == r) return true;
    for (Int v = next; v < total; ++v) {
      if (total - v < static_cast<Int>(r - clique.size())) break;
      bool ok = true;
      auto vv = unflatten(v, n, d);
      for (Int u : clique) {
        auto diff = sub_mod(vv, unflatten(u, n, d), n);
        if (!in_zero[static_cast<std::size_t>(flatten(diff, n))]) { ok = false; break; }
      }
      if (!ok) continue;
      clique.push_back(v);
      if (dfs(v + 1)) return true;
      clique.pop_back();
    }
    return false;
  };
  if (r == 0) return std::nullopt;
  if (r == 1) return GroupSubset(n, d, {std::vector<Int>(static_cast<std::size_t>(d), 0)});
  if (!dfs(1)) return std::nullopt;
  std::vector<std::vector<Int>> qs;
  qs.reserve(r);
  for (Int v : clique) qs.push_back(unflatten(v, n, d));
  return GroupSubset(n, d, std::move(qs));
}

bool power_spectrum_tiling_check(const GroupSubset& s, const GroupSubset& q) {
  if (!spectral_pair_check(s, q))
    throw std::invalid_argument("power-spectrum check requires a certified spectral pair");
  const Int n = s.modulus();
  const int d = s.dim();
  const Int total = int_pow(n, d);
  const mpz_class level = static_cast<long>(s.size()) * static_cast<long>(s.size());

  for (Int xi = 0; xi < total; ++xi) {
    auto x = unflatten(xi, n, d);
    // sum over q of |chi_S^|^2(x - q), expanded to character sums over s - s'
    CyclotomicResidue acc(n);
    std::complex<double> num = 0;
    for (const auto& qe : q.elements()) {
      auto v = sub_mod(x, qe, n);
      std::complex<double> val = 0;
      for (const auto& se : s.elements()) {
        Int dot = 0;
        for (int i = 0; i < d; ++i) dot = (dot + v[static_cast<std::size_t>(i)] *
                                                    se[static_cast<std::size_t>(i)]) % n;
        double ang = -kTwoPi * static_cast<double>(dot) / static_cast<double>(n);
        val += std::complex<double>(std::cos(ang), std::sin(ang));
        for (const auto& se2 : s.elements()) {
          Int dot2 = 0;
          for (int i = 0; i < d; ++i)
            dot2 = (dot2 + v[static_cast<std::size_t>(i)] *
                               ((se[static_cast<std::size_t>(i)] -
                                 se2[static_cast<std::size_t>(i)]) % n + n)) % n;
          acc.add_root_power(-dot2);
        }
      }
      num += val * std::conj(val);
    }
    if (!acc.equals_integer(level)) return false;
    if (std::abs(num.real() - level.get_d()) > 1e-8 || std::abs(num.imag()) > 1e-8)
      throw std::logic_error("exact and numeric power-spectrum evaluations disagree");
  }
  return true;
}

// ---------------------------------------------------------------------------
// Tiling complements in Z_n^d
// ---------------------------------------------------------------------------

std::optional<GroupSubset> tiles_group(const GroupSubset& s) {
  const Int n = s.modulus();
  const int d = s.dim();
  const Int total = int_pow(n, d);
  const Int k = static_cast<Int>(s.size());
  if (k == 0 || total % k != 0) return std::nullopt;
  const std::size_t want = static_cast<std::size_t>(total / k);

  std::vector<Int> tile;
  tile.reserve(s.size());
  for (const auto& e : s.elements()) tile.push_back(flatten(e, n));

  std::vector<char> covered(static_cast<std::size_t>(total), 0);
  std::vector<Int> chosen;
  auto add_mod = [&](Int cell, Int delta) {
    auto a = unflatten(cell, n, d), b = unflatten(delta, n, d);
    std::vector<Int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % n;
    return flatten(r, n);
  };

  std::function<bool()> dfs = [&]() -> bool {
    if (chosen.size() == want) return true;
    Int x = -1;
    for (Int c = 0; c < total; ++c)
      if (!covered[static_cast<std::size_t>(c)]) { x = c; break; }
    if (x < 0) return false;
    std::set<Int> cands;
    for (Int t : tile) {
      auto xt = unflatten(x, n, d), tt = unflatten(t, n, d);
      cands.insert(flatten(sub_mod(xt, tt, n), n));
    }
    for (Int b : cands) {
      bool ok = true;
      for (Int t : tile)
        if (covered[static_cast<std::size_t>(add_mod(t, b))]) { ok = false; break; }
      if (!ok) continue;
      for (Int t : tile) covered[static_cast<std::size_t>(add_mod(t, b))] = 1;
      chosen.push_back(b);
      if (dfs()) return true;
      chosen.pop_back();
      for (Int t : tile) covered[static_cast<std::size_t>(add_mod(t, b))] = 0;
    }
    return false;
  };

  // 0 must belong to the complement
  for (Int t : tile) covered[static_cast<std::size_t>(t)] = 1;
  chosen.push_back(0);
  if (!dfs()) return std::nullopt;
  std::vector<std::vector<Int>> out;
  out.reserve(chosen.size());
  for (Int c : chosen) out.push_back(unflatten(c, n, d));
  return GroupSubset(n, d, std::move(out));
}

// ---------------------------------------------------------------------------
// Butson search
// ---------------------------------------------------------------------------

namespace {

// exact orthogonality of two exponent rows over Z_q
bool rows_orthogonal(const std::vector<Int>& r1, const std::vector<Int>& r2, Int q) {
  CyclotomicResidue acc(q);
  for (std::size_t c = 0; c < r1.size(); ++c) acc.add_root_power(r2[c] - r1[c]);
  return acc.is_zero();
}

}  // namespace

std::vector<ButsonMatrix> find_butson(Int k, Int q, std::optional<std::size_t> limit) {
  if (k < 1 || q < 1) throw std::invalid_argument("k and q must be positive");
  std::vector<ButsonMatrix> out;
  const std::vector<Int> zero_row(static_cast<std::size_t>(k), 0);
  if (k == 1) {
    out.push_back({1, q, {zero_row}});
    return out;
  }

  // candidate rows: first entry 0, orthogonal to the all-zero row
  std::vector<std::vector<Int>> cands;
  std::vector<Int> row(static_cast<std::size_t>(k), 0);
  std::function<void(std::size_t)> gen = [&](std::size_t pos) {
    if (pos == static_cast<std::size_t>(k)) {
      if (rows_orthogonal(zero_row, row, q)) cands.push_back(row);
      return;
    }
    for (Int v = 0; v < q; ++v) {
      row[pos] = v;
      gen(pos + 1);
    }
    row[pos] = 0;
  };
  gen(1);

  // pairwise orthogonality table over the candidates
  const std::size_t nc = cands.size();
  std::vector<char> orth(nc * nc, 0);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = i + 1; j < nc; ++j)
      orth[i * nc + j] = orth[j * nc + i] =
          rows_orthogonal(cands[i], cands[j], q) ? 1 : 0;

  std::vector<std::size_t> pick;
  bool stop = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t next) {
    if (stop) return;
    if (pick.size() == static_cast<std::size_t>(k - 1)) {
      ButsonMatrix m;
      m.size = static_cast<std::size_t>(k);
      m.root_order = q;
      m.exponents.push_back(zero_row);
      for (std::size_t i : pick) m.exponents.push_back(cands[i]);
      out.push_back(std::move(m));
      if (limit && out.size() >= *limit) stop = true;
      return;
    }
    for (std::size_t v = next; v < nc; ++v) {
      if (nc - v < static_cast<std::size_t>(k - 1) - pick.size()) break;
      bool ok = true;
      for (std::size_t u : pick)
        if (!orth[u * nc + v]) { ok = false; break; }
      if (!ok) continue;
      pick.push_back(v);
      dfs(v + 1);
      pick.pop_back();
      if (stop) return;
    }
  };
  dfs(0);
  return out;
}

SpectralPair spectral_non_tile_z3_5() {
  auto found = find_butson(6, 3, std::size_t{1});
  if (found.empty()) throw SearchFailed("no BH(6,3) found");
  const ButsonMatrix& m = found.front();
  // columns, restricted to rows 1..5, as elements of Z_3^5
  std::vector<std::vector<Int>> cols(6, std::vector<Int>(5, 0));
  for (std::size_t c = 0; c < 6; ++c)
    for (std::size_t r = 1; r < 6; ++r) cols[c][r - 1] = m.exponents[r][c];
  GroupSubset s(3, 5, std::move(cols));
  if (s.size() != 6) throw SearchFailed("columns of BH(6,3) not distinct in Z_3^5");
  // spectrum {0, e_1, .., e_5}: row i of Q S reads off row i of the matrix
  std::vector<std::vector<Int>> qs;
  qs.push_back({0, 0, 0, 0, 0});
  for (int i = 0; i < 5; ++i) {
    std::vector<Int> e(5, 0);
    e[static_cast<std::size_t>(i)] = 1;
    qs.push_back(e);
  }
  GroupSubset q(3, 5, std::move(qs));
  if (!spectral_pair_check(s, q)) throw SearchFailed("constructed pair is not spectral");
  return {3, 5, std::move(s), std::move(q)};
}

}  // namespace tilekit
