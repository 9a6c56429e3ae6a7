#include "tilekit/exact.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace tilekit {

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly::IntPoly(std::initializer_list<int> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (int c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::x_power_minus_one(std::size_t n) {
  std::vector<mpz_class> v(n + 1, mpz_class(0));
  v[0] = -1;
  v[n] = 1;
  return IntPoly(std::move(v));
}

std::size_t IntPoly::degree() const {
  if (is_zero()) throw std::logic_error("degree of zero polynomial");
  return coeffs_.size() - 1;
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
  static const mpz_class kZero = 0;
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

mpz_class IntPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<mpz_class> v(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (divisor.coeffs_.back() != 1) throw std::invalid_argument("divisor not monic");
  std::vector<mpz_class> rem = coeffs_;
  const std::size_t dn = divisor.coeffs_.size();
  if (rem.size() < dn) return {IntPoly(), IntPoly(std::move(rem))};
  std::vector<mpz_class> quot(rem.size() - dn + 1, mpz_class(0));
  for (std::size_t qi = quot.size(); qi-- > 0;) {
    mpz_class c = rem[qi + dn - 1];
    if (c == 0) continue;
    quot[qi] = c;
    for (std::size_t j = 0; j < dn; ++j) rem[qi + j] -= c * divisor.coeffs_[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

bool IntPoly::divisible_by_monic(const IntPoly& divisor) const {
  return divmod_monic(divisor).second.is_zero();
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
    else if (coeffs_[i] < 0) os << "-";
    mpz_class a = abs(coeffs_[i]);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) {
      os << "x";
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FiniteSetZ
// ---------------------------------------------------------------------------

FiniteSetZ::FiniteSetZ(std::vector<mpz_class> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("FiniteSetZ must be nonempty");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 1; i < elements_.size(); ++i)
    if (elements_[i] == elements_[i - 1])
      throw std::invalid_argument("FiniteSetZ elements must be distinct");
}

FiniteSetZ FiniteSetZ::from_ints(const std::vector<Int>& elements) {
  std::vector<mpz_class> v;
  v.reserve(elements.size());
  for (Int e : elements) v.emplace_back(static_cast<long>(e));
  return FiniteSetZ(std::move(v));
}

FiniteSetZ FiniteSetZ::normalized() const { return translated(-elements_.front()); }

FiniteSetZ FiniteSetZ::translated(const mpz_class& c) const {
  std::vector<mpz_class> v(elements_);
  for (auto& e : v) e += c;
  return FiniteSetZ(std::move(v));
}

mpz_class FiniteSetZ::diameter() const { return elements_.back() - elements_.front(); }

// ---------------------------------------------------------------------------
// GroupSubset
// ---------------------------------------------------------------------------

GroupSubset::GroupSubset(Int modulus, int dim, std::vector<std::vector<Int>> elements)
    : n_(modulus), d_(dim), elems_(std::move(elements)) {
  if (n_ < 1) throw std::invalid_argument("modulus must be positive");
  if (d_ < 1) throw std::invalid_argument("dimension must be positive");
  for (auto& v : elems_) {
    if (static_cast<int>(v.size()) != d_)
      throw std::invalid_argument("element dimension mismatch");
    for (auto& x : v) x = ((x % n_) + n_) % n_;
  }
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

GroupSubset GroupSubset::from_residues(Int modulus, const std::vector<Int>& elems) {
  std::vector<std::vector<Int>> v;
  v.reserve(elems.size());
  for (Int e : elems) v.push_back({e});
  return GroupSubset(modulus, 1, std::move(v));
}

bool GroupSubset::contains(const std::vector<Int>& v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::vector<Int> GroupSubset::residues() const {
  if (d_ != 1) throw std::logic_error("residues() requires dim 1");
  std::vector<Int> r;
  r.reserve(elems_.size());
  for (const auto& v : elems_) r.push_back(v[0]);
  return r;
}

GroupSubset GroupSubset::translated(const std::vector<Int>& c) const {
  if (static_cast<int>(c.size()) != d_) throw std::invalid_argument("translate dim mismatch");
  std::vector<std::vector<Int>> v = elems_;
  for (auto& e : v)
    for (int i = 0; i < d_; ++i) e[i] = ((e[i] + c[i]) % n_ + n_) % n_;
  return GroupSubset(n_, d_, std::move(v));
}

bool GroupSubset::operator==(const GroupSubset& o) const {
  return n_ == o.n_ && d_ == o.d_ && elems_ == o.elems_;
}

bool GroupSubset::operator<(const GroupSubset& o) const { return elems_ < o.elems_; }

// ---------------------------------------------------------------------------
// CyclotomicResidue
// ---------------------------------------------------------------------------

CyclotomicResidue::CyclotomicResidue(Int order) : n_(order) {
  if (n_ < 1) throw std::invalid_argument("order must be positive");
  raw_.assign(static_cast<std::size_t>(n_), mpz_class(0));
  coeffs_.assign(static_cast<std::size_t>(euler_phi(n_)), mpz_class(0));
}

void CyclotomicResidue::add_root_power(Int exponent, const mpz_class& c) {
  Int e = ((exponent % n_) + n_) % n_;
  raw_[static_cast<std::size_t>(e)] += c;
  dirty_ = true;
}

void CyclotomicResidue::add(const CyclotomicResidue& o) {
  if (o.n_ != n_) throw std::invalid_argument("order mismatch");
  for (std::size_t i = 0; i < raw_.size(); ++i) raw_[i] += o.raw_[i];
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  dirty_ = dirty_ || o.dirty_;
}

void CyclotomicResidue::reduce() const {
  if (!dirty_) return;
  IntPoly p{std::vector<mpz_class>(raw_.begin(), raw_.end())};
  IntPoly rem = p.divmod_monic(cyclotomic_poly(n_).poly).second;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rem.coeff(i);
  std::fill(raw_.begin(), raw_.end(), mpz_class(0));
  dirty_ = false;
}

const std::vector<mpz_class>& CyclotomicResidue::coeffs() const {
  reduce();
  return coeffs_;
}

bool CyclotomicResidue::is_zero() const {
  reduce();
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpz_class& c) { return c == 0; });
}

CyclotomicResidue CyclotomicResidue::from_integer(Int order, const mpz_class& c) {
  CyclotomicResidue r(order);
  r.coeffs_[0] = c;
  return r;
}

bool CyclotomicResidue::equals_integer(const mpz_class& c) const {
  reduce();
  if (coeffs_[0] != c) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Number-theoretic helpers
// ---------------------------------------------------------------------------

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  std::vector<std::pair<Int, int>> f;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

Int euler_phi(Int d) {
  if (d < 1) throw std::invalid_argument("euler_phi requires d >= 1");
  Int phi = d;
  for (const auto& [p, e] : factorize(d)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> ds{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t m = ds.size();
    Int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < m; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

CyclotomicPolynomial cyclotomic_poly(Int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_poly requires d >= 1");
  static std::map<Int, IntPoly> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return {d, it->second};
  }
  IntPoly result;
  if (d == 1) {
    result = IntPoly{{mpz_class(-1), mpz_class(1)}};
  } else {
    IntPoly num = IntPoly::x_power_minus_one(static_cast<std::size_t>(d));
    for (Int e : divisors(d)) {
      if (e == d) continue;
      auto [q, r] = num.divmod_monic(cyclotomic_poly(e).poly);
      if (!r.is_zero()) throw std::logic_error("cyclotomic division not exact");
      num = std::move(q);
    }
    result = std::move(num);
  }
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(d, result);
  }
  return {d, std::move(result)};
}

// ---------------------------------------------------------------------------
// Mask polynomials and cyclotomic divisors
// ---------------------------------------------------------------------------

MaskPolynomial mask_polynomial(const FiniteSetZ& a) {
  if (!a.is_canonical()) throw std::invalid_argument("set must be canonical (min = 0)");
  const mpz_class& diam = a.diameter();
  if (!diam.fits_ulong_p())
    throw std::invalid_argument("set diameter too large for a dense mask polynomial");
  std::vector<mpz_class> v(diam.get_ui() + 1, mpz_class(0));
  for (const auto& e : a.elements()) v[e.get_ui()] = 1;
  return {IntPoly(std::move(v))};
}

std::vector<Int> cyclotomic_divisors(const FiniteSetZ& a) {
  const IntPoly mask = mask_polynomial(a).poly;
  const Int diam = static_cast<Int>(a.diameter().get_ui());
  std::vector<Int> out;
  if (diam == 0) return out;
  const Int bound = 2 * diam * diam;
  for (Int s = 2; s <= bound; ++s) {
    if (euler_phi(s) > diam) continue;
    if (mask.divisible_by_monic(cyclotomic_poly(s).poly)) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact DFT zero sets
// ---------------------------------------------------------------------------

std::vector<Int> zero_set_zn(const GroupSubset& a) {
  if (a.dim() != 1) throw std::invalid_argument("zero_set_zn requires dim 1");
  const Int n = a.modulus();
  if (a.size() == 0) throw std::invalid_argument("zero_set_zn requires nonempty set");
  // mask of A folded into Z_n
  std::vector<mpz_class> v(static_cast<std::size_t>(n), mpz_class(0));
  for (Int r : a.residues()) v[static_cast<std::size_t>(r)] = 1;
  const IntPoly mask{std::move(v)};
  // Phi_d | mask decides vanishing on the whole cyclotomic class gcd(k,n)=n/d
  std::map<Int, bool> class_vanishes;
  for (Int d : divisors(n)) {
    if (d == 1) { class_vanishes[d] = false; continue; }
    class_vanishes[d] = mask.divisible_by_monic(cyclotomic_poly(d).poly);
  }
  std::vector<Int> zeros;
  for (Int k = 1; k < n; ++k) {
    const Int d = n / std::gcd(k, n);
    if (class_vanishes[d]) zeros.push_back(k);
  }
  return zeros;
}

bool char_sum_is_zero(const GroupSubset& s, const std::vector<Int>& q) {
  if (static_cast<int>(q.size()) != s.dim())
    throw std::invalid_argument("dual vector dimension mismatch");
  const Int n = s.modulus();
  if (s.size() == 0) throw std::invalid_argument("char sum of empty set");
  CyclotomicResidue acc(n);
  for (const auto& e : s.elements()) {
    Int dot = 0;
    for (int i = 0; i < s.dim(); ++i) dot = (dot + q[i] % n * (e[i] % n)) % n;
    acc.add_root_power(-dot);
  }
  return acc.is_zero();
}

std::vector<std::vector<Int>> zero_set_group(const GroupSubset& s) {
  const Int n = s.modulus();
  const int d = s.dim();
  std::vector<std::vector<Int>> zeros;
  std::vector<Int> q(static_cast<std::size_t>(d), 0);
  while (true) {
    if (char_sum_is_zero(s, q)) zeros.push_back(q);
    int i = d - 1;
    while (i >= 0 && q[i] == n - 1) { q[i] = 0; --i; }
    if (i < 0) break;
    ++q[i];
  }
  return zeros;
}

}  // namespace tilekit
