#include "repring/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "repring/matrix.hpp"

namespace repring {

namespace {

std::mutex g_cyclo_mutex;

const std::vector<Int>& cyclotomic_coeffs(unsigned long n) {
  static std::map<unsigned long, std::vector<Int>> cache;
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so the
  // recursion never re-locks.
  std::function<const std::vector<Int>&(unsigned long)> get = [&](unsigned long m) -> const std::vector<Int>& {
    auto i2 = cache.find(m);
    if (i2 != cache.end()) return i2->second;
    std::vector<Int> num = poly::tn_minus_1(m);
    for (unsigned long d : divisors(m)) {
      if (d == m) continue;
      num = poly::exact_quotient(num, get(d));
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

/// Per-level tables: phi, reduction of t^k mod Phi_n for 0 <= k < n, and
/// traces of basis powers.
struct LevelData {
  unsigned long n = 1;
  unsigned long phi = 1;
  std::vector<std::vector<Int>> power;  // power[k] = coords of zeta^k, k < n
  std::vector<long> units;              // exponents coprime to n, ascending
  std::vector<Rat> trace_of_power;      // trace(zeta^k) for k < n
};

const LevelData& level_data(unsigned long n) {
  static std::map<unsigned long, LevelData> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  LevelData d;
  d.n = n;
  d.phi = totient(n);
  const std::vector<Int>& phi_n = cyclotomic_coeffs(n);
  // Reduce t^k mod Phi_n for k < max(n, 2*phi - 1).
  size_t need = std::max<size_t>(n, 2 * d.phi);
  d.power.resize(need);
  for (size_t k = 0; k < d.phi; ++k) {
    d.power[k].assign(d.phi, Int(0));
    d.power[k][k] = 1;
  }
  for (size_t k = d.phi; k < need; ++k) {
    // t^k = t * t^{k-1}, then substitute t^phi with -(lower terms of Phi).
    std::vector<Int> v(d.phi, Int(0));
    const std::vector<Int>& prev = d.power[k - 1];
    Int carry = prev[d.phi - 1];
    for (size_t i = d.phi - 1; i > 0; --i) v[i] = prev[i - 1];
    v[0] = 0;
    if (carry != 0)
      for (size_t i = 0; i < d.phi; ++i) v[i] -= carry * phi_n[i];
    d.power[k] = std::move(v);
  }
  for (unsigned long j = 1; j <= n; ++j)
    if (repring::gcd(Int(j), Int(n)) == 1) d.units.push_back(static_cast<long>(j % n == 0 ? n : j % n));
  if (n == 1) d.units = {0};  // the identity exponent mod 1
  // trace(zeta^k) = sum over units j of zeta^{kj}; rational by Galois theory.
  d.trace_of_power.resize(n);
  for (unsigned long k = 0; k < n; ++k) {
    std::vector<Rat> acc(d.phi, Rat(0));
    for (long j : d.units) {
      unsigned long e = (k * static_cast<unsigned long>(j)) % n;
      for (size_t i = 0; i < d.phi; ++i) acc[i] += Rat(d.power[e][i]);
    }
    for (size_t i = 1; i < d.phi; ++i)
      if (acc[i] != 0) throw std::logic_error("trace table: non-rational trace");
    d.trace_of_power[k] = acc[0];
  }
  return cache.emplace(n, std::move(d)).first->second;
}

}  // namespace

CyclotomicPoly::CyclotomicPoly(unsigned long n) : n_(n) {
  if (n < 1) throw usage_error("cyclotomic index must be >= 1");
  c_ = cyclotomic_coeffs(n);
}

const std::vector<Int>& CyclotomicPoly::get(unsigned long n) { return cyclotomic_coeffs(n); }

CycNum::CycNum(unsigned long level, std::vector<Rat> coeffs) : level_(level), c_(std::move(coeffs)) {
  const LevelData& d = level_data(level);
  if (c_.size() != d.phi) throw std::logic_error("CycNum: coefficient vector has wrong length");
}

CycNum CycNum::zeta(unsigned long level, long power) {
  const LevelData& d = level_data(level);
  long e = power % static_cast<long>(level);
  if (e < 0) e += static_cast<long>(level);
  std::vector<Rat> c(d.phi, Rat(0));
  for (size_t i = 0; i < d.phi; ++i) c[i] = Rat(d.power[static_cast<size_t>(e)][i]);
  return CycNum(level, std::move(c));
}

CycNum CycNum::from_rational(const Rat& r, unsigned long level) {
  const LevelData& d = level_data(level);
  std::vector<Rat> c(d.phi, Rat(0));
  c[0] = r;
  return CycNum(level, std::move(c));
}

bool CycNum::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycNum::is_integral() const {
  for (const Rat& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

Rat CycNum::rational_part() const { return c_[0]; }

Rat CycNum::as_rational() const {
  if (!is_rational()) throw std::logic_error("CycNum::as_rational: " + to_string() + " is irrational");
  return c_[0];
}

CycNum CycNum::operator+(const CycNum& o) const {
  if (level_ != o.level_) throw std::logic_error("CycNum level mismatch");
  std::vector<Rat> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return CycNum(level_, std::move(c));
}

CycNum CycNum::operator-(const CycNum& o) const {
  if (level_ != o.level_) throw std::logic_error("CycNum level mismatch");
  std::vector<Rat> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return CycNum(level_, std::move(c));
}

CycNum CycNum::operator-() const {
  std::vector<Rat> c(c_);
  for (Rat& x : c) x = -x;
  return CycNum(level_, std::move(c));
}

CycNum CycNum::operator*(const CycNum& o) const {
  if (level_ != o.level_) throw std::logic_error("CycNum level mismatch");
  const LevelData& d = level_data(level_);
  size_t phi = d.phi;
  std::vector<Rat> conv(2 * phi - 1, Rat(0));
  for (size_t i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rat> c(phi, Rat(0));
  for (size_t k = 0; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    if (k < phi) {
      c[k] += conv[k];
    } else {
      const std::vector<Int>& row = d.power[k];
      for (size_t i = 0; i < phi; ++i)
        if (row[i] != 0) c[i] += conv[k] * Rat(row[i]);
    }
  }
  return CycNum(level_, std::move(c));
}

bool CycNum::operator==(const CycNum& o) const {
  if (level_ == o.level_) return c_ == o.c_;
  unsigned long m = lcm(Int(level_), Int(o.level_)).get_ui();
  return embed(m).coeffs() == o.embed(m).coeffs();
}

CycNum CycNum::scaled(const Rat& r) const {
  std::vector<Rat> c(c_);
  for (Rat& x : c) x *= r;
  return CycNum(level_, std::move(c));
}

CycNum CycNum::pow(unsigned long e) const {
  CycNum base = *this;
  CycNum acc = CycNum::from_rational(Rat(1), level_);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::logic_error("CycNum::inverse of zero");
  const LevelData& d = level_data(level_);
  size_t phi = d.phi;
  // Solve x * this = 1 as a linear system in the power basis.
  std::vector<std::vector<Rat>> a(phi, std::vector<Rat>(phi, Rat(0)));
  for (size_t j = 0; j < phi; ++j) {
    CycNum col = *this * CycNum::zeta(level_, static_cast<long>(j));
    for (size_t i = 0; i < phi; ++i) a[i][j] = col.coeffs()[i];
  }
  std::vector<Rat> b(phi, Rat(0));
  b[0] = 1;
  auto sol = rat_solve(std::move(a), std::move(b));
  if (!sol.consistent) throw std::logic_error("CycNum::inverse: singular element");
  return CycNum(level_, std::move(sol.x));
}

CycNum CycNum::galois(long j) const {
  const LevelData& d = level_data(level_);
  long n = static_cast<long>(level_);
  long e = j % n;
  if (e < 0) e += n;
  if (level_ > 1 && repring::gcd(Int(e), Int(level_)) != 1)
    throw std::logic_error("CycNum::galois: exponent not coprime to level");
  std::vector<Rat> c(d.phi, Rat(0));
  for (size_t k = 0; k < d.phi; ++k) {
    if (c_[k] == 0) continue;
    unsigned long t = (k * static_cast<unsigned long>(e)) % level_;
    const std::vector<Int>& row = d.power[t];
    for (size_t i = 0; i < d.phi; ++i)
      if (row[i] != 0) c[i] += c_[k] * Rat(row[i]);
  }
  return CycNum(level_, std::move(c));
}

Rat CycNum::norm() const {
  const LevelData& d = level_data(level_);
  CycNum acc = CycNum::from_rational(Rat(1), level_);
  for (long j : d.units) acc *= galois(j);
  return acc.as_rational();
}

Rat CycNum::trace() const {
  const LevelData& d = level_data(level_);
  Rat acc(0);
  // trace is linear; use the precomputed basis traces.
  for (size_t k = 0; k < d.phi; ++k)
    if (c_[k] != 0) acc += c_[k] * d.trace_of_power[k];
  return acc;
}

Rat CycNum::t2() const { return (*this * conj()).trace(); }

CycNum CycNum::embed(unsigned long m) const {
  if (m == level_) return *this;
  if (m % level_ != 0) throw std::logic_error("CycNum::embed: target level not a multiple");
  const LevelData& d = level_data(m);
  unsigned long step = m / level_;
  std::vector<Rat> c(d.phi, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const std::vector<Int>& row = d.power[(k * step) % m];
    for (size_t i = 0; i < d.phi; ++i)
      if (row[i] != 0) c[i] += c_[k] * Rat(row[i]);
  }
  return CycNum(m, std::move(c));
}

CycNum CycNum::lower_to(unsigned long m) const {
  if (m == level_) return *this;
  if (level_ % m != 0) throw std::logic_error("CycNum::lower_to: target level not a divisor");
  const LevelData& dm = level_data(m);
  const LevelData& dn = level_data(level_);
  // Solve E c = this, where column i of E is embed(zeta_m^i).
  std::vector<std::vector<Rat>> a(dn.phi, std::vector<Rat>(dm.phi, Rat(0)));
  for (size_t i = 0; i < dm.phi; ++i) {
    CycNum col = CycNum::zeta(m, static_cast<long>(i)).embed(level_);
    for (size_t r = 0; r < dn.phi; ++r) a[r][i] = col.coeffs()[r];
  }
  auto sol = rat_solve(std::move(a), c_);
  if (!sol.consistent)
    throw std::logic_error("CycNum::lower_to: element not in Q(zeta_" + std::to_string(m) + ")");
  return CycNum(m, std::move(sol.x));
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
  if (a.level_ != b.level_) {
    unsigned long m = lcm(Int(a.level_), Int(b.level_)).get_ui();
    return compare(a.embed(m), b.embed(m));
  }
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] < b.c_[i]) return -1;
    if (a.c_[i] > b.c_[i]) return 1;
  }
  return 0;
}

std::string CycNum::to_string() const {
  if (is_rational()) return repring::to_string(c_[0]);
  std::vector<Rat> p(c_);
  poly::normalize(p);
  return poly::to_string(p, "z" + std::to_string(level_));
}

RationalCyclicPoly::RationalCyclicPoly(unsigned long modulus, std::vector<Rat> coeffs)
    : n_(modulus), c_(std::move(coeffs)) {
  if (n_ < 1) throw usage_error("cyclic modulus must be >= 1");
  c_.resize(n_, Rat(0));
  for (const Rat& x : c_) {
    Int den = x.get_den();
    for (const Int& p : den == 1 ? std::vector<Int>{} : prime_divisors(den))
      if (Int(n_) % p != 0)
        throw std::logic_error("RationalCyclicPoly: denominator prime " + repring::to_string(p) +
                               " does not divide the modulus");
  }
}

RationalCyclicPoly RationalCyclicPoly::operator+(const RationalCyclicPoly& o) const {
  if (n_ != o.n_) throw std::logic_error("RationalCyclicPoly modulus mismatch");
  std::vector<Rat> c(c_);
  for (size_t i = 0; i < n_; ++i) c[i] += o.c_[i];
  return RationalCyclicPoly(n_, std::move(c));
}

RationalCyclicPoly RationalCyclicPoly::operator-(const RationalCyclicPoly& o) const {
  if (n_ != o.n_) throw std::logic_error("RationalCyclicPoly modulus mismatch");
  std::vector<Rat> c(c_);
  for (size_t i = 0; i < n_; ++i) c[i] -= o.c_[i];
  return RationalCyclicPoly(n_, std::move(c));
}

RationalCyclicPoly RationalCyclicPoly::operator*(const RationalCyclicPoly& o) const {
  if (n_ != o.n_) throw std::logic_error("RationalCyclicPoly modulus mismatch");
  std::vector<Rat> c(n_, Rat(0));
  for (size_t i = 0; i < n_; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < n_; ++j) {
      if (o.c_[j] == 0) continue;
      c[(i + j) % n_] += c_[i] * o.c_[j];
    }
  }
  return RationalCyclicPoly(n_, std::move(c));
}

bool RationalCyclicPoly::operator==(const RationalCyclicPoly& o) const { return n_ == o.n_ && c_ == o.c_; }

RationalCyclicPoly psi_idempotent(unsigned long k, unsigned long n) {
  if (n < 1 || k < 1 || n % k != 0) throw usage_error("psi_idempotent: k must divide n");
  // psi_k = t (t^n - 1) Phi_k'(t) / (n Phi_k(t)) reduced mod t^n - 1.
  std::vector<Int> q = poly::exact_quotient(poly::tn_minus_1(n), CyclotomicPoly::get(k));
  std::vector<Int> dphi = poly::derivative(CyclotomicPoly::get(k));
  std::vector<Int> prod = poly::mul(q, dphi);
  std::vector<Rat> c(n, Rat(0));
  for (size_t i = 0; i < prod.size(); ++i) {
    if (prod[i] == 0) continue;
    Rat q(prod[i], Int(n));
    q.canonicalize();
    c[(i + 1) % n] += q;  // the leading factor t shifts by one
  }
  return RationalCyclicPoly(n, std::move(c));
}

std::vector<CycNum> fixed_sublattice(unsigned long n, const std::vector<long>& w) {
  const LevelData& d = level_data(n);
  size_t phi = d.phi;
  // Close the automorphism set under composition.
  std::vector<unsigned long> gens;
  for (long j : w) {
    long e = j % static_cast<long>(n);
    if (e < 0) e += static_cast<long>(n);
    if (n > 1 && repring::gcd(Int(e), Int(n)) != 1)
      throw usage_error("fixed_sublattice: exponent not coprime to level");
    gens.push_back(n == 1 ? 0 : static_cast<unsigned long>(e));
  }
  std::vector<unsigned long> group{n == 1 ? 0ul : 1ul};
  bool grew = true;
  while (grew) {
    grew = false;
    for (unsigned long a : std::vector<unsigned long>(group))
      for (unsigned long g : gens) {
        unsigned long prod = n == 1 ? 0 : (a * g) % n;
        if (std::find(group.begin(), group.end(), prod) == group.end()) {
          group.push_back(prod);
          grew = true;
        }
      }
  }

  // Stack (G_sigma - I) blocks; fixed vectors are the right kernel.
  std::vector<IntMat> blocks;
  for (unsigned long j : group) {
    if (j == 1 || n == 1) continue;
    IntMat m(phi, phi);
    for (size_t col = 0; col < phi; ++col) {
      const std::vector<Int>& img = d.power[(col * j) % n];
      for (size_t row = 0; row < phi; ++row) m(row, col) = img[row] - (row == col ? 1 : 0);
    }
    blocks.push_back(std::move(m));
  }
  if (blocks.empty()) {
    std::vector<CycNum> basis;
    for (size_t i = 0; i < phi; ++i) basis.push_back(CycNum::zeta(n, static_cast<long>(i)));
    return basis;
  }
  IntMat stacked(blocks.size() * phi, phi);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (size_t i = 0; i < phi; ++i)
      for (size_t j = 0; j < phi; ++j) stacked(b * phi + i, j) = blocks[b](i, j);
  // Right kernel of `stacked` = left kernel of its transpose.
  IntMat kern = left_kernel(stacked.transpose());
  std::vector<CycNum> basis;
  for (size_t i = 0; i < kern.rows(); ++i) {
    std::vector<Rat> c(phi, Rat(0));
    for (size_t j = 0; j < phi; ++j) c[j] = Rat(kern(i, j));
    basis.emplace_back(n, std::move(c));
  }
  return basis;
}

}  // namespace repring
