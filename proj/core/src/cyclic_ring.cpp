#include "repring/cyclic_ring.hpp"

#include <algorithm>

namespace repring {

CyclicRingElem::CyclicRingElem(unsigned long n, std::vector<Int> coeffs) : n_(n), c_(n, Int(0)) {
  if (n == 0) throw usage_error("cyclic modulus must be >= 1");
  for (size_t i = 0; i < coeffs.size(); ++i) c_[i % n] += coeffs[i];
}

CyclicRingElem CyclicRingElem::constant(unsigned long n, Int v) {
  CyclicRingElem f(n);
  f.c_[0] = std::move(v);
  return f;
}

CyclicRingElem CyclicRingElem::t_power(unsigned long n, unsigned long e) {
  CyclicRingElem f(n);
  f.c_[e % n] = 1;
  return f;
}

CyclicRingElem CyclicRingElem::phi_pm(unsigned long pm) {
  return CyclicRingElem(pm, CyclotomicPoly::get(pm));
}

CyclicRingElem CyclicRingElem::operator+(const CyclicRingElem& o) const {
  if (n_ != o.n_) throw std::logic_error("CyclicRingElem modulus mismatch");
  CyclicRingElem f(n_);
  for (size_t i = 0; i < n_; ++i) f.c_[i] = c_[i] + o.c_[i];
  return f;
}

CyclicRingElem CyclicRingElem::operator-(const CyclicRingElem& o) const {
  if (n_ != o.n_) throw std::logic_error("CyclicRingElem modulus mismatch");
  CyclicRingElem f(n_);
  for (size_t i = 0; i < n_; ++i) f.c_[i] = c_[i] - o.c_[i];
  return f;
}

CyclicRingElem CyclicRingElem::operator*(const CyclicRingElem& o) const {
  if (n_ != o.n_) throw std::logic_error("CyclicRingElem modulus mismatch");
  CyclicRingElem f(n_);
  for (size_t i = 0; i < n_; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < n_; ++j) {
      if (o.c_[j] == 0) continue;
      f.c_[(i + j) % n_] += c_[i] * o.c_[j];
    }
  }
  return f;
}

CyclicRingElem CyclicRingElem::operator-() const {
  CyclicRingElem f(n_);
  for (size_t i = 0; i < n_; ++i) f.c_[i] = -c_[i];
  return f;
}

CyclicRingElem CyclicRingElem::scaled(const Int& v) const {
  CyclicRingElem f(n_);
  for (size_t i = 0; i < n_; ++i) f.c_[i] = c_[i] * v;
  return f;
}

CyclicRingElem CyclicRingElem::pow(const Int& e) const {
  if (e < 0) throw std::logic_error("CyclicRingElem::pow: negative exponent");
  CyclicRingElem acc = one(n_);
  CyclicRingElem base = *this;
  Int k = e;
  while (k > 0) {
    if (fmod(k, 2) == 1) acc = acc * base;
    k = fdiv(k, 2);
    if (k > 0) base = base * base;
  }
  return acc;
}

bool CyclicRingElem::is_zero() const {
  for (const Int& x : c_)
    if (x != 0) return false;
  return true;
}

Int CyclicRingElem::eval_at_one() const {
  Int s = 0;
  for (const Int& x : c_) s += x;
  return s;
}

bool CyclicRingElem::divisible_by_int(const Int& v) const {
  for (const Int& x : c_)
    if (!divides(v, x)) return false;
  return true;
}

CyclicRingElem CyclicRingElem::divided_by_int(const Int& v) const {
  CyclicRingElem f(n_);
  for (size_t i = 0; i < n_; ++i) f.c_[i] = exact_div(c_[i], v);
  return f;
}

ModularCyclic ModularCyclic::reduce(const CyclicRingElem& f, const Int& p) {
  ModularCyclic m;
  m.modulus = f.modulus();
  m.p = p;
  m.c.reserve(f.modulus());
  for (const Int& x : f.coeffs()) m.c.push_back(fmod(x, p));
  return m;
}

bool ModularCyclic::operator==(const ModularCyclic& o) const {
  return modulus == o.modulus && p == o.p && c == o.c;
}

bool ModularCyclic::is_one() const {
  if (c.empty() || c[0] != 1) return false;
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

LocalizedCyclicElem::LocalizedCyclicElem(CyclicRingElem num, Int p, unsigned denom_exp)
    : num_(std::move(num)), p_(std::move(p)), k_(denom_exp) {
  if (!is_prime(p_)) throw usage_error("LocalizedCyclicElem: p must be prime");
  normalize();
}

void LocalizedCyclicElem::normalize() {
  while (k_ > 0 && num_.divisible_by_int(p_)) {
    num_ = num_.divided_by_int(p_);
    --k_;
  }
}

LocalizedCyclicElem LocalizedCyclicElem::operator+(const LocalizedCyclicElem& o) const {
  if (p_ != o.p_) throw std::logic_error("LocalizedCyclicElem prime mismatch");
  unsigned k = std::max(k_, o.k_);
  CyclicRingElem a = num_.scaled(pow(p_, k - k_));
  CyclicRingElem b = o.num_.scaled(pow(p_, k - o.k_));
  return LocalizedCyclicElem(a + b, p_, k);
}

LocalizedCyclicElem LocalizedCyclicElem::operator-(const LocalizedCyclicElem& o) const {
  if (p_ != o.p_) throw std::logic_error("LocalizedCyclicElem prime mismatch");
  unsigned k = std::max(k_, o.k_);
  CyclicRingElem a = num_.scaled(pow(p_, k - k_));
  CyclicRingElem b = o.num_.scaled(pow(p_, k - o.k_));
  return LocalizedCyclicElem(a - b, p_, k);
}

LocalizedCyclicElem LocalizedCyclicElem::operator*(const LocalizedCyclicElem& o) const {
  if (p_ != o.p_) throw std::logic_error("LocalizedCyclicElem prime mismatch");
  return LocalizedCyclicElem(num_ * o.num_, p_, k_ + o.k_);
}

bool LocalizedCyclicElem::operator==(const LocalizedCyclicElem& o) const {
  return p_ == o.p_ && k_ == o.k_ && num_ == o.num_;
}

const CyclicRingElem& LocalizedCyclicElem::as_integral() const {
  if (k_ != 0)
    throw std::logic_error("LocalizedCyclicElem: element has denominator " + repring::to_string(p_) +
                           "^" + std::to_string(k_));
  return num_;
}

std::string LocalizedCyclicElem::to_string() const {
  if (k_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ") / " + repring::to_string(pow(p_, k_));
}

CyclicRingElem res_cyclic(const CyclicRingElem& f, unsigned long d) {
  if (d == 0 || f.modulus() % d != 0)
    throw usage_error("res_cyclic: target modulus must divide the source modulus");
  CyclicRingElem out(d);
  std::vector<Int> c(d, Int(0));
  for (size_t i = 0; i < f.modulus(); ++i) c[i % d] += f.coeffs()[i];
  return CyclicRingElem(d, std::move(c));
}

LocalizedCyclicElem res_cyclic(const LocalizedCyclicElem& f, unsigned long d) {
  return LocalizedCyclicElem(res_cyclic(f.num(), d), f.prime(), f.denom_exp());
}

CyclicRingElem ind_cyclic(const CyclicRingElem& h, unsigned long n) {
  unsigned long d = h.modulus();
  if (d == 0 || n % d != 0) throw usage_error("ind_cyclic: source modulus must divide the target");
  std::vector<Int> c(n, Int(0));
  for (size_t j = 0; j < d; ++j) {
    if (h.coeffs()[j] == 0) continue;
    for (unsigned long k = j; k < n; k += d) c[k] += h.coeffs()[j];
  }
  return CyclicRingElem(n, std::move(c));
}

LocalizedCyclicElem ind_cyclic(const LocalizedCyclicElem& h, unsigned long n) {
  return LocalizedCyclicElem(ind_cyclic(h.num(), n), h.prime(), h.denom_exp());
}

CycNum mod_phi(const CyclicRingElem& f) {
  PrimePower pp;
  if (!prime_power_decompose(Int(f.modulus()), pp))
    throw usage_error("mod_phi: modulus " + std::to_string(f.modulus()) + " is not a prime power");
  unsigned long n = f.modulus();
  // Reduce the coefficient vector mod Phi_n using CycNum's power tables.
  CycNum out = CycNum::from_rational(Rat(0), n);
  for (size_t k = 0; k < n; ++k) {
    if (f.coeffs()[k] == 0) continue;
    out += CycNum::zeta(n, static_cast<long>(k)).scaled(Rat(f.coeffs()[k]));
  }
  return out;
}

CycNum mod_phi(const LocalizedCyclicElem& f) {
  CycNum m = mod_phi(f.num());
  Rat scale(1);
  scale /= Rat(pow(f.prime(), f.denom_exp()));
  return m.scaled(scale);
}

ModularCyclic pi_map(const CycNum& f) {
  PrimePower pp;
  if (!prime_power_decompose(Int(f.level()), pp) || pp.exponent == 0)
    throw usage_error("pi_map: level must be p^m with m >= 1");
  if (!f.is_integral()) throw std::logic_error("pi_map: element must be integral");
  unsigned long sub = f.level() / pp.prime.get_ui();
  // Lift zeta -> t into R(Z/p^m) with the power-basis lift, then reduce
  // exponents mod p^{m-1} and coefficients mod p.
  std::vector<Int> c(f.level(), Int(0));
  for (size_t i = 0; i < f.coeffs().size(); ++i) c[i] = f.coeffs()[i].get_num();
  CyclicRingElem lift(f.level(), std::move(c));
  return ModularCyclic::reduce(res_cyclic(lift, sub), pp.prime);
}

bool unit_in_modular_quotient(const CyclicRingElem& f, const Int& p) {
  if (!is_prime(p)) throw usage_error("unit_in_modular_quotient: p must be prime");
  unsigned long m = f.modulus();
  // Multiplication-by-f matrix over F_p in the basis t^0..t^{m-1}.
  std::vector<std::vector<Int>> a(m, std::vector<Int>(m, Int(0)));
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < m; ++i) a[(i + j) % m][j] = fmod(f.coeffs()[i], p);
  // Gaussian elimination over F_p.
  size_t rank = 0;
  for (size_t col = 0; col < m && rank < m; ++col) {
    size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) return false;  // singular
    std::swap(a[piv], a[rank]);
    // scale pivot row to 1
    Int inv;
    mpz_invert(inv.get_mpz_t(), a[rank][col].get_mpz_t(), p.get_mpz_t());
    for (size_t j = col; j < m; ++j) a[rank][j] = fmod(a[rank][j] * inv, p);
    for (size_t i = 0; i < m; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Int fac = a[i][col];
      for (size_t j = col; j < m; ++j) a[i][j] = fmod(a[i][j] - fac * a[rank][j], p);
    }
    ++rank;
  }
  return rank == m;
}

SplitParts split_decomposition(const LocalizedCyclicElem& f) {
  PrimePower pp;
  if (!prime_power_decompose(Int(f.modulus()), pp) || pp.exponent == 0)
    throw usage_error("split_decomposition: modulus must be p^m with m >= 1");
  if (pp.prime != f.prime())
    throw usage_error("split_decomposition: localization prime must match the modulus prime");
  unsigned long sub = f.modulus() / pp.prime.get_ui();
  return SplitParts{mod_phi(f), res_cyclic(f, sub)};
}

LocalizedCyclicElem unsplit(const CycNum& a, const LocalizedCyclicElem& b) {
  PrimePower pp;
  if (!prime_power_decompose(Int(a.level()), pp) || pp.exponent == 0)
    throw usage_error("unsplit: level must be p^m with m >= 1");
  const Int& p = b.prime();
  if (pp.prime != p) throw usage_error("unsplit: prime mismatch");
  unsigned long n = a.level();
  if (b.modulus() != n / p.get_ui()) throw usage_error("unsplit: sub-modulus mismatch");

  // Denominator-tracked lift of a: coords num/den with den | p^inf.
  unsigned k_a = 0;
  Int den_lcm = 1;
  for (const Rat& x : a.coeffs()) den_lcm = lcm(den_lcm, x.get_den());
  if (den_lcm != 1) {
    if (!is_power_of(den_lcm, p)) throw usage_error("unsplit: zeta-part has non-p denominators");
    k_a = valuation(den_lcm, p);
  }
  std::vector<Int> lift_c(n, Int(0));
  Int scale_a = pow(p, k_a);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rat& x = a.coeffs()[i];
    lift_c[i] = x.get_num() * exact_div(scale_a, x.get_den());
  }
  LocalizedCyclicElem lift_a(CyclicRingElem(n, std::move(lift_c)), p, k_a);

  // lift of b: t_sub^j -> t^j
  std::vector<Int> sub_c(n, Int(0));
  for (size_t j = 0; j < b.modulus(); ++j) sub_c[j] = b.num().coeffs()[j];
  LocalizedCyclicElem lift_b(CyclicRingElem(n, std::move(sub_c)), p, b.denom_exp());

  // e = 1 - Phi_{p^m}/p = (p - Phi)/p
  CyclicRingElem phi = CyclicRingElem::phi_pm(n);
  LocalizedCyclicElem e(CyclicRingElem::constant(n, p) - phi, p, 1);
  LocalizedCyclicElem one(CyclicRingElem::one(n), p, 0);
  return e * lift_a + (one - e) * lift_b;
}

CyclicRingElem cyclic_lift(const CycNum& f0, const CyclicRingElem& h, const Int& p) {
  PrimePower pp;
  if (!prime_power_decompose(Int(f0.level()), pp) || pp.exponent == 0)
    throw usage_error("cyclic_lift: level must be p^m with m >= 1");
  if (pp.prime != p) throw usage_error("cyclic_lift: prime mismatch");
  unsigned long n = f0.level();
  unsigned long sub = n / p.get_ui();
  if (h.modulus() != sub) throw usage_error("cyclic_lift: target modulus mismatch");
  if (!f0.is_integral()) throw std::logic_error("cyclic_lift: f0 must be integral");
  if (!(pi_map(f0) == ModularCyclic::reduce(h, p)))
    throw std::logic_error("cyclic_lift: pi(f0) != [h], no compatible lift exists");
  // Power-basis lift of f0.
  std::vector<Int> c(n, Int(0));
  for (size_t i = 0; i < f0.coeffs().size(); ++i) c[i] = f0.coeffs()[i].get_num();
  CyclicRingElem big(n, std::move(c));
  CyclicRingElem diff = res_cyclic(big, sub) - h;
  if (!diff.divisible_by_int(p)) throw std::logic_error("cyclic_lift: res(F) - h not divisible by p");
  CyclicRingElem hprime = diff.divided_by_int(p);
  CyclicRingElem out = big - ind_cyclic(hprime, n);
  return out;
}

}  // namespace repring
