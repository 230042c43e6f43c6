#pragma once

#include <string>
#include <vector>

#include "repring/cyclotomic.hpp"
#include "repring/numeric.hpp"

namespace repring {

/// Element of R(Z/n) = Z[t]/(t^n - 1), integer coefficient vector of
/// length n in the exponent basis t^0..t^{n-1}.
class CyclicRingElem {
 public:
  explicit CyclicRingElem(unsigned long n) : n_(n), c_(n, Int(0)) {
    if (n == 0) throw usage_error("cyclic modulus must be >= 1");
  }
  CyclicRingElem(unsigned long n, std::vector<Int> coeffs);

  static CyclicRingElem one(unsigned long n) { return constant(n, 1); }
  static CyclicRingElem constant(unsigned long n, Int v);
  static CyclicRingElem t_power(unsigned long n, unsigned long e);
  /// Phi_{p^m} as an element of R(Z/p^m).
  static CyclicRingElem phi_pm(unsigned long pm);

  unsigned long modulus() const { return n_; }
  const std::vector<Int>& coeffs() const { return c_; }

  CyclicRingElem operator+(const CyclicRingElem& o) const;
  CyclicRingElem operator-(const CyclicRingElem& o) const;
  CyclicRingElem operator*(const CyclicRingElem& o) const;
  CyclicRingElem operator-() const;
  bool operator==(const CyclicRingElem& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const CyclicRingElem& o) const { return !(*this == o); }

  CyclicRingElem scaled(const Int& v) const;
  CyclicRingElem pow(const Int& e) const;

  bool is_zero() const;
  /// The dimension map f -> f(1), a ring homomorphism to Z.
  Int eval_at_one() const;
  /// True if every coefficient is divisible by v.
  bool divisible_by_int(const Int& v) const;
  CyclicRingElem divided_by_int(const Int& v) const;  // exact, throws otherwise

  std::string to_string() const { return poly::to_string(c_); }

 private:
  unsigned long n_;
  std::vector<Int> c_;
};

/// Class of an element of Z[t]/(t^n - 1, p): coefficients reduced to [0, p).
struct ModularCyclic {
  unsigned long modulus = 1;
  Int p = 2;
  std::vector<Int> c;

  static ModularCyclic reduce(const CyclicRingElem& f, const Int& p);
  bool operator==(const ModularCyclic& o) const;
  bool is_one() const;
  std::string to_string() const { return poly::to_string(c); }
};

/// Localized element f = num / p^k of R(Z/n)[1/p]; k is kept minimal.
class LocalizedCyclicElem {
 public:
  LocalizedCyclicElem(CyclicRingElem num, Int p, unsigned denom_exp = 0);
  static LocalizedCyclicElem integral(CyclicRingElem f, Int p) {
    return LocalizedCyclicElem(std::move(f), std::move(p), 0);
  }

  const CyclicRingElem& num() const { return num_; }
  const Int& prime() const { return p_; }
  unsigned denom_exp() const { return k_; }
  unsigned long modulus() const { return num_.modulus(); }

  LocalizedCyclicElem operator+(const LocalizedCyclicElem& o) const;
  LocalizedCyclicElem operator-(const LocalizedCyclicElem& o) const;
  LocalizedCyclicElem operator*(const LocalizedCyclicElem& o) const;
  bool operator==(const LocalizedCyclicElem& o) const;

  bool is_integral() const { return k_ == 0; }
  const CyclicRingElem& as_integral() const;  // throws unless k == 0
  /// num / p^k with k cleared by multiplying with p^k: returns num and the
  /// exponent needed.
  std::string to_string() const;

 private:
  CyclicRingElem num_;
  Int p_;
  unsigned k_;
  void normalize();
};

/// Restriction R(Z/n) -> R(Z/d) for d | n: t -> t, exponents mod d.
CyclicRingElem res_cyclic(const CyclicRingElem& f, unsigned long d);
LocalizedCyclicElem res_cyclic(const LocalizedCyclicElem& f, unsigned long d);

/// Induction R(Z/d) -> R(Z/n) for d | n: additive, ind(t^j) = t^j (1 + t^d
/// + ... + t^{n-d}). Satisfies res(ind(h)) = (n/d) h and, for n = p^m,
/// d = p^{m-1}, ind(res(f)) = Phi_{p^m} f.
CyclicRingElem ind_cyclic(const CyclicRingElem& h, unsigned long n);
LocalizedCyclicElem ind_cyclic(const LocalizedCyclicElem& h, unsigned long n);

/// Projection R(Z/p^m) -> Z[t]/(Phi_{p^m}) = Z[zeta_{p^m}]; the modulus
/// must be a prime power (1 = p^0 is allowed and lands in Z).
CycNum mod_phi(const CyclicRingElem& f);
/// mod_phi of num / p^k, as a CycNum with p-power denominators.
CycNum mod_phi(const LocalizedCyclicElem& f);

/// The composite Z[zeta_{p^m}] -> Z[t]/(Phi_{p^m}, p) -> Z[t]/(t^{p^{m-1}}-1, p)
/// induced by Phi_{p^m}(t) - p = (t^{p^{m-1}}-1)(...). Requires the level of
/// f to be p^m with m >= 1 and f integral.
ModularCyclic pi_map(const CycNum& f);

/// True iff the class of f in Z[t]/(t^m - 1, p) is invertible, decided by
/// the multiplication matrix over F_p.
bool unit_in_modular_quotient(const CyclicRingElem& f, const Int& p);

/// The splitting R(Z/p^m)[1/p] = Z[zeta_{p^m}, 1/p] (+) R(Z/p^{m-1})[1/p]
/// given by (mod_phi, res); unsplit is the two-sided inverse built from the
/// idempotent 1 - Phi_{p^m}/p.
struct SplitParts {
  CycNum zeta_part;
  LocalizedCyclicElem sub_part;
};
SplitParts split_decomposition(const LocalizedCyclicElem& f);
LocalizedCyclicElem unsplit(const CycNum& a, const LocalizedCyclicElem& b);

/// Canonical lift for the cyclic tower: given f0 in Z[zeta_{p^m}] and
/// h in R(Z/p^{m-1}) with pi(f0) = [h] mod p, returns ftilde in R(Z/p^m)
/// with mod_phi(ftilde) = f0 and res(ftilde) = h.
CyclicRingElem cyclic_lift(const CycNum& f0, const CyclicRingElem& h, const Int& p);

}  // namespace repring
