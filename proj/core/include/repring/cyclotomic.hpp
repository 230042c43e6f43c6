#pragma once

#include <string>
#include <vector>

#include "repring/numeric.hpp"
#include "repring/poly.hpp"

namespace repring {

/// The n-th cyclotomic polynomial with integer coefficients, computed by
/// iterated exact division of t^n - 1 by the lower-index factors. Cached.
class CyclotomicPoly {
 public:
  explicit CyclotomicPoly(unsigned long n);

  unsigned long index() const { return n_; }
  const std::vector<Int>& coeffs() const { return c_; }
  unsigned long degree() const { return c_.size() - 1; }
  std::string to_string() const { return poly::to_string(c_); }

  static const std::vector<Int>& get(unsigned long n);

 private:
  unsigned long n_;
  std::vector<Int> c_;
};

/// Exact element of Q(zeta_n), stored as rational coordinates in the power
/// basis 1, zeta, ..., zeta^{phi(n)-1} reduced mod Phi_n. Arithmetic never
/// rounds. Operands must share a level; use embed()/lower_to() to move
/// between levels.
class CycNum {
 public:
  CycNum() : level_(1), c_(1, Rat(0)) {}
  explicit CycNum(const Rat& r) : level_(1), c_(1, r) {}
  explicit CycNum(long v) : level_(1), c_(1, Rat(v)) {}
  CycNum(unsigned long level, std::vector<Rat> coeffs);

  static CycNum zeta(unsigned long level, long power = 1);
  static CycNum from_rational(const Rat& r, unsigned long level);

  unsigned long level() const { return level_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;  // all coordinates in Z
  Rat rational_part() const;  // constant coordinate
  Rat as_rational() const;   // throws if not rational

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  CycNum scaled(const Rat& r) const;
  CycNum pow(unsigned long e) const;
  CycNum inverse() const;  // field inverse, throws on zero

  /// Galois automorphism zeta -> zeta^j, gcd(j, level) = 1.
  CycNum galois(long j) const;
  CycNum conj() const { return galois(-1); }

  Rat norm() const;   // product of all Galois conjugates
  Rat trace() const;  // sum of all Galois conjugates
  Rat t2() const;     // trace(x * conj(x)), the hermitian square

  /// Re-express at a multiple level m (level | m).
  CycNum embed(unsigned long m) const;
  /// Re-express at a divisor level m (m | level); throws std::logic_error
  /// if the element does not lie in Q(zeta_m).
  CycNum lower_to(unsigned long m) const;

  /// Total order: by level, then lexicographic on coordinates.
  static int compare(const CycNum& a, const CycNum& b);

  std::string to_string() const;

 private:
  unsigned long level_;
  std::vector<Rat> c_;
};

inline CycNum operator*(const Rat& r, const CycNum& x) { return x.scaled(r); }

/// Element of Z[t, 1/n]/(t^n - 1): a length-n rational coefficient vector
/// whose denominators divide a power of n.
class RationalCyclicPoly {
 public:
  RationalCyclicPoly(unsigned long modulus, std::vector<Rat> coeffs);

  unsigned long modulus() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  RationalCyclicPoly operator+(const RationalCyclicPoly& o) const;
  RationalCyclicPoly operator-(const RationalCyclicPoly& o) const;
  RationalCyclicPoly operator*(const RationalCyclicPoly& o) const;
  bool operator==(const RationalCyclicPoly& o) const;

  std::string to_string() const { return poly::to_string(c_); }

 private:
  unsigned long n_;
  std::vector<Rat> c_;
};

/// The idempotent psi_k = t (t^n-1) Phi_k'(t) / (n Phi_k(t)) in
/// Z[t, 1/n]/(t^n - 1), for k | n. The family (psi_k)_{k|n} is a complete
/// orthogonal system: sum_k psi_k = 1 and psi_j psi_k = delta_{jk} psi_k.
RationalCyclicPoly psi_idempotent(unsigned long k, unsigned long n);

/// Z-basis, in canonical echelon form, of the sublattice of Z[zeta_n] fixed
/// by every Galois automorphism zeta -> zeta^j for j in W. W is closed
/// under composition (the generated subgroup is used).
std::vector<CycNum> fixed_sublattice(unsigned long n, const std::vector<long>& w);

}  // namespace repring
