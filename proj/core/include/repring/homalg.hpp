#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repring/cyclotomic.hpp"
#include "repring/matrix.hpp"
#include "repring/numeric.hpp"

namespace repring {

/// Supported coefficient rings: Z and the norm-Euclidean Z[zeta_n] for
/// n in {3, 4, 5, 8, 12} (level 1 collapses to Z).
struct EuclideanRingTag {
  unsigned long level = 1;

  static EuclideanRingTag integers() { return EuclideanRingTag{1}; }
  static EuclideanRingTag cyclotomic(unsigned long n);
  static EuclideanRingTag parse(const std::string& name);  // "z" or "zetaN"

  bool is_integers() const { return level == 1; }
  std::string name() const { return level == 1 ? "z" : "zeta" + std::to_string(level); }
  bool operator==(const EuclideanRingTag& o) const { return level == o.level; }
};

/// Ring operations for Z[zeta_n] on integral CycNum values, with Euclidean
/// division by nearest-lattice rounding (plus a small offset search) and a
/// deterministic canonical associate: minimize the hermitian square over
/// powers of the fundamental unit, then take the lexicographically smallest
/// torsion multiple.
struct CycRingOps {
  using Elem = CycNum;
  unsigned long level = 1;

  CycNum zero() const { return CycNum::from_rational(Rat(0), level); }
  CycNum one() const { return CycNum::from_rational(Rat(1), level); }
  CycNum add(const CycNum& a, const CycNum& b) const { return a + b; }
  CycNum sub(const CycNum& a, const CycNum& b) const { return a - b; }
  CycNum mul(const CycNum& a, const CycNum& b) const { return a * b; }
  CycNum neg(const CycNum& a) const { return -a; }
  bool eq(const CycNum& a, const CycNum& b) const { return a == b; }
  bool is_zero(const CycNum& a) const { return a.is_zero(); }
  bool is_unit(const CycNum& a) const;
  std::pair<CycNum, CycNum> divmod(const CycNum& a, const CycNum& b) const;
  Int size(const CycNum& a) const;  // |Norm(a)|
  CycNum canonical_unit(const CycNum& a) const;
  CycNum inv_unit(const CycNum& u) const { return u.inverse(); }

  /// Torsion units of Z[zeta_n] (all roots of unity in the field).
  std::vector<CycNum> torsion_units() const;
  /// A fundamental unit for the infinite part, or nothing when the unit
  /// group is finite (n in {1, 3, 4}).
  std::optional<CycNum> fundamental_unit() const;
};

using CycMat = Mat<CycRingOps>;

CycMat make_cyc_mat(const EuclideanRingTag& ring, const std::vector<std::vector<CycNum>>& rows);

/// Canonical HNF basis matrix (over Z) of the ideal (d), an
/// associate-insensitive fingerprint of d.
IntMat ideal_hnf(const EuclideanRingTag& ring, const CycNum& d);

/// Finitely presented module over the tagged ring: cokernel of the row
/// space of `relations` inside R^generators.
class FPModule {
 public:
  FPModule(EuclideanRingTag ring, CycMat relations);
  static FPModule free_module(const EuclideanRingTag& ring, size_t rank);
  static FPModule zero_module(const EuclideanRingTag& ring);
  /// R / (d).
  static FPModule cyclic_quotient(const EuclideanRingTag& ring, const CycNum& d);
  static FPModule direct_sum(const FPModule& a, const FPModule& b);

  const EuclideanRingTag& ring() const { return ring_; }
  const CycMat& relations() const { return rel_; }
  size_t generators() const { return rel_.cols(); }

  struct Invariants {
    size_t rank = 0;                     // free rank
    std::vector<CycNum> torsion;        // nonunit nonzero SNF entries, canonical
    std::vector<IntMat> torsion_ideals;  // ideal HNFs, associate-free
    Int torsion_order = 1;               // prod |R/(d_i)| = prod |N(d_i)|
  };
  const Invariants& invariants() const;

  bool is_zero() const;
  /// Same isomorphism class: equal free rank and equal torsion ideal list.
  bool same_class(const FPModule& o) const;
  std::string describe() const;

 private:
  EuclideanRingTag ring_;
  CycMat rel_;
  mutable std::optional<Invariants> inv_;
};

/// Smith normal form with transformation matrices; wraps smith() and
/// re-verifies U * M * V = D by multiplication.
struct SmithResult {
  CycMat d;
  CycMat u;
  CycMat v;
  std::vector<CycNum> diagonal;
};
SmithResult smith_normal_form(const EuclideanRingTag& ring, const CycMat& m);

FPModule tensor(const FPModule& m, const FPModule& n);
FPModule tor1(const FPModule& m, const FPModule& n);

/// Finitely presented flat over a PID = free: no torsion in the invariants.
/// Equivalent (and cross-checked in tests) to tor1(M, M) = 0.
bool is_flat(const FPModule& m);

struct KunnethEnds {
  FPModule tensor_part;
  FPModule tor_part;
};
KunnethEnds kunneth_ends(const FPModule& m, const FPModule& n);

/// Necessary invariants for a short exact sequence
/// tensor >-> middle ->> tor: rank additivity and torsion-order
/// multiplicativity. The extension class itself is not (and cannot be)
/// checked from the ends alone.
struct SESReport {
  bool rank_additive = false;
  bool torsion_multiplicative = false;
  bool consistent = false;
  size_t rank_left = 0, rank_right = 0, rank_middle = 0;
  Int torsion_left = 1, torsion_right = 1, torsion_middle = 1;
};
SESReport verify_ses(const KunnethEnds& ends, const FPModule& middle);

}  // namespace repring
