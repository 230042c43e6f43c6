#pragma once

#include <map>
#include <memory>
#include <vector>

#include "repring/cyclic_ring.hpp"
#include "repring/cyclotomic.hpp"
#include "repring/group.hpp"

namespace repring {

/// Exact class function on a finite permutation group; one CycNum value per
/// conjugacy class, at level exponent(G).
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(PermGroup g, std::vector<CycNum> values);

  static ClassFunction zero(const PermGroup& g);
  static ClassFunction one(const PermGroup& g);
  static ClassFunction constant(const PermGroup& g, const Rat& v);

  const PermGroup& group() const { return g_; }
  const std::vector<CycNum>& values() const { return v_; }
  unsigned long level() const { return level_; }

  const CycNum& value_on_class(size_t c) const { return v_[c]; }
  const CycNum& value_at(const Perm& p) const;
  const CycNum& value_at_id(size_t elem_id) const;
  CycNum degree() const { return value_at(Perm(g_.degree())); }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;
  ClassFunction operator-() const;
  ClassFunction scaled(const Rat& r) const;
  ClassFunction pow(const Int& e) const;
  bool operator==(const ClassFunction& o) const;
  bool is_zero() const;

  /// Applies the Galois map zeta -> zeta^j to every value.
  ClassFunction galois(long j) const;

  /// All values have integer coordinates.
  bool is_integral() const;

 private:
  PermGroup g_;
  unsigned long level_ = 1;
  std::vector<CycNum> v_;
};

/// <a, b> = |G|^{-1} sum_g a(g) b(g^{-1}), exact.
CycNum inner_product(const ClassFunction& a, const ClassFunction& b);

/// The complete table of irreducible complex characters, computed exactly
/// by closing a seed set (permutation characters of the coset actions plus
/// characters induced from cyclic subgroups) under tensor products and
/// peeling off norm-one constituents. Cached per group.
class CharacterTable {
 public:
  static std::shared_ptr<const CharacterTable> of(const PermGroup& g);

  const PermGroup& group() const { return g_; }
  const std::vector<ClassFunction>& irreducibles() const { return irr_; }
  size_t size() const { return irr_.size(); }
  unsigned long level() const { return level_; }

  size_t num_classes() const { return irr_.empty() ? 0 : irr_[0].values().size(); }
  const std::vector<size_t>& class_sizes() const { return class_sizes_; }
  const std::vector<Perm>& class_reps() const { return class_reps_; }
  const std::vector<unsigned long>& class_orders() const { return class_orders_; }

  /// Exact coordinates of a class function in the irreducible basis.
  std::vector<Rat> decompose(const ClassFunction& f) const;

 private:
  PermGroup g_;
  unsigned long level_ = 1;
  std::vector<ClassFunction> irr_;
  std::vector<size_t> class_sizes_;
  std::vector<Perm> class_reps_;
  std::vector<unsigned long> class_orders_;
  void build();
};

/// Element of R(G) with integer coordinates in the irreducible basis.
class VirtualCharacter {
 public:
  VirtualCharacter() = default;
  VirtualCharacter(std::shared_ptr<const CharacterTable> table, std::vector<Int> coords);
  /// Decomposes a class function; throws std::logic_error if any coordinate
  /// is non-integral.
  static VirtualCharacter from_class_function(const ClassFunction& f);
  static VirtualCharacter one(const PermGroup& g);
  static VirtualCharacter constant(const PermGroup& g, const Int& v);

  const std::shared_ptr<const CharacterTable>& table() const { return table_; }
  const PermGroup& group() const { return table_->group(); }
  const std::vector<Int>& coords() const { return coords_; }
  const ClassFunction& cf() const { return cf_; }

  Int dimension() const;  // value at the identity, an integer

  VirtualCharacter operator+(const VirtualCharacter& o) const;
  VirtualCharacter operator-(const VirtualCharacter& o) const;
  VirtualCharacter operator*(const VirtualCharacter& o) const;
  VirtualCharacter pow(const Int& e) const;
  bool operator==(const VirtualCharacter& o) const;

 private:
  std::shared_ptr<const CharacterTable> table_;
  std::vector<Int> coords_;
  ClassFunction cf_;
};

/// Mackey operations at the class-function level. Groups must act on the
/// same point set; K <= H is checked element-wise.
ClassFunction restrict_cf(const ClassFunction& f, const PermGroup& k);
ClassFunction induce_cf(const ClassFunction& f, const PermGroup& h);
/// con_{g,H}: R(H) -> R(gHg^{-1}), (con f)(g h g^{-1}) = f(h).
ClassFunction conjugate_cf(const ClassFunction& f, const Perm& g);
/// Same, landing on a supplied instance of gHg^{-1} (avoids building a new
/// group object when the target is already known).
ClassFunction conjugate_cf(const ClassFunction& f, const Perm& g, const PermGroup& target);

VirtualCharacter restrict_vc(const VirtualCharacter& f, const PermGroup& k);
VirtualCharacter induce_vc(const VirtualCharacter& f, const PermGroup& h);
VirtualCharacter conjugate_vc(const VirtualCharacter& f, const Perm& g);

/// The right-hand side of the double-coset formula for res^L_H I^H_K f,
/// evaluated literally: sum over x in L\H/K of I ( con ( res f ) ).
ClassFunction mackey_double_coset(const Subgroup& l, const Subgroup& h, const Subgroup& k,
                                  const ClassFunction& f);

/// Galois exponents of the Weyl action: for cyclic H <= G, the set of a
/// with g c g^{-1} = c^a for g in N_G(H), as automorphisms zeta -> zeta^a
/// of Z[zeta_{|H|}].
std::vector<long> weyl_action(const PermGroup& g, const Subgroup& h);

/// Conversions between R(Z/n) and class functions on a cyclic subgroup,
/// relative to a chosen generator c (t maps to the character c -> zeta_n).
ClassFunction cyclic_to_cf(const CyclicRingElem& f, const PermGroup& cyclic_group, const Perm& gen);
CyclicRingElem cf_to_cyclic(const ClassFunction& f, const Perm& gen);
/// Rational-coefficient variants for localized elements.
ClassFunction cyclic_to_cf_rat(const std::vector<Rat>& coeffs, const PermGroup& cyclic_group,
                               const Perm& gen);
std::vector<Rat> cf_to_cyclic_rat(const ClassFunction& f, const Perm& gen);

/// A compatible family (f_H)_H over a conjugation-closed set of subgroups
/// of a common parent, satisfying res-compatibility
/// res^L_H(f_H) = f_L and conjugation-equivariance con_g(f_H) = f_{gHg^-1}.
struct MackeyFamily {
  Int prime;
  PermGroup parent;
  std::vector<Subgroup> members;
  std::vector<ClassFunction> entries;  // aligned with members

  size_t index_of(const std::vector<size_t>& ids) const;
  size_t index_of(const Subgroup& h) const { return index_of(h.ids); }
  const ClassFunction& at(const Subgroup& h) const { return entries[index_of(h)]; }

  MackeyFamily entrywise_mul(const MackeyFamily& o) const;
  MackeyFamily entrywise_pow(const Int& e) const;
  bool entries_integral() const;
};

struct MackeyAuditReport {
  bool res_ok = true;
  bool con_ok = true;
  size_t res_checked = 0;
  size_t con_checked = 0;
  std::string first_failure;
  bool ok() const { return res_ok && con_ok; }
};

/// Exhaustive (res)/(con) audit over all containment pairs of members and
/// all parent elements.
MackeyAuditReport audit_mackey_family(const MackeyFamily& fam);

}  // namespace repring
