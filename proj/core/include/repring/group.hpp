#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "repring/perm.hpp"

namespace repring {

struct Subgroup;

/// Immutable finite permutation group. Copies share state; expensive
/// derived data (conjugacy classes, the subgroup lattice) is computed
/// lazily behind a mutex and cached on the shared state, so concurrent
/// reads are safe.
///
/// Canonical conventions, relied on by everything downstream:
///  - the element list is sorted lexicographically on image arrays;
///  - conjugacy classes are ordered by (element order, class size, minimal
///    element) with the minimal element as representative;
///  - subgroups are ordered by (order, element id list).
class PermGroup {
 public:
  PermGroup() = default;

  /// Closure of the generators; throws if the order exceeds `cap`.
  explicit PermGroup(std::vector<Perm> generators, unsigned long cap = kDefaultOrderCap);

  static constexpr unsigned long kDefaultOrderCap = 5000;

  /// Trivial group on `degree` points.
  static PermGroup trivial(size_t degree);

  size_t degree() const;
  unsigned long order() const;
  const std::vector<Perm>& elements() const;
  const std::vector<Perm>& generators() const;

  const Perm& element(size_t id) const { return elements()[id]; }
  /// Index into elements(), or -1.
  int element_index(const Perm& p) const;
  bool contains(const Perm& p) const { return element_index(p) >= 0; }

  size_t mul(size_t a, size_t b) const;  // element ids
  size_t inv(size_t a) const;
  size_t identity_index() const;

  bool is_abelian() const;
  bool is_cyclic() const;
  /// For a cyclic group: the lexicographically minimal generator.
  Perm cyclic_generator() const;
  unsigned long exponent() const;

  struct ConjClasses {
    std::vector<std::vector<size_t>> members;  // element ids per class
    std::vector<size_t> rep;                   // minimal element id per class
    std::vector<size_t> class_of;              // element id -> class index
  };
  const ConjClasses& conjugacy_classes() const;

  /// Identity of the underlying shared state; usable as a cache key.
  const void* key() const { return d_.get(); }

  bool same_group(const PermGroup& o) const;
  /// True if every element of this group lies in `o` (degrees must match).
  bool subgroup_of(const PermGroup& o) const;

  bool operator==(const PermGroup& o) const { return same_group(o); }

 private:
  struct Data;
  std::shared_ptr<Data> d_;
  explicit PermGroup(std::shared_ptr<Data> d) : d_(std::move(d)) {}

  friend struct Subgroup;
  friend std::vector<Subgroup> subgroups(const PermGroup&);
  friend Subgroup make_subgroup(const PermGroup&, std::vector<size_t>);
  static PermGroup from_sorted_elements(std::vector<Perm> elems, std::vector<Perm> gens);
};

/// A subgroup handle: the subgroup as a group of its own plus the parent it
/// sits in. Element ids in `ids` refer to the parent's element list.
struct Subgroup {
  PermGroup group;
  PermGroup parent;
  std::vector<size_t> ids;  // sorted parent element ids

  unsigned long order() const { return group.order(); }
  bool contains_subgroup(const Subgroup& other) const;
  bool same_subgroup(const Subgroup& other) const;
  /// g H g^{-1} as a subgroup of the same parent.
  Subgroup conjugated_by(const Perm& g) const;
  std::string describe() const;
};

/// Builds the Subgroup handle for an element-subset of `parent` given by
/// parent element ids (must be closed; verified).
Subgroup make_subgroup(const PermGroup& parent, std::vector<size_t> ids);
Subgroup whole_group_as_subgroup(const PermGroup& g);
Subgroup trivial_subgroup(const PermGroup& g);
/// The cyclic subgroup generated by one element.
Subgroup cyclic_subgroup(const PermGroup& parent, const Perm& g);

/// All subgroups in canonical order: breadth-first closure over the cyclic
/// subgroups followed by join-closure. Cached on the group.
std::vector<Subgroup> subgroups(const PermGroup& g);

/// Conjugacy classes of subgroups; each class lists indices into
/// subgroups(g), the representative is the first (canonically minimal).
struct SubgroupClasses {
  std::vector<std::vector<size_t>> classes;
  std::vector<size_t> class_of;  // subgroup index -> class
};
const SubgroupClasses& subgroup_classes(const PermGroup& g);

/// N_E(H) = {g in E : g H g^-1 = H}; requires H <= E (inside a common parent).
Subgroup normalizer(const Subgroup& e, const Subgroup& h);

/// Minimal-element representatives x of the double cosets L\M/H, where
/// L, H <= M. Each representative is a parent element id; the sizes sum to
/// |M|.
struct DoubleCosets {
  std::vector<size_t> reps;
  std::vector<size_t> sizes;
};
DoubleCosets double_cosets(const Subgroup& l, const Subgroup& m, const Subgroup& h);

/// True iff every element order is 1 or a prime power. If false,
/// `witness_order` receives the offending order.
bool is_eppo(const PermGroup& g, unsigned long* witness_order = nullptr);

/// The p-subgroup family X_p with its cyclic part Y_p, for each prime p
/// dividing |G|, in ascending prime order. Throws verified_negative for
/// non-EPPO groups unless `allow_non_eppo`.
struct SubgroupFamily {
  Int prime;
  unsigned sylow_exponent = 0;        // r with p^r || |G|
  std::vector<Subgroup> members;      // all p-subgroups, canonical order
  std::vector<size_t> cyclic;         // indices into members
};
std::vector<SubgroupFamily> prime_subgroup_families(const PermGroup& g, bool allow_non_eppo = false);

/// Representatives of conjugacy classes of cyclic subgroups of g (conjugacy
/// inside g), canonical order, including the trivial subgroup.
std::vector<Subgroup> cyclic_subgroup_class_reps(const PermGroup& g);

/// Catalog lookup: grammar ^(C|D|Q|S|A)[0-9]+$, or explicit generators in
/// disjoint-cycle notation separated by ';', e.g. "(0 1 2)(3 4); (0 1)".
/// D_n is Z/n x| Z/2 of order 2n; Q_n the generalized quaternion group of
/// order n (n a power of two, n >= 8).
PermGroup catalog_group(const std::string& name, unsigned long cap = PermGroup::kDefaultOrderCap);

}  // namespace repring
