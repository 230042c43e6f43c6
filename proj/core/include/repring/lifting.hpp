#pragma once

#include <string>
#include <vector>

#include "repring/character.hpp"
#include "repring/localization.hpp"

namespace repring {

struct LiftLogEntry {
  std::string step;
  bool pass = true;
  std::string detail;
};
using LiftLog = std::vector<LiftLogEntry>;

/// Integer solution (phi_H) to sum_H Ind_H^G(phi_H) = 1 over representatives
/// of the conjugacy classes of elementary subgroups (= prime-power-order
/// subgroups for an EPPO group). Any valid solution is acceptable; the
/// identity is re-verified on construction.
struct BrauerDecomposition {
  PermGroup group;
  std::vector<Subgroup> elementary;          // class representatives, canonical order
  std::vector<VirtualCharacter> coefficients;  // phi_H per representative
};
BrauerDecomposition brauer_coefficients(const PermGroup& g);

/// Lemma-level building blocks for the family constructions. Families are
/// built over one prime's subgroup family; entries are class functions on
/// the member subgroups.

/// Non-divisible case seed: a res-compatible family over the cyclic
/// p-subgroups with f_K a multiple of f, f_{e} a power of res(f), and every
/// entry congruent to 1 mod p.
MackeyFamily pre_family(const PermGroup& g, const SubgroupFamily& fam, const Subgroup& k,
                        const VirtualCharacter& f, const UnitProfile& profile, unsigned long bound,
                        LiftLog* log = nullptr);

/// Conjugation-symmetrizes and deepens the congruence to mod p^{r_k}.
MackeyFamily stabilize_family(const MackeyFamily& family, const PermGroup& g,
                              const SubgroupFamily& fam);

/// Extends a stabilized cyclic family to the full p-subgroup family via the
/// normalizer-weighted induction formula; all divisions must be exact.
MackeyFamily extend_to_p_groups(const MackeyFamily& family, const PermGroup& g,
                                const SubgroupFamily& fam);

/// pre_family + stabilize + extend: the full non-divisible-prime lift.
MackeyFamily family_for_nondivisible_prime(const PermGroup& g, const SubgroupFamily& fam,
                                           const Subgroup& k, const VirtualCharacter& f,
                                           const UnitProfile& profile, unsigned long bound,
                                           LiftLog* log = nullptr);

/// Divisible-prime family with psi_{e} = p^{r} a, built from the idempotent
/// tower psi' = 1 - Phi/p + I(psi')/p and the induction formula.
MackeyFamily integer_lift(const PermGroup& g, const SubgroupFamily& fam, const Int& a,
                          const UnitProfile& profile, unsigned long bound, LiftLog* log = nullptr);

/// Divisible-prime family whose K-entry is a multiple of f, built from the
/// cyclotomic splitting (unsplit) along cyclic towers and the fixed-subring
/// linear system at non-cyclic members, then cleared of denominators.
MackeyFamily p_divisible_lift(const PermGroup& g, const SubgroupFamily& fam, const Subgroup& k,
                              const VirtualCharacter& f, const UnitProfile& profile,
                              unsigned long bound, LiftLog* log = nullptr);

/// Evaluates the extension formula at one member; used by the consistency
/// audits (for extend-built families the result must equal the entry).
ClassFunction extension_formula_at(const MackeyFamily& family, const SubgroupFamily& fam,
                                   const Subgroup& e);
bool check_extension_consistency(const MackeyFamily& family, const SubgroupFamily& fam);
/// The vanishing identity behind the formula: for cyclic H not contained in
/// L, res^{H cap L} of the H-correction term is zero.
bool check_correction_vanishing(const MackeyFamily& family, const SubgroupFamily& fam);

struct LiftResult {
  VirtualCharacter f_tilde;
  CyclicRingElem multiplier{1};       // res^K(f_tilde) = multiplier * f in R(K)
  Perm k_generator;                   // generator fixing the R(Z/|K|) iso
  Subgroup k;
  std::vector<MackeyFamily> families;  // one per prime of |G|
  std::vector<Int> primes;             // aligned with families
  LiftLog log;

  bool all_passed() const;
};

/// The end-to-end construction: per-prime families matched at the trivial
/// subgroup, glued through the Brauer coefficients, with every
/// post-condition re-verified and logged. Throws verified_negative when the
/// profile certifies f as a nonunit at K, undecided_error when a unit query
/// exhausts its bound.
LiftResult assemble_and_glue(const PermGroup& g, const Subgroup& k, const CyclicRingElem& f,
                             const UnitProfile& profile, unsigned long bound = kDefaultUnitBound);

}  // namespace repring
