#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "repring/character.hpp"

namespace repring {

/// Finitely generated multiplicative subset of R(G): the monoid generated
/// by `generators` together with 1 (the empty product).
struct MultSet {
  PermGroup group;
  std::vector<VirtualCharacter> generators;
};

/// Primes that become invertible at the trivial-subgroup level: exactly the
/// primes dividing some generator dimension. A dimension-zero generator
/// collapses the integer part entirely, making every prime invertible.
struct DivisiblePrimes {
  bool all = false;
  std::vector<Int> primes;  // ascending, when !all
  bool contains(const Int& p) const;
};

struct UnitWitness {
  std::vector<unsigned long> exponents;  // product = prod gen_i ^ exponents[i]
  VirtualCharacter cofactor;             // f * cofactor = product
  VirtualCharacter product;
};

struct NonUnitCertificate {
  size_t class_index;    // conjugacy class of H carrying the obstruction
  bool vanishes = false;  // f's value vanishes while no generator's does
  Int obstruction_prime = 0;  // else: q | N(f(g)) but q | no generator norm
  std::string describe() const;
};

struct UnitAnswer {
  enum class Verdict { unit, nonunit, undecided };
  Verdict verdict = Verdict::undecided;
  unsigned long bound = 0;
  std::optional<UnitWitness> witness;
  std::optional<NonUnitCertificate> certificate;

  bool is_unit() const { return verdict == Verdict::unit; }
  bool is_nonunit() const { return verdict == Verdict::nonunit; }
  bool is_undecided() const { return verdict == Verdict::undecided; }
  std::string verdict_name() const;
};

constexpr unsigned long kDefaultUnitBound = 8;

/// Generator-wise restriction of the profile to a subgroup H; consumers
/// must treat the result up to saturation.
MultSet restricted_profile(const MultSet& s, const PermGroup& h);

DivisiblePrimes divisible_primes(const MultSet& s);

/// Semidecision of membership of f in the saturation of S.
///  - unit: a product s of at most `bound` generators with f | s was found
///    (an exact integer linear solve in the irreducible basis); the witness
///    re-verifies by multiplication.
///  - nonunit: an evaluation homomorphism (the value at some conjugacy
///    class) obstructs: f vanishes where no generator does, or a prime
///    divides N(f(g)) that divides no generator norm there.
///  - undecided otherwise. Verdicts never flip as the bound grows.
UnitAnswer is_unit(const VirtualCharacter& f, const MultSet& s, unsigned long bound = kDefaultUnitBound);

/// Re-runs the checkable part of an answer. Returns false if the witness or
/// certificate fails to verify.
bool reverify(const UnitAnswer& ans, const VirtualCharacter& f, const MultSet& s);

/// Memoizing wrapper around a base profile: caches decided unit queries per
/// subgroup (a monotone memo table; concurrent inserts of consistent
/// answers are safe).
class UnitProfile {
 public:
  explicit UnitProfile(MultSet base);

  const MultSet& base() const { return base_; }
  const DivisiblePrimes& divisible() const { return div_; }
  MultSet restricted(const PermGroup& h) const;

  UnitAnswer query(const VirtualCharacter& f, unsigned long bound = kDefaultUnitBound) const;

 private:
  MultSet base_;
  DivisiblePrimes div_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<const void*, std::vector<Int>>, UnitAnswer> memo_;
  mutable std::map<const void*, MultSet> restricted_;
};

/// Mutual saturation containment at the given bound.
struct CertCompareResult {
  enum class Verdict { equal, distinct, undecided };
  Verdict verdict = Verdict::undecided;
  int failing_set = 0;  // 1 or 2 when distinct/undecided caused by a generator
  std::optional<VirtualCharacter> failing_generator;
  std::optional<UnitAnswer> failing_answer;
  std::string verdict_name() const;
};
CertCompareResult certificates_equal(const MultSet& s1, const MultSet& s2,
                                     unsigned long bound = kDefaultUnitBound);

/// Symbolic description of the model invariant: for every subgroup H,
/// K_0 = R(H) localized at the restricted profile and K_1 = 0; cyclic
/// prime-power subgroups at divisible primes additionally record the
/// cyclotomic tower splitting of the localized ring.
struct KGroupDescription {
  Subgroup subgroup;
  std::vector<VirtualCharacter> restricted_generators;
  DivisiblePrimes divisible;
  bool k1_zero = true;
  std::vector<unsigned long> zeta_summand_levels;  // nonempty for split cyclic H
};
std::vector<KGroupDescription> model_kgroups(const MultSet& s);

}  // namespace repring
