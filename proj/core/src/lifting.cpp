#include "repring/lifting.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "repring/matrix.hpp"

namespace repring {

namespace {

void log_step(LiftLog* log, const std::string& step, bool pass, const std::string& detail = "") {
  if (log) log->push_back(LiftLogEntry{step, pass, detail});
  if (!pass) throw std::logic_error("lifting: verification failed at step '" + step + "' " + detail);
}

size_t member_index(const SubgroupFamily& fam, const std::vector<size_t>& ids) {
  for (size_t i = 0; i < fam.members.size(); ++i)
    if (fam.members[i].ids == ids) return i;
  throw std::logic_error("lifting: subgroup is not a family member");
}

/// Cyclic members ascending by order (the family is canonically sorted).
std::vector<size_t> cyclic_indices(const SubgroupFamily& fam) {
  return fam.cyclic;
}

/// The subgroup generated by gen^p inside the parent, as a family member id
/// list.
std::vector<size_t> power_subgroup_ids(const PermGroup& parent, const Perm& gen, unsigned long p) {
  Perm gp(parent.degree());
  for (unsigned long i = 0; i < p; ++i) gp = gp.compose(gen);
  return cyclic_subgroup(parent, gp).ids;
}

bool cf_has_integral_coords(const ClassFunction& f) {
  auto table = CharacterTable::of(f.group());
  for (const Rat& c : table->decompose(f))
    if (c.get_den() != 1) return false;
  return true;
}

/// (f - 1) scaled by 1/w; `exact` demands the result stays in R(H).
ClassFunction minus_one_over(const ClassFunction& f, unsigned long w, bool exact) {
  Rat inv(1);
  inv /= Rat(static_cast<long>(w));
  ClassFunction out = (f - ClassFunction::one(f.group())).scaled(inv);
  if (exact && !cf_has_integral_coords(out))
    throw std::logic_error("lifting: inexact division by " + std::to_string(w) +
                           " (precondition violated)");
  return out;
}

LocalizedCyclicElem rat_vec_to_localized(const std::vector<Rat>& coeffs, const Int& p) {
  Int den = 1;
  for (const Rat& c : coeffs) den = lcm(den, c.get_den());
  unsigned k = 0;
  if (den != 1) {
    if (!is_power_of(den, p))
      throw std::logic_error("lifting: denominator " + to_string(den) + " is not a power of " +
                             to_string(p));
    k = valuation(den, p);
  }
  Int scale = pow(p, k);
  std::vector<Int> num(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i)
    num[i] = coeffs[i].get_num() * exact_div(scale, coeffs[i].get_den());
  return LocalizedCyclicElem(CyclicRingElem(coeffs.size(), std::move(num)), p, k);
}

std::vector<Rat> localized_to_rat_vec(const LocalizedCyclicElem& f) {
  Rat inv(1);
  inv /= Rat(pow(f.prime(), f.denom_exp()));
  std::vector<Rat> out;
  out.reserve(f.modulus());
  for (const Int& c : f.num().coeffs()) out.push_back(Rat(c) * inv);
  return out;
}

CycNum mod_phi_rat(unsigned long n, const std::vector<Rat>& coeffs) {
  CycNum out = CycNum::from_rational(Rat(0), n);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    out += CycNum::zeta(n, static_cast<long>(k)).scaled(coeffs[k]);
  }
  return out;
}

/// Cyclic subgroup class representatives of a member E, re-expressed as
/// subgroups of the big parent.
std::vector<Subgroup> cyclic_reps_in_parent(const Subgroup& e) {
  std::vector<Subgroup> out;
  for (const Subgroup& rep : cyclic_subgroup_class_reps(e.group)) {
    std::vector<size_t> ids;
    ids.reserve(rep.group.order());
    for (const Perm& x : rep.group.elements()) {
      int id = e.parent.element_index(x);
      if (id < 0) throw std::logic_error("lifting: subgroup element escapes the parent");
      ids.push_back(static_cast<size_t>(id));
    }
    out.push_back(make_subgroup(e.parent, std::move(ids)));
  }
  return out;
}

/// Common profile query that maps verdicts onto the pipeline's error
/// contract.
void require_unit(const UnitProfile& profile, const VirtualCharacter& f, unsigned long bound,
                  const std::string& what, LiftLog* log) {
  UnitAnswer a = profile.query(f, bound);
  if (a.is_nonunit())
    throw verified_negative(what + " is not a unit for the profile: " + a.certificate->describe());
  if (a.is_undecided())
    throw undecided_error(what + " could not be certified as a unit within bound " +
                          std::to_string(bound));
  log_step(log, "unit check: " + what, true, "witness exponents found");
}

Int match_exponent(const Int& base, const Int& target) {
  if (base == 1) {
    if (target != 1) throw std::logic_error("lifting: cannot match exponent from base 1");
    return 1;
  }
  if (base == -1) {
    if (target == 1) return 2;
    if (target == -1) return 1;
    throw std::logic_error("lifting: cannot match exponent from base -1");
  }
  Int e = 0, x = 1;
  while (x != target) {
    x *= base;
    ++e;
    if (abs(x) > abs(target)) throw std::logic_error("lifting: exponent matching failed");
  }
  if (e == 0) throw std::logic_error("lifting: exponent matching produced 0");
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Brauer coefficients

BrauerDecomposition brauer_coefficients(const PermGroup& g) {
  unsigned long w = 0;
  if (!is_eppo(g, &w))
    throw verified_negative("brauer_coefficients: group is not EPPO (element of order " +
                            std::to_string(w) + ")");
  BrauerDecomposition out;
  out.group = g;
  auto subs = subgroups(g);
  const auto& sc = subgroup_classes(g);
  for (const auto& cls : sc.classes) {
    const Subgroup& rep = subs[cls[0]];
    PrimePower pp;
    if (prime_power_decompose(Int(rep.order()), pp)) out.elementary.push_back(rep);
  }

  auto gtable = CharacterTable::of(g);
  size_t r = gtable->size();
  // Rows of the solve matrix: coordinates of Ind_H(psi) for every
  // (representative H, irreducible psi of H), in canonical order.
  std::vector<std::vector<Int>> rows;
  std::vector<std::pair<size_t, size_t>> row_src;  // (elementary index, irr index)
  for (size_t hi = 0; hi < out.elementary.size(); ++hi) {
    auto htable = CharacterTable::of(out.elementary[hi].group);
    for (size_t j = 0; j < htable->size(); ++j) {
      ClassFunction ind = induce_cf(htable->irreducibles()[j], g);
      auto coords = gtable->decompose(ind);
      std::vector<Int> row(r);
      for (size_t i = 0; i < r; ++i) {
        if (coords[i].get_den() != 1) throw std::logic_error("brauer: non-integral induction");
        row[i] = coords[i].get_num();
      }
      rows.push_back(std::move(row));
      row_src.emplace_back(hi, j);
    }
  }
  IntMat m(rows.size(), r);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < r; ++j) m(i, j) = rows[i][j];
  auto one_coords = gtable->decompose(ClassFunction::one(g));
  std::vector<Int> b(r);
  for (size_t i = 0; i < r; ++i) b[i] = one_coords[i].get_num();
  auto sol = solve_left(m, b);
  if (!sol) throw std::logic_error("brauer_coefficients: no integer solution (Brauer violated?)");

  for (size_t hi = 0; hi < out.elementary.size(); ++hi) {
    auto htable = CharacterTable::of(out.elementary[hi].group);
    std::vector<Int> coords(htable->size(), Int(0));
    for (size_t row = 0; row < row_src.size(); ++row)
      if (row_src[row].first == hi) coords[row_src[row].second] = (*sol)[row];
    out.coefficients.emplace_back(htable, std::move(coords));
  }

  // Re-verify the glue identity exactly.
  ClassFunction total = ClassFunction::zero(g);
  for (size_t hi = 0; hi < out.elementary.size(); ++hi)
    total = total + induce_cf(out.coefficients[hi].cf(), g);
  if (!(total == ClassFunction::one(g)))
    throw std::logic_error("brauer_coefficients: sum of inductions is not 1");
  return out;
}

// ---------------------------------------------------------------------------
// pre_family (non-divisible prime, cyclic tower)

MackeyFamily pre_family(const PermGroup& g, const SubgroupFamily& fam, const Subgroup& k,
                        const VirtualCharacter& f, const UnitProfile& profile, unsigned long bound,
                        LiftLog* log) {
  const Int& p = fam.prime;
  require_unit(profile, f, bound, "pre_family input at K", log);
  Int d = f.dimension();
  if (fmod(d, p) == 0)
    throw std::logic_error("pre_family: dimension divisible by p despite unit certificate");

  MackeyFamily out;
  out.prime = p;
  out.parent = g;
  for (size_t ci : cyclic_indices(fam)) out.members.push_back(fam.members[ci]);
  out.entries.resize(out.members.size());

  std::map<std::vector<size_t>, size_t> at;
  for (size_t i = 0; i < out.members.size(); ++i) at[out.members[i].ids] = i;

  unsigned long pl = p.get_ui();
  // Level 0: the trivial subgroup.
  if (out.members.front().order() != 1) throw std::logic_error("pre_family: missing trivial member");
  Int fe = pow(d, pl - 1);
  out.entries[0] = ClassFunction::constant(out.members[0].group, Rat(fe));

  unsigned max_level = 0;
  for (const Subgroup& m : out.members) max_level = std::max(max_level, valuation(Int(m.order()), p));

  // N: the exponent with entry_H = res^H_K(f)^N along the K-tower.
  Int n_accum = static_cast<long>(pl - 1);
  for (unsigned r = 1; r <= max_level; ++r) {
    Int pr = pow(p, r);
    std::vector<std::pair<size_t, ClassFunction>> level;
    for (size_t i = 0; i < out.members.size(); ++i) {
      const Subgroup& l = out.members[i];
      if (l.order() != pr) continue;
      if (k.contains_subgroup(l)) {
        level.emplace_back(i, restrict_cf(f.cf(), l.group).pow(n_accum));
      } else {
        Perm cl = l.group.cyclic_generator();
        size_t pi = at.at(power_subgroup_ids(g, cl, pl));
        Perm clp(g.degree());
        for (unsigned long t = 0; t < pl; ++t) clp = clp.compose(cl);
        CyclicRingElem h = cf_to_cyclic(out.entries[pi], clp);
        if (!(h - CyclicRingElem::one(h.modulus())).divisible_by_int(p))
          throw std::logic_error("pre_family: tower entry not congruent to 1 mod p");
        CyclicRingElem lift = cyclic_lift(CycNum::from_rational(Rat(1), pr.get_ui()), h, p);
        level.emplace_back(i, cyclic_to_cf(lift, l.group, cl));
      }
    }
    // Commit the level: fresh entries become p^r-th powers, existing lower
    // entries are raised the same way to keep res-compatibility.
    for (size_t i = 0; i < out.members.size(); ++i)
      if (out.members[i].order() < pr.get_ui()) out.entries[i] = out.entries[i].pow(pr);
    for (auto& [i, ftilde] : level) out.entries[i] = ftilde.pow(pr);
    n_accum *= pr;
  }

  // Post-conditions: res-compatibility, congruence mod p, and the K-entry
  // being a power of f.
  for (size_t i = 0; i < out.members.size(); ++i) {
    CyclicRingElem v = cf_to_cyclic(out.entries[i], out.members[i].group.is_cyclic()
                                                        ? out.members[i].group.cyclic_generator()
                                                        : Perm(g.degree()));
    if (!(v - CyclicRingElem::one(v.modulus())).divisible_by_int(p))
      throw std::logic_error("pre_family: entry not congruent to 1 mod p");
  }
  auto audit = audit_mackey_family(out);
  log_step(log, "pre_family (res) audit", audit.res_ok, audit.first_failure);
  return out;
}

// ---------------------------------------------------------------------------
// stabilize_family

MackeyFamily stabilize_family(const MackeyFamily& family, const PermGroup& g,
                              const SubgroupFamily& fam) {
  const Int& p = family.prime;
  unsigned rk = fam.sylow_exponent;
  Int e = pow(p, rk - 1);
  MackeyFamily out(family);
  for (size_t i = 0; i < family.members.size(); ++i) {
    const Subgroup& h = family.members[i];
    ClassFunction acc = ClassFunction::one(h.group);
    for (const Perm& x : g.elements()) {
      Subgroup hx = h.conjugated_by(x.inverse());
      size_t src = family.index_of(hx.ids);
      ClassFunction moved = conjugate_cf(family.entries[src].pow(e), x, h.group);
      acc = acc * moved;
    }
    out.entries[i] = std::move(acc);
  }
  // Congruence mod p^{r_k} on cyclic members.
  Int prk = pow(p, rk);
  for (size_t i = 0; i < out.members.size(); ++i) {
    if (!out.members[i].group.is_cyclic()) continue;
    CyclicRingElem v = cf_to_cyclic(out.entries[i], out.members[i].group.cyclic_generator());
    if (!(v - CyclicRingElem::one(v.modulus())).divisible_by_int(prk))
      throw std::logic_error("stabilize_family: entry not congruent to 1 mod p^r");
  }
  return out;
}

// ---------------------------------------------------------------------------
// extension formula and extend_to_p_groups

namespace {

ClassFunction extension_formula(const MackeyFamily& family, const SubgroupFamily& fam,
                                const Subgroup& e, bool exact) {
  const Int& p = family.prime;
  unsigned long pl = p.get_ui();
  ClassFunction acc = ClassFunction::one(e.group);
  // identity-subgroup term
  size_t tro = family.index_of(trivial_subgroup(e.parent).ids);
  acc = acc + induce_cf(minus_one_over(family.entries[tro], e.order(), exact), e.group);
  for (const Subgroup& h : cyclic_reps_in_parent(e)) {
    if (h.order() == 1) continue;
    Subgroup ne = normalizer(e, h);
    unsigned long w = ne.order() / h.order();
    Perm ch = h.group.cyclic_generator();
    auto sub_ids = power_subgroup_ids(e.parent, ch, pl);
    size_t hi = family.index_of(h.ids);
    size_t pi = family.index_of(sub_ids);
    ClassFunction term = minus_one_over(family.entries[hi], w, exact) -
                         induce_cf(minus_one_over(family.entries[pi], w * pl, exact), h.group);
    acc = acc + induce_cf(term, e.group);
  }
  return acc;
}

}  // namespace

ClassFunction extension_formula_at(const MackeyFamily& family, const SubgroupFamily& fam,
                                   const Subgroup& e) {
  return extension_formula(family, fam, e, false);
}

MackeyFamily extend_to_p_groups(const MackeyFamily& family, const PermGroup& g,
                                const SubgroupFamily& fam) {
  MackeyFamily out;
  out.prime = family.prime;
  out.parent = g;
  out.members = fam.members;
  out.entries.resize(out.members.size());
  for (size_t i = 0; i < fam.members.size(); ++i) {
    if (fam.members[i].group.is_cyclic()) {
      out.entries[i] = family.entries[family.index_of(fam.members[i].ids)];
    } else {
      out.entries[i] = extension_formula(family, fam, fam.members[i], true);
    }
  }
  return out;
}

bool check_extension_consistency(const MackeyFamily& family, const SubgroupFamily& fam) {
  // The family must carry entries for all members; evaluate the formula on
  // the cyclic sub-family and compare at every member.
  MackeyFamily cyclic_part;
  cyclic_part.prime = family.prime;
  cyclic_part.parent = family.parent;
  for (size_t i = 0; i < family.members.size(); ++i) {
    if (!family.members[i].group.is_cyclic()) continue;
    cyclic_part.members.push_back(family.members[i]);
    cyclic_part.entries.push_back(family.entries[i]);
  }
  for (size_t i = 0; i < family.members.size(); ++i) {
    ClassFunction v = extension_formula(cyclic_part, fam, family.members[i], false);
    if (!(v == family.entries[i])) return false;
  }
  return true;
}

bool check_correction_vanishing(const MackeyFamily& family, const SubgroupFamily& fam) {
  const Int& p = family.prime;
  unsigned long pl = p.get_ui();
  for (const Subgroup& e : family.members) {
    for (const Subgroup& h : cyclic_reps_in_parent(e)) {
      if (h.order() == 1) continue;
      Subgroup ne = normalizer(e, h);
      unsigned long w = ne.order() / h.order();
      size_t hi = family.index_of(h.ids);
      auto sub_ids = power_subgroup_ids(e.parent, h.group.cyclic_generator(), pl);
      size_t pi = family.index_of(sub_ids);
      ClassFunction term = minus_one_over(family.entries[hi], w, false) -
                           induce_cf(minus_one_over(family.entries[pi], w * pl, false), h.group);
      for (const Subgroup& l : family.members) {
        if (!e.contains_subgroup(l) || !e.contains_subgroup(h)) continue;
        if (l.contains_subgroup(h)) continue;  // lemma applies to H not inside L
        std::vector<size_t> meet;
        std::set_intersection(h.ids.begin(), h.ids.end(), l.ids.begin(), l.ids.end(),
                              std::back_inserter(meet));
        Subgroup hl = make_subgroup(family.parent, std::move(meet));
        ClassFunction r = restrict_cf(term, hl.group);
        if (!r.is_zero()) return false;
      }
    }
  }
  return true;
}

MackeyFamily family_for_nondivisible_prime(const PermGroup& g, const SubgroupFamily& fam,
                                           const Subgroup& k, const VirtualCharacter& f,
                                           const UnitProfile& profile, unsigned long bound,
                                           LiftLog* log) {
  MackeyFamily pre = pre_family(g, fam, k, f, profile, bound, log);
  MackeyFamily stab = stabilize_family(pre, g, fam);
  {
    auto audit = audit_mackey_family(stab);
    log_step(log, "stabilized family (res)/(con) audit p=" + to_string(fam.prime),
             audit.res_ok && audit.con_ok, audit.first_failure);
  }
  MackeyFamily full = extend_to_p_groups(stab, g, fam);
  auto audit = audit_mackey_family(full);
  log_step(log, "extended family (res)/(con) audit p=" + to_string(fam.prime),
           audit.res_ok && audit.con_ok, audit.first_failure);
  return full;
}

// ---------------------------------------------------------------------------
// integer_lift

MackeyFamily integer_lift(const PermGroup& g, const SubgroupFamily& fam, const Int& a,
                          const UnitProfile& profile, unsigned long bound, LiftLog* log) {
  const Int& p = fam.prime;
  unsigned r = fam.sylow_exponent;
  if (!profile.divisible().contains(p))
    throw usage_error("integer_lift: prime " + to_string(p) + " is not divisible in the profile");
  Subgroup triv = trivial_subgroup(g);
  require_unit(profile, VirtualCharacter::constant(triv.group, a), bound,
               "integer_lift scalar a = " + to_string(a), log);

  MackeyFamily out;
  out.prime = p;
  out.parent = g;
  out.members = fam.members;
  out.entries.resize(out.members.size());
  unsigned long pl = p.get_ui();

  // Cyclic tower: psi' entries, localized at p.
  std::vector<char> done(out.members.size(), 0);
  size_t tro = member_index(fam, triv.ids);
  out.entries[tro] = ClassFunction::constant(out.members[tro].group, Rat(a));
  done[tro] = 1;
  for (size_t ci : fam.cyclic) {
    const Subgroup& h = fam.members[ci];
    if (h.order() == 1) continue;
    Perm ch = h.group.cyclic_generator();
    Perm chp(g.degree());
    for (unsigned long t = 0; t < pl; ++t) chp = chp.compose(ch);
    auto sub_ids = power_subgroup_ids(g, ch, pl);
    size_t pi = member_index(fam, sub_ids);
    if (!done[pi]) throw std::logic_error("integer_lift: tower order violated");
    LocalizedCyclicElem sub =
        rat_vec_to_localized(cf_to_cyclic_rat(out.entries[pi], chp), p);
    unsigned long n = h.order();
    LocalizedCyclicElem phi(CyclicRingElem::phi_pm(n), p, 0);
    LocalizedCyclicElem one(CyclicRingElem::one(n), p, 0);
    LocalizedCyclicElem psi = one - LocalizedCyclicElem(phi.num(), p, 1) +
                              LocalizedCyclicElem(ind_cyclic(sub.num(), n), p, sub.denom_exp() + 1);
    // the proof's checks: pi(psi') = 1 and res(psi') = psi'_{pH}
    if (!(mod_phi(psi) == CycNum::from_rational(Rat(1), n)))
      throw std::logic_error("integer_lift: mod_phi(psi') != 1");
    if (!(res_cyclic(psi, n / pl) == sub))
      throw std::logic_error("integer_lift: res(psi') != psi'_{pH}");
    out.entries[ci] = cyclic_to_cf_rat(localized_to_rat_vec(psi), h.group, ch);
    done[ci] = 1;
  }
  // Non-cyclic members via the extension formula (divisions rational here).
  MackeyFamily cyc_part;
  cyc_part.prime = p;
  cyc_part.parent = g;
  for (size_t ci : fam.cyclic) {
    cyc_part.members.push_back(fam.members[ci]);
    cyc_part.entries.push_back(out.entries[ci]);
  }
  for (size_t i = 0; i < out.members.size(); ++i) {
    if (done[i]) continue;
    out.entries[i] = extension_formula(cyc_part, fam, out.members[i], false);
  }
  // Scale by p^r; entries must become integral.
  Rat scale(pow(p, r));
  for (ClassFunction& e : out.entries) {
    e = e.scaled(scale);
    if (!cf_has_integral_coords(e))
      throw std::logic_error("integer_lift: scaled entry is not integral");
  }
  auto audit = audit_mackey_family(out);
  log_step(log, "integer_lift family audit p=" + to_string(p), audit.res_ok && audit.con_ok,
           audit.first_failure);
  // psi_e = p^r * a by construction; assert.
  Rat pe = out.entries[tro].values()[0].as_rational();
  if (pe != Rat(pow(p, r) * a)) throw std::logic_error("integer_lift: psi_e != p^r a");
  return out;
}

// ---------------------------------------------------------------------------
// p_divisible_lift

MackeyFamily p_divisible_lift(const PermGroup& g, const SubgroupFamily& fam, const Subgroup& k,
                              const VirtualCharacter& f, const UnitProfile& profile,
                              unsigned long bound, LiftLog* log) {
  const Int& p = fam.prime;
  if (!profile.divisible().contains(p))
    throw usage_error("p_divisible_lift: prime " + to_string(p) + " is not divisible in the profile");
  require_unit(profile, f, bound, "p_divisible_lift input at K", log);
  unsigned long pl = p.get_ui();

  MackeyFamily out;
  out.prime = p;
  out.parent = g;
  out.members = fam.members;
  out.entries.resize(out.members.size());
  std::vector<char> done(out.members.size(), 0);

  // Cyclic towers.
  for (size_t ci : fam.cyclic) {
    const Subgroup& l = fam.members[ci];
    if (l.order() == 1) {
      out.entries[ci] = ClassFunction::constant(l.group, Rat(f.dimension()));
    } else if (k.contains_subgroup(l)) {
      out.entries[ci] = restrict_cf(f.cf(), l.group);
    } else {
      Perm cl = l.group.cyclic_generator();
      Perm clp(g.degree());
      for (unsigned long t = 0; t < pl; ++t) clp = clp.compose(cl);
      size_t pi = member_index(fam, power_subgroup_ids(g, cl, pl));
      if (!done[pi]) throw std::logic_error("p_divisible_lift: tower order violated");
      LocalizedCyclicElem sub = rat_vec_to_localized(cf_to_cyclic_rat(out.entries[pi], clp), p);
      LocalizedCyclicElem u = unsplit(CycNum::from_rational(Rat(1), l.order()), sub);
      out.entries[ci] = cyclic_to_cf_rat(localized_to_rat_vec(u), l.group, cl);
    }
    done[ci] = 1;
  }
  // Conjugation-symmetrize the cyclic part.
  {
    std::vector<ClassFunction> sym(out.members.size());
    for (size_t ci : fam.cyclic) {
      const Subgroup& h = fam.members[ci];
      ClassFunction acc = ClassFunction::one(h.group);
      for (const Perm& x : g.elements()) {
        Subgroup hx = h.conjugated_by(x.inverse());
        size_t src = member_index(fam, hx.ids);
        acc = acc * conjugate_cf(out.entries[src], x, h.group);
      }
      sym[ci] = std::move(acc);
    }
    for (size_t ci : fam.cyclic) out.entries[ci] = std::move(sym[ci]);
  }

  // Non-cyclic members: solve the fixed-subring component system. For each
  // cyclic class representative H of L, the zeta-component of the restriction
  // must match mod_phi of the (symmetrized) family entry at H.
  for (size_t i = 0; i < out.members.size(); ++i) {
    if (done[i]) continue;
    const Subgroup& l = out.members[i];
    auto table = CharacterTable::of(l.group);
    size_t nrow = 0;
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (const Subgroup& h : cyclic_reps_in_parent(l)) {
      Perm ch = h.order() == 1 ? Perm(g.degree()) : h.group.cyclic_generator();
      unsigned long n = h.order();
      size_t hi = member_index(fam, h.ids);
      CycNum target = mod_phi_rat(n, cf_to_cyclic_rat(out.entries[hi], ch));
      // Sanity: the target is fixed by the Weyl action of L on H.
      for (long wexp : weyl_action(l.group, make_subgroup(l.group, [&] {
                         std::vector<size_t> ids;
                         for (const Perm& x : h.group.elements())
                           ids.push_back(static_cast<size_t>(l.group.element_index(x)));
                         return ids;
                       }()))) {
        if (!(target.galois(wexp) == target))
          throw std::logic_error("p_divisible_lift: component target not Weyl-fixed");
      }
      size_t phi_deg = target.coeffs().size();
      for (size_t row = 0; row < phi_deg; ++row) {
        a.emplace_back(table->size(), Rat(0));
        b.push_back(target.coeffs()[row]);
      }
      for (size_t j = 0; j < table->size(); ++j) {
        ClassFunction res_j = restrict_cf(table->irreducibles()[j], h.group);
        CycNum comp = mod_phi_rat(n, cf_to_cyclic_rat(res_j, ch));
        for (size_t row = 0; row < phi_deg; ++row) a[nrow + row][j] = comp.coeffs()[row];
      }
      nrow += phi_deg;
    }
    auto sol = rat_solve(std::move(a), std::move(b));
    if (!sol.consistent || !sol.unique)
      throw std::logic_error("p_divisible_lift: component system unsolvable (must not happen)");
    ClassFunction entry = ClassFunction::zero(l.group);
    for (size_t j = 0; j < table->size(); ++j)
      if (sol.x[j] != 0) entry = entry + table->irreducibles()[j].scaled(sol.x[j]);
    out.entries[i] = std::move(entry);
    done[i] = 1;
  }

  {
    auto audit = audit_mackey_family(out);
    log_step(log, "p_divisible_lift localized audit p=" + to_string(p),
             audit.res_ok && audit.con_ok, audit.first_failure);
  }

  // Clear denominators with the minimal power of p.
  unsigned nclear = 0;
  for (size_t i = 0; i < out.members.size(); ++i) {
    auto table = CharacterTable::of(out.members[i].group);
    for (const Rat& c : table->decompose(out.entries[i])) {
      if (c.get_den() == 1) continue;
      if (!is_power_of(c.get_den(), p))
        throw std::logic_error("p_divisible_lift: non-p denominator in entry");
      nclear = std::max(nclear, valuation(c.get_den(), p));
    }
  }
  Rat scale(pow(p, nclear));
  for (ClassFunction& e : out.entries) e = e.scaled(scale);
  log_step(log, "p_divisible_lift denominator clearing", true,
           "N = " + std::to_string(nclear));
  return out;
}

// ---------------------------------------------------------------------------
// assemble_and_glue

namespace {

/// Divides target by f in R(K) (cyclic basis); any valid quotient accepted.
std::optional<CyclicRingElem> divide_cyclic(const CyclicRingElem& target, const CyclicRingElem& f) {
  unsigned long n = f.modulus();
  IntMat m(n, n);
  for (size_t j = 0; j < n; ++j) {
    CyclicRingElem col = f * CyclicRingElem::t_power(n, j);
    for (size_t i = 0; i < n; ++i) m(j, i) = col.coeffs()[i];
  }
  auto sol = solve_left(m, target.coeffs());
  if (!sol) return std::nullopt;
  return CyclicRingElem(n, std::move(*sol));
}

}  // namespace

bool LiftResult::all_passed() const {
  for (const LiftLogEntry& e : log)
    if (!e.pass) return false;
  return true;
}

LiftResult assemble_and_glue(const PermGroup& g, const Subgroup& k, const CyclicRingElem& f,
                             const UnitProfile& profile, unsigned long bound) {
  LiftResult res;
  LiftLog& log = res.log;
  unsigned long w = 0;
  if (!is_eppo(g, &w))
    throw verified_negative("assemble_and_glue: group is not EPPO (element of order " +
                            std::to_string(w) + ")");
  if (!k.group.is_cyclic()) throw usage_error("assemble_and_glue: K must be cyclic");
  if (f.modulus() != k.order()) throw usage_error("assemble_and_glue: element modulus != |K|");

  res.k = k;
  res.k_generator = k.order() == 1 ? Perm(g.degree()) : k.group.cyclic_generator();
  VirtualCharacter f_vc =
      VirtualCharacter::from_class_function(cyclic_to_cf(f, k.group, res.k_generator));

  // Order the primes: divisible first, ascending within each part.
  auto all_fams = prime_subgroup_families(g);
  std::vector<SubgroupFamily> fams;
  for (const auto& fm : all_fams)
    if (profile.divisible().contains(fm.prime)) fams.push_back(fm);
  size_t n_div = fams.size();
  for (const auto& fm : all_fams)
    if (!profile.divisible().contains(fm.prime)) fams.push_back(fm);

  PrimePower kp;
  if (!prime_power_decompose(Int(k.order()), kp))
    throw usage_error("assemble_and_glue: |K| is not a prime power (not elementary)");
  size_t k_index = 0;
  bool k_found = false;
  if (k.order() == 1) {
    k_index = 0;  // the trivial subgroup belongs to every family; use the first
    k_found = !fams.empty();
  } else {
    for (size_t i = 0; i < fams.size(); ++i)
      if (fams[i].prime == kp.prime) {
        k_index = i;
        k_found = true;
      }
  }
  if (!k_found) throw std::logic_error("assemble_and_glue: no family for K's prime");

  require_unit(profile, f_vc, bound, "f at K", &log);

  Subgroup triv = trivial_subgroup(g);
  std::vector<MackeyFamily> families(fams.size());
  std::vector<char> built(fams.size(), 0);

  auto e_entry_of = [&](const MackeyFamily& fm) -> Int {
    size_t ti = fm.index_of(triv.ids);
    Rat v = fm.entries[ti].values()[0].as_rational();
    if (v.get_den() != 1) throw std::logic_error("assemble_and_glue: non-integral identity entry");
    return v.get_num();
  };

  Int common_e;
  bool have_common = false;

  auto integrate_family = [&](size_t idx, MackeyFamily fm) {
    Int fe = e_entry_of(fm);
    if (!have_common) {
      common_e = fe;
      have_common = true;
    } else if (fe != common_e) {
      // match by raising the existing families (or the new one) to a power
      if (common_e != 1 && fe != 1 && abs(fe) > abs(common_e)) {
        Int e = match_exponent(common_e, fe);
        for (size_t i = 0; i < families.size(); ++i)
          if (built[i]) families[i] = families[i].entrywise_pow(e);
        common_e = fe;
      } else {
        Int e = match_exponent(fe, common_e);
        fm = fm.entrywise_pow(e);
      }
      if (e_entry_of(fm) != common_e)
        throw std::logic_error("assemble_and_glue: identity entries failed to match");
    }
    families[idx] = std::move(fm);
    built[idx] = 1;
    log_step(&log, "family for p = " + to_string(fams[idx].prime) + " integrated", true,
             "identity entry " + to_string(common_e));
  };

  bool k_divisible = k_index < n_div && k.order() > 1;
  if (k.order() == 1) k_divisible = false;  // trivial K is handled by the generic flow below

  if (k_divisible || (k.order() == 1 && n_div > 0)) {
    // Case k <= n. For trivial K the p-divisible route degenerates to the
    // first divisible prime.
    size_t kd = k_divisible ? k_index : 0;
    MackeyFamily fprime = p_divisible_lift(g, fams[kd], k, f_vc, profile, bound, &log);
    Int a = 1;
    for (size_t i = 0; i < n_div; ++i)
      if (i != kd) a *= pow(fams[i].prime, fams[i].sylow_exponent);
    MackeyFamily psi = integer_lift(g, fams[kd], a, profile, bound, &log);
    integrate_family(kd, fprime.entrywise_mul(psi));
    for (size_t j = 0; j < n_div; ++j) {
      if (j == kd) continue;
      Int pj = pow(fams[j].prime, fams[j].sylow_exponent);
      Int aj = exact_div(common_e, pj);
      integrate_family(j, integer_lift(g, fams[j], aj, profile, bound, &log));
    }
    for (size_t j = n_div; j < fams.size(); ++j) {
      VirtualCharacter seed = VirtualCharacter::constant(triv.group, common_e);
      integrate_family(j,
                       family_for_nondivisible_prime(g, fams[j], triv, seed, profile, bound, &log));
    }
  } else {
    // Case k > n (or no divisible primes at all).
    MackeyFamily fprime = family_for_nondivisible_prime(g, fams[k_index], k, f_vc, profile, bound, &log);
    Int f0 = 1;
    for (size_t i = 0; i < n_div; ++i) f0 *= pow(fams[i].prime, fams[i].sylow_exponent);
    MackeyFamily fsecond = family_for_nondivisible_prime(
        g, fams[k_index], triv, VirtualCharacter::constant(triv.group, f0), profile, bound, &log);
    integrate_family(k_index, fprime.entrywise_mul(fsecond));
    for (size_t j = 0; j < n_div; ++j) {
      Int pj = pow(fams[j].prime, fams[j].sylow_exponent);
      Int aj = exact_div(common_e, pj);
      integrate_family(j, integer_lift(g, fams[j], aj, profile, bound, &log));
    }
    for (size_t j = n_div; j < fams.size(); ++j) {
      if (j == k_index) continue;
      VirtualCharacter seed = VirtualCharacter::constant(triv.group, common_e);
      integrate_family(j,
                       family_for_nondivisible_prime(g, fams[j], triv, seed, profile, bound, &log));
    }
  }

  // All families must agree at the trivial subgroup.
  for (size_t i = 0; i < families.size(); ++i)
    log_step(&log, "identity entries agree (p = " + to_string(fams[i].prime) + ")",
             e_entry_of(families[i]) == common_e);

  // Glue with the Brauer coefficients.
  BrauerDecomposition brauer = brauer_coefficients(g);
  log_step(&log, "Brauer identity sum Ind(phi_H) = 1", true);
  ClassFunction glue = ClassFunction::zero(g);
  for (size_t hi = 0; hi < brauer.elementary.size(); ++hi) {
    const Subgroup& h = brauer.elementary[hi];
    size_t fi = 0;
    if (h.order() == 1) {
      fi = 0;
    } else {
      PrimePower pp;
      prime_power_decompose(Int(h.order()), pp);
      for (size_t i = 0; i < fams.size(); ++i)
        if (fams[i].prime == pp.prime) fi = i;
    }
    const ClassFunction& fh = families[fi].entries[families[fi].index_of(h.ids)];
    glue = glue + induce_cf(brauer.coefficients[hi].cf() * fh, g);
  }
  res.f_tilde = VirtualCharacter::from_class_function(glue);
  res.families = families;
  for (const auto& fm : fams) res.primes.push_back(fm.prime);

  // Post-verification: res^L(f~) reproduces the family entry at every
  // cyclic prime-power subgroup.
  for (const Subgroup& l : subgroups(g)) {
    if (!l.group.is_cyclic()) continue;
    PrimePower pp;
    if (!prime_power_decompose(Int(l.order()), pp)) continue;
    size_t fi = 0;
    if (l.order() > 1)
      for (size_t i = 0; i < fams.size(); ++i)
        if (fams[i].prime == pp.prime) fi = i;
    ClassFunction lhs = restrict_cf(glue, l.group);
    const ClassFunction& rhs = families[fi].entries[families[fi].index_of(l.ids)];
    log_step(&log, "res to " + l.describe() + " equals family entry", lhs == rhs);
  }

  // Multiplier: res^K(f~) = multiplier * f, computed exactly in R(K).
  CyclicRingElem fk = cf_to_cyclic(restrict_cf(glue, k.group), res.k_generator);
  auto mult = divide_cyclic(fk, f);
  log_step(&log, "res^K(f~) is a multiple of f", mult.has_value());
  res.multiplier = mult ? *mult : CyclicRingElem(f.modulus());
  if (mult) {
    log_step(&log, "multiplier relation re-verified", (*mult) * f == fk,
             "multiplier = " + mult->to_string());
    VirtualCharacter mult_vc =
        VirtualCharacter::from_class_function(cyclic_to_cf(*mult, k.group, res.k_generator));
    require_unit(profile, mult_vc, bound, "multiplier at K", &log);
  }

  // Unit certificates for every cyclic subgroup.
  for (const Subgroup& l : subgroups(g)) {
    if (!l.group.is_cyclic()) continue;
    VirtualCharacter rl = VirtualCharacter::from_class_function(restrict_cf(glue, l.group));
    require_unit(profile, rl, bound, "res^" + l.describe() + "(f~)", &log);
  }

  return res;
}

}  // namespace repring
