#include "repring/character.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

namespace repring {

namespace {

std::vector<Rat> flatten_values(const std::vector<CycNum>& vals) {
  std::vector<Rat> out;
  for (const CycNum& v : vals)
    for (const Rat& c : v.coeffs()) out.push_back(c);
  return out;
}

}  // namespace

ClassFunction::ClassFunction(PermGroup g, std::vector<CycNum> values)
    : g_(std::move(g)), level_(g_.exponent()), v_(std::move(values)) {
  const auto& cc = g_.conjugacy_classes();
  if (v_.size() != cc.members.size()) throw std::logic_error("ClassFunction: wrong number of values");
  for (CycNum& v : v_)
    if (v.level() != level_) v = v.level() % level_ == 0 ? v.lower_to(level_) : v.embed(level_);
}

ClassFunction ClassFunction::zero(const PermGroup& g) {
  size_t nc = g.conjugacy_classes().members.size();
  unsigned long lv = g.exponent();
  return ClassFunction(g, std::vector<CycNum>(nc, CycNum::from_rational(Rat(0), lv)));
}

ClassFunction ClassFunction::one(const PermGroup& g) { return constant(g, Rat(1)); }

ClassFunction ClassFunction::constant(const PermGroup& g, const Rat& v) {
  size_t nc = g.conjugacy_classes().members.size();
  unsigned long lv = g.exponent();
  return ClassFunction(g, std::vector<CycNum>(nc, CycNum::from_rational(v, lv)));
}

const CycNum& ClassFunction::value_at(const Perm& p) const {
  int id = g_.element_index(p.degree() == g_.degree() ? p : p.extended(g_.degree()));
  if (id < 0) throw std::logic_error("ClassFunction::value_at: element not in group");
  return value_at_id(static_cast<size_t>(id));
}

const CycNum& ClassFunction::value_at_id(size_t elem_id) const {
  return v_[g_.conjugacy_classes().class_of[elem_id]];
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (!g_.same_group(o.g_)) throw std::logic_error("ClassFunction group mismatch");
  std::vector<CycNum> v(v_);
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.v_[i];
  return ClassFunction(g_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  if (!g_.same_group(o.g_)) throw std::logic_error("ClassFunction group mismatch");
  std::vector<CycNum> v(v_);
  for (size_t i = 0; i < v.size(); ++i) v[i] -= o.v_[i];
  return ClassFunction(g_, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  if (!g_.same_group(o.g_)) throw std::logic_error("ClassFunction group mismatch");
  std::vector<CycNum> v(v_);
  for (size_t i = 0; i < v.size(); ++i) v[i] *= o.v_[i];
  return ClassFunction(g_, std::move(v));
}

ClassFunction ClassFunction::operator-() const {
  std::vector<CycNum> v(v_);
  for (CycNum& x : v) x = -x;
  return ClassFunction(g_, std::move(v));
}

ClassFunction ClassFunction::scaled(const Rat& r) const {
  std::vector<CycNum> v(v_);
  for (CycNum& x : v) x = x.scaled(r);
  return ClassFunction(g_, std::move(v));
}

ClassFunction ClassFunction::pow(const Int& e) const {
  if (e < 0) throw std::logic_error("ClassFunction::pow: negative exponent");
  ClassFunction acc = ClassFunction::one(g_);
  ClassFunction base = *this;
  Int k = e;
  while (k > 0) {
    if (fmod(k, 2) == 1) acc = acc * base;
    k = fdiv(k, 2);
    if (k > 0) base = base * base;
  }
  return acc;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return g_.same_group(o.g_) && v_ == o.v_;
}

bool ClassFunction::is_zero() const {
  for (const CycNum& v : v_)
    if (!v.is_zero()) return false;
  return true;
}

ClassFunction ClassFunction::galois(long j) const {
  std::vector<CycNum> v(v_);
  for (CycNum& x : v) x = x.galois(j);
  return ClassFunction(g_, std::move(v));
}

bool ClassFunction::is_integral() const {
  for (const CycNum& v : v_)
    if (!v.is_integral()) return false;
  return true;
}

CycNum inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group().same_group(b.group())) throw usage_error("inner_product: group mismatch");
  const PermGroup& g = a.group();
  const auto& cc = g.conjugacy_classes();
  CycNum acc = CycNum::from_rational(Rat(0), a.level());
  for (size_t c = 0; c < cc.members.size(); ++c) {
    size_t inv_rep = g.inv(cc.rep[c]);
    const CycNum& bv = b.value_at_id(inv_rep);
    acc += (a.value_on_class(c) * bv).scaled(Rat(static_cast<long>(cc.members[c].size())));
  }
  Rat scale(1);
  scale /= Rat(static_cast<long>(g.order()));
  return acc.scaled(scale);
}

// ---------------------------------------------------------------------------
// Mackey operations on class functions

ClassFunction restrict_cf(const ClassFunction& f, const PermGroup& k) {
  if (!k.subgroup_of(f.group())) throw usage_error("restrict: K is not a subgroup");
  const auto& cc = k.conjugacy_classes();
  unsigned long lv = k.exponent();
  std::vector<CycNum> v;
  v.reserve(cc.members.size());
  for (size_t c = 0; c < cc.members.size(); ++c)
    v.push_back(f.value_at(k.element(cc.rep[c])).lower_to(lv));
  return ClassFunction(k, std::move(v));
}

ClassFunction induce_cf(const ClassFunction& f, const PermGroup& h) {
  const PermGroup& k = f.group();
  if (!k.subgroup_of(h)) throw usage_error("induce: source is not a subgroup");
  const auto& cc = h.conjugacy_classes();
  unsigned long lv = h.exponent();
  std::vector<CycNum> v;
  v.reserve(cc.members.size());
  Rat inv_k(1);
  inv_k /= Rat(static_cast<long>(k.order()));
  for (size_t c = 0; c < cc.members.size(); ++c) {
    const Perm& rep = h.element(cc.rep[c]);
    CycNum acc = CycNum::from_rational(Rat(0), lv);
    for (const Perm& x : h.elements()) {
      Perm y = x.inverse().compose(rep).compose(x);
      if (k.contains(y)) acc += f.value_at(y).embed(lv);
    }
    v.push_back(acc.scaled(inv_k));
  }
  return ClassFunction(h, std::move(v));
}

ClassFunction conjugate_cf(const ClassFunction& f, const Perm& g) {
  const PermGroup& h = f.group();
  Perm ge = g.degree() == h.degree() ? g : g.extended(h.degree());
  std::vector<Perm> gens;
  for (const Perm& x : h.generators()) gens.push_back(x.conjugated_by(ge));
  PermGroup target(gens, h.order());
  return conjugate_cf(f, ge, target);
}

ClassFunction conjugate_cf(const ClassFunction& f, const Perm& g, const PermGroup& target) {
  const PermGroup& h = f.group();
  if (target.order() != h.order()) throw std::logic_error("conjugate_cf: target order mismatch");
  Perm ge = g.degree() == h.degree() ? g : g.extended(h.degree());
  const auto& cc = target.conjugacy_classes();
  std::vector<CycNum> v;
  v.reserve(cc.members.size());
  Perm gi = ge.inverse();
  for (size_t c = 0; c < cc.members.size(); ++c) {
    Perm back = target.element(cc.rep[c]).conjugated_by(gi);
    v.push_back(f.value_at(back));
  }
  return ClassFunction(target, std::move(v));
}

ClassFunction mackey_double_coset(const Subgroup& l, const Subgroup& h, const Subgroup& k,
                                  const ClassFunction& f) {
  if (!h.contains_subgroup(l) || !h.contains_subgroup(k))
    throw usage_error("mackey_double_coset: L and K must be contained in H");
  if (!f.group().same_group(k.group)) throw usage_error("mackey_double_coset: f must live on K");
  const PermGroup& parent = h.parent;
  DoubleCosets dc = double_cosets(l, h, k);
  ClassFunction acc = ClassFunction::zero(l.group);
  for (size_t x_id : dc.reps) {
    const Perm& x = parent.element(x_id);
    // L^x cap K and L cap ^xK
    Subgroup lx = l.conjugated_by(x.inverse());
    std::vector<size_t> meet_ids;
    std::set_intersection(lx.ids.begin(), lx.ids.end(), k.ids.begin(), k.ids.end(),
                          std::back_inserter(meet_ids));
    Subgroup lxk = make_subgroup(parent, std::move(meet_ids));
    ClassFunction part = restrict_cf(f, lxk.group);
    part = conjugate_cf(part, x);
    part = induce_cf(part, l.group);
    acc = acc + part;
  }
  return acc;
}

std::vector<long> weyl_action(const PermGroup& g, const Subgroup& h) {
  if (!h.group.is_cyclic()) throw usage_error("weyl_action: H must be cyclic");
  unsigned long n = h.order();
  if (n == 1) return {1};
  Perm c = h.group.cyclic_generator();
  Subgroup nh = normalizer(whole_group_as_subgroup(g), h);
  std::set<long> exps;
  for (size_t gid : nh.ids) {
    const Perm& x = g.element(gid);
    Perm conj = c.conjugated_by(x);
    Perm pw(c.degree());
    bool found = false;
    for (unsigned long a = 1; a <= n; ++a) {
      pw = pw.compose(c);
      if (pw == conj) {
        exps.insert(static_cast<long>(a % n));
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("weyl_action: conjugate left the cyclic subgroup");
  }
  return {exps.begin(), exps.end()};
}

ClassFunction cyclic_to_cf_rat(const std::vector<Rat>& coeffs, const PermGroup& cyclic_group,
                               const Perm& gen) {
  unsigned long n = cyclic_group.order();
  if (coeffs.size() != n) throw usage_error("cyclic_to_cf: modulus must equal the group order");
  // exponent j of each element relative to gen
  std::vector<long> exp_of(n, -1);
  Perm pw(cyclic_group.degree());
  Perm ge = gen.degree() == cyclic_group.degree() ? gen : gen.extended(cyclic_group.degree());
  for (unsigned long j = 0; j < n; ++j) {
    int id = cyclic_group.element_index(pw);
    if (id < 0) throw usage_error("cyclic_to_cf: gen does not generate the group");
    exp_of[static_cast<size_t>(id)] = static_cast<long>(j);
    pw = pw.compose(ge);
  }
  const auto& cc = cyclic_group.conjugacy_classes();
  std::vector<CycNum> v;
  v.reserve(cc.members.size());
  for (size_t c = 0; c < cc.members.size(); ++c) {
    long j = exp_of[cc.rep[c]];
    CycNum acc = CycNum::from_rational(Rat(0), n);
    for (size_t k = 0; k < n; ++k) {
      if (coeffs[k] == 0) continue;
      acc += CycNum::zeta(n, static_cast<long>(k) * j).scaled(coeffs[k]);
    }
    v.push_back(std::move(acc));
  }
  return ClassFunction(cyclic_group, std::move(v));
}

ClassFunction cyclic_to_cf(const CyclicRingElem& f, const PermGroup& cyclic_group, const Perm& gen) {
  std::vector<Rat> coeffs;
  coeffs.reserve(f.modulus());
  for (const Int& c : f.coeffs()) coeffs.emplace_back(c);
  return cyclic_to_cf_rat(coeffs, cyclic_group, gen);
}

std::vector<Rat> cf_to_cyclic_rat(const ClassFunction& f, const Perm& gen) {
  const PermGroup& g = f.group();
  unsigned long n = g.order();
  // a_k = (1/n) sum_j f(gen^j) zeta^{-jk}
  std::vector<Rat> coeffs(n);
  Perm pw(g.degree());
  Perm ge = gen.degree() == g.degree() ? gen : gen.extended(g.degree());
  std::vector<CycNum> val_at_power;
  for (unsigned long j = 0; j < n; ++j) {
    val_at_power.push_back(f.value_at(pw).embed(n));
    pw = pw.compose(ge);
  }
  Rat inv_n(1);
  inv_n /= Rat(static_cast<long>(n));
  for (unsigned long k = 0; k < n; ++k) {
    CycNum acc = CycNum::from_rational(Rat(0), n);
    for (unsigned long j = 0; j < n; ++j)
      acc += val_at_power[j] * CycNum::zeta(n, -static_cast<long>(j * k));
    coeffs[k] = acc.scaled(inv_n).as_rational();
  }
  return coeffs;
}

CyclicRingElem cf_to_cyclic(const ClassFunction& f, const Perm& gen) {
  auto rc = cf_to_cyclic_rat(f, gen);
  std::vector<Int> coeffs(rc.size());
  for (size_t k = 0; k < rc.size(); ++k) {
    if (rc[k].get_den() != 1) throw std::logic_error("cf_to_cyclic: non-integral coefficient");
    coeffs[k] = rc[k].get_num();
  }
  return CyclicRingElem(f.group().order(), std::move(coeffs));
}

size_t MackeyFamily::index_of(const std::vector<size_t>& ids) const {
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i].ids == ids) return i;
  throw std::logic_error("MackeyFamily: subgroup is not a member");
}

MackeyFamily MackeyFamily::entrywise_mul(const MackeyFamily& o) const {
  if (members.size() != o.members.size()) throw std::logic_error("MackeyFamily: member mismatch");
  MackeyFamily out(*this);
  for (size_t i = 0; i < entries.size(); ++i) {
    if (members[i].ids != o.members[i].ids) throw std::logic_error("MackeyFamily: member mismatch");
    out.entries[i] = entries[i] * o.entries[i];
  }
  return out;
}

MackeyFamily MackeyFamily::entrywise_pow(const Int& e) const {
  MackeyFamily out(*this);
  for (size_t i = 0; i < entries.size(); ++i) out.entries[i] = entries[i].pow(e);
  return out;
}

bool MackeyFamily::entries_integral() const {
  for (size_t i = 0; i < entries.size(); ++i) {
    auto table = CharacterTable::of(members[i].group);
    for (const Rat& c : table->decompose(entries[i]))
      if (c.get_den() != 1) return false;
  }
  return true;
}

MackeyAuditReport audit_mackey_family(const MackeyFamily& fam) {
  MackeyAuditReport rep;
  // (res) over every containment pair.
  for (size_t i = 0; i < fam.members.size(); ++i)
    for (size_t j = 0; j < fam.members.size(); ++j) {
      if (i == j || !fam.members[j].contains_subgroup(fam.members[i])) continue;
      ++rep.res_checked;
      ClassFunction r = restrict_cf(fam.entries[j], fam.members[i].group);
      if (!(r == fam.entries[i])) {
        rep.res_ok = false;
        if (rep.first_failure.empty())
          rep.first_failure = "res failure: member " + std::to_string(j) + " -> " + std::to_string(i);
      }
    }
  // (con) over every parent element.
  for (size_t i = 0; i < fam.members.size(); ++i) {
    for (const Perm& g : fam.parent.elements()) {
      ++rep.con_checked;
      Subgroup target = fam.members[i].conjugated_by(g);
      size_t ti = fam.index_of(target.ids);
      ClassFunction c = conjugate_cf(fam.entries[i], g, fam.members[ti].group);
      if (!(c == fam.entries[ti])) {
        rep.con_ok = false;
        if (rep.first_failure.empty())
          rep.first_failure = "con failure: member " + std::to_string(i) + " by " + g.cycle_string();
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Character table

namespace {

std::mutex g_table_mutex;
std::map<const void*, std::shared_ptr<const CharacterTable>>& table_cache() {
  static std::map<const void*, std::shared_ptr<const CharacterTable>> m;
  return m;
}

}  // namespace

std::shared_ptr<const CharacterTable> CharacterTable::of(const PermGroup& g) {
  {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = table_cache().find(g.key());
    if (it != table_cache().end()) return it->second;
  }
  auto t = std::shared_ptr<CharacterTable>(new CharacterTable());
  t->g_ = g;
  t->build();
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto [it, inserted] = table_cache().emplace(g.key(), t);
  return it->second;
}

void CharacterTable::build() {
  const PermGroup& g = g_;
  const auto& cc = g.conjugacy_classes();
  level_ = g.exponent();
  for (size_t c = 0; c < cc.members.size(); ++c) {
    class_sizes_.push_back(cc.members[c].size());
    class_reps_.push_back(g.element(cc.rep[c]));
    class_orders_.push_back(class_reps_.back().order());
  }

  Int order(static_cast<long>(g.order()));
  Int deg_sum = 0;
  std::vector<ClassFunction> found;
  std::deque<ClassFunction> queue;
  std::vector<ClassFunction> stuck;
  std::vector<ClassFunction> originals;  // genuine characters; span the lattice
  std::set<std::vector<Rat>> seen;

  auto push = [&](const ClassFunction& f) {
    if (f.is_zero()) return;
    auto key = flatten_values(f.values());
    if (seen.insert(key).second) {
      queue.push_back(f);
      originals.push_back(f);
    }
  };

  auto register_irr = [&](const ClassFunction& chi0) {
    // Add chi0 and its Galois orbit; every one is a new irreducible.
    std::vector<ClassFunction> batch{chi0};
    for (unsigned long j = 2; j < level_; ++j) {
      if (gcd(Int(j), Int(level_)) != 1) continue;
      batch.push_back(chi0.galois(static_cast<long>(j)));
    }
    for (const ClassFunction& chi : batch) {
      bool dup = false;
      for (const ClassFunction& have : found)
        if (have == chi) {
          dup = true;
          break;
        }
      if (dup) continue;
      found.push_back(chi);
      Rat d = chi.degree().as_rational();
      deg_sum += d.get_num() * d.get_num();
    }
    // New irreducibles may unlock stuck candidates.
    for (ClassFunction& s : stuck) queue.push_back(std::move(s));
    stuck.clear();
  };

  // Seeds: the trivial character, every coset-action permutation character,
  // and every character induced from a linear character of a cyclic
  // subgroup (Artin's induction generating set).
  push(ClassFunction::one(g));
  auto subs = subgroups(g);
  const auto& sc = subgroup_classes(g);
  for (const auto& cls : sc.classes) {
    const Subgroup& rep = subs[cls[0]];
    push(induce_cf(ClassFunction::one(rep.group), g));
    if (rep.group.is_cyclic() && rep.order() > 1) {
      unsigned long n = rep.order();
      Perm c = rep.group.cyclic_generator();
      for (unsigned long k = 1; k < n; ++k) {
        CyclicRingElem tk = CyclicRingElem::t_power(n, k);
        push(induce_cf(cyclic_to_cf(tk, rep.group, c), g));
      }
    }
  }

  int rounds = 0;
  while (deg_sum < order) {
    if (queue.empty()) {
      // Close under tensor products, and split stuck candidates that differ
      // by an irreducible (a norm-one virtual difference is an irreducible).
      if (++rounds > 50) throw std::logic_error("character_table: closure failed to terminate");
      std::vector<ClassFunction> gen;
      for (const ClassFunction& a : stuck) {
        for (const ClassFunction& b : found) gen.push_back(a * b);
        for (const ClassFunction& b : stuck) gen.push_back(a * b);
      }
      for (const ClassFunction& a : found)
        for (const ClassFunction& b : found) gen.push_back(a * b);
      size_t before = queue.size();
      for (const ClassFunction& f : gen) push(f);
      for (size_t i = 0; i < stuck.size(); ++i)
        for (size_t j = 0; j < stuck.size(); ++j) {
          if (i == j) continue;
          ClassFunction d = stuck[i] - stuck[j];
          if (d.is_zero()) continue;
          auto key = flatten_values(d.values());
          if (seen.insert(key).second) queue.push_back(std::move(d));
        }
      if (queue.size() == before)
        throw std::logic_error("character_table: no new candidates; closure incomplete");
      for (ClassFunction& s : stuck) queue.push_back(std::move(s));
      stuck.clear();
      continue;
    }
    ClassFunction c = std::move(queue.front());
    queue.pop_front();
    // Peel off known irreducibles.
    for (const ClassFunction& chi : found) {
      CycNum m = inner_product(c, chi);
      Rat mr = m.as_rational();
      if (mr == 0) continue;
      if (mr.get_den() != 1) throw std::logic_error("character_table: non-integral multiplicity");
      c = c - chi.scaled(mr);
    }
    if (c.is_zero()) continue;
    Rat norm = inner_product(c, c).as_rational();
    if (norm.get_den() != 1) throw std::logic_error("character_table: non-integral norm");
    if (norm == 1) {
      if (c.degree().as_rational() < 0) c = -c;
      register_irr(c);
      continue;
    }
    // Content reduction: a residual k * chi has norm k^2 and k | every
    // value. Guarded by integral pairing against every seed character so a
    // half-sum of Galois conjugates cannot slip through.
    if (mpz_perfect_square_p(norm.get_num().get_mpz_t())) {
      Int k;
      mpz_sqrt(k.get_mpz_t(), norm.get_num().get_mpz_t());
      if (k > 1) {
        Rat inv_k(1);
        inv_k /= Rat(k);
        ClassFunction cand = c.scaled(inv_k);
        if (cand.is_integral() && inner_product(cand, cand).as_rational() == 1) {
          bool lattice_ok = true;
          for (const ClassFunction& o : originals) {
            CycNum ip = inner_product(cand, o);
            if (!ip.is_rational() || ip.as_rational().get_den() != 1) {
              lattice_ok = false;
              break;
            }
          }
          if (lattice_ok) {
            if (cand.degree().as_rational() < 0) cand = -cand;
            register_irr(cand);
            continue;
          }
        }
      }
    }
    stuck.push_back(std::move(c));
  }

  // Canonical order and a final orthogonality audit.
  std::sort(found.begin(), found.end(), [](const ClassFunction& a, const ClassFunction& b) {
    Rat da = a.degree().as_rational(), db = b.degree().as_rational();
    if (da != db) return da < db;
    for (size_t i = 0; i < a.values().size(); ++i) {
      int cmp = CycNum::compare(a.values()[i], b.values()[i]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = 0; j < found.size(); ++j) {
      Rat ip = inner_product(found[i], found[j]).as_rational();
      if (ip != (i == j ? 1 : 0)) throw std::logic_error("character_table: orthogonality audit failed");
    }
  irr_ = std::move(found);
}

std::vector<Rat> CharacterTable::decompose(const ClassFunction& f) const {
  if (!f.group().same_group(g_)) throw usage_error("decompose: group mismatch");
  std::vector<Rat> coords;
  coords.reserve(irr_.size());
  for (const ClassFunction& chi : irr_) coords.push_back(inner_product(f, chi).as_rational());
  // Exactness check: f must equal the combination.
  ClassFunction rec = ClassFunction::zero(g_);
  for (size_t i = 0; i < irr_.size(); ++i) rec = rec + irr_[i].scaled(coords[i]);
  if (!(rec == f)) throw std::logic_error("decompose: class function outside the rational span");
  return coords;
}

// ---------------------------------------------------------------------------
// VirtualCharacter

VirtualCharacter::VirtualCharacter(std::shared_ptr<const CharacterTable> table, std::vector<Int> coords)
    : table_(std::move(table)), coords_(std::move(coords)) {
  if (coords_.size() != table_->size()) throw std::logic_error("VirtualCharacter: wrong coord count");
  cf_ = ClassFunction::zero(table_->group());
  for (size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) cf_ = cf_ + table_->irreducibles()[i].scaled(Rat(coords_[i]));
}

VirtualCharacter VirtualCharacter::from_class_function(const ClassFunction& f) {
  auto table = CharacterTable::of(f.group());
  auto coords = table->decompose(f);
  std::vector<Int> ic;
  ic.reserve(coords.size());
  for (const Rat& c : coords) {
    if (c.get_den() != 1)
      throw std::logic_error("VirtualCharacter: non-integral coordinate " + to_string(c));
    ic.push_back(c.get_num());
  }
  return VirtualCharacter(std::move(table), std::move(ic));
}

VirtualCharacter VirtualCharacter::one(const PermGroup& g) { return constant(g, 1); }

VirtualCharacter VirtualCharacter::constant(const PermGroup& g, const Int& v) {
  return from_class_function(ClassFunction::constant(g, Rat(v)));
}

Int VirtualCharacter::dimension() const {
  Rat d = cf_.degree().as_rational();
  return d.get_num();
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& o) const {
  std::vector<Int> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return VirtualCharacter(table_, std::move(c));
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& o) const {
  std::vector<Int> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return VirtualCharacter(table_, std::move(c));
}

VirtualCharacter VirtualCharacter::operator*(const VirtualCharacter& o) const {
  return from_class_function(cf_ * o.cf_);
}

VirtualCharacter VirtualCharacter::pow(const Int& e) const {
  return from_class_function(cf_.pow(e));
}

bool VirtualCharacter::operator==(const VirtualCharacter& o) const {
  return table_->group().same_group(o.table_->group()) && coords_ == o.coords_;
}

VirtualCharacter restrict_vc(const VirtualCharacter& f, const PermGroup& k) {
  return VirtualCharacter::from_class_function(restrict_cf(f.cf(), k));
}

VirtualCharacter induce_vc(const VirtualCharacter& f, const PermGroup& h) {
  return VirtualCharacter::from_class_function(induce_cf(f.cf(), h));
}

VirtualCharacter conjugate_vc(const VirtualCharacter& f, const Perm& g) {
  return VirtualCharacter::from_class_function(conjugate_cf(f.cf(), g));
}

}  // namespace repring
