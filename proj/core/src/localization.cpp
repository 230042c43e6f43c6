#include "repring/localization.hpp"

#include "repring/matrix.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace repring {

bool DivisiblePrimes::contains(const Int& p) const {
  if (all) return true;
  return std::binary_search(primes.begin(), primes.end(), p);
}

std::string NonUnitCertificate::describe() const {
  std::ostringstream os;
  if (vanishes)
    os << "value vanishes at class " << class_index << " while no generator value does";
  else
    os << "prime " << obstruction_prime.get_str() << " divides N(f) at class " << class_index
       << " but divides no generator norm there";
  return os.str();
}

std::string UnitAnswer::verdict_name() const {
  switch (verdict) {
    case Verdict::unit:
      return "unit";
    case Verdict::nonunit:
      return "nonunit";
    default:
      return "undecided";
  }
}

std::string CertCompareResult::verdict_name() const {
  switch (verdict) {
    case Verdict::equal:
      return "equal";
    case Verdict::distinct:
      return "distinct";
    default:
      return "undecided";
  }
}

MultSet restricted_profile(const MultSet& s, const PermGroup& h) {
  MultSet out;
  out.group = h;
  for (const VirtualCharacter& g : s.generators) out.generators.push_back(restrict_vc(g, h));
  return out;
}

DivisiblePrimes divisible_primes(const MultSet& s) {
  DivisiblePrimes out;
  std::set<Int> primes;
  for (const VirtualCharacter& g : s.generators) {
    Int d = g.dimension();
    if (d == 0) {
      out.all = true;
      out.primes.clear();
      return out;
    }
    if (d == 1 || d == -1) continue;
    for (const Int& p : prime_divisors(d)) primes.insert(p);
  }
  out.primes.assign(primes.begin(), primes.end());
  return out;
}

namespace {

/// Integer multiplication matrix of f in the irreducible basis, transposed
/// for solve_left (x * A = b with row vectors).
IntMat mult_matrix_transposed(const VirtualCharacter& f) {
  const auto& table = *f.table();
  size_t r = table.size();
  IntMat a(r, r);
  for (size_t j = 0; j < r; ++j) {
    ClassFunction col = f.cf() * table.irreducibles()[j];
    auto coords = table.decompose(col);
    for (size_t i = 0; i < r; ++i) {
      if (coords[i].get_den() != 1) throw std::logic_error("mult_matrix: non-integral product");
      a(j, i) = coords[i].get_num();  // row j = coords of f * chi_j
    }
  }
  return a;
}

std::vector<Int> vc_coord_vec(const VirtualCharacter& v) { return v.coords(); }

std::optional<VirtualCharacter> divide_exact(const VirtualCharacter& f, const VirtualCharacter& s,
                                             const IntMat& mt) {
  auto sol = solve_left(mt, vc_coord_vec(s));
  if (!sol) return std::nullopt;
  return VirtualCharacter(f.table(), std::move(*sol));
}

VirtualCharacter product_of(const MultSet& s, const std::vector<unsigned long>& exps) {
  VirtualCharacter acc = VirtualCharacter::one(s.group);
  for (size_t i = 0; i < s.generators.size(); ++i)
    if (exps[i] > 0) acc = acc * s.generators[i].pow(Int(exps[i]));
  return acc;
}

}  // namespace

UnitAnswer is_unit(const VirtualCharacter& f, const MultSet& s, unsigned long bound) {
  if (!f.group().same_group(s.group)) throw usage_error("is_unit: f and profile live on different groups");
  UnitAnswer ans;
  ans.bound = bound;

  const PermGroup& h = s.group;
  const auto& cc = h.conjugacy_classes();
  size_t nc = cc.members.size();

  // Evaluation certificates, bound-independent.
  for (size_t c = 0; c < nc; ++c) {
    CycNum fv = f.cf().value_on_class(c);
    std::vector<Int> gen_norms;
    bool gen_vanishes = false;
    for (const VirtualCharacter& g : s.generators) {
      CycNum gv = g.cf().value_on_class(c);
      if (gv.is_zero()) {
        gen_vanishes = true;
        break;
      }
      Rat n = gv.norm();
      gen_norms.push_back(abs(n.get_num()));
    }
    if (gen_vanishes) continue;  // products may vanish here; no obstruction possible
    if (fv.is_zero()) {
      ans.verdict = UnitAnswer::Verdict::nonunit;
      ans.certificate = NonUnitCertificate{c, true, 0};
      return ans;
    }
    Rat nf = fv.norm();
    for (const Int& q : prime_divisors(nf.get_num())) {
      bool divides_some = false;
      for (const Int& gn : gen_norms)
        if (gn % q == 0) {
          divides_some = true;
          break;
        }
      if (!divides_some) {
        ans.verdict = UnitAnswer::Verdict::nonunit;
        ans.certificate = NonUnitCertificate{c, false, q};
        return ans;
      }
    }
  }

  // Witness search: exact divisibility f | product, solved over Z.
  IntMat mt = mult_matrix_transposed(f);
  size_t g = s.generators.size();
  auto attempt = [&](const std::vector<unsigned long>& exps) -> bool {
    VirtualCharacter prod = product_of(s, exps);
    auto cof = divide_exact(f, prod, mt);
    if (!cof) return false;
    ans.verdict = UnitAnswer::Verdict::unit;
    ans.witness = UnitWitness{exps, std::move(*cof), std::move(prod)};
    return true;
  };

  // Stage 1: every multiset of total degree <= min(bound, 6).
  unsigned long small = std::min<unsigned long>(bound, 6);
  {
    std::vector<unsigned long> exps(g, 0);
    // iterate all exponent vectors with sum <= small
    std::function<bool(size_t, unsigned long)> rec = [&](size_t idx, unsigned long left) -> bool {
      if (idx == g) return attempt(exps);
      for (unsigned long e = 0; e <= left; ++e) {
        exps[idx] = e;
        if (rec(idx + 1, left - e)) return true;
      }
      exps[idx] = 0;
      return false;
    };
    if (g == 0) {
      if (attempt({})) return ans;
    } else if (rec(0, small)) {
      return ans;
    }
  }

  // Stage 2: doubling jumps up to the bound; padding keeps divisibility
  // monotone, so only high-degree products need to be probed.
  if (g > 0) {
    std::vector<unsigned long> stages;
    for (unsigned long k = 12; k < bound; k *= 2) stages.push_back(k);
    if (bound > small) stages.push_back(bound);
    for (unsigned long k : stages) {
      for (size_t i = 0; i < g; ++i) {
        std::vector<unsigned long> exps(g, 0);
        exps[i] = k;
        if (attempt(exps)) return ans;
      }
      if (g > 1 && k / g > 0) {
        std::vector<unsigned long> exps(g, k / g);
        if (attempt(exps)) return ans;
      }
    }
  }

  ans.verdict = UnitAnswer::Verdict::undecided;
  return ans;
}

bool reverify(const UnitAnswer& ans, const VirtualCharacter& f, const MultSet& s) {
  switch (ans.verdict) {
    case UnitAnswer::Verdict::unit: {
      if (!ans.witness) return false;
      VirtualCharacter prod = product_of(s, ans.witness->exponents);
      if (!(prod == ans.witness->product)) return false;
      return f * ans.witness->cofactor == prod;
    }
    case UnitAnswer::Verdict::nonunit: {
      if (!ans.certificate) return false;
      const NonUnitCertificate& cert = *ans.certificate;
      size_t c = cert.class_index;
      CycNum fv = f.cf().value_on_class(c);
      for (const VirtualCharacter& g : s.generators)
        if (g.cf().value_on_class(c).is_zero()) return false;
      if (cert.vanishes) return fv.is_zero();
      if (fv.is_zero()) return false;
      Rat nf = fv.norm();
      if (nf.get_num() % cert.obstruction_prime != 0) return false;
      for (const VirtualCharacter& g : s.generators) {
        Rat ng = g.cf().value_on_class(c).norm();
        if (abs(ng.get_num()) % cert.obstruction_prime == 0) return false;
      }
      return true;
    }
    default:
      return true;
  }
}

UnitProfile::UnitProfile(MultSet base) : base_(std::move(base)), div_(divisible_primes(base_)) {}

MultSet UnitProfile::restricted(const PermGroup& h) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = restricted_.find(h.key());
  if (it != restricted_.end()) return it->second;
  MultSet r = restricted_profile(base_, h);
  restricted_.emplace(h.key(), r);
  return r;
}

UnitAnswer UnitProfile::query(const VirtualCharacter& f, unsigned long bound) const {
  std::pair<const void*, std::vector<Int>> key{f.group().key(), f.coords()};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end() && !it->second.is_undecided()) return it->second;
  }
  MultSet local = f.group().same_group(base_.group) ? base_ : restricted(f.group());
  UnitAnswer ans = repring::is_unit(f, local, bound);
  if (!ans.is_undecided()) {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.insert_or_assign(key, ans);
  }
  return ans;
}

CertCompareResult certificates_equal(const MultSet& s1, const MultSet& s2, unsigned long bound) {
  if (!s1.group.same_group(s2.group)) throw usage_error("certificates_equal: group mismatch");
  CertCompareResult res;
  bool undecided = false;
  auto check = [&](const MultSet& from, const MultSet& against, int idx) {
    for (const VirtualCharacter& g : from.generators) {
      UnitAnswer a = is_unit(g, against, bound);
      if (a.is_nonunit()) {
        res.verdict = CertCompareResult::Verdict::distinct;
        res.failing_set = idx;
        res.failing_generator = g;
        res.failing_answer = std::move(a);
        return true;
      }
      if (a.is_undecided()) {
        undecided = true;
        if (!res.failing_generator) {
          res.failing_set = idx;
          res.failing_generator = g;
          res.failing_answer = a;
        }
      }
    }
    return false;
  };
  if (check(s1, s2, 1)) return res;
  if (check(s2, s1, 2)) return res;
  res.verdict = undecided ? CertCompareResult::Verdict::undecided : CertCompareResult::Verdict::equal;
  if (res.verdict == CertCompareResult::Verdict::equal) {
    res.failing_generator.reset();
    res.failing_answer.reset();
    res.failing_set = 0;
  }
  return res;
}

std::vector<KGroupDescription> model_kgroups(const MultSet& s) {
  std::vector<KGroupDescription> out;
  for (const Subgroup& h : subgroups(s.group)) {
    KGroupDescription d;
    d.subgroup = h;
    MultSet local = restricted_profile(s, h.group);
    d.restricted_generators = local.generators;
    d.divisible = divisible_primes(local);
    d.k1_zero = true;
    PrimePower pp;
    if (h.group.is_cyclic() && prime_power_decompose(Int(h.order()), pp) && pp.exponent >= 1 &&
        d.divisible.contains(pp.prime)) {
      unsigned long q = pp.prime.get_ui();
      unsigned long lv = h.order();
      while (lv >= 1) {
        d.zeta_summand_levels.push_back(lv);
        if (lv == 1) break;
        lv /= q;
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace repring
