#include "repring/group.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <sstream>

namespace repring {

struct PermGroup::Data {
  size_t degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;  // sorted lex

  mutable std::mutex mu;
  mutable std::vector<size_t> inv_table;
  mutable std::vector<size_t> mult_table;  // order*order, built lazily
  mutable bool mult_built = false;
  mutable std::optional<ConjClasses> classes;
  mutable bool subs_built = false;
  mutable std::vector<std::pair<std::vector<size_t>, PermGroup>> subs;
  mutable std::optional<SubgroupClasses> sub_classes;
};

namespace {

constexpr unsigned long kMultTableLimit = 2048;

std::vector<Perm> bfs_closure(const std::vector<Perm>& gens, size_t degree, unsigned long cap) {
  std::set<Perm> seen;
  seen.insert(Perm(degree));
  std::vector<Perm> queue{Perm(degree)};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const Perm& g : gens) {
      Perm next = queue[qi].compose(g);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw usage_error("group order exceeds the cap of " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};  // std::set iterates in sorted order
}

}  // namespace

PermGroup::PermGroup(std::vector<Perm> generators, unsigned long cap) {
  if (generators.empty()) throw usage_error("a permutation group needs at least one generator");
  size_t degree = 0;
  for (const Perm& g : generators) degree = std::max(degree, g.degree());
  if (degree == 0) degree = 1;
  for (Perm& g : generators) g = g.extended(degree);
  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->elements = bfs_closure(generators, degree, cap);
  d->gens = std::move(generators);
  d_ = std::move(d);
}

PermGroup PermGroup::trivial(size_t degree) {
  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->gens = {Perm(degree)};
  d->elements = {Perm(degree)};
  return PermGroup(std::move(d));
}

PermGroup PermGroup::from_sorted_elements(std::vector<Perm> elems, std::vector<Perm> gens) {
  auto d = std::make_shared<Data>();
  d->degree = elems.empty() ? 1 : elems[0].degree();
  d->elements = std::move(elems);
  d->gens = std::move(gens);
  return PermGroup(std::move(d));
}

size_t PermGroup::degree() const { return d_->degree; }
unsigned long PermGroup::order() const { return d_->elements.size(); }
const std::vector<Perm>& PermGroup::elements() const { return d_->elements; }
const std::vector<Perm>& PermGroup::generators() const { return d_->gens; }

int PermGroup::element_index(const Perm& p) const {
  const auto& v = d_->elements;
  auto it = std::lower_bound(v.begin(), v.end(), p);
  if (it == v.end() || !(*it == p)) return -1;
  return static_cast<int>(it - v.begin());
}

size_t PermGroup::mul(size_t a, size_t b) const {
  const Data& d = *d_;
  if (!d.mult_built && order() <= kMultTableLimit) {
    std::lock_guard<std::mutex> lock(d.mu);
    if (!d.mult_built) {
      size_t n = order();
      d.mult_table.resize(n * n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          int k = element_index(d.elements[i].compose(d.elements[j]));
          assert(k >= 0);
          d.mult_table[i * n + j] = static_cast<size_t>(k);
        }
      d.mult_built = true;
    }
  }
  if (d.mult_built) return d.mult_table[a * order() + b];
  int k = element_index(d.elements[a].compose(d.elements[b]));
  assert(k >= 0);
  return static_cast<size_t>(k);
}

size_t PermGroup::inv(size_t a) const {
  const Data& d = *d_;
  {
    std::lock_guard<std::mutex> lock(d.mu);
    if (d.inv_table.empty()) {
      d.inv_table.resize(order());
      for (size_t i = 0; i < order(); ++i) {
        int k = element_index(d.elements[i].inverse());
        assert(k >= 0);
        d.inv_table[i] = static_cast<size_t>(k);
      }
    }
  }
  return d.inv_table[a];
}

size_t PermGroup::identity_index() const {
  int k = element_index(Perm(degree()));
  assert(k >= 0);
  return static_cast<size_t>(k);
}

bool PermGroup::is_abelian() const {
  for (const Perm& a : d_->gens)
    for (const Perm& b : d_->gens)
      if (!(a.compose(b) == b.compose(a))) return false;
  return true;
}

bool PermGroup::is_cyclic() const {
  for (const Perm& g : d_->elements)
    if (g.order() == order()) return true;
  return false;
}

Perm PermGroup::cyclic_generator() const {
  for (const Perm& g : d_->elements)
    if (g.order() == order()) return g;
  throw std::logic_error("cyclic_generator: group is not cyclic");
}

unsigned long PermGroup::exponent() const {
  Int e = 1;
  for (const Perm& g : d_->elements) e = lcm(e, Int(g.order()));
  return e.get_ui();
}

const PermGroup::ConjClasses& PermGroup::conjugacy_classes() const {
  const Data& d = *d_;
  std::lock_guard<std::mutex> lock(d.mu);
  if (d.classes) return *d.classes;
  size_t n = order();
  ConjClasses cc;
  cc.class_of.assign(n, SIZE_MAX);
  std::vector<std::vector<size_t>> raw;
  for (size_t i = 0; i < n; ++i) {
    if (cc.class_of[i] != SIZE_MAX) continue;
    std::vector<size_t> orbit{i};
    cc.class_of[i] = raw.size();
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      for (const Perm& g : d.gens) {
        Perm conj = d.elements[orbit[qi]].conjugated_by(g);
        int k = element_index(conj);
        assert(k >= 0);
        if (cc.class_of[k] == SIZE_MAX) {
          cc.class_of[k] = raw.size();
          orbit.push_back(static_cast<size_t>(k));
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    raw.push_back(std::move(orbit));
  }
  std::vector<size_t> perm(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) perm[i] = i;
  auto class_key = [&](size_t i) {
    return std::make_tuple(d.elements[raw[i][0]].order(), raw[i].size(), raw[i][0]);
  };
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return class_key(a) < class_key(b); });
  cc.members.resize(raw.size());
  cc.rep.resize(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    cc.members[i] = raw[perm[i]];
    cc.rep[i] = cc.members[i][0];
    for (size_t e : cc.members[i]) cc.class_of[e] = i;
  }
  d.classes = std::move(cc);
  return *d.classes;
}

bool PermGroup::same_group(const PermGroup& o) const {
  if (d_ == o.d_) return true;
  return degree() == o.degree() && elements() == o.elements();
}

bool PermGroup::subgroup_of(const PermGroup& o) const {
  if (degree() != o.degree()) return false;
  for (const Perm& g : elements())
    if (!o.contains(g)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  return std::includes(ids.begin(), ids.end(), other.ids.begin(), other.ids.end());
}

bool Subgroup::same_subgroup(const Subgroup& other) const { return ids == other.ids; }

Subgroup Subgroup::conjugated_by(const Perm& g) const {
  std::vector<size_t> nids;
  nids.reserve(ids.size());
  for (size_t id : ids) {
    int k = parent.element_index(parent.element(id).conjugated_by(g));
    if (k < 0) throw std::logic_error("conjugated_by: conjugate left the parent group");
    nids.push_back(static_cast<size_t>(k));
  }
  return make_subgroup(parent, std::move(nids));
}

namespace {

/// Greedy deterministic generating set for a closed id-subset.
std::vector<size_t> greedy_generators(const PermGroup& parent, const std::vector<size_t>& ids) {
  std::vector<size_t> gens;
  std::vector<char> inspan(parent.order(), 0);
  std::vector<size_t> span{parent.identity_index()};
  inspan[parent.identity_index()] = 1;
  for (size_t id : ids) {
    if (inspan[id]) continue;
    gens.push_back(id);
    std::vector<size_t> queue(span);
    queue.push_back(id);
    inspan[id] = 1;
    span.push_back(id);
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (size_t g : gens) {
        for (size_t x : {parent.mul(queue[qi], g), parent.mul(g, queue[qi])}) {
          if (!inspan[x]) {
            inspan[x] = 1;
            span.push_back(x);
            queue.push_back(x);
          }
        }
      }
    if (span.size() == ids.size()) break;
  }
  return gens;
}

std::vector<size_t> closure_ids(const PermGroup& g, const std::vector<size_t>& seed) {
  std::vector<char> inset(g.order(), 0);
  std::vector<size_t> set, queue;
  auto push = [&](size_t x) {
    if (!inset[x]) {
      inset[x] = 1;
      set.push_back(x);
      queue.push_back(x);
    }
  };
  push(g.identity_index());
  for (size_t s : seed) push(s);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    size_t x = queue[qi];
    for (size_t i = 0; i < set.size(); ++i) {
      push(g.mul(x, set[i]));
      push(g.mul(set[i], x));
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace

Subgroup make_subgroup(const PermGroup& parent, std::vector<size_t> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (size_t a : ids)
    for (size_t b : ids)
      if (!std::binary_search(ids.begin(), ids.end(), parent.mul(a, b)))
        throw std::logic_error("make_subgroup: id set is not closed under products");
  std::vector<Perm> elems;
  elems.reserve(ids.size());
  for (size_t id : ids) elems.push_back(parent.element(id));
  std::vector<Perm> gens;
  for (size_t id : greedy_generators(parent, ids)) gens.push_back(parent.element(id));
  if (gens.empty()) gens.push_back(Perm(parent.degree()));
  Subgroup s;
  s.group = PermGroup::from_sorted_elements(std::move(elems), std::move(gens));
  s.parent = parent;
  s.ids = std::move(ids);
  return s;
}

Subgroup whole_group_as_subgroup(const PermGroup& g) {
  std::vector<size_t> ids(g.order());
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  Subgroup s;
  s.group = g;
  s.parent = g;
  s.ids = std::move(ids);
  return s;
}

Subgroup trivial_subgroup(const PermGroup& g) { return make_subgroup(g, {g.identity_index()}); }

Subgroup cyclic_subgroup(const PermGroup& parent, const Perm& g) {
  int k = parent.element_index(g.degree() == parent.degree() ? g : g.extended(parent.degree()));
  if (k < 0) throw usage_error("cyclic_subgroup: element not in parent group");
  std::vector<size_t> ids;
  size_t e = parent.identity_index();
  size_t x = e;
  do {
    ids.push_back(x);
    x = parent.mul(x, static_cast<size_t>(k));
  } while (x != e);
  return make_subgroup(parent, std::move(ids));
}

std::string Subgroup::describe() const {
  std::ostringstream os;
  os << "<";
  auto gens = greedy_generators(parent, ids);
  bool first = true;
  for (size_t g : gens) {
    os << (first ? "" : ", ") << parent.element(g).cycle_string();
    first = false;
  }
  if (gens.empty()) os << "()";
  os << ">";
  return os.str();
}

std::vector<Subgroup> subgroups(const PermGroup& g) {
  const PermGroup::Data& d = *g.d_;
  {
    std::lock_guard<std::mutex> lock(d.mu);
    if (d.subs_built) {
      std::vector<Subgroup> out;
      out.reserve(d.subs.size());
      for (const auto& [ids, grp] : d.subs) {
        Subgroup s;
        s.group = grp;
        s.parent = g;
        s.ids = ids;
        out.push_back(std::move(s));
      }
      return out;
    }
  }

  // Cyclic subgroups first, then join-closure against them. Computed outside
  // the lock (mul() takes it to build the multiplication table).
  std::set<std::vector<size_t>> known;
  std::vector<std::vector<size_t>> cyclics;
  for (size_t i = 0; i < g.order(); ++i) {
    std::vector<size_t> ids;
    size_t e = g.identity_index(), x = e;
    do {
      ids.push_back(x);
      x = g.mul(x, i);
    } while (x != e);
    std::sort(ids.begin(), ids.end());
    if (known.insert(ids).second) cyclics.push_back(ids);
  }
  std::vector<std::vector<size_t>> work(known.begin(), known.end());
  for (size_t wi = 0; wi < work.size(); ++wi) {
    for (const auto& c : cyclics) {
      if (std::includes(work[wi].begin(), work[wi].end(), c.begin(), c.end())) continue;
      std::vector<size_t> seed(work[wi]);
      seed.insert(seed.end(), c.begin(), c.end());
      std::vector<size_t> j = closure_ids(g, seed);
      if (known.insert(j).second) work.push_back(std::move(j));
    }
  }
  std::vector<std::vector<size_t>> all(known.begin(), known.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<std::pair<std::vector<size_t>, PermGroup>> built;
  std::vector<Subgroup> out;
  for (auto& ids : all) {
    Subgroup s = make_subgroup(g, ids);
    built.emplace_back(ids, s.group);
    out.push_back(std::move(s));
  }
  {
    std::lock_guard<std::mutex> lock(d.mu);
    if (!d.subs_built) {
      d.subs = std::move(built);
      d.subs_built = true;
    }
  }
  return out;
}

const SubgroupClasses& subgroup_classes(const PermGroup& g) {
  auto subs = subgroups(g);
  static std::mutex mu;
  static std::map<const void*, SubgroupClasses> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g.key());
  if (it != cache.end()) return it->second;

  SubgroupClasses sc;
  sc.class_of.assign(subs.size(), SIZE_MAX);
  std::map<std::vector<size_t>, size_t> index_of;
  for (size_t i = 0; i < subs.size(); ++i) index_of[subs[i].ids] = i;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (sc.class_of[i] != SIZE_MAX) continue;
    std::vector<size_t> orbit{i};
    sc.class_of[i] = sc.classes.size();
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      for (const Perm& gen : g.generators()) {
        Subgroup conj = subs[orbit[qi]].conjugated_by(gen);
        size_t j = index_of.at(conj.ids);
        if (sc.class_of[j] == SIZE_MAX) {
          sc.class_of[j] = sc.classes.size();
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    sc.classes.push_back(std::move(orbit));
  }
  return cache.emplace(g.key(), std::move(sc)).first->second;
}

Subgroup normalizer(const Subgroup& e, const Subgroup& h) {
  if (!e.parent.same_group(h.parent)) throw usage_error("normalizer: subgroups of different parents");
  if (!e.contains_subgroup(h)) throw usage_error("normalizer: H is not contained in E");
  std::vector<size_t> ids;
  for (size_t gid : e.ids) {
    const Perm& g = e.parent.element(gid);
    bool normalizes = true;
    for (size_t hid : h.ids) {
      int k = e.parent.element_index(e.parent.element(hid).conjugated_by(g));
      if (k < 0 || !std::binary_search(h.ids.begin(), h.ids.end(), static_cast<size_t>(k))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) ids.push_back(gid);
  }
  return make_subgroup(e.parent, std::move(ids));
}

DoubleCosets double_cosets(const Subgroup& l, const Subgroup& m, const Subgroup& h) {
  if (!l.parent.same_group(m.parent) || !h.parent.same_group(m.parent))
    throw usage_error("double_cosets: mismatched parents");
  if (!m.contains_subgroup(l) || !m.contains_subgroup(h))
    throw usage_error("double_cosets: L and H must be contained in the middle group");
  const PermGroup& p = m.parent;
  std::vector<char> seen(p.order(), 0);
  DoubleCosets out;
  for (size_t x : m.ids) {
    if (seen[x]) continue;
    std::vector<size_t> orbit{x};
    seen[x] = 1;
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      for (size_t lg : l.ids) {
        size_t y = p.mul(lg, orbit[qi]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
      for (size_t hg : h.ids) {
        size_t y = p.mul(orbit[qi], hg);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    out.reps.push_back(x);
    out.sizes.push_back(orbit.size());
  }
  return out;
}

bool is_eppo(const PermGroup& g, unsigned long* witness_order) {
  for (const Perm& x : g.elements()) {
    unsigned long o = x.order();
    PrimePower pp;
    if (!prime_power_decompose(Int(o), pp)) {
      if (witness_order) *witness_order = o;
      return false;
    }
  }
  return true;
}

std::vector<SubgroupFamily> prime_subgroup_families(const PermGroup& g, bool allow_non_eppo) {
  unsigned long w = 0;
  if (!is_eppo(g, &w) && !allow_non_eppo)
    throw verified_negative("group is not EPPO (element of order " + std::to_string(w) +
                            "); p-subgroup families would not exhaust its elementary subgroups");
  auto subs = subgroups(g);
  std::vector<SubgroupFamily> out;
  for (auto& [p, r] : factor(Int(g.order()))) {
    SubgroupFamily fam;
    fam.prime = p;
    fam.sylow_exponent = r;
    for (const Subgroup& s : subs) {
      if (s.order() == 1 || is_power_of(Int(s.order()), p)) {
        if (s.group.is_cyclic()) fam.cyclic.push_back(fam.members.size());
        fam.members.push_back(s);
      }
    }
    out.push_back(std::move(fam));
  }
  return out;
}

std::vector<Subgroup> cyclic_subgroup_class_reps(const PermGroup& g) {
  auto subs = subgroups(g);
  const auto& sc = subgroup_classes(g);
  std::vector<Subgroup> out;
  for (const auto& cls : sc.classes) {
    const Subgroup& rep = subs[cls[0]];
    if (rep.group.is_cyclic()) out.push_back(rep);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

PermGroup catalog_cyclic(unsigned long n, unsigned long cap) {
  if (n == 0) throw usage_error("C0 is not a group");
  if (n > cap) throw usage_error("group order exceeds the cap");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> img(n);
  for (size_t i = 0; i < n; ++i) img[i] = static_cast<int>((i + 1) % n);
  return PermGroup({Perm(std::move(img))}, cap);
}

PermGroup catalog_dihedral(unsigned long n, unsigned long cap) {
  if (n == 0) throw usage_error("D0 is not a group");
  if (2 * n > cap) throw usage_error("group order exceeds the cap");
  if (n == 1) return PermGroup({Perm::from_cycles("(0 1)")}, cap);
  if (n == 2) return PermGroup({Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(2 3)", 4)}, cap);
  std::vector<int> rot(n), refl(n);
  for (size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<int>((i + 1) % n);
    refl[i] = static_cast<int>((n - i) % n);
  }
  return PermGroup({Perm(std::move(rot)), Perm(std::move(refl))}, cap);
}

PermGroup catalog_quaternion(unsigned long n, unsigned long cap) {
  // Generalized quaternion of order n = 2^k (k >= 3) in its regular action:
  // x of order n/2, y with y^2 = x^{n/4}, y x y^{-1} = x^{-1}.
  if (n < 8 || (n & (n - 1)) != 0) throw usage_error("Qn requires n a power of two with n >= 8");
  if (n > cap) throw usage_error("group order exceeds the cap");
  unsigned long m = n / 2;
  auto idx = [m](unsigned long a, unsigned long b) { return static_cast<int>(a + m * b); };
  std::vector<int> x(n), y(n);
  for (unsigned long a = 0; a < m; ++a)
    for (unsigned long b = 0; b < 2; ++b) {
      x[idx(a, b)] = idx((a + 1) % m, b);
      if (b == 0)
        y[idx(a, b)] = idx((m - a) % m, 1);
      else
        y[idx(a, b)] = idx((m / 2 + m - a) % m, 0);
    }
  return PermGroup({Perm(std::move(x)), Perm(std::move(y))}, cap);
}

Int factorial(unsigned long n) {
  Int f = 1;
  for (unsigned long i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

PermGroup catalog_symmetric(unsigned long n, unsigned long cap) {
  if (n == 0) throw usage_error("S0 is not a group");
  if (factorial(n) > cap) throw usage_error("group order exceeds the cap");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> cyc(n);
  for (size_t i = 0; i < n; ++i) cyc[i] = static_cast<int>((i + 1) % n);
  return PermGroup({Perm(std::move(cyc)), Perm::from_cycles("(0 1)", n)}, cap);
}

PermGroup catalog_alternating(unsigned long n, unsigned long cap) {
  if (n == 0) throw usage_error("A0 is not a group");
  if (n <= 2) return PermGroup::trivial(std::max<unsigned long>(n, 1));
  if (factorial(n) / 2 > cap) throw usage_error("group order exceeds the cap");
  if (n == 3) return PermGroup({Perm::from_cycles("(0 1 2)")}, cap);
  std::vector<Perm> gens{Perm::from_cycles("(0 1 2)", n)};
  if (n % 2 == 1) {
    std::vector<int> cyc(n);
    for (size_t i = 0; i < n; ++i) cyc[i] = static_cast<int>((i + 1) % n);
    gens.push_back(Perm(std::move(cyc)));
  } else {
    std::vector<int> cyc(n);
    cyc[0] = 0;
    for (size_t i = 1; i < n; ++i) cyc[i] = static_cast<int>(i % (n - 1) + 1);
    gens.push_back(Perm(std::move(cyc)));
  }
  return PermGroup(std::move(gens), cap);
}

}  // namespace

PermGroup catalog_group(const std::string& name, unsigned long cap) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw usage_error("empty group identifier");
  if (s.find('(') != std::string::npos) {
    std::vector<Perm> gens;
    std::istringstream in(name);
    std::string part;
    while (std::getline(in, part, ';')) {
      bool blank = true;
      for (char c : part)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) gens.push_back(Perm::from_cycles(part));
    }
    if (gens.empty()) throw usage_error("no generators in '" + name + "'");
    size_t deg = 0;
    for (const Perm& g : gens) deg = std::max(deg, g.degree());
    for (Perm& g : gens) g = g.extended(deg);
    return PermGroup(std::move(gens), cap);
  }
  char kind = s[0];
  std::string digits = s.substr(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw usage_error("unknown group identifier '" + name + "' (expected ^(C|D|Q|S|A)[0-9]+$ or cycles)");
  unsigned long n = std::stoul(digits);
  switch (kind) {
    case 'C':
      return catalog_cyclic(n, cap);
    case 'D':
      return catalog_dihedral(n, cap);
    case 'Q':
      return catalog_quaternion(n, cap);
    case 'S':
      return catalog_symmetric(n, cap);
    case 'A':
      return catalog_alternating(n, cap);
    default:
      throw usage_error("unknown group identifier '" + name + "'");
  }
}

}  // namespace repring
