#include "repring/homalg.hpp"

#include <algorithm>
#include <sstream>

namespace repring {

EuclideanRingTag EuclideanRingTag::cyclotomic(unsigned long n) {
  if (n == 1 || n == 2) return EuclideanRingTag{1};  // Z[zeta_1] = Z[zeta_2] = Z
  if (n != 3 && n != 4 && n != 5 && n != 8 && n != 12)
    throw usage_error("unsupported cyclotomic ring level " + std::to_string(n) +
                      " (norm-Euclidean levels: 1, 3, 4, 5, 8, 12)");
  return EuclideanRingTag{n};
}

EuclideanRingTag EuclideanRingTag::parse(const std::string& name) {
  if (name == "z" || name == "Z" || name == "int" || name == "integers") return integers();
  if (name.rfind("zeta", 0) == 0) {
    try {
      return cyclotomic(std::stoul(name.substr(4)));
    } catch (const std::invalid_argument&) {
    }
  }
  throw usage_error("unknown ring '" + name + "' (expected z or zetaN)");
}

bool CycRingOps::is_unit(const CycNum& a) const {
  if (a.is_zero()) return false;
  Rat n = a.norm();
  return n == 1 || n == -1;
}

Int CycRingOps::size(const CycNum& a) const {
  if (a.is_zero()) return 0;
  Rat n = a.norm();
  if (n.get_den() != 1) throw std::logic_error("CycRingOps::size: non-integral element");
  return abs(n.get_num());
}

std::pair<CycNum, CycNum> CycRingOps::divmod(const CycNum& a, const CycNum& b) const {
  if (b.is_zero()) throw std::logic_error("CycRingOps::divmod: division by zero");
  if (a.is_zero()) return {zero(), zero()};
  CycNum exact = a * b.inverse();
  size_t phi = exact.coeffs().size();
  std::vector<Int> base(phi);
  for (size_t i = 0; i < phi; ++i) {
    // nearest integer, ties toward floor: floor(x + 1/2)
    Rat shifted = exact.coeffs()[i] + Rat(1, 2);
    base[i] = fdiv(shifted.get_num(), shifted.get_den());
  }
  Int nb = size(b);
  // Search small offsets around the rounded point; for the fields in use
  // the Euclidean minimum is < 1 and a +-1 box suffices (a +-2 box is tried
  // before giving up).
  for (int radius = 1; radius <= 2; ++radius) {
    std::optional<CycNum> best_q;
    CycNum best_r = zero();
    Int best_norm = 0;
    std::vector<int> off(phi, -radius);
    while (true) {
      std::vector<Rat> qc(phi);
      for (size_t i = 0; i < phi; ++i) qc[i] = Rat(base[i] + off[i]);
      CycNum q(level, qc);
      CycNum r = a - q * b;
      Int nr = size(r);
      if (!best_q || nr < best_norm) {
        best_q = q;
        best_r = r;
        best_norm = nr;
      }
      size_t k = 0;
      while (k < phi && off[k] == radius) off[k++] = -radius;
      if (k == phi) break;
      ++off[k];
    }
    if (best_norm < nb) return {*best_q, best_r};
  }
  throw std::logic_error("CycRingOps::divmod: no norm-reducing quotient found");
}

std::vector<CycNum> CycRingOps::torsion_units() const {
  std::vector<CycNum> out;
  unsigned long m;  // order of the torsion group mu_m
  switch (level) {
    case 1:
      m = 2;
      break;
    case 3:
      m = 6;
      break;
    case 4:
      m = 4;
      break;
    case 5:
      m = 10;
      break;
    case 8:
      m = 8;
      break;
    case 12:
      m = 12;
      break;
    default:
      throw std::logic_error("CycRingOps: unsupported level");
  }
  // mu_m is generated by -zeta_level (or -1 on level 1).
  CycNum g = level == 1 ? CycNum::from_rational(Rat(-1), 1) : -CycNum::zeta(level);
  CycNum acc = one();
  for (unsigned long i = 0; i < m; ++i) {
    out.push_back(acc);
    acc *= g;
  }
  return out;
}

std::optional<CycNum> CycRingOps::fundamental_unit() const {
  switch (level) {
    case 1:
    case 3:
    case 4:
      return std::nullopt;
    case 5:
      // 1 + zeta_5
      return CycNum::from_rational(Rat(1), 5) + CycNum::zeta(5);
    case 8:
      // 1 + sqrt(2) = 1 + zeta - zeta^3
      return CycNum::from_rational(Rat(1), 8) + CycNum::zeta(8) - CycNum::zeta(8, 3);
    case 12:
      // 1 - zeta_12, a unit of infinite order (conductor 12 is composite)
      return CycNum::from_rational(Rat(1), 12) - CycNum::zeta(12);
    default:
      throw std::logic_error("CycRingOps: unsupported level");
  }
}

CycNum CycRingOps::canonical_unit(const CycNum& a) const {
  if (a.is_zero()) return one();
  CycNum x = a;
  CycNum unit_acc = one();
  if (auto eps = fundamental_unit()) {
    // T2 along the eps-orbit is strictly convex; walk to the minimum.
    auto t2 = [](const CycNum& v) { return v.t2(); };
    CycNum inv = eps->inverse();
    while (true) {
      CycNum up = x * *eps;
      if (t2(up) < t2(x)) {
        x = up;
        unit_acc *= *eps;
        continue;
      }
      CycNum down = x * inv;
      if (t2(down) < t2(x)) {
        x = down;
        unit_acc *= inv;
        continue;
      }
      break;
    }
  }
  // Smallest torsion multiple with positive leading coefficient (the
  // torsion group contains -1, so one always exists).
  auto leading_positive = [](const CycNum& v) {
    for (const Rat& c : v.coeffs()) {
      if (c > 0) return true;
      if (c < 0) return false;
    }
    return false;
  };
  std::optional<CycNum> best;
  CycNum best_u = one();
  for (const CycNum& t : torsion_units()) {
    CycNum cand = x * t;
    if (!leading_positive(cand)) continue;
    if (!best || CycNum::compare(cand, *best) < 0) {
      best = cand;
      best_u = t;
    }
  }
  return unit_acc * best_u;
}

CycMat make_cyc_mat(const EuclideanRingTag& ring, const std::vector<std::vector<CycNum>>& rows) {
  size_t r = rows.size();
  size_t c = r ? rows[0].size() : 0;
  CycMat m(r, c, CycRingOps{ring.level});
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw usage_error("matrix rows have unequal lengths");
    for (size_t j = 0; j < c; ++j) {
      if (rows[i][j].level() != ring.level)
        throw usage_error("matrix entry level does not match the ring");
      if (!rows[i][j].is_integral()) throw usage_error("matrix entries must be ring integers");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

IntMat ideal_hnf(const EuclideanRingTag& ring, const CycNum& d) {
  size_t phi = totient(ring.level);
  IntMat m(phi, phi);
  for (size_t i = 0; i < phi; ++i) {
    CycNum row = d * CycNum::zeta(ring.level, static_cast<long>(i));
    for (size_t j = 0; j < phi; ++j) {
      const Rat& c = row.coeffs()[j];
      if (c.get_den() != 1) throw std::logic_error("ideal_hnf: non-integral element");
      m(i, j) = c.get_num();
    }
  }
  return hnf(m).h;
}

FPModule::FPModule(EuclideanRingTag ring, CycMat relations) : ring_(ring), rel_(std::move(relations)) {}

FPModule FPModule::free_module(const EuclideanRingTag& ring, size_t rank) {
  return FPModule(ring, CycMat(0, rank, CycRingOps{ring.level}));
}

FPModule FPModule::zero_module(const EuclideanRingTag& ring) {
  return FPModule(ring, CycMat(0, 0, CycRingOps{ring.level}));
}

FPModule FPModule::cyclic_quotient(const EuclideanRingTag& ring, const CycNum& d) {
  CycMat m(1, 1, CycRingOps{ring.level});
  m(0, 0) = d.level() == ring.level ? d : d.embed(ring.level);
  return FPModule(ring, std::move(m));
}

FPModule FPModule::direct_sum(const FPModule& a, const FPModule& b) {
  if (!(a.ring() == b.ring())) throw usage_error("direct_sum: ring mismatch");
  CycRingOps ops{a.ring().level};
  CycMat m(a.rel_.rows() + b.rel_.rows(), a.rel_.cols() + b.rel_.cols(), ops);
  for (size_t i = 0; i < a.rel_.rows(); ++i)
    for (size_t j = 0; j < a.rel_.cols(); ++j) m(i, j) = a.rel_(i, j);
  for (size_t i = 0; i < b.rel_.rows(); ++i)
    for (size_t j = 0; j < b.rel_.cols(); ++j) m(a.rel_.rows() + i, a.rel_.cols() + j) = b.rel_(i, j);
  return FPModule(a.ring(), std::move(m));
}

const FPModule::Invariants& FPModule::invariants() const {
  if (inv_) return *inv_;
  CycRingOps ops{ring_.level};
  auto snf = smith(rel_);
  Invariants inv;
  size_t rel_rank = 0;
  for (const CycNum& d : snf.diagonal) {
    if (d.is_zero()) continue;
    ++rel_rank;
    if (!ops.is_unit(d)) {
      CycNum cu = ops.canonical_unit(d);
      CycNum canon = d * cu;
      inv.torsion.push_back(canon);
      inv.torsion_ideals.push_back(ideal_hnf(ring_, canon));
      inv.torsion_order *= ops.size(canon);
    }
  }
  inv.rank = rel_.cols() - rel_rank;
  inv_ = std::move(inv);
  return *inv_;
}

bool FPModule::is_zero() const {
  const Invariants& inv = invariants();
  return inv.rank == 0 && inv.torsion.empty();
}

bool FPModule::same_class(const FPModule& o) const {
  if (!(ring_ == o.ring_)) return false;
  const Invariants& a = invariants();
  const Invariants& b = o.invariants();
  if (a.rank != b.rank || a.torsion_ideals.size() != b.torsion_ideals.size()) return false;
  for (size_t i = 0; i < a.torsion_ideals.size(); ++i)
    if (!(a.torsion_ideals[i] == b.torsion_ideals[i])) return false;
  return true;
}

std::string FPModule::describe() const {
  const Invariants& inv = invariants();
  std::ostringstream os;
  bool first = true;
  std::string r = ring_.is_integers() ? "Z" : "R";
  if (inv.rank > 0) {
    os << r;
    if (inv.rank > 1) os << "^" << inv.rank;
    first = false;
  }
  for (const CycNum& d : inv.torsion) {
    os << (first ? "" : " + ") << r << "/(" << d.to_string() << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

SmithResult smith_normal_form(const EuclideanRingTag& ring, const CycMat& m) {
  auto raw = smith(m);
  SmithResult out{std::move(raw.d), std::move(raw.u), std::move(raw.v), std::move(raw.diagonal)};
  if (!(out.u.mul(m).mul(out.v) == out.d))
    throw std::logic_error("smith_normal_form: U*M*V != D");
  (void)ring;
  return out;
}

FPModule tensor(const FPModule& m, const FPModule& n) {
  if (!(m.ring() == n.ring())) throw usage_error("tensor: ring mismatch");
  CycRingOps ops{m.ring().level};
  size_t gm = m.generators(), gn = n.generators();
  const CycMat& a = m.relations();
  const CycMat& b = n.relations();
  CycMat rel(a.rows() * gn + gm * b.rows(), gm * gn, ops);
  size_t row = 0;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < gn; ++j, ++row)
      for (size_t k = 0; k < gm; ++k) rel(row, k * gn + j) = a(i, k);
  for (size_t i = 0; i < gm; ++i)
    for (size_t j = 0; j < b.rows(); ++j, ++row)
      for (size_t k = 0; k < gn; ++k) rel(row, i * gn + k) = b(j, k);
  return FPModule(m.ring(), std::move(rel));
}

namespace {

/// Presents the d-torsion submodule N[d] = ker(d : N -> N) of
/// N = R^g / rows(B).
FPModule torsion_kernel(const FPModule& n, const CycNum& d) {
  CycRingOps ops{n.ring().level};
  size_t g = n.generators();
  const CycMat& b = n.relations();
  size_t r = b.rows();
  // Solutions (x, y), x in R^g, y in R^r, with d*x - y*B = 0; kernel rows of
  // the stacked (g + r) x g matrix [d*I ; -B].
  CycMat stacked(g + r, g, ops);
  for (size_t i = 0; i < g; ++i) stacked(i, i) = d;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < g; ++j) stacked(g + i, j) = ops.neg(b(i, j));
  CycMat kern = left_kernel(stacked);
  // x-parts of the kernel basis generate the preimage lattice L.
  size_t s = kern.rows();
  CycMat lbasis(s, g, ops);
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < g; ++j) lbasis(i, j) = kern(i, j);
  // Relations: each row of B lies in L; express it in the L-basis.
  CycMat rel(r, s, ops);
  for (size_t i = 0; i < r; ++i) {
    std::vector<CycNum> target(g, ops.zero());
    for (size_t j = 0; j < g; ++j) target[j] = b(i, j);
    auto sol = solve_left(lbasis, target);
    if (!sol) throw std::logic_error("tor1: relation row escapes the kernel lattice");
    for (size_t j = 0; j < s; ++j) rel(i, j) = (*sol)[j];
  }
  return FPModule(n.ring(), std::move(rel));
}

}  // namespace

FPModule tor1(const FPModule& m, const FPModule& n) {
  if (!(m.ring() == n.ring())) throw usage_error("tor1: ring mismatch");
  // Tor_1(R/(d), N) = N[d]; free summands contribute nothing.
  FPModule acc = FPModule::zero_module(m.ring());
  for (const CycNum& d : m.invariants().torsion) acc = FPModule::direct_sum(acc, torsion_kernel(n, d));
  return acc;
}

bool is_flat(const FPModule& m) { return m.invariants().torsion.empty(); }

KunnethEnds kunneth_ends(const FPModule& m, const FPModule& n) {
  return KunnethEnds{tensor(m, n), tor1(m, n)};
}

SESReport verify_ses(const KunnethEnds& ends, const FPModule& middle) {
  SESReport rep;
  const auto& l = ends.tensor_part.invariants();
  const auto& r = ends.tor_part.invariants();
  const auto& mid = middle.invariants();
  rep.rank_left = l.rank;
  rep.rank_right = r.rank;
  rep.rank_middle = mid.rank;
  rep.torsion_left = l.torsion_order;
  rep.torsion_right = r.torsion_order;
  rep.torsion_middle = mid.torsion_order;
  rep.rank_additive = (mid.rank == l.rank + r.rank);
  rep.torsion_multiplicative = (mid.torsion_order == l.torsion_order * r.torsion_order);
  rep.consistent = rep.rank_additive && rep.torsion_multiplicative;
  return rep;
}

}  // namespace repring
