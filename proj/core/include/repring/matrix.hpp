#pragma once

#include <optional>
#include <vector>

#include "repring/numeric.hpp"

namespace repring {

/// Dense matrices over a Euclidean domain, parameterized by an operations
/// object. Ops must provide:
///   Elem, zero(), one(), add, sub, mul, neg, eq, is_zero, is_unit,
///   divmod(a,b) -> {q,r} with size(r) < size(b),
///   size(a) -> Int (Euclidean size, 0 iff a == 0),
///   canonical_unit(a) -> u with u*a the canonical associate of a,
///   inv_unit(u).
/// The ops object may carry state (e.g. a cyclotomic level).
template <class Ops>
class Mat {
 public:
  using E = typename Ops::Elem;

  Mat() : r_(0), c_(0) {}
  Mat(size_t r, size_t c, Ops ops = Ops()) : r_(r), c_(c), ops_(ops), a_(r * c, ops.zero()) {}

  static Mat identity(size_t n, Ops ops = Ops()) {
    Mat m(n, n, ops);
    for (size_t i = 0; i < n; ++i) m(i, i) = ops.one();
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  const Ops& ops() const { return ops_; }

  E& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const E& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  bool operator==(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!ops_.eq(a_[i], o.a_[i])) return false;
    return true;
  }

  Mat mul(const Mat& o) const {
    Mat m(r_, o.c_, ops_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t k = 0; k < c_; ++k) {
        if (ops_.is_zero((*this)(i, k))) continue;
        for (size_t j = 0; j < o.c_; ++j)
          m(i, j) = ops_.add(m(i, j), ops_.mul((*this)(i, k), o(k, j)));
      }
    return m;
  }

  Mat transpose() const {
    Mat m(c_, r_, ops_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }

  /// row_i += c * row_j
  void add_row_multiple(size_t i, size_t j, const E& c) {
    for (size_t k = 0; k < c_; ++k) (*this)(i, k) = ops_.add((*this)(i, k), ops_.mul(c, (*this)(j, k)));
  }

  void scale_row(size_t i, const E& u) {
    for (size_t k = 0; k < c_; ++k) (*this)(i, k) = ops_.mul(u, (*this)(i, k));
  }

  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

  void add_col_multiple(size_t i, size_t j, const E& c) {
    for (size_t k = 0; k < r_; ++k) (*this)(k, i) = ops_.add((*this)(k, i), ops_.mul(c, (*this)(k, j)));
  }

  void scale_col(size_t i, const E& u) {
    for (size_t k = 0; k < r_; ++k) (*this)(k, i) = ops_.mul(u, (*this)(k, i));
  }

 private:
  size_t r_, c_;
  Ops ops_;
  std::vector<E> a_;
};

template <class Ops>
struct HnfResult {
  Mat<Ops> h;           // U * A = H, H in row echelon form with canonical pivots
  Mat<Ops> u;           // unimodular
  std::vector<size_t> pivot_cols;
  size_t rank = 0;
};

/// Row-style Hermite normal form. Deterministic: pivots are canonical
/// associates, entries above a pivot are reduced by Euclidean division.
template <class Ops>
HnfResult<Ops> hnf(Mat<Ops> a) {
  const Ops& ops = a.ops();
  size_t r = a.rows(), c = a.cols();
  Mat<Ops> u = Mat<Ops>::identity(r, ops);
  HnfResult<Ops> res;
  size_t row = 0;
  for (size_t col = 0; col < c && row < r; ++col) {
    // Reduce column below `row` to a single nonzero entry by repeated division.
    while (true) {
      size_t best = r;
      for (size_t i = row; i < r; ++i) {
        if (ops.is_zero(a(i, col))) continue;
        if (best == r || ops.size(a(i, col)) < ops.size(a(best, col))) best = i;
      }
      if (best == r) break;  // column clear
      a.swap_rows(row, best);
      u.swap_rows(row, best);
      bool again = false;
      for (size_t i = row + 1; i < r; ++i) {
        if (ops.is_zero(a(i, col))) continue;
        auto [q, rem] = ops.divmod(a(i, col), a(row, col));
        a.add_row_multiple(i, row, ops.neg(q));
        u.add_row_multiple(i, row, ops.neg(q));
        if (!ops.is_zero(rem)) again = true;
      }
      if (!again) break;
    }
    if (ops.is_zero(a(row, col))) continue;
    auto cu = ops.canonical_unit(a(row, col));
    a.scale_row(row, cu);
    u.scale_row(row, cu);
    for (size_t i = 0; i < row; ++i) {
      if (ops.is_zero(a(i, col))) continue;
      auto [q, rem] = ops.divmod(a(i, col), a(row, col));
      (void)rem;
      a.add_row_multiple(i, row, ops.neg(q));
      u.add_row_multiple(i, row, ops.neg(q));
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  res.h = std::move(a);
  res.u = std::move(u);
  return res;
}

/// Basis of { x : x * A = 0 } as rows, in HNF-canonical form.
template <class Ops>
Mat<Ops> left_kernel(const Mat<Ops>& a) {
  auto res = hnf(a);
  size_t nk = a.rows() - res.rank;
  Mat<Ops> k(nk, a.rows(), a.ops());
  for (size_t i = 0; i < nk; ++i)
    for (size_t j = 0; j < a.rows(); ++j) k(i, j) = res.u(res.rank + i, j);
  return hnf(k).h;
}

/// Solves x * A = b over the ring. Returns nothing if no solution exists.
/// The particular solution is the HNF back-substitution one (free
/// coordinates zero), deterministic.
template <class Ops>
std::optional<std::vector<typename Ops::Elem>> solve_left(const Mat<Ops>& a,
                                                          const std::vector<typename Ops::Elem>& b) {
  const Ops& ops = a.ops();
  auto res = hnf(a);
  std::vector<typename Ops::Elem> rem(b), y(a.rows(), ops.zero());
  for (size_t i = 0; i < res.rank; ++i) {
    size_t pc = res.pivot_cols[i];
    if (ops.is_zero(rem[pc])) continue;
    auto [q, r0] = ops.divmod(rem[pc], res.h(i, pc));
    if (!ops.is_zero(r0)) return std::nullopt;
    y[i] = q;
    for (size_t j = 0; j < a.cols(); ++j) rem[j] = ops.sub(rem[j], ops.mul(q, res.h(i, j)));
  }
  for (size_t j = 0; j < a.cols(); ++j)
    if (!ops.is_zero(rem[j])) return std::nullopt;
  std::vector<typename Ops::Elem> x(a.rows(), ops.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < res.rank; ++k) x[i] = ops.add(x[i], ops.mul(y[k], res.u(k, i)));
  return x;
}

template <class Ops>
struct SnfResult {
  Mat<Ops> d;  // diagonal, d_1 | d_2 | ..., canonical associates
  Mat<Ops> u;  // U * A * V = D
  Mat<Ops> v;
  std::vector<typename Ops::Elem> diagonal;  // min(r,c) entries incl. zeros
};

/// Smith normal form over the Euclidean domain given by Ops.
template <class Ops>
SnfResult<Ops> smith(Mat<Ops> a) {
  const Ops ops = a.ops();
  size_t r = a.rows(), c = a.cols();
  Mat<Ops> u = Mat<Ops>::identity(r, ops);
  Mat<Ops> v = Mat<Ops>::identity(c, ops);
  size_t n = std::min(r, c);

  for (size_t k = 0; k < n; ++k) {
    // Find minimal-size nonzero entry in the trailing submatrix.
    size_t pi = r, pj = c;
    for (size_t i = k; i < r; ++i)
      for (size_t j = k; j < c; ++j) {
        if (ops.is_zero(a(i, j))) continue;
        if (pi == r || ops.size(a(i, j)) < ops.size(a(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == r) break;  // all zero
    a.swap_rows(k, pi);
    u.swap_rows(k, pi);
    a.swap_cols(k, pj);
    v.swap_cols(k, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = k + 1; i < r; ++i) {
        if (ops.is_zero(a(i, k))) continue;
        auto [q, rem] = ops.divmod(a(i, k), a(k, k));
        a.add_row_multiple(i, k, ops.neg(q));
        u.add_row_multiple(i, k, ops.neg(q));
        if (!ops.is_zero(rem)) {
          a.swap_rows(k, i);
          u.swap_rows(k, i);
          clean = false;
        }
      }
      if (!clean) continue;
      for (size_t j = k + 1; j < c; ++j) {
        if (ops.is_zero(a(k, j))) continue;
        auto [q, rem] = ops.divmod(a(k, j), a(k, k));
        a.add_col_multiple(j, k, ops.neg(q));
        v.add_col_multiple(j, k, ops.neg(q));
        if (!ops.is_zero(rem)) {
          a.swap_cols(k, j);
          v.swap_cols(k, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Row k and column k are clear; make a(k,k) divide the rest.
      for (size_t i = k + 1; i < r && clean; ++i)
        for (size_t j = k + 1; j < c && clean; ++j) {
          auto [q, rem] = ops.divmod(a(i, j), a(k, k));
          (void)q;
          if (!ops.is_zero(rem)) {
            a.add_row_multiple(k, i, ops.one());
            u.add_row_multiple(k, i, ops.one());
            clean = false;
          }
        }
    }
    E_normalize(a, u, k, ops);
  }

  SnfResult<Ops> res;
  res.diagonal.reserve(n);
  for (size_t k = 0; k < n; ++k) res.diagonal.push_back(a(k, k));
  res.d = std::move(a);
  res.u = std::move(u);
  res.v = std::move(v);
  return res;
}

template <class Ops>
void E_normalize(Mat<Ops>& a, Mat<Ops>& u, size_t k, const Ops& ops) {
  if (ops.is_zero(a(k, k))) return;
  auto cu = ops.canonical_unit(a(k, k));
  a.scale_row(k, cu);
  u.scale_row(k, cu);
}

/// Ring operations for Z. Canonical associates are non-negative; Euclidean
/// division uses the floor remainder, so HNF entries above a pivot land in
/// [0, pivot).
struct ZOps {
  using Elem = Int;
  Int zero() const { return 0; }
  Int one() const { return 1; }
  Int add(const Int& a, const Int& b) const { return a + b; }
  Int sub(const Int& a, const Int& b) const { return a - b; }
  Int mul(const Int& a, const Int& b) const { return a * b; }
  Int neg(const Int& a) const { return -a; }
  bool eq(const Int& a, const Int& b) const { return a == b; }
  bool is_zero(const Int& a) const { return a == 0; }
  bool is_unit(const Int& a) const { return a == 1 || a == -1; }
  std::pair<Int, Int> divmod(const Int& a, const Int& b) const { return {fdiv(a, b), fmod(a, b)}; }
  Int size(const Int& a) const { return abs(a); }
  Int canonical_unit(const Int& a) const { return a < 0 ? Int(-1) : Int(1); }
  Int inv_unit(const Int& u) const { return u; }
};

using IntMat = Mat<ZOps>;

/// Exact Gaussian elimination over Q. Solves A x = b (column convention).
/// Returns the particular solution with free variables set to zero, or
/// nothing if inconsistent. `unique` reports whether the solution space is
/// a single point.
struct RatSolveResult {
  bool consistent = false;
  bool unique = false;
  std::vector<Rat> x;
};
RatSolveResult rat_solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace repring
