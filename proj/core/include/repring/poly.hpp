#pragma once

#include <vector>

#include "repring/numeric.hpp"

namespace repring {

/// Dense univariate polynomials, coefficient index = exponent.
/// Trailing zeros are trimmed by normalize(); the zero polynomial is {}.
namespace poly {

template <class T>
void normalize(std::vector<T>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class T>
int degree(const std::vector<T>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(std::max(a.size(), b.size()), T(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  normalize(r);
  return r;
}

template <class T>
std::vector<T> sub(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(std::max(a.size(), b.size()), T(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  normalize(r);
  return r;
}

template <class T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> r(a.size() + b.size() - 1, T(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r);
  return r;
}

/// Euclidean division over a field (or exact over Z when it happens to be
/// exact); returns {quotient, remainder}. Requires b monic or invertible
/// leading coefficient for T = Rat; for T = Int the division must come out
/// exact at each step (monic divisors only).
template <class T>
std::pair<std::vector<T>, std::vector<T>> divmod(std::vector<T> a, const std::vector<T>& b) {
  if (b.empty()) throw std::logic_error("poly division by zero");
  std::vector<T> q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, T(0));
  const T& lead = b.back();
  while (a.size() >= b.size()) {
    T c;
    if constexpr (std::is_same_v<T, Int>) {
      c = exact_div(a.back(), lead);
    } else {
      c = a.back() / lead;
    }
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    normalize(a);
    if (a.size() > shift + b.size() - 1) throw std::logic_error("poly divmod: cancellation failed");
  }
  normalize(q);
  return {q, a};
}

/// Exact quotient; throws if the division leaves a remainder.
template <class T>
std::vector<T> exact_quotient(const std::vector<T>& a, const std::vector<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw std::logic_error("poly exact_quotient: not divisible");
  return q;
}

template <class T>
std::vector<T> derivative(const std::vector<T>& p) {
  if (p.size() <= 1) return {};
  std::vector<T> r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * T(static_cast<long>(i));
  normalize(r);
  return r;
}

template <class T>
T eval(const std::vector<T>& p, const T& x) {
  T r(0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

/// t^n - 1.
inline std::vector<Int> tn_minus_1(unsigned long n) {
  std::vector<Int> p(n + 1, Int(0));
  p[0] = -1;
  p[n] = 1;
  return p;
}

std::string to_string(const std::vector<Rat>& p, const std::string& var = "t");
std::string to_string(const std::vector<Int>& p, const std::string& var = "t");

/// Parses "c0 + c1*t + c2*t^2" style expressions with integer or rational
/// coefficients; accepts terms in any order, e.g. "1 - t^2 + 3/2*t".
std::vector<Rat> parse(const std::string& text, const std::string& var = "t");

}  // namespace poly
}  // namespace repring
