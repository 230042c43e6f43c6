#include "repring/numeric.hpp"

#include <cctype>

namespace repring {

Int pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  r.canonicalize();
  return r;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int fmod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("exact_div: " + to_string(b) + " does not divide " + to_string(a));
  return q;
}

bool divides(const Int& a, const Int& b) {
  if (a == 0) return b == 0;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

std::vector<std::pair<Int, unsigned>> factor(Int n) {
  if (n < 0) n = -n;
  if (n == 0) throw std::logic_error("factor(0)");
  std::vector<std::pair<Int, unsigned>> out;
  Int p = 2;
  while (p * p <= n) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

unsigned long totient(unsigned long n) {
  unsigned long r = n;
  for (auto& [p, e] : factor(Int(n))) {
    unsigned long pl = p.get_ui();
    r -= r / pl;
  }
  return r;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned valuation(Int n, const Int& p) {
  if (n == 0) throw std::logic_error("valuation of 0");
  if (n < 0) n = -n;
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_power_of(const Int& n, const Int& p) {
  Int m = abs(n);
  if (m == 0) return false;
  while (m % p == 0) m /= p;
  return m == 1;
}

bool prime_power_decompose(const Int& n, PrimePower& out) {
  if (n < 1) return false;
  if (n == 1) {
    out.prime = 1;
    out.exponent = 0;
    return true;
  }
  auto f = factor(n);
  if (f.size() != 1) return false;
  out.prime = f[0].first;
  out.exponent = f[0].second;
  return true;
}

std::string to_string(const Int& a) { return a.get_str(); }

std::string to_string(const Rat& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw usage_error("empty rational literal");
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw usage_error("malformed rational literal: '" + text + "'");
  }
}

}  // namespace repring
