#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace repring {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown on malformed user input (CLI exit code 3).
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a semidecision procedure cannot settle a query within its
/// bound (CLI exit code 2).
struct undecided_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a query is answered negatively with a checkable certificate
/// (CLI exit code 1).
struct verified_negative : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int abs(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

Int pow(const Int& base, unsigned long e);
Rat pow(const Rat& base, unsigned long e);

/// Floor division and the matching remainder (r has the sign of b or zero).
Int fdiv(const Int& a, const Int& b);
Int fmod(const Int& a, const Int& b);

/// Exact quotient; throws std::logic_error if b does not divide a.
Int exact_div(const Int& a, const Int& b);

bool divides(const Int& a, const Int& b);

/// Prime factorization by trial division, ascending, with multiplicities.
std::vector<std::pair<Int, unsigned>> factor(Int n);

/// Distinct prime divisors of |n|, ascending. factor(0) is rejected.
std::vector<Int> prime_divisors(const Int& n);

bool is_prime(const Int& n);

/// Euler totient of n >= 1.
unsigned long totient(unsigned long n);

/// Divisors of n >= 1, ascending.
std::vector<unsigned long> divisors(unsigned long n);

/// Largest e with p^e | n (n != 0).
unsigned valuation(Int n, const Int& p);

/// True if n = p^k for the given prime p (k >= 0).
bool is_power_of(const Int& n, const Int& p);

/// If n is a prime power p^k with k >= 1 returns {p, k}; n = 1 yields
/// {1, 0}; otherwise returns nothing.
struct PrimePower {
  Int prime;
  unsigned exponent = 0;
};
bool prime_power_decompose(const Int& n, PrimePower& out);

std::string to_string(const Int& a);
std::string to_string(const Rat& a);

/// Parses "a" or "a/b" with optional sign; throws usage_error.
Rat parse_rational(const std::string& text);

}  // namespace repring
