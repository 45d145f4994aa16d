// Exact arithmetic kernel: unbounded integers and rationals (GMP-backed),
// integer square root, primes, factorization, Moebius function. Every
// comparison made anywhere in the library routes through these types; no
// floating point is ever consulted for a decision.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "signcount/common.hpp"
#include "signcount/errors.hpp"

namespace signcount {

using Int = mpz_class;

// ---------------------------------------------------------------------------
// ExactScalar: canonical-form rational. den > 0, gcd(num, den) = 1.
// ---------------------------------------------------------------------------
class ExactScalar {
 public:
  ExactScalar() : v_(0) {}
  ExactScalar(long n) : v_(n) {}  // NOLINT(google-explicit-constructor): literals read naturally in tests
  explicit ExactScalar(const Int& n) : v_(n) {}
  ExactScalar(const Int& num, const Int& den);  // den != 0, canonicalizes

  // "p/q", "p", or a decimal like "1.25" (parsed exactly as 5/4)
  static ExactScalar parse(std::string_view text);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  int sgn() const { return ::sgn(v_); }
  bool is_zero() const { return sgn() == 0; }
  ExactScalar abs_value() const;

  std::string str() const;  // canonical: "p" when den == 1, else "p/q"

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) { return ExactScalar(a.v_ + b.v_); }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return ExactScalar(a.v_ - b.v_); }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) { return ExactScalar(a.v_ * b.v_); }
  friend ExactScalar operator-(const ExactScalar& a) { return ExactScalar(mpq_class(-a.v_)); }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactScalar& a, const ExactScalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactScalar& a, const ExactScalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactScalar& a, const ExactScalar& b) { return a.v_ >= b.v_; }

 private:
  explicit ExactScalar(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;  // mpq keeps the canonical-form invariant after canonicalize()
};

// ---------------------------------------------------------------------------
// FactoredInteger: positive integer together with its factorization.
// ---------------------------------------------------------------------------
class FactoredInteger {
 public:
  // trial-division path; n must fit in 64 bits, larger inputs come pre-factored
  static FactoredInteger from_value(const Int& n);
  // primes with multiplicity, e.g. {2,2,3}; validated and normalized
  static FactoredInteger from_primes(const std::vector<std::uint64_t>& primes);

  const Int& value() const { return value_; }
  const std::vector<std::pair<std::uint64_t, int>>& factors() const { return factors_; }
  int omega() const { return static_cast<int>(factors_.size()); }
  bool squarefree() const;

 private:
  FactoredInteger(Int value, std::vector<std::pair<std::uint64_t, int>> factors)
      : value_(std::move(value)), factors_(std::move(factors)) {}
  Int value_;
  std::vector<std::pair<std::uint64_t, int>> factors_;  // primes strictly increasing
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// floor(sqrt(n)) by Newton iteration; postcondition r*r <= n < (r+1)*(r+1)
Int isqrt(const Int& n);

// the first m primes, ascending
std::vector<std::uint64_t> first_primes(int m);

// 0 on a square factor, else (-1)^omega
int mobius(const FactoredInteger& n);

// deterministic 64-bit primality (Miller-Rabin with a proven base set)
bool is_prime_u64(std::uint64_t n);

// smallest-prime-factor sieve for [0, limit]; spf[0] = spf[1] = 0
std::vector<std::uint32_t> spf_sieve(std::uint32_t limit);

// u128 <-> mpz bridges for the fixed-width fast paths
bool fits_int128(const Int& z, int max_bits = 126);
i128 to_int128(const Int& z);
Int from_int128(i128 v);

}  // namespace signcount
