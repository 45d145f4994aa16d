#include "signcount/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

namespace signcount {

std::string to_pm_string(SignMask mask) {
  std::string out = "(";
  for (int k = 0; k < mask.width; ++k) {
    if (k) out += ",";
    out += mask.test(k) ? "-1" : "+1";
  }
  out += ")";
  return out;
}

// ---------------------------------------------------------------------------
// ExactScalar
// ---------------------------------------------------------------------------

ExactScalar::ExactScalar(const Int& num, const Int& den) {
  if (den == 0) throw MathError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

ExactScalar ExactScalar::abs_value() const { return ExactScalar(mpq_class(abs(v_))); }

std::string ExactScalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

ExactScalar ExactScalar::parse(std::string_view text) {
  std::string_view s = text;
  // trim surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError("bare sign in rational literal '" + std::string(text) + "'");

  auto make = [&](const Int& num, const Int& den) {
    ExactScalar r(num, den);
    return negative ? -r : r;
  };

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational literal '" + std::string(text) + "'");
    Int d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make(Int{std::string(num)}, d);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw ParseError("malformed decimal literal '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      throw ParseError("malformed decimal literal '" + std::string(text) + "'");
    Int num{std::string(whole.empty() ? "0" : whole)};
    Int den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    return make(num, den);
  }
  if (!all_digits(s)) throw ParseError("malformed integer literal '" + std::string(text) + "'");
  return make(Int{std::string(s)}, 1);
}

// ---------------------------------------------------------------------------
// isqrt: Newton iteration on unbounded integers
// ---------------------------------------------------------------------------

Int isqrt(const Int& n) {
  if (n < 0) throw MathError("isqrt of negative integer");
  if (n < 2) return n;
  // initial guess 2^ceil(bits/2) >= sqrt(n); the iteration is monotone down
  size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Int x = Int(1) << ((bits + 1) / 2);
  for (;;) {
    Int y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  if (!(x * x <= n && n < (x + 1) * (x + 1))) throw CrossCheckError("isqrt postcondition failed");
  return x;
}

// ---------------------------------------------------------------------------
// primes / factorization / moebius
// ---------------------------------------------------------------------------

std::vector<std::uint64_t> first_primes(int m) {
  if (m < 1) throw MathError("first_primes requires m >= 1");
  // p_m < m (ln m + ln ln m) for m >= 6
  std::uint64_t bound;
  if (m < 6) {
    bound = 13;
  } else {
    double dm = static_cast<double>(m);
    double lm = std::log(dm);
    bound = static_cast<std::uint64_t>(dm * (lm + std::log(lm)) + 16);
  }
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= bound && static_cast<int>(primes.size()) < m; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
  }
  if (static_cast<int>(primes.size()) < m) throw CrossCheckError("prime bound underestimated");
  return primes;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(u128(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
      if (e & 1) r = mulmod(r, a);
    return r;
  };
  // base set proven sufficient for every n < 2^64
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FactoredInteger FactoredInteger::from_value(const Int& n) {
  if (n < 1) throw MathError("factorize requires n >= 1");
  if (!n.fits_ulong_p() && mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
    throw GuardrailError("factorize: n exceeds 64 bits; supply it pre-factored");
  std::uint64_t v = mpz_get_ui(n.get_mpz_t());
  std::vector<std::pair<std::uint64_t, int>> factors;
  auto strip = [&](std::uint64_t p) {
    if (v % p) return;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  strip(5);
  // 30-wheel trial division
  static constexpr std::uint64_t wheel[8] = {1, 7, 11, 13, 17, 19, 23, 29};
  for (std::uint64_t base = 0;; base += 30) {
    bool done = false;
    for (std::uint64_t off : wheel) {
      std::uint64_t p = base + off;
      if (p < 7) continue;
      if (p > v / p) {  // p*p > v without overflow
        done = true;
        break;
      }
      strip(p);
    }
    if (done) break;
  }
  if (v > 1) factors.emplace_back(v, 1);
  return FactoredInteger(n, std::move(factors));
}

FactoredInteger FactoredInteger::from_primes(const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) return FactoredInteger(Int(1), {});
  std::map<std::uint64_t, int> exps;
  Int value = 1;
  for (std::uint64_t p : primes) {
    if (!is_prime_u64(p)) throw ParseError("factor " + std::to_string(p) + " is not prime");
    ++exps[p];
    value *= Int(static_cast<unsigned long>(p));
  }
  std::vector<std::pair<std::uint64_t, int>> factors(exps.begin(), exps.end());
  return FactoredInteger(std::move(value), std::move(factors));
}

bool FactoredInteger::squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.second == 1; });
}

int mobius(const FactoredInteger& n) {
  if (!n.squarefree()) return 0;
  return (n.omega() & 1) ? -1 : +1;
}

std::vector<std::uint32_t> spf_sieve(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<size_t>(limit) + 1, 0);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      for (std::uint64_t j = i; j <= limit; j += i)
        if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

// ---------------------------------------------------------------------------
// int128 bridges
// ---------------------------------------------------------------------------

bool fits_int128(const Int& z, int max_bits) {
  if (z == 0) return true;
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= static_cast<size_t>(max_bits);
}

i128 to_int128(const Int& z) {
  Int a = abs(z);
  Int lo_z, hi_z;
  mpz_fdiv_r_2exp(lo_z.get_mpz_t(), a.get_mpz_t(), 64);
  mpz_fdiv_q_2exp(hi_z.get_mpz_t(), a.get_mpz_t(), 64);
  u128 mag = (u128(mpz_get_ui(hi_z.get_mpz_t())) << 64) | mpz_get_ui(lo_z.get_mpz_t());
  i128 v = static_cast<i128>(mag);
  return sgn(z) < 0 ? -v : v;
}

Int from_int128(i128 v) {
  bool neg = v < 0;
  u128 mag = neg ? u128(0) - u128(v) : u128(v);
  Int hi(static_cast<unsigned long>(mag >> 64));
  Int out = (hi << 64) + Int(static_cast<unsigned long>(mag & ~0ull));
  return neg ? Int(-out) : out;
}

}  // namespace signcount
