#include "signcount/primorial.hpp"

#include <algorithm>

namespace signcount {

namespace {

bool fits_u128(const Int& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 127; }

u128 to_u128(const Int& z) {
  Int lo_z, hi_z;
  mpz_fdiv_r_2exp(lo_z.get_mpz_t(), z.get_mpz_t(), 64);
  mpz_fdiv_q_2exp(hi_z.get_mpz_t(), z.get_mpz_t(), 64);
  return (u128(mpz_get_ui(hi_z.get_mpz_t())) << 64) | mpz_get_ui(lo_z.get_mpz_t());
}

// Gray-code walk over all subsets of `primes`, maintaining the divisor as a
// running product (multiply on entry, exact-divide on exit). visit(d, mu)
// with mu = (-1)^|subset|.
template <class IntT, class Visit>
void divisor_walk(const std::vector<std::uint64_t>& primes, IntT start, Visit&& visit) {
  int k = static_cast<int>(primes.size());
  IntT d = std::move(start);  // subset = empty, d = 1
  int mu = +1;
  std::uint64_t mask = 0;
  std::uint64_t total = 1ull << k;
  for (std::uint64_t idx = 0;;) {
    visit(d, mu, mask);
    if (++idx == total) break;
    int b = std::countr_zero(idx);
    std::uint64_t bit = 1ull << b;
    mask ^= bit;
    if (mask & bit)
      d *= primes[b];
    else
      d /= primes[b];  // exact by construction
    mu = -mu;
  }
}

}  // namespace

PrimorialContext PrimorialContext::make(int m) {
  if (m < 1) throw MathError("primorial context needs m >= 1");
  if (m > kPrimorialMaxM)
    throw GuardrailError("primorial enumerations refuse m > " + std::to_string(kPrimorialMaxM));
  PrimorialContext ctx;
  ctx.m = m;
  ctx.primes = first_primes(m);
  ctx.primorial = 1;
  for (std::uint64_t p : ctx.primes) ctx.primorial *= Int(static_cast<unsigned long>(p));
  ctx.sqrt_floor = isqrt(ctx.primorial);
  // a squarefree number above 1 is never a perfect square
  if (ctx.sqrt_floor * ctx.sqrt_floor == ctx.primorial)
    throw CrossCheckError("primorial reported as a perfect square");
  return ctx;
}

long long q_of_n(const FactoredInteger& n) {
  if (n.value() < 1) throw MathError("Q(n) needs n >= 1");
  if (n.omega() > kQOfNMaxOmega)
    throw GuardrailError("Q(n) refuses more than " + std::to_string(kQOfNMaxOmega) +
                         " distinct prime factors");
  Int limit = isqrt(n.value());
  std::vector<std::uint64_t> primes;
  primes.reserve(n.factors().size());
  for (const auto& [p, e] : n.factors()) primes.push_back(p);

  // depth-first over subsets of the distinct primes; once a partial product
  // exceeds floor(sqrt(n)) every superset does too, so the subtree is skipped
  long long acc = 0;
  auto walk = [&](auto&& self, size_t idx, const Int& product, int mu) -> void {
    acc += mu;
    for (size_t t = idx; t < primes.size(); ++t) {
      Int next = product * Int(static_cast<unsigned long>(primes[t]));
      if (next > limit) break;  // primes ascend, so later products are larger
      self(self, t + 1, next, -mu);
    }
  };
  walk(walk, 0, Int(1), +1);
  return acc;
}

namespace {

// sum over all divisors d of the squarefree product of `primes` of
// sgn(d^2 - n) mu(d), with the comparison routed through floor(sqrt(n))
template <class IntT>
long long definition_sum(const std::vector<std::uint64_t>& primes, const IntT& sqrt_floor) {
  long long acc = 0;
  divisor_walk<IntT>(primes, IntT(1), [&](const IntT& d, int mu, std::uint64_t) {
    // d == sqrt_floor still means d^2 < n: equality d^2 = n cannot happen
    // for squarefree n > 1
    acc += (d > sqrt_floor) ? mu : -mu;
  });
  return acc;
}

long long g_definition(const std::vector<std::uint64_t>& primes, const Int& value,
                       const Int& sqrt_floor) {
  int k = static_cast<int>(primes.size());
  long long total = fits_u128(value)
                        ? definition_sum<u128>(primes, to_u128(sqrt_floor))
                        : definition_sum<Int>(primes, sqrt_floor);
  if (total % 4 != 0)
    throw CrossCheckError("divisor sign sum " + std::to_string(total) + " not divisible by 4");
  long long g = total / 4;
  return (k % 2 == 0) ? -g : g;  // prefactor (-1)^(k+1)
}

long long g_via_q(const FactoredInteger& n) {
  long long q = q_of_n(n);
  if (q % 2 != 0)
    throw CrossCheckError("Q(n) = " + std::to_string(q) + " is odd where an even value is forced");
  return (n.omega() % 2 == 0) ? q / 2 : -q / 2;  // prefactor (-1)^k / 2
}

}  // namespace

long long g_m(const PrimorialContext& ctx, GMethod method) {
  if (ctx.m < 2) throw MathError("g(m) needs m >= 2");
  if (method == GMethod::Definition)
    return g_definition(ctx.primes, ctx.primorial, ctx.sqrt_floor);
  FactoredInteger n = FactoredInteger::from_primes(ctx.primes);
  if (method == GMethod::ViaQ) return g_via_q(n);
  long long by_definition = g_definition(ctx.primes, ctx.primorial, ctx.sqrt_floor);
  long long by_q = g_via_q(n);
  if (by_definition != by_q)
    throw CrossCheckError("g(" + std::to_string(ctx.m) + ") methods disagree: definition " +
                          std::to_string(by_definition) + ", via Q " + std::to_string(by_q));
  return by_definition;
}

long long g_n(const FactoredInteger& n, GMethod method) {
  if (!n.squarefree()) throw MathError("g_n needs squarefree n");
  if (n.omega() < 2) throw MathError("g_n needs at least 2 distinct prime factors");
  if (n.omega() > kPrimorialMaxM)
    throw GuardrailError("g_n refuses more than " + std::to_string(kPrimorialMaxM) + " factors");
  std::vector<std::uint64_t> primes;
  for (const auto& [p, e] : n.factors()) primes.push_back(p);
  Int sqrt_floor = isqrt(n.value());
  if (method == GMethod::Definition) return g_definition(primes, n.value(), sqrt_floor);
  if (method == GMethod::ViaQ) return g_via_q(n);
  long long by_definition = g_definition(primes, n.value(), sqrt_floor);
  long long by_q = g_via_q(n);
  if (by_definition != by_q) throw CrossCheckError("g_n methods disagree");
  if (n.omega() % 2 == 0 && by_definition != 0)
    throw CrossCheckError("g_n must vanish for an even number of prime factors");
  return by_definition;
}

namespace {

struct BetaPair {
  std::vector<std::uint64_t> rest;  // primes with entries i and j removed
  Int p_small, p_large;             // the pair's primes, ordered
  Int pair_product;
};

BetaPair beta_pair(const PrimorialContext& ctx, int i, int j) {
  if (i < 0 || j < 0 || i >= ctx.m || j >= ctx.m)
    throw MathError("pair index out of range for m = " + std::to_string(ctx.m));
  if (i == j) throw MathError("pair indices must differ");
  if (ctx.m < 3) throw MathError("per-pair counts need m >= 3");
  BetaPair out;
  for (int k = 0; k < ctx.m; ++k)
    if (k != i && k != j) out.rest.push_back(ctx.primes[k]);
  std::uint64_t a = std::min(ctx.primes[i], ctx.primes[j]);
  std::uint64_t b = std::max(ctx.primes[i], ctx.primes[j]);
  out.p_small = Int(static_cast<unsigned long>(a));
  out.p_large = Int(static_cast<unsigned long>(b));
  out.pair_product = out.p_small * out.p_large;
  return out;
}

long long n_ij_beta_direct(const PrimorialContext& ctx, int i, int j) {
  BetaPair pair = beta_pair(ctx, i, j);

  // walk eps over the remaining primes; bit set means eps = -1, so flip the
  // prime between num and den
  MulSignedSum s;
  for (std::uint64_t p : pair.rest) s.num *= Int(static_cast<unsigned long>(p));
  long long acc = 0;
  int k = static_cast<int>(pair.rest.size());
  std::uint64_t mask = 0;
  std::uint64_t total = 1ull << k;
  int parity = +1;
  for (std::uint64_t idx = 0;;) {
    // log(p_large / p_small) < <eps, beta> < log(p_small * p_large)
    if (s.greater_than(pair.p_large, pair.p_small) && s.less_than(pair.pair_product, Int(1)))
      acc += parity;
    if (++idx == total) break;
    int b = std::countr_zero(idx);
    std::uint64_t bit = 1ull << b;
    mask ^= bit;
    Int p(static_cast<unsigned long>(pair.rest[b]));
    if (mask & bit) {
      s.num /= p;
      s.den *= p;
    } else {
      s.num *= p;
      s.den /= p;
    }
    parity = -parity;
  }
  return acc;
}

}  // namespace

long long n_ij_beta_mobius(const PrimorialContext& ctx, int i, int j) {
  BetaPair pair = beta_pair(ctx, i, j);

  // qualifying d | primorial/(p_i p_j) satisfy (d p_small)^2 > primorial and
  // d^2 < primorial; both comparisons are exact
  long long acc = 0;
  divisor_walk<Int>(pair.rest, Int(1), [&](const Int& d, int mu, std::uint64_t) {
    Int scaled = d * pair.p_small;
    if (scaled * scaled > ctx.primorial && d * d < ctx.primorial) acc += mu;
  });
  return (ctx.m % 2 == 0) ? acc : -acc;
}

long long n_ij_beta(const PrimorialContext& ctx, int i, int j, BetaMethod method) {
  if (method == BetaMethod::Direct) return n_ij_beta_direct(ctx, i, j);
  if (method == BetaMethod::Moebius) return n_ij_beta_mobius(ctx, i, j);
  long long direct = n_ij_beta_direct(ctx, i, j);
  long long moebius = n_ij_beta_mobius(ctx, i, j);
  if (direct != moebius)
    throw CrossCheckError("per-pair prime-log count: direct " + std::to_string(direct) +
                          " disagrees with divisor sum " + std::to_string(moebius));
  return direct;
}

SquarefreeClass classify_squarefree(const FactoredInteger& n) {
  if (n.value() <= 1) throw MathError("classification needs n > 1");
  if (!n.squarefree()) throw MathError("classification needs squarefree n");
  long long q = q_of_n(n);
  if (n.omega() == 1) {
    if (q != 1) throw CrossCheckError("Q(prime) != 1 at n = " + n.value().get_str());
    return SquarefreeClass::Prime;
  }
  if (n.omega() % 2 == 0) {
    if (q != 0) throw CrossCheckError("Q(n) != 0 for even omega at n = " + n.value().get_str());
    return SquarefreeClass::EvenOmega;
  }
  if (q % 2 != 0) throw CrossCheckError("Q(n) odd for odd omega >= 3 at n = " + n.value().get_str());
  return SquarefreeClass::OddOmegaEven;
}

SquarefreeScan scan_squarefree(std::uint32_t limit) {
  if (limit < 2) return {};
  if (limit > 10'000'000u) throw GuardrailError("squarefree scan refuses limits above 10^7");
  std::vector<std::uint32_t> spf = spf_sieve(limit);
  SquarefreeScan stats;
  std::vector<std::uint64_t> primes;
  for (std::uint32_t n = 2; n <= limit; ++n) {
    primes.clear();
    std::uint32_t v = n;
    bool squarefree = true;
    while (v > 1) {
      std::uint32_t p = spf[v];
      v /= p;
      if (v % p == 0) {
        squarefree = false;
        break;
      }
      primes.push_back(p);
    }
    if (!squarefree) continue;
    switch (classify_squarefree(FactoredInteger::from_primes(primes))) {
      case SquarefreeClass::Prime:
        ++stats.primes;
        break;
      case SquarefreeClass::EvenOmega:
        ++stats.even_omega;
        break;
      case SquarefreeClass::OddOmegaEven:
        ++stats.odd_omega_even;
        break;
    }
    ++stats.checked;
  }
  return stats;
}

}  // namespace signcount
