// Prime-product specializations: the squarefree divisor sum Q(n), the
// primorial invariant g(m) by two independent formulas, its generalization
// to arbitrary squarefree n, and the exact multiplicative evaluation of the
// per-pair counts over prime-logarithm weights, where every inequality
// between sums of logs is decided by cross-multiplied integer comparisons
// and no logarithm is ever computed.
#pragma once

#include <cstdint>
#include <vector>

#include "signcount/exactnum.hpp"

namespace signcount {

constexpr int kPrimorialMaxM = 30;   // 2^30 subset walks at most; refuse beyond
constexpr int kQOfNMaxOmega = 40;

struct PrimorialContext {
  int m = 0;
  std::vector<std::uint64_t> primes;  // first m primes
  Int primorial;                      // their product, squarefree by construction
  Int sqrt_floor;                     // isqrt(primorial); strictly below the square root

  static PrimorialContext make(int m);
};

// Signed sum of prime logs in multiplicative form: <eps, beta> = log(num/den),
// with num the product of the +1 primes and den the product of the -1 primes.
struct MulSignedSum {
  Int num = 1;
  Int den = 1;

  // log(num/den) < log(p/q), exactly
  bool less_than(const Int& p, const Int& q) const { return num * q < p * den; }
  // log(p/q) < log(num/den), exactly
  bool greater_than(const Int& p, const Int& q) const { return p * den < num * q; }
};

// sum of mu(d) over divisors d of n with d <= floor(sqrt(n)); pruned walk
// over subsets of the distinct prime factors
long long q_of_n(const FactoredInteger& n);

enum class GMethod { Definition, ViaQ, Both };

// the invariant over the first m primes, m >= 2; Both cross-checks the
// divisor-walk definition against the Q(primorial) shortcut
long long g_m(const PrimorialContext& ctx, GMethod method = GMethod::Both);

// same quantity over an arbitrary squarefree n with omega(n) >= 2
long long g_n(const FactoredInteger& n, GMethod method = GMethod::Both);

enum class BetaMethod { Direct, Moebius, Both };

// per-pair signed count over prime-log weights with entries i, j removed
// (0-based, order irrelevant); Direct enumerates sign vectors, Moebius sums
// mu over the qualifying divisors; Both cross-checks them
long long n_ij_beta(const PrimorialContext& ctx, int i, int j, BetaMethod method = BetaMethod::Direct);
long long n_ij_beta_mobius(const PrimorialContext& ctx, int i, int j);

enum class SquarefreeClass { Prime, EvenOmega, OddOmegaEven };

// verifies the trichotomy for squarefree n > 1: Q = 1 for primes, Q = 0 for
// even omega, Q even for odd omega >= 3; a violation is a cross-check error
SquarefreeClass classify_squarefree(const FactoredInteger& n);

struct SquarefreeScan {
  std::uint64_t checked = 0;
  std::uint64_t primes = 0;
  std::uint64_t even_omega = 0;
  std::uint64_t odd_omega_even = 0;
};

// classify every squarefree 1 < n <= limit, sieve-factored
SquarefreeScan scan_squarefree(std::uint32_t limit);

}  // namespace signcount
