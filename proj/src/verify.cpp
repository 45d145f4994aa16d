#include "signcount/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "signcount/geomslab.hpp"
#include "signcount/invariants.hpp"
#include "signcount/io.hpp"
#include "signcount/primorial.hpp"
#include "signcount/signspace.hpp"
#include "signcount/sicount.hpp"

namespace signcount {

namespace {

struct CheckFailure {
  std::string message;
};

struct Suite {
  const VerifyOptions& opt;
  SplitMix64 rng;
  long long checks = 0;

  explicit Suite(const VerifyOptions& o) : opt(o), rng(o.seed) {}

  void require(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok) throw CheckFailure{describe()};
  }
  void require(bool ok, const std::string& msg) {
    ++checks;
    if (!ok) throw CheckFailure{msg};
  }

  int scaled(int full, int quick_min = 8) const {
    return opt.quick ? std::max(quick_min, full / 8) : full;
  }

  // --- generators -------------------------------------------------------

  ExactScalar random_rational(long long num_lo, long long num_hi, long long den_hi) {
    Int num(static_cast<long>(rng.range(num_lo, num_hi)));
    Int den(static_cast<long>(rng.range(1, den_hi)));
    return ExactScalar(num, den);
  }

  WeightVector random_nondegenerate(int m, bool positive) {
    for (int tries = 0; tries < 200; ++tries) {
      std::vector<ExactScalar> w;
      w.reserve(m);
      for (int k = 0; k < m; ++k) {
        ExactScalar x = positive ? random_rational(1, 40, 6) : random_rational(-40, 40, 6);
        if (x.is_zero()) x = ExactScalar(1);
        w.push_back(x);
      }
      WeightVector wv(std::move(w));
      if (find_vanishing(wv).kind == Degeneracy::NonDegenerate) return wv;
    }
    throw CheckFailure{"could not draw a nondegenerate weight family"};
  }

  std::string describe_weights(const WeightVector& w) {
    return dump_json(weights_to_json(w.weights()));
  }
};

using SuiteFn = std::function<void(Suite&)>;

// =============================================================================
// exact arithmetic
// =============================================================================

void suite_scalar_order(Suite& s) {
  int n = s.scaled(400);
  for (int t = 0; t < n; ++t) {
    ExactScalar a = s.random_rational(-60, 60, 12);
    ExactScalar b = s.random_rational(-60, 60, 12);
    ExactScalar c = s.random_rational(-60, 60, 12);
    s.require(!(a < b && b < a), "comparison antisymmetry failed");
    s.require((a < b) || (b < a) || a == b, "comparison totality failed");
    if (a < b && b < c)
      s.require(a < c, [&] { return "transitivity failed at " + a.str() + ", " + b.str() + ", " + c.str(); });
    // cross-multiplication agreement: a/b < c/d iff ad < cb for positive denominators
    s.require((a < b) == (a.num() * b.den() < b.num() * a.den()),
              "cross-multiplied comparison disagrees");
  }
}

void suite_isqrt(Suite& s) {
  int n = s.scaled(10000, 500);
  for (int t = 0; t < n; ++t) {
    // up to 256 bits
    int limbs = 1 + static_cast<int>(s.rng.below(4));
    Int v = 0;
    for (int l = 0; l < limbs; ++l) v = (v << 64) + Int(static_cast<unsigned long>(s.rng.next()));
    Int r = isqrt(v);
    s.require(r * r <= v && v < (r + 1) * (r + 1),
              [&] { return "isqrt postcondition failed at n = " + v.get_str(); });
  }
}

void suite_mobius(Suite& s) {
  int n = s.scaled(300);
  for (int t = 0; t < n; ++t) {
    std::uint64_t a = 1 + s.rng.below(4000);
    std::uint64_t b = 1 + s.rng.below(4000);
    for (std::uint64_t g; (g = std::gcd(a, b)) > 1;) a /= g;  // force coprimality
    auto fa = FactoredInteger::from_value(Int(static_cast<unsigned long>(a)));
    auto fb = FactoredInteger::from_value(Int(static_cast<unsigned long>(b)));
    auto fab = FactoredInteger::from_value(Int(static_cast<unsigned long>(a) ) * Int(static_cast<unsigned long>(b)));
    s.require(mobius(fab) == mobius(fa) * mobius(fb),
              [&] { return "mobius not multiplicative at " + std::to_string(a) + " * " + std::to_string(b); });
  }
}

// =============================================================================
// even maps
// =============================================================================

void suite_even_map_invariance(Suite& s) {
  int maps = s.scaled(200, 24);
  for (int t = 0; t < maps; ++t) {
    int m = 3 + static_cast<int>(s.rng.below(8));  // 3..10, dense cap applies
    EvenMapOracle map = random_even_map(m, s.rng);
    auto check = verify_even(map);
    s.require(check.even, "random even map failed the evenness check");
    TotalSignSum total = total_sign_sum(map);
    for (int u = 0; u < m; ++u) {
      for (int v = 0; v < m; ++v) {
        if (u == v) continue;
        long long value = n_sigma(map, u, v);
        s.require(value == total.quarter, [&] {
          std::ostringstream os;
          os << "pair value " << value << " != quarter sum " << total.quarter << " at m=" << m
             << " u=" << u + 1 << " v=" << v + 1 << " seed=" << s.opt.seed;
          return os.str();
        });
        s.require(value == n_sigma(map, v, u), "pair value not symmetric under (u,v) swap");
      }
    }
  }
}

void suite_proof_identity(Suite& s) {
  // 2 N(u,v) = sum over {A : u in A, v not in A} of sigma(A) + sigma(A+v),
  // with no evenness assumption at all
  int maps = s.scaled(120, 16);
  for (int t = 0; t < maps; ++t) {
    int m = 2 + static_cast<int>(s.rng.below(8));
    EvenMapOracle map = random_map(m, s.rng);
    int u = static_cast<int>(s.rng.below(m));
    int v = (u + 1 + static_cast<int>(s.rng.below(m - 1))) % m;
    long long rhs = 0;
    for (std::uint64_t bits = 0; bits < (1ull << m); ++bits) {
      if (!((bits >> u) & 1) || ((bits >> v) & 1)) continue;
      rhs += map.value(bits) + map.value(bits | (1ull << v));
    }
    s.require(2 * n_sigma(map, u, v) == rhs,
              [&] { return "proof identity failed at m=" + std::to_string(m); });
  }
}

void suite_odd_map_transform(Suite& s) {
  int maps = s.scaled(120, 16);
  for (int t = 0; t < maps; ++t) {
    int m = 3 + 2 * static_cast<int>(s.rng.below(4));  // odd in 3..9
    EvenMapOracle sigma = random_odd_map_sigma(m, s.rng);
    s.require(sigma.evenness() == Evenness::Verified, "transform must mark Verified");
    s.require(verify_even(sigma).even, "odd-map transform produced a non-even map");
  }
}

// =============================================================================
// counting engines
// =============================================================================

void suite_engine_equivalence(Suite& s) {
  int n = s.scaled(120, 20);
  for (int t = 0; t < n; ++t) {
    int r = static_cast<int>(s.rng.below(19));  // 0..18
    std::vector<ExactScalar> w;
    w.reserve(r);
    for (int k = 0; k < r; ++k) w.push_back(ExactScalar(static_cast<long>(s.rng.range(-50, 50))));
    if (r >= 2 && (s.rng.next() & 1)) w[r - 1] = w[0];  // force a duplicate weight
    WeightVector wv(std::move(w));

    ExactScalar lo, hi;
    if ((s.rng.next() & 3) == 0 && r > 0) {
      // endpoint-touching: lo is an achievable signed sum
      Int sum = 0;
      std::uint64_t eps = s.rng.next() & ((r == 64 ? ~0ull : (1ull << r) - 1));
      for (int k = 0; k < r; ++k)
        sum += ((eps >> k) & 1) ? -wv.normalized()[k] : wv.normalized()[k];
      lo = ExactScalar(sum);
      hi = lo + ExactScalar(static_cast<long>(1 + s.rng.below(80)));
    } else {
      lo = ExactScalar(static_cast<long>(s.rng.range(-120, 119)));
      hi = lo + ExactScalar(static_cast<long>(1 + s.rng.below(120)));
    }
    OpenInterval iv(lo, hi);
    CountPair brute = interval_count_brute(wv, iv);
    CountPair mitm = interval_count_mitm(wv, iv);
    s.require(brute.signed_sum == mitm.signed_sum && brute.cardinality == mitm.cardinality, [&] {
      return "engines disagree on " + s.describe_weights(wv) + "interval (" + lo.str() + ", " +
             hi.str() + "): brute " + std::to_string(brute.signed_sum) + "/" +
             std::to_string(brute.cardinality) + " mitm " + std::to_string(mitm.signed_sum) + "/" +
             std::to_string(mitm.cardinality);
    });
  }
}

void suite_antipodal_cancellation(Suite& s) {
  int n = s.scaled(100, 16);
  for (int t = 0; t < n; ++t) {
    int r = 1 + 2 * static_cast<int>(s.rng.below(5));  // odd 1..9
    std::vector<ExactScalar> w;
    for (int k = 0; k < r; ++k) w.push_back(s.random_rational(-30, 30, 4));
    WeightVector wv(std::move(w));
    ExactScalar c = ExactScalar(static_cast<long>(1 + s.rng.below(60)));
    long long count = signed_count(wv, OpenInterval(-c, c));
    s.require(count == 0, [&] {
      return "antipodal cancellation failed (odd r, symmetric interval): " + s.describe_weights(wv);
    });
  }
}

void suite_homogeneity(Suite& s) {
  int n = s.scaled(100, 16);
  for (int t = 0; t < n; ++t) {
    int r = static_cast<int>(s.rng.below(10));
    std::vector<ExactScalar> w;
    for (int k = 0; k < r; ++k) w.push_back(s.random_rational(-25, 25, 5));
    ExactScalar lo = s.random_rational(-80, 40, 3);
    ExactScalar hi = lo + ExactScalar(static_cast<long>(1 + s.rng.below(50)));
    ExactScalar scale = s.random_rational(1, 12, 7);
    std::vector<ExactScalar> scaled;
    for (const auto& x : w) scaled.push_back(x * scale);
    CountPair base = interval_count(WeightVector(w), OpenInterval(lo, hi));
    CountPair same = interval_count(WeightVector(scaled), OpenInterval(lo * scale, hi * scale));
    s.require(base.signed_sum == same.signed_sum && base.cardinality == same.cardinality,
              "counts changed under a positive rational rescaling");
  }
}

void suite_alternating_symmetries(Suite& s) {
  int n = s.scaled(100, 16);
  for (int t = 0; t < n; ++t) {
    int m = 3 + static_cast<int>(s.rng.below(6));
    WeightVector w = s.random_nondegenerate(m, false);
    long long base = alternating_sign_sum(w);

    // negating one entry negates the sum
    int flip = static_cast<int>(s.rng.below(m));
    std::vector<ExactScalar> negated = w.weights();
    negated[flip] = -negated[flip];
    s.require(alternating_sign_sum(WeightVector(negated)) == -base,
              [&] { return "sign flip did not negate the sum: " + s.describe_weights(w); });

    // permuting entries leaves it unchanged
    std::vector<ExactScalar> shuffled = w.weights();
    for (int k = m - 1; k > 0; --k)
      std::swap(shuffled[k], shuffled[s.rng.below(k + 1)]);
    s.require(alternating_sign_sum(WeightVector(shuffled)) == base,
              [&] { return "permutation changed the sum: " + s.describe_weights(w); });
  }
}

void suite_parallel_determinism(Suite& s) {
  int n = s.scaled(24, 6);
  for (int t = 0; t < n; ++t) {
    int m = 12 + static_cast<int>(s.rng.below(4));
    WeightVector w = s.random_nondegenerate(m, false);
    EngineConfig sequential{Engine::Brute, 1, false};
    EngineConfig parallel{Engine::Brute, 4, false};
    s.require(alternating_sign_sum(w, sequential) == alternating_sign_sum(w, parallel),
              "parallel alternating sum differs from sequential");
    ExactScalar lo = s.random_rational(-60, 0, 2);
    ExactScalar hi = lo + ExactScalar(static_cast<long>(1 + s.rng.below(90)));
    OpenInterval iv(lo, hi);
    CountPair a = interval_count_brute(w, iv, 1);
    CountPair b = interval_count_brute(w, iv, 3);
    s.require(a.signed_sum == b.signed_sum && a.cardinality == b.cardinality,
              "parallel interval count differs from sequential");
  }
}

// =============================================================================
// per-pair invariants over rational weights
// =============================================================================

void suite_pair_invariance(Suite& s) {
  int n = s.scaled(100, 12);
  for (int t = 0; t < n; ++t) {
    int m = 3 + 2 * static_cast<int>(s.rng.below(3));  // 3, 5, 7
    bool positive = (s.rng.next() & 1) != 0;
    AlphaInstance a(s.random_nondegenerate(m, positive));
    long long h = h_alpha(a);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        long long cal = n_cal_ij(a, i, j);
        s.require(cal == h, [&] {
          return "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") value " +
                 std::to_string(cal) + " != h " + std::to_string(h) + " on " +
                 s.describe_weights(a.alpha());
        });
        if (positive)
          s.require(n_ij(a, i, j) == cal,
                    [&] { return "positive-entry count differs from general count: " + s.describe_weights(a.alpha()); });
      }
    }
  }
}

void suite_parity_invariance(Suite& s) {
  // fixed instances exercising both parities
  {
    AlphaInstance odd_one(WeightVector({1, 2, 3, 5}));
    AlphaInstance even_zero(WeightVector({1, 2, 4, 8}));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) {
          s.require(s_parity(odd_one, i, j) == 1, "parity of (1,2,3,5) must be 1");
          s.require(s_parity(even_zero, i, j) == 0, "parity of (1,2,4,8) must be 0");
        }
  }
  int n = s.scaled(100, 12);
  for (int t = 0; t < n; ++t) {
    int m = 3 + static_cast<int>(s.rng.below(6));  // 3..8
    AlphaInstance a(s.random_nondegenerate(m, true));
    int expected = -1;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        int p = s_parity(a, i, j);
        if (expected < 0) expected = p;
        s.require(p == expected,
                  [&] { return "cardinality parity varies across pairs on " + s.describe_weights(a.alpha()); });
      }
    }
  }
}

void suite_h_transforms(Suite& s) {
  int n = s.scaled(60, 10);
  for (int t = 0; t < n; ++t) {
    int m = 3 + 2 * static_cast<int>(s.rng.below(2));  // 3 or 5
    // a zero entry forces h = 0 (keep the rest nondegenerate)
    for (int tries = 0; tries < 100; ++tries) {
      std::vector<ExactScalar> w;
      for (int k = 0; k < m; ++k) w.push_back(s.random_rational(-9, 9, 3));
      w[s.rng.below(m)] = ExactScalar(0);
      WeightVector wv(w);
      if (find_vanishing(wv).kind != Degeneracy::NonDegenerate) continue;
      s.require(h_alpha(AlphaInstance(wv)) == 0,
                [&] { return "zero entry must force h = 0: " + s.describe_weights(wv); });
      break;
    }
    // scaling invariance
    WeightVector w = s.random_nondegenerate(m, false);
    ExactScalar scale = s.random_rational(1, 9, 5);
    std::vector<ExactScalar> scaled;
    for (const auto& x : w.weights()) scaled.push_back(x * scale);
    s.require(h_alpha(AlphaInstance(WeightVector(scaled))) == h_alpha(AlphaInstance(w)),
              "h changed under positive rescaling");
  }
}

// =============================================================================
// primorial specializations
// =============================================================================

void suite_g_table(Suite& s) {
  static const long long expected[] = {1, -1, 3, -8, 22, -53, 158, -481, 1471, -4621, 14612};
  int max_m = s.opt.quick ? 15 : 23;
  bool fault = s.opt.inject_fault == "g-table";
  for (int m = 3, row = 0; m <= max_m; m += 2, ++row) {
    PrimorialContext ctx = PrimorialContext::make(m);
    long long want = expected[row] + (fault ? 1 : 0);
    long long have = g_m(ctx, GMethod::Both);  // Both cross-checks the two formulas
    s.require(have == want, [&] {
      return "g(" + std::to_string(m) + ") = " + std::to_string(have) + ", expected " +
             std::to_string(want);
    });
  }
  for (int m = 2; m <= (s.opt.quick ? 12 : 22); m += 2) {
    s.require(g_m(PrimorialContext::make(m), GMethod::Both) == 0,
              [&] { return "g(" + std::to_string(m) + ") must vanish for even m"; });
  }
}

void suite_g_n_random(Suite& s) {
  int n = s.scaled(80, 12);
  for (int t = 0; t < n; ++t) {
    // random squarefree with 2..8 distinct primes
    int k = 2 + static_cast<int>(s.rng.below(7));
    auto primes = first_primes(24);
    std::vector<std::uint64_t> chosen;
    while (static_cast<int>(chosen.size()) < k) {
      std::uint64_t p = primes[s.rng.below(primes.size())];
      if (std::find(chosen.begin(), chosen.end(), p) == chosen.end()) chosen.push_back(p);
    }
    FactoredInteger n_fact = FactoredInteger::from_primes(chosen);
    long long both = g_n(n_fact, GMethod::Both);  // throws if the routes disagree
    if (k % 2 == 0)
      s.require(both == 0, [&] { return "g_n must vanish for even omega at n = " + n_fact.value().get_str(); });
  }
}

void suite_prime_log_pairs(Suite& s) {
  int max_m = s.opt.quick ? 9 : 13;
  for (int m = 3; m <= max_m; ++m) {
    PrimorialContext ctx = PrimorialContext::make(m);
    long long g = (m % 2 == 1) ? g_m(ctx, GMethod::Definition) : 0;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        long long direct = n_ij_beta(ctx, i, j, BetaMethod::Direct);
        long long moebius = n_ij_beta_mobius(ctx, i, j);
        s.require(direct == moebius, [&] {
          return "prime-log pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ") at m=" + std::to_string(m) + ": direct " + std::to_string(direct) +
                 " != divisor sum " + std::to_string(moebius);
        });
        if (m % 2 == 1)
          s.require(direct == g, [&] {
            return "prime-log pair value " + std::to_string(direct) + " != g(" +
                   std::to_string(m) + ") = " + std::to_string(g);
          });
      }
    }
  }
}

void suite_q_pruning(Suite& s) {
  int n = s.scaled(40, 8);
  for (int t = 0; t < n; ++t) {
    int k = 2 + static_cast<int>(s.rng.below(s.opt.quick ? 13 : 19));  // omega up to 20
    auto primes = first_primes(25);
    for (size_t x = primes.size() - 1; x > 0; --x)
      std::swap(primes[x], primes[s.rng.below(x + 1)]);
    std::vector<std::uint64_t> chosen(primes.begin(), primes.begin() + k);
    FactoredInteger n_fact = FactoredInteger::from_primes(chosen);
    // unpruned oracle: full subset enumeration
    Int limit = isqrt(n_fact.value());
    long long oracle = 0;
    for (std::uint64_t bits = 0; bits < (1ull << k); ++bits) {
      Int d = 1;
      for (int b = 0; b < k; ++b)
        if ((bits >> b) & 1) d *= Int(static_cast<unsigned long>(chosen[b]));
      if (d <= limit) oracle += popcount_parity_sign(bits);
    }
    s.require(q_of_n(n_fact) == oracle,
              [&] { return "pruned divisor walk disagrees with full enumeration at omega " + std::to_string(k); });
  }
}

void suite_squarefree_scan(Suite& s) {
  std::uint32_t limit = s.opt.quick ? 10000 : 100000;
  SquarefreeScan scan = scan_squarefree(limit);  // classify_squarefree throws on any violation
  s.require(scan.checked > 0, "scan went through no numbers");
  s.require(scan.primes + scan.even_omega + scan.odd_omega_even == scan.checked,
            "scan classes do not partition the squarefree numbers");
  s.checks += scan.checked;
}

// =============================================================================
// geometric slab
// =============================================================================

void suite_slab_fixed(Suite& s) {
  auto inst = SlabInstance::validate(
      {{ExactScalar(3), ExactScalar(0)}, {ExactScalar(4), ExactScalar(0)}, {ExactScalar(5), ExactScalar(0)}},
      {ExactScalar(1), ExactScalar(0)});
  SlabReport report = slab_report(inst);
  s.require(report.c == -1, "fixed instance must give c = -1");
  for (const auto& e : report.pairs)
    s.require(e.m == 1, "fixed instance must give M = 1 for every pair");
}

void suite_slab_random(Suite& s) {
  int n = s.scaled(50, 10);
  int made = 0;
  while (made < n) {
    int m = (s.rng.next() & 1) ? 3 : 5;
    int dim = 2 + static_cast<int>(s.rng.below(2));
    std::vector<RationalVector> points;
    for (int k = 0; k < m; ++k) {
      RationalVector p;
      for (int c = 0; c < dim; ++c) p.emplace_back(static_cast<long>(s.rng.range(-5, 5)));
      points.push_back(std::move(p));
    }
    std::uint64_t search_seed = s.rng.next();
    std::optional<SlabInstance> found;
    try {
      found = SlabInstance::search(points, search_seed, 512);
    } catch (const MathError&) {
      continue;  // degenerate point draw, try another
    }
    const SlabInstance& inst = *found;
    // slab_report cross-checks M(i,j) = -sgn(a_j) c and |M| constancy internally
    SlabReport report = slab_report(inst);
    s.require(report.abs_m == static_cast<unsigned long long>(report.c < 0 ? -report.c : report.c),
              "|M| must equal |c|");

    // the slab count and the one-dimensional machinery agree pair by pair
    AlphaInstance projections(inst.projections());
    for (int i = 0; i < inst.m(); ++i)
      for (int j = 0; j < inst.m(); ++j)
        if (i != j) {
          int sign_aj = inst.projections().at(j).sgn();
          s.require(m_ij(inst, i, j) == sign_aj * n_cal_ij(projections, i, j),
                    "slab count disagrees with the interval count on the projections");
        }

    // scaling the normal by a positive rational changes nothing
    ExactScalar scale = s.random_rational(1, 7, 4);
    RationalVector scaled_normal;
    for (const auto& x : inst.normal()) scaled_normal.push_back(x * scale);
    SlabInstance rescaled = SlabInstance::validate(inst.points(), scaled_normal);
    for (int i = 0; i < inst.m(); ++i)
      for (int j = 0; j < inst.m(); ++j)
        if (i != j)
          s.require(m_ij(inst, i, j) == m_ij(rescaled, i, j),
                    "M changed under positive rescaling of the normal");
    ++made;
  }
}

// =============================================================================
// rendering
// =============================================================================

void suite_json_roundtrip(Suite& s) {
  AlphaInstance a(WeightVector({1, 1, 1}));
  InvariantReport report = all_pairs_report(a, ReportMode::Calligraphic);
  std::string text = dump_json(invariant_report_to_json(report, a.alpha().weights()));
  std::string again = dump_json(Json::parse(text));
  s.require(text == again, "JSON parse + re-render is not byte-identical");

  auto inst = SlabInstance::validate(
      {{ExactScalar(3), ExactScalar(0)}, {ExactScalar(4), ExactScalar(0)}, {ExactScalar(5), ExactScalar(0)}},
      {ExactScalar(1), ExactScalar(0)});
  std::string slab = dump_json(slab_report_to_json(inst, slab_report(inst)));
  s.require(slab == dump_json(Json::parse(slab)), "slab JSON round-trip not byte-identical");
}

}  // namespace

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options) {
  const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"scalar-order", suite_scalar_order},
      {"isqrt-postcondition", suite_isqrt},
      {"mobius-multiplicative", suite_mobius},
      {"even-map-pair-invariance", suite_even_map_invariance},
      {"proof-identity-arbitrary-maps", suite_proof_identity},
      {"odd-map-transform", suite_odd_map_transform},
      {"engine-equivalence", suite_engine_equivalence},
      {"antipodal-cancellation", suite_antipodal_cancellation},
      {"homogeneity", suite_homogeneity},
      {"alternating-symmetries", suite_alternating_symmetries},
      {"parallel-determinism", suite_parallel_determinism},
      {"pair-invariance-rational", suite_pair_invariance},
      {"parity-invariance", suite_parity_invariance},
      {"h-transforms", suite_h_transforms},
      {"g-table", suite_g_table},
      {"g-n-random", suite_g_n_random},
      {"prime-log-pairs", suite_prime_log_pairs},
      {"q-pruning-oracle", suite_q_pruning},
      {"squarefree-classification", suite_squarefree_scan},
      {"slab-fixed-instance", suite_slab_fixed},
      {"slab-random", suite_slab_random},
      {"json-roundtrip", suite_json_roundtrip},
  };

  std::vector<SuiteResult> results;
  for (const auto& [name, fn] : suites) {
    Suite suite(options);
    SuiteResult result;
    result.name = name;
    try {
      fn(suite);
      result.passed = true;
    } catch (const CheckFailure& f) {
      result.failure = f.message;
    } catch (const std::exception& e) {
      result.failure = e.what();
    }
    result.checks = suite.checks;
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace signcount
