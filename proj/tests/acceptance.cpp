// Acceptance suite: one pass/fail line per criterion, exact expectations,
// pinned time budgets. Returns nonzero when any criterion fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "signcount/geomslab.hpp"
#include "signcount/invariants.hpp"
#include "signcount/io.hpp"
#include "signcount/primorial.hpp"
#include "signcount/signspace.hpp"
#include "signcount/sicount.hpp"

using namespace signcount;

namespace {

#ifndef SIGNCOUNT_BIN_PATH
#define SIGNCOUNT_BIN_PATH "./build/tools/signcount"
#endif

struct CommandResult {
  std::string out;
  int exit_code = -1;
};

CommandResult run_command(const std::string& args) {
  std::string cmd = std::string(SIGNCOUNT_BIN_PATH) + " " + args + " 2>/dev/null";
  CommandResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Failure {
  std::string reason;
};

void require(bool ok, const std::string& reason) {
  if (!ok) throw Failure{reason};
}

const long long kGTable[] = {1, -1, 3, -8, 22, -53, 158, -481, 1471, -4621, 14612};

// --------------------------------------------------------------------------

void criterion_1_g_table() {
  auto start = std::chrono::steady_clock::now();
  CommandResult r = run_command("primorial table --odd-max 23 --threads 1");
  double elapsed = seconds_since(start);
  require(r.exit_code == 0, "table command failed with exit " + std::to_string(r.exit_code));

  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  int row = 0;
  int m;
  long long by_definition, by_q;
  while (in >> m >> by_definition >> by_q) {
    require(row < 11, "too many table rows");
    require(m == 3 + 2 * row, "unexpected m in row " + std::to_string(row));
    require(by_definition == kGTable[row],
            "definition value for m=" + std::to_string(m) + " is " + std::to_string(by_definition));
    require(by_q == kGTable[row],
            "via-Q value for m=" + std::to_string(m) + " is " + std::to_string(by_q));
    ++row;
  }
  require(row == 11, "expected 11 rows, saw " + std::to_string(row));
  require(elapsed < 10.0, "table took " + std::to_string(elapsed) + " s, budget 10 s");
}

void criterion_2_even_zeros() {
  for (int m = 2; m <= 22; m += 2)
    require(g_m(PrimorialContext::make(m), GMethod::Both) == 0,
            "g(" + std::to_string(m) + ") must be exactly 0");
}

void criterion_3_even_map_suite() {
  SplitMix64 rng(1001);
  for (int t = 0; t < 200; ++t) {
    int m = 3 + static_cast<int>(rng.below(8));  // 3..10
    EvenMapOracle map = random_even_map(m, rng);
    long long quarter = total_sign_sum(map).quarter;
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v)
        if (u != v)
          require(n_sigma(map, u, v) == quarter,
                  "pair value differs from the quarter sum at m=" + std::to_string(m));
  }
  // the proof identity holds for arbitrary maps, even or not
  for (int t = 0; t < 100; ++t) {
    int m = 2 + static_cast<int>(rng.below(8));
    EvenMapOracle map = random_map(m, rng);
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) {
        if (u == v) continue;
        long long rhs = 0;
        for (std::uint64_t bits = 0; bits < (1ull << m); ++bits) {
          if (!((bits >> u) & 1) || ((bits >> v) & 1)) continue;
          rhs += map.value(bits) + map.value(bits | (1ull << v));
        }
        require(2 * n_sigma(map, u, v) == rhs,
                "doubling identity failed on an arbitrary map at m=" + std::to_string(m));
      }
  }
}

WeightVector random_family(SplitMix64& rng, int m, bool positive) {
  for (;;) {
    std::vector<ExactScalar> w;
    for (int k = 0; k < m; ++k) {
      long num = static_cast<long>(positive ? 1 + rng.below(40) : rng.range(-40, 40));
      if (num == 0) num = 1;
      w.emplace_back(Int(num), Int(static_cast<long>(1 + rng.below(6))));
    }
    WeightVector wv(std::move(w));
    if (find_vanishing(wv).kind == Degeneracy::NonDegenerate) return wv;
  }
}

void criterion_4_closed_form_suite() {
  SplitMix64 rng(1002);
  for (int t = 0; t < 100; ++t) {
    int m = 3 + 2 * static_cast<int>(rng.below(3));  // 3, 5, 7
    bool positive = (t % 2) == 0;
    AlphaInstance a(random_family(rng, m, positive));
    long long h = h_alpha(a);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        long long cal = n_cal_ij(a, i, j);
        require(cal == h, "per-pair value differs from the closed form");
        if (positive) require(n_ij(a, i, j) == cal, "positive-entry count differs");
      }
  }
}

void criterion_5_engine_equivalence() {
  SplitMix64 rng(1003);
  for (int t = 0; t < 100; ++t) {
    int r = static_cast<int>(rng.below(19));  // 0..18
    std::vector<ExactScalar> w;
    for (int k = 0; k < r; ++k) w.emplace_back(static_cast<long>(rng.range(-60, 60)));
    if (r >= 2) w[r - 1] = w[0];  // duplicate weights in every instance with room
    WeightVector wv(std::move(w));

    ExactScalar lo, hi;
    if (r > 0 && (t % 3) == 0) {
      // lo equals an achievable sum, so endpoint exclusion is exercised
      Int sum = 0;
      std::uint64_t eps = rng.below(1ull << r);
      for (int k = 0; k < r; ++k)
        sum += ((eps >> k) & 1) ? -wv.normalized()[k] : wv.normalized()[k];
      lo = ExactScalar(sum);
      hi = lo + ExactScalar(static_cast<long>(1 + rng.below(100)));
    } else {
      lo = ExactScalar(static_cast<long>(rng.range(-150, 149)));
      hi = lo + ExactScalar(static_cast<long>(1 + rng.below(150)));
    }
    OpenInterval iv(lo, hi);
    CountPair brute = interval_count_brute(wv, iv);
    CountPair mitm = interval_count_mitm(wv, iv);
    require(brute.signed_sum == mitm.signed_sum, "signed counts disagree at r=" + std::to_string(r));
    require(brute.cardinality == mitm.cardinality,
            "cardinalities disagree at r=" + std::to_string(r));
  }
}

void criterion_6_parity_suite() {
  {
    AlphaInstance odd(WeightVector({1, 2, 3, 5}));
    AlphaInstance even(WeightVector({1, 2, 4, 8}));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) {
          require(s_parity(odd, i, j) == 1, "(1,2,3,5) must have odd cardinalities");
          require(s_parity(even, i, j) == 0, "(1,2,4,8) must have even cardinalities");
        }
  }
  SplitMix64 rng(1004);
  bool saw_odd = false, saw_even = false;
  for (int t = 0; t < 100; ++t) {
    int m = 3 + static_cast<int>(rng.below(6));  // 3..8
    AlphaInstance a(random_family(rng, m, true));
    int first = -1;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        int p = s_parity(a, i, j);
        if (first < 0) first = p;
        require(p == first, "cardinality parity varies across pairs");
      }
    (first == 1 ? saw_odd : saw_even) = true;
  }
  require(saw_odd && saw_even, "both parities must occur across the sample");
}

void criterion_7_prime_log_cross_check() {
  auto start = std::chrono::steady_clock::now();
  for (int m : {3, 5, 7, 9}) {
    PrimorialContext ctx = PrimorialContext::make(m);
    long long g = g_m(ctx, GMethod::Both);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        long long direct = n_ij_beta(ctx, i, j, BetaMethod::Direct);
        long long moebius = n_ij_beta_mobius(ctx, i, j);
        require(direct == moebius, "the two formulas disagree at m=" + std::to_string(m));
        require(direct == g, "pair value differs from g(m) at m=" + std::to_string(m));
      }
  }
  double elapsed = seconds_since(start);
  require(elapsed < 5.0, "cross-check took " + std::to_string(elapsed) + " s, budget 5 s");
}

void criterion_8_classification_scan() {
  auto start = std::chrono::steady_clock::now();
  SquarefreeScan scan = scan_squarefree(100000);  // throws on any misclassification
  double elapsed = seconds_since(start);
  require(scan.checked == 60793, "squarefree count up to 10^5 must be 60793");
  require(scan.primes == 9592, "pi(10^5) must be 9592");
  require(elapsed < 30.0, "scan took " + std::to_string(elapsed) + " s, budget 30 s");
}

void criterion_9_geometric_suite() {
  auto fixed = SlabInstance::validate(
      {{ExactScalar(3), ExactScalar(0)}, {ExactScalar(4), ExactScalar(0)}, {ExactScalar(5), ExactScalar(0)}},
      {ExactScalar(1), ExactScalar(0)});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) require(m_ij(fixed, i, j) == 1, "fixed instance must have M = 1 everywhere");

  SplitMix64 rng(1005);
  int made = 0;
  while (made < 50) {
    int m = (rng.next() & 1) ? 3 : 5;
    int dim = 2 + static_cast<int>(rng.below(2));
    std::vector<RationalVector> points;
    for (int k = 0; k < m; ++k) {
      RationalVector p;
      for (int c = 0; c < dim; ++c) p.emplace_back(static_cast<long>(rng.range(-6, 6)));
      points.push_back(std::move(p));
    }
    std::uint64_t seed = rng.next();
    try {
      SlabInstance inst = SlabInstance::search(points, seed, 256);
      long long c = -h_alpha(AlphaInstance(inst.projections()));
      long long abs_m = -1;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (i == j) continue;
          long long value = m_ij(inst, i, j);
          int sign_aj = inst.projections().at(j).sgn();
          require(value == -sign_aj * c, "M(i,j) must equal -sgn(a_j) c");
          long long mag = value < 0 ? -value : value;
          if (abs_m < 0) abs_m = mag;
          require(mag == abs_m, "|M| must be constant across pairs");
        }
      ++made;
    } catch (const MathError&) {
      continue;  // degenerate point draw; redraw
    }
  }
}

void criterion_10_performance_floor() {
  SplitMix64 rng(1);
  std::vector<ExactScalar> w;
  for (int k = 0; k < 22; ++k) {
    std::uint64_t v = (rng.next() >> 4) | 1ull;  // 60-bit odd
    w.push_back(ExactScalar(Int(static_cast<unsigned long>(v))));
  }
  WeightVector wv(w);
  EngineConfig single{Engine::Brute, 1, false};
  auto start = std::chrono::steady_clock::now();
  long long sequential = alternating_sign_sum(wv, single);
  double elapsed = seconds_since(start);
  require(elapsed < 2.0,
          "single-threaded walk took " + std::to_string(elapsed) + " s, budget 2 s");

  EngineConfig parallel{Engine::Brute, 4, false};
  require(alternating_sign_sum(wv, parallel) == sequential,
          "multi-threaded result differs from single-threaded");

  // byte-identical CLI output across thread counts
  CommandResult one = run_command("bench --m 22 --bits 60 --seed 1 --threads 1");
  CommandResult four = run_command("bench --m 22 --bits 60 --seed 1 --threads 4");
  require(one.exit_code == 0 && four.exit_code == 0, "bench runs failed");
  require(one.out == four.out, "bench stdout differs across thread counts");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string description;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "g-table reproduction by both methods in under 10 s", criterion_1_g_table},
      {2, "g(m) = 0 exactly for even m in 2..22", criterion_2_even_zeros},
      {3, "200 random even maps: pair counts equal the quarter sum; doubling identity on arbitrary maps",
       criterion_3_even_map_suite},
      {4, "100 random rational families: per-pair counts equal the closed form", criterion_4_closed_form_suite},
      {5, "meet-in-the-middle equals brute force on 100 instances with duplicates and endpoint hits",
       criterion_5_engine_equivalence},
      {6, "cardinality parity constant across pairs on 100 positive families", criterion_6_parity_suite},
      {7, "prime-log pair counts equal the divisor-sum formula and g(m) for m in {3,5,7,9} in under 5 s",
       criterion_7_prime_log_cross_check},
      {8, "every squarefree n <= 10^5 classifies correctly in under 30 s", criterion_8_classification_scan},
      {9, "slab counts: fixed instance all ones; 50 random instances satisfy the sign relation",
       criterion_9_geometric_suite},
      {10, "22-weight alternating walk under 2 s; multi-threaded output byte-identical",
       criterion_10_performance_floor},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string verdict = "PASS";
    std::string detail;
    try {
      c.run();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.reason;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
      ++failures;
    }
    std::cout << verdict << " criterion " << c.id << ": " << c.description;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
