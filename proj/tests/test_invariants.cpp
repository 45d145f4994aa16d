#include <doctest.h>

#include "oracles.hpp"
#include "signcount/invariants.hpp"

using namespace signcount;

namespace {

AlphaInstance alpha(std::initializer_list<long> entries) {
  std::vector<ExactScalar> w;
  for (long e : entries) w.emplace_back(e);
  return AlphaInstance(WeightVector(std::move(w)));
}

}  // namespace

TEST_CASE("per-pair counts on equal weights") {
  AlphaInstance a = alpha({1, 1, 1});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        CHECK(n_ij(a, i, j) == 1);
        CHECK(n_cal_ij(a, i, j) == 1);
        CHECK(s_parity(a, i, j) == 1);
      }
  CHECK(h_alpha(a) == 1);
}

TEST_CASE("per-pair counts on a dominated family") {
  AlphaInstance a = alpha({1, 2, 4});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(n_ij(a, i, j) == 0);
  CHECK(h_alpha(a) == 0);
}

TEST_CASE("triangle weights") {
  AlphaInstance a = alpha({3, 4, 5});
  CHECK(n_ij(a, 0, 1) == 1);  // reduced weight 5 inside (1, 7)
  CHECK(h_alpha(a) == 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(n_ij(a, i, j) == n_cal_ij(a, i, j));
}

TEST_CASE("general-sign count with its prefactor") {
  AlphaInstance a = alpha({7, 11, 13});
  // interval (-4, 18) catches +13 with parity +1; sgn(11) = +1
  CHECK(n_cal_ij(a, 0, 1) == 1);

  // a zero entry at j short-circuits to 0
  AlphaInstance z = alpha({0, 1, 3});
  CHECK(n_cal_ij(z, 1, 0) == 0);
  CHECK(h_alpha(z) == 0);

  // negative entries work through the absolute-value interval
  AlphaInstance neg = alpha({7, 11, -13});
  CHECK(h_alpha(neg) == -1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(n_cal_ij(neg, i, j) == -1);
}

TEST_CASE("sign flip and permutation behavior of h") {
  CHECK(h_alpha(alpha({3, 4, 5})) == 1);
  CHECK(h_alpha(alpha({-3, 4, 5})) == -1);
  CHECK(h_alpha(alpha({3, -4, 5})) == -1);
  CHECK(h_alpha(alpha({5, 4, 3})) == 1);
  CHECK(h_alpha(alpha({4, 3, 5})) == 1);
}

TEST_CASE("cardinality parity across pairs") {
  AlphaInstance odd = alpha({1, 2, 3, 5});
  AlphaInstance even = alpha({1, 2, 4, 8});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) {
        CHECK(s_parity(odd, i, j) == 1);
        CHECK(s_parity(even, i, j) == 0);
      }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(n_ij(alpha({1, 2, 3}), 0, 1), DegenerateError);     // 1 + 2 - 3 = 0
  CHECK_THROWS_AS(n_ij(alpha({-1, 2, 4}), 0, 1), MathError);          // needs positive entries
  CHECK_THROWS_AS(s_parity(alpha({-1, 2, 4}), 0, 1), MathError);
  CHECK_THROWS_AS(h_alpha(alpha({1, 2, 4, 8})), MathError);           // even m
  CHECK_THROWS_AS(n_ij(alpha({1, 2, 4}), 1, 1), MathError);           // equal indices
  CHECK_THROWS_AS(n_ij(alpha({1, 2, 4}), 0, 3), MathError);           // out of range
  CHECK_THROWS_AS(AlphaInstance(WeightVector({ExactScalar(1), ExactScalar(2)})), MathError);
}

TEST_CASE("all-pairs report") {
  AlphaInstance a = alpha({1, 1, 1});
  InvariantReport cal = all_pairs_report(a, ReportMode::Calligraphic);
  CHECK(cal.pairs.size() == 6);
  CHECK(cal.all_equal());
  CHECK(cal.common_value() == 1);
  CHECK(cal.parity_constant());
  REQUIRE(cal.h.has_value());
  CHECK(*cal.h == 1);

  // even m: the table is reported, no invariance claim, no h
  AlphaInstance even = alpha({1, 2, 4, 8});
  InvariantReport plain = all_pairs_report(even, ReportMode::Plain);
  CHECK(plain.pairs.size() == 12);
  CHECK_FALSE(plain.h.has_value());
  CHECK(plain.parity_constant());
  for (const PairEntry& e : plain.pairs) CHECK(e.parity == 0);

  // signed weights go through calligraphic mode only
  AlphaInstance neg = alpha({7, 11, -13});
  CHECK_THROWS_AS(all_pairs_report(neg, ReportMode::Plain), MathError);
  InvariantReport negcal = all_pairs_report(neg, ReportMode::Calligraphic);
  CHECK(negcal.all_equal());
  CHECK(negcal.common_value() == -1);
}

TEST_CASE("counts agree with a direct oracle on random positive families") {
  SplitMix64 rng(4242);
  int done = 0;
  while (done < 20) {
    int m = 3 + 2 * static_cast<int>(rng.below(2));  // 3 or 5
    std::vector<ExactScalar> w;
    std::vector<mpq_class> q;
    for (int k = 0; k < m; ++k) {
      long num = static_cast<long>(1 + rng.below(20));
      long den = static_cast<long>(1 + rng.below(4));
      w.emplace_back(Int(num), Int(den));
      q.emplace_back(num, den);
    }
    WeightVector wv(w);
    if (find_vanishing(wv).kind != Degeneracy::NonDegenerate) continue;
    AlphaInstance a(wv);
    long long h = h_alpha(a);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        std::vector<mpq_class> rest;
        for (int k = 0; k < m; ++k)
          if (k != i && k != j) rest.push_back(q[k]);
        mpq_class lo = abs(q[i] - q[j]);
        mpq_class hi = q[i] + q[j];
        long long direct = oracle::interval_count(rest, lo, hi).signed_sum;
        CHECK(n_ij(a, i, j) == direct);
        CHECK(direct == h);
      }
    ++done;
  }
}
