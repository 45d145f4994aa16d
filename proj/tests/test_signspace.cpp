#include <doctest.h>

#include "oracles.hpp"
#include "signcount/signspace.hpp"

using namespace signcount;

namespace {

EvenMapOracle constant_one(int m) {
  return EvenMapOracle::callback(m, [](SignMask) { return 1; }, Evenness::Verified);
}

}  // namespace

TEST_CASE("parity sign of a mask") {
  CHECK(parity_sign(SignMask(0, 0)) == 1);            // empty product
  CHECK(parity_sign(SignMask(0b0101, 4)) == 1);       // elements 0 and 2
  CHECK(parity_sign(SignMask(0b00111, 5)) == -1);     // elements 0, 1, 2
  CHECK(SignMask(0b0101, 4).complement() == SignMask(0b1010, 4));
  CHECK(to_pm_string(SignMask(0b100, 3)) == "(+1,+1,-1)");
}

TEST_CASE("evenness verification") {
  CHECK(verify_even(constant_one(4)).even);

  // sigma(A) = (-1)^|A| is not even for odd cardinality; the empty set is a witness
  auto alternating = EvenMapOracle::callback(3, [](SignMask a) { return parity_sign(a); },
                                             Evenness::Assumed);
  EvenCheck check = verify_even(alternating);
  CHECK_FALSE(check.even);
  REQUIRE(check.counterexample.has_value());
  CHECK(check.counterexample->bits == 0);

  auto pm = product_map({-1, -1, 1});
  CHECK(verify_even(pm.oracle).even);
}

TEST_CASE("pair count and total sum on a constant map") {
  auto map = constant_one(5);
  TotalSignSum total = total_sign_sum(map);
  CHECK(total.sum == 32);
  CHECK(total.quarter == 8);
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (u != v) CHECK(n_sigma(map, u, v) == 8);  // 2^(m-2)
  // oracle agreement
  CHECK(oracle::n_sigma([](std::uint64_t) { return 1; }, 5, 0, 1) == 8);
}

TEST_CASE("odd map transform") {
  // tau(A) = +1 iff |A| <= 1 is an odd map for m = 3
  MapFn tau = [](SignMask a) { return a.popcount() <= 1 ? 1 : -1; };
  EvenMapOracle sigma = tau_to_sigma(3, tau);
  CHECK(sigma.evenness() == Evenness::Verified);
  CHECK(sigma.value(0b000) == 1);
  CHECK(sigma.value(0b001) == -1);
  CHECK(sigma.value(0b010) == -1);
  CHECK(sigma.value(0b011) == -1);
  CHECK(sigma.value(0b111) == 1);
  CHECK(verify_even(sigma).even);

  TotalSignSum total = total_sign_sum(sigma);
  CHECK(total.sum == -4);
  CHECK(total.quarter == -1);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (u != v) CHECK(n_sigma(sigma, u, v) == -1);
  // oracle route, straight from the definition
  CHECK(oracle::n_sigma(
            [&](std::uint64_t bits) { return parity_sign(SignMask(bits, 3)) * tau(SignMask(bits, 3)); },
            3, 1, 2) == -1);

  // even cardinality is rejected before tau is even inspected
  CHECK_THROWS_AS(tau_to_sigma(4, tau), MathError);

  // tau(A) = +1 iff |A| even is odd for m = 5 and collapses to sigma = +1
  EvenMapOracle plus = tau_to_sigma(5, [](SignMask a) { return a.popcount() % 2 == 0 ? 1 : -1; });
  for (std::uint64_t bits = 0; bits < 32; ++bits) CHECK(plus.value(bits) == 1);

  // a non-odd tau is reported with a witness
  CHECK_THROWS_AS(tau_to_sigma(3, [](SignMask) { return 1; }), DegenerateError);
}

TEST_CASE("product maps") {
  auto all_one = product_map({1, 1, 1, 1, 1});
  CHECK(all_one.predicted == 8);
  CHECK(total_sign_sum(all_one.oracle).quarter == 8);

  auto mixed = product_map({-1, -1, 1, 1});
  CHECK(mixed.predicted == 0);
  CHECK(total_sign_sum(mixed.oracle).quarter == 0);
  CHECK(n_sigma(mixed.oracle, 0, 3) == 0);

  auto four = product_map({1, 1, 1, 1});
  CHECK(n_sigma(four.oracle, 0, 1) == 4);  // 2^(m-2)

  auto six = product_map({1, 1, 1, 1, 1, 1});
  CHECK(total_sign_sum(six.oracle).sum == 64);
  CHECK(total_sign_sum(six.oracle).quarter == 16);

  CHECK_THROWS_AS(product_map({-1, 1, 1}), MathError);  // product is -1
}

TEST_CASE("non-divisible total certifies non-evenness") {
  auto map = EvenMapOracle::dense(1, {1, 1}, Evenness::Assumed);
  CHECK_THROWS_AS(total_sign_sum(map), MathError);
}

TEST_CASE("pair count argument validation") {
  auto map = constant_one(4);
  CHECK_THROWS_AS(n_sigma(map, 2, 2), MathError);
  CHECK_THROWS_AS(n_sigma(map, 0, 4), MathError);
  CHECK_THROWS_AS(n_sigma(map, -1, 0), MathError);
}

TEST_CASE("random even maps satisfy the quarter-sum identity") {
  SplitMix64 rng(2024);
  for (int t = 0; t < 25; ++t) {
    int m = 3 + static_cast<int>(rng.below(6));
    EvenMapOracle map = random_even_map(m, rng);
    REQUIRE(verify_even(map).even);
    TotalSignSum total = total_sign_sum(map);
    long long expected = oracle::total_sum([&](std::uint64_t a) { return map.value(a); }, m);
    CHECK(total.sum == expected);
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v)
        if (u != v) CHECK(n_sigma(map, u, v) == total.quarter);
  }
}

TEST_CASE("dense map guardrails") {
  CHECK_THROWS_AS(EvenMapOracle::dense(2, {1, 1, 1}, Evenness::Assumed), ParseError);
  CHECK_THROWS_AS(EvenMapOracle::dense(1, {1, 2}, Evenness::Assumed), ParseError);
  CHECK_THROWS_AS(EvenMapOracle::dense(25, {}, Evenness::Assumed), GuardrailError);
}
