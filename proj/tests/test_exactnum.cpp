#include <doctest.h>

#include "signcount/exactnum.hpp"

using namespace signcount;

TEST_CASE("rational parsing is exact") {
  CHECK(ExactScalar::parse("1.25").str() == "5/4");
  CHECK(ExactScalar::parse("3").str() == "3");
  CHECK(ExactScalar::parse("-7/2").str() == "-7/2");
  CHECK(ExactScalar::parse("0.5").str() == "1/2");
  CHECK(ExactScalar::parse("2/4").str() == "1/2");
  CHECK(ExactScalar::parse(" 10/5 ").str() == "2");
  CHECK(ExactScalar::parse("+0.125").str() == "1/8");
  CHECK(ExactScalar::parse("-0.1").str() == "-1/10");
  CHECK(ExactScalar::parse("0").str() == "0");
  CHECK_THROWS_AS(ExactScalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(ExactScalar::parse("abc"), ParseError);
  CHECK_THROWS_AS(ExactScalar::parse(""), ParseError);
  CHECK_THROWS_AS(ExactScalar::parse("1.2.3"), ParseError);
  CHECK_THROWS_AS(ExactScalar::parse("--3"), ParseError);
}

TEST_CASE("rational arithmetic and comparison") {
  ExactScalar half = ExactScalar::parse("1/2");
  ExactScalar third = ExactScalar::parse("1/3");
  CHECK((half + third).str() == "5/6");
  CHECK((half - third).str() == "1/6");
  CHECK((half * third).str() == "1/6");
  CHECK((-half).str() == "-1/2");
  CHECK(third < half);
  CHECK(half.abs_value() == half);
  CHECK((-half).abs_value() == half);
  CHECK(ExactScalar(0).is_zero());
  CHECK(ExactScalar(-3).sgn() == -1);
  // the example degeneracy 1/2 - 1/3 - 1/6 = 0
  CHECK((half - third - ExactScalar::parse("1/6")).is_zero());
}

TEST_CASE("isqrt small values and postcondition") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(1)) == 1);
  CHECK(isqrt(Int(30)) == 5);
  CHECK(isqrt(Int(36)) == 6);
  CHECK(isqrt(Int(35)) == 5);
  SplitMix64 rng(99);
  for (int t = 0; t < 2000; ++t) {
    Int v = Int(static_cast<unsigned long>(rng.next()));
    v = v * Int(static_cast<unsigned long>(rng.next())) + Int(static_cast<unsigned long>(rng.below(1000)));
    Int r = isqrt(v);
    CHECK(r * r <= v);
    CHECK(v < (r + 1) * (r + 1));
  }
}

TEST_CASE("first primes") {
  CHECK(first_primes(1) == std::vector<std::uint64_t>{2});
  CHECK(first_primes(5) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
  auto p23 = first_primes(23);
  REQUIRE(p23.size() == 23);
  CHECK(p23.back() == 83);
  auto p1000 = first_primes(1000);
  CHECK(p1000.back() == 7919);
}

TEST_CASE("factorization") {
  CHECK(FactoredInteger::from_value(Int(1)).factors().empty());
  auto f60 = FactoredInteger::from_value(Int(60));
  REQUIRE(f60.factors().size() == 3);
  CHECK(f60.factors()[0] == std::pair<std::uint64_t, int>{2, 2});
  CHECK(f60.factors()[1] == std::pair<std::uint64_t, int>{3, 1});
  CHECK(f60.factors()[2] == std::pair<std::uint64_t, int>{5, 1});
  auto f210 = FactoredInteger::from_value(Int(210));
  CHECK(f210.omega() == 4);
  CHECK(f210.squarefree());
  // 2^64 - 1 factors fully by trial division
  Int big = (Int(1) << 64) - 1;
  auto fbig = FactoredInteger::from_value(big);
  Int check = 1;
  for (const auto& [p, e] : fbig.factors())
    for (int x = 0; x < e; ++x) check *= Int(static_cast<unsigned long>(p));
  CHECK(check == big);
  CHECK_THROWS_AS(FactoredInteger::from_value(Int(1) << 64), GuardrailError);
  CHECK_THROWS_AS(FactoredInteger::from_value(Int(0)), MathError);
  CHECK_THROWS_AS(FactoredInteger::from_primes({4}), ParseError);
}

TEST_CASE("mobius") {
  CHECK(mobius(FactoredInteger::from_value(Int(1))) == 1);
  CHECK(mobius(FactoredInteger::from_value(Int(30))) == -1);
  CHECK(mobius(FactoredInteger::from_value(Int(4))) == 0);
  CHECK(mobius(FactoredInteger::from_value(Int(6))) == 1);
  CHECK(mobius(FactoredInteger::from_value(Int(7))) == -1);
}

TEST_CASE("deterministic 64-bit primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(7919));
  CHECK(is_prime_u64(18446744073709551557ull));  // largest prime below 2^64
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));      // Carmichael
  CHECK_FALSE(is_prime_u64(3215031751ull));
}

TEST_CASE("int128 bridges round-trip") {
  SplitMix64 rng(5);
  for (int t = 0; t < 200; ++t) {
    Int v = Int(static_cast<unsigned long>(rng.next()));
    v = (v << 60) + Int(static_cast<unsigned long>(rng.below(1u << 30)));
    if (rng.next() & 1) v = -v;
    CHECK(from_int128(to_int128(v)) == v);
    CHECK(fits_int128(v));
  }
  CHECK_FALSE(fits_int128(Int(1) << 127));
}
