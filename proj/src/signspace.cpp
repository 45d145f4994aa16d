#include "signcount/signspace.hpp"

#include <atomic>
#include <thread>

namespace signcount {

namespace {

void check_index(const EvenMapOracle& map, int k, const char* what) {
  if (k < 0 || k >= map.size())
    throw MathError(std::string(what) + " index out of range for ground-set size " +
                    std::to_string(map.size()));
}

void check_exhaustive_size(const EvenMapOracle& map) {
  if (map.size() > EvenMapOracle::kCallbackMaxM)
    throw GuardrailError("ground-set size " + std::to_string(map.size()) +
                         " exceeds the exhaustive-enumeration cap " +
                         std::to_string(EvenMapOracle::kCallbackMaxM));
}

}  // namespace

EvenMapOracle EvenMapOracle::dense(int m, std::vector<std::int8_t> values, Evenness ev) {
  if (m < 1 || m > kDenseMaxM)
    throw GuardrailError("dense map tables support 1 <= m <= " + std::to_string(kDenseMaxM));
  if (values.size() != (1ull << m))
    throw ParseError("dense map table must have exactly 2^m entries");
  for (std::int8_t v : values)
    if (v != 1 && v != -1) throw ParseError("dense map table entries must be +1 or -1");
  EvenMapOracle map(m, ev);
  map.table_ = std::make_shared<const std::vector<std::int8_t>>(std::move(values));
  return map;
}

EvenMapOracle EvenMapOracle::callback(int m, MapFn fn, Evenness ev) {
  if (m < 1 || m > kCallbackMaxM)
    throw GuardrailError("callback maps support 1 <= m <= " + std::to_string(kCallbackMaxM));
  EvenMapOracle map(m, ev);
  map.fn_ = std::move(fn);
  return map;
}

EvenCheck verify_even(const EvenMapOracle& map) {
  check_exhaustive_size(map);
  int m = map.size();
  std::uint64_t all = (1ull << m) - 1;
  for (std::uint64_t a = 0; a < (1ull << (m - 1)); ++a) {
    if (map.value(a) != map.value(a ^ all)) return {false, SignMask(a, m)};
  }
  return {true, std::nullopt};
}

long long n_sigma(const EvenMapOracle& map, int u, int v) {
  check_exhaustive_size(map);
  check_index(map, u, "u");
  check_index(map, v, "v");
  if (u == v) throw MathError("n_sigma requires u != v");
  int m = map.size();

  // positions other than u, v, in ascending order
  std::vector<int> rest;
  rest.reserve(m - 2);
  for (int k = 0; k < m; ++k)
    if (k != u && k != v) rest.push_back(k);

  std::uint64_t ubit = 1ull << u;
  std::uint64_t vbit = 1ull << v;
  long long acc = 0;
  for (std::uint64_t t = 0; t < (1ull << (m - 2)); ++t) {
    std::uint64_t bits = ubit;
    for (size_t s = 0; s < rest.size(); ++s)
      if ((t >> s) & 1) bits |= 1ull << rest[s];
    int va = map.value(bits);
    if (va == map.value(bits | vbit)) acc += va;
  }
  return acc;
}

TotalSignSum total_sign_sum(const EvenMapOracle& map, int threads) {
  check_exhaustive_size(map);
  std::uint64_t count = 1ull << map.size();
  long long sum = 0;
  if (threads <= 1 || map.size() < 12) {
    for (std::uint64_t a = 0; a < count; ++a) sum += map.value(a);
  } else {
    // plain-order partition; the reduction is exact integer addition
    int nblocks = threads * 8;
    std::vector<long long> partial(nblocks, 0);
    std::atomic<int> next{0};
    auto work = [&] {
      for (;;) {
        int b = next.fetch_add(1);
        if (b >= nblocks) return;
        std::uint64_t begin = count / nblocks * b;
        std::uint64_t end = (b + 1 == nblocks) ? count : count / nblocks * (b + 1);
        long long s = 0;
        for (std::uint64_t a = begin; a < end; ++a) s += map.value(a);
        partial[b] = s;
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    for (long long s : partial) sum += s;
  }
  if (sum % 4 != 0)
    throw MathError("subset sum " + std::to_string(sum) +
                    " is not divisible by 4; the map cannot be even");
  return {sum, sum / 4};
}

EvenMapOracle tau_to_sigma(int m, const MapFn& tau) {
  if (m % 2 == 0) throw MathError("tau_to_sigma requires odd ground-set cardinality");
  if (m > EvenMapOracle::kCallbackMaxM)
    throw GuardrailError("tau_to_sigma cap is m <= " + std::to_string(EvenMapOracle::kCallbackMaxM));
  auto eval_tau = [&tau, m](std::uint64_t bits) {
    int v = tau(SignMask(bits, m));
    if (v != 1 && v != -1) throw MathError("tau valuation returned a value outside {-1,+1}");
    return v;
  };
  std::uint64_t all = (1ull << m) - 1;
  for (std::uint64_t a = 0; a < (1ull << (m - 1)); ++a) {
    if (eval_tau(a) != -eval_tau(a ^ all))
      throw DegenerateError("tau is not an odd map at", SignMask(a, m));
  }
  MapFn tau_copy = tau;
  // sigma(A) = (-1)^|A| tau(A); even for odd m, so Verified without a second pass
  return EvenMapOracle::callback(
      m, [tau_copy](SignMask mask) { return parity_sign(mask) * tau_copy(mask); },
      Evenness::Verified);
}

ProductMap product_map(const std::vector<int>& signs) {
  int m = static_cast<int>(signs.size());
  if (m < 1) throw MathError("product map needs at least one element");
  int prod = 1;
  bool all_one = true;
  for (int f : signs) {
    if (f != 1 && f != -1) throw MathError("product map entries must be +1 or -1");
    prod *= f;
    all_one = all_one && f == 1;
  }
  if (prod == -1)
    throw MathError("product of the element signs is -1, so the subset map is not even");
  std::uint64_t neg_bits = 0;
  for (int k = 0; k < m; ++k)
    if (signs[k] == -1) neg_bits |= 1ull << k;
  auto oracle = EvenMapOracle::callback(
      m,
      [neg_bits](SignMask mask) { return popcount_parity_sign(mask.bits & neg_bits); },
      Evenness::Verified);
  long long predicted = (all_one && m >= 2) ? 1ll << (m - 2) : 0;
  return {std::move(oracle), predicted};
}

EvenMapOracle random_even_map(int m, SplitMix64& rng) {
  if (m < 1 || m > EvenMapOracle::kDenseMaxM)
    throw GuardrailError("random even maps are dense; require 1 <= m <= 24");
  std::uint64_t all = (1ull << m) - 1;
  std::vector<std::int8_t> table(1ull << m, 0);
  std::uint64_t assigned = 0;
  for (std::uint64_t a = 0; a < (1ull << (m - 1)); ++a) {
    std::uint64_t comp = a ^ all;
    // complement pairing is a perfect matching: A != X\A for every A
    if (comp == a) throw CrossCheckError("complement pairing hit a fixed point");
    auto v = static_cast<std::int8_t>(rng.pm_one());
    table[a] = v;
    table[comp] = v;
    assigned += 2;
  }
  if (assigned != (1ull << m)) throw CrossCheckError("complement pairing did not cover 2^X");
  return EvenMapOracle::dense(m, std::move(table), Evenness::Verified);
}

EvenMapOracle random_map(int m, SplitMix64& rng) {
  if (m < 1 || m > EvenMapOracle::kDenseMaxM)
    throw GuardrailError("random maps are dense; require 1 <= m <= 24");
  std::vector<std::int8_t> table(1ull << m);
  for (auto& v : table) v = static_cast<std::int8_t>(rng.pm_one());
  return EvenMapOracle::dense(m, std::move(table), Evenness::Assumed);
}

EvenMapOracle random_odd_map_sigma(int m, SplitMix64& rng) {
  if (m % 2 == 0) throw MathError("odd maps need odd cardinality");
  std::uint64_t all = (1ull << m) - 1;
  auto table = std::make_shared<std::vector<std::int8_t>>(1ull << m, 0);
  for (std::uint64_t a = 0; a < (1ull << (m - 1)); ++a) {
    auto v = static_cast<std::int8_t>(rng.pm_one());
    (*table)[a] = v;
    (*table)[a ^ all] = static_cast<std::int8_t>(-v);
  }
  return tau_to_sigma(m, [table](SignMask mask) { return (*table)[mask.bits]; });
}

}  // namespace signcount
