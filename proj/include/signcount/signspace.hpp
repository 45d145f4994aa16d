// Even maps sigma: 2^X -> {-1,+1} with sigma(X\A) = sigma(A), the signed count
// N_sigma(u,v) over subsets with u in A, v not in A, sigma(A) = sigma(A+v),
// the odd-map transform, and product maps.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "signcount/common.hpp"
#include "signcount/errors.hpp"
#include "signcount/signmask.hpp"

namespace signcount {

enum class Evenness { Verified, Assumed };

using MapFn = std::function<int(SignMask)>;

// Total map from subsets of an m-element ground set to {-1,+1}. Dense tables
// are capped at m <= 24, callbacks at m <= 30 for the exhaustive operations.
// Evaluation must be side-effect-free; oracles are shared across threads.
class EvenMapOracle {
 public:
  static constexpr int kDenseMaxM = 24;
  static constexpr int kCallbackMaxM = 30;

  static EvenMapOracle dense(int m, std::vector<std::int8_t> values, Evenness ev);
  static EvenMapOracle callback(int m, MapFn fn, Evenness ev);

  int size() const { return m_; }
  Evenness evenness() const { return evenness_; }
  void mark_verified() { evenness_ = Evenness::Verified; }
  bool is_dense() const { return table_ != nullptr; }

  int value(std::uint64_t bits) const {
    if (table_) return (*table_)[bits];
    int v = fn_(SignMask(bits, m_));
    if (v != 1 && v != -1) throw MathError("map valuation returned a value outside {-1,+1}");
    return v;
  }

 private:
  EvenMapOracle(int m, Evenness ev) : m_(m), evenness_(ev) {}
  int m_ = 0;
  Evenness evenness_ = Evenness::Assumed;
  MapFn fn_;
  std::shared_ptr<const std::vector<std::int8_t>> table_;
};

struct EvenCheck {
  bool even = false;
  std::optional<SignMask> counterexample;  // a violating A when not even
};

// checks all 2^(m-1) complement pairs
EvenCheck verify_even(const EvenMapOracle& map);

// sum of sigma(A) over A with u in A, v not in A, sigma(A) = sigma(A + v);
// computed for any map; pair-independence holds only for even ones
long long n_sigma(const EvenMapOracle& map, int u, int v);

struct TotalSignSum {
  long long sum = 0;      // sum of sigma(A) over all subsets
  long long quarter = 0;  // sum / 4; equals every N_sigma(u,v) for even maps
};

// errors when the sum is not divisible by four, which certifies non-evenness
TotalSignSum total_sign_sum(const EvenMapOracle& map, int threads = 1);

// sigma(A) = (-1)^|A| tau(A) for an odd map tau (tau(X\A) = -tau(A), m odd);
// the odd identity is checked on all complement pairs before returning
EvenMapOracle tau_to_sigma(int m, const MapFn& tau);

struct ProductMap {
  EvenMapOracle oracle;
  long long predicted;  // 2^(m-2) when every f = 1, else 0
};

// sigma(A) = prod_{a in A} f(a); requires prod f = 1, otherwise not even
ProductMap product_map(const std::vector<int>& signs);

// test/harness generators, all driven by the shared seeded RNG
EvenMapOracle random_even_map(int m, SplitMix64& rng);   // uniform +-1 per complement pair
EvenMapOracle random_map(int m, SplitMix64& rng);        // arbitrary, evenness Assumed
EvenMapOracle random_odd_map_sigma(int m, SplitMix64& rng);  // random odd tau fed through tau_to_sigma

}  // namespace signcount
