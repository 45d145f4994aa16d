// Counting engines over sign vectors eps in {+-1}^r: the signed count
// sum(prod eps_k) and the cardinality of {eps : lo < <eps, w> < hi}, the
// zero-sum search, and the full alternating sign sum of sgn(<eps, w>).
// Each counting operation exists twice, as an exhaustive Gray-code walk and
// as a meet-in-the-middle evaluation with identical contracts.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "signcount/exactnum.hpp"
#include "signcount/signmask.hpp"

namespace signcount {

// ---------------------------------------------------------------------------
// OpenInterval: strict open interval with exact endpoints, lo < hi.
// ---------------------------------------------------------------------------
class OpenInterval {
 public:
  OpenInterval(ExactScalar lo, ExactScalar hi);  // throws MathError when lo >= hi
  // the distinct empty marker: nullopt when lo >= hi
  static std::optional<OpenInterval> maybe(ExactScalar lo, ExactScalar hi);

  const ExactScalar& lo() const { return lo_; }
  const ExactScalar& hi() const { return hi_; }

 private:
  ExactScalar lo_, hi_;
};

enum class Degeneracy { Unknown, NonDegenerate, Degenerate };

struct DegeneracyStatus {
  Degeneracy kind = Degeneracy::Unknown;
  SignMask witness;  // meaningful only when Degenerate
};

// ---------------------------------------------------------------------------
// WeightVector: indexed family of exact rationals plus the integer-normalized
// form used by every inner loop. Immutable after construction; the degeneracy
// status is a write-once cache shared by copies.
// ---------------------------------------------------------------------------
class WeightVector {
 public:
  WeightVector();
  explicit WeightVector(std::vector<ExactScalar> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<ExactScalar>& weights() const { return weights_; }
  const ExactScalar& at(int k) const { return weights_[k]; }

  // normalized[k] / scale == weights[k]; scale is a positive integer
  const std::vector<Int>& normalized() const { return normalized_; }
  const Int& scale() const { return scale_; }

  // deletion of entries i and j, preserving the order of the rest;
  // reduced index k corresponds to the k-th surviving original index
  WeightVector erased(int i, int j) const;

  bool all_positive() const;
  bool any_zero() const;

  DegeneracyStatus degeneracy_status() const;  // cached result, Unknown until computed

 private:
  friend DegeneracyStatus find_vanishing(const WeightVector& w);
  std::vector<ExactScalar> weights_;
  std::vector<Int> normalized_;
  Int scale_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Engines
// ---------------------------------------------------------------------------

enum class Engine { Brute, Mitm, Auto };  // Auto: Mitm when r >= 24

struct EngineConfig {
  Engine engine = Engine::Auto;
  int threads = 1;
  bool allow_zero_sign = false;  // permissive sgn(0) -> 0 mode for exploration
};

constexpr int kBruteMaxR = 30;
constexpr int kMitmMaxR = 50;

struct CountPair {
  long long signed_sum = 0;          // sum of prod eps_k over solutions
  unsigned long long cardinality = 0;  // number of solutions
};

CountPair interval_count_brute(const WeightVector& w, const OpenInterval& iv, int threads = 1);
CountPair interval_count_mitm(const WeightVector& w, const OpenInterval& iv);
CountPair interval_count(const WeightVector& w, const OpenInterval& iv, const EngineConfig& cfg = {});

long long signed_count_brute(const WeightVector& w, const OpenInterval& iv, int threads = 1);
long long signed_count_mitm(const WeightVector& w, const OpenInterval& iv);
long long signed_count(const WeightVector& w, const OpenInterval& iv, const EngineConfig& cfg = {});

unsigned long long unsigned_count_brute(const WeightVector& w, const OpenInterval& iv, int threads = 1);
unsigned long long unsigned_count_mitm(const WeightVector& w, const OpenInterval& iv);
unsigned long long unsigned_count(const WeightVector& w, const OpenInterval& iv, const EngineConfig& cfg = {});

// meet-in-the-middle zero-sum search; caches the answer in the vector
DegeneracyStatus find_vanishing(const WeightVector& w);

// sum over all eps of sgn(<eps, w>) prod eps_k; requires a nondegenerate
// vector unless cfg.allow_zero_sign maps sgn(0) to 0
long long alternating_sign_sum(const WeightVector& w, const EngineConfig& cfg = {});

}  // namespace signcount
