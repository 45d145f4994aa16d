// Per-pair interval counts over a weight family alpha: the positive-entry
// count n_ij over (|a_i - a_j|, a_i + a_j), the general-sign count n_cal_ij
// over (a_i - |a_j|, a_i + |a_j|) with its sgn(a_j) prefactor, the closed
// form h_alpha, the cardinality parity, and the all-pairs report.
#pragma once

#include <optional>
#include <vector>

#include "signcount/sicount.hpp"

namespace signcount {

class AlphaInstance {
 public:
  explicit AlphaInstance(WeightVector alpha);  // m >= 3

  const WeightVector& alpha() const { return alpha_; }
  int m() const { return alpha_.size(); }
  bool all_positive() const { return alpha_.all_positive(); }

  // establishes the standing hypothesis; throws DegenerateError with witness
  void require_nondegenerate() const;

 private:
  WeightVector alpha_;
};

// indices are 0-based here; the CLI converts from the 1-based convention
long long n_ij(const AlphaInstance& a, int i, int j, const EngineConfig& cfg = {});
long long n_cal_ij(const AlphaInstance& a, int i, int j, const EngineConfig& cfg = {});

// -1/4 of the alternating sign sum; m must be odd
long long h_alpha(const AlphaInstance& a, const EngineConfig& cfg = {});

// cardinality of the positive-entry solution set mod 2
int s_parity(const AlphaInstance& a, int i, int j, const EngineConfig& cfg = {});

enum class ReportMode { Plain, Calligraphic };

struct PairEntry {
  int i = 0, j = 0;  // 0-based ordered pair
  long long value = 0;
  unsigned long long cardinality = 0;
  int parity = 0;
};

struct InvariantReport {
  ReportMode mode = ReportMode::Plain;
  int m = 0;
  std::vector<PairEntry> pairs;     // all ordered pairs, lexicographic
  std::optional<long long> h;       // calligraphic mode with odd m only

  // summaries are recomputed from the table every time, never cached
  bool all_equal() const;
  std::optional<long long> common_value() const;  // set when all_equal()
  bool parity_constant() const;
};

InvariantReport all_pairs_report(const AlphaInstance& a, ReportMode mode,
                                 const EngineConfig& cfg = {});

}  // namespace signcount
