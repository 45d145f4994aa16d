#include "signcount/invariants.hpp"

#include <algorithm>

namespace signcount {

namespace {

void check_pair(const AlphaInstance& a, int i, int j) {
  if (i < 0 || j < 0 || i >= a.m() || j >= a.m())
    throw MathError("pair index out of range for m = " + std::to_string(a.m()));
  if (i == j) throw MathError("pair indices must differ");
}

void require_positive(const AlphaInstance& a) {
  if (!a.all_positive())
    throw MathError("this count is defined for strictly positive weights only");
}

// interval (|a_i - a_j|, a_i + a_j) for positive entries
OpenInterval plain_interval(const AlphaInstance& a, int i, int j) {
  const ExactScalar& wi = a.alpha().at(i);
  const ExactScalar& wj = a.alpha().at(j);
  return OpenInterval((wi - wj).abs_value(), wi + wj);
}

}  // namespace

AlphaInstance::AlphaInstance(WeightVector alpha) : alpha_(std::move(alpha)) {
  if (alpha_.size() < 3) throw MathError("weight family needs at least 3 entries");
}

void AlphaInstance::require_nondegenerate() const {
  DegeneracyStatus st = find_vanishing(alpha_);
  if (st.kind == Degeneracy::Degenerate)
    throw DegenerateError("degenerate weight family: a signed sum vanishes", st.witness);
}

long long n_ij(const AlphaInstance& a, int i, int j, const EngineConfig& cfg) {
  check_pair(a, i, j);
  require_positive(a);
  a.require_nondegenerate();
  return signed_count(a.alpha().erased(i, j), plain_interval(a, i, j), cfg);
}

long long n_cal_ij(const AlphaInstance& a, int i, int j, const EngineConfig& cfg) {
  check_pair(a, i, j);
  a.require_nondegenerate();
  const ExactScalar& wi = a.alpha().at(i);
  const ExactScalar& wj = a.alpha().at(j);
  if (wj.is_zero()) return 0;  // empty interval and zero prefactor
  auto iv = OpenInterval::maybe(wi - wj.abs_value(), wi + wj.abs_value());
  return wj.sgn() * signed_count(a.alpha().erased(i, j), *iv, cfg);
}

long long h_alpha(const AlphaInstance& a, const EngineConfig& cfg) {
  if (a.m() % 2 == 0) throw MathError("closed form requires odd m");
  long long sum = alternating_sign_sum(a.alpha(), cfg);
  if (sum % 4 != 0)
    throw CrossCheckError("alternating sign sum " + std::to_string(sum) +
                          " not divisible by 4");
  return -sum / 4;
}

int s_parity(const AlphaInstance& a, int i, int j, const EngineConfig& cfg) {
  check_pair(a, i, j);
  require_positive(a);
  a.require_nondegenerate();
  return static_cast<int>(unsigned_count(a.alpha().erased(i, j), plain_interval(a, i, j), cfg) & 1);
}

bool InvariantReport::all_equal() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [&](const PairEntry& e) { return e.value == pairs.front().value; });
}

std::optional<long long> InvariantReport::common_value() const {
  if (pairs.empty() || !all_equal()) return std::nullopt;
  return pairs.front().value;
}

bool InvariantReport::parity_constant() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [&](const PairEntry& e) { return e.parity == pairs.front().parity; });
}

InvariantReport all_pairs_report(const AlphaInstance& a, ReportMode mode, const EngineConfig& cfg) {
  if (mode == ReportMode::Plain) require_positive(a);
  a.require_nondegenerate();

  InvariantReport report;
  report.mode = mode;
  report.m = a.m();
  for (int i = 0; i < a.m(); ++i) {
    for (int j = 0; j < a.m(); ++j) {
      if (i == j) continue;
      PairEntry entry;
      entry.i = i;
      entry.j = j;
      if (mode == ReportMode::Plain) {
        CountPair c = interval_count(a.alpha().erased(i, j), plain_interval(a, i, j), cfg);
        entry.value = c.signed_sum;
        entry.cardinality = c.cardinality;
      } else {
        const ExactScalar& wi = a.alpha().at(i);
        const ExactScalar& wj = a.alpha().at(j);
        if (wj.is_zero()) {
          entry.value = 0;
          entry.cardinality = 0;
        } else {
          auto iv = OpenInterval::maybe(wi - wj.abs_value(), wi + wj.abs_value());
          CountPair c = interval_count(a.alpha().erased(i, j), *iv, cfg);
          entry.value = wj.sgn() * c.signed_sum;
          entry.cardinality = c.cardinality;
        }
      }
      entry.parity = static_cast<int>(entry.cardinality & 1);
      report.pairs.push_back(entry);
    }
  }

  if (mode == ReportMode::Calligraphic && a.m() % 2 == 1) {
    report.h = h_alpha(a, cfg);
    auto common = report.common_value();
    if (!common || *common != *report.h)
      throw CrossCheckError("per-pair counts disagree with the closed form h = " +
                            std::to_string(*report.h));
  }
  return report;
}

}  // namespace signcount
