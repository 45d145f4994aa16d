#include "signcount/geomslab.hpp"

#include <algorithm>

#include "signcount/invariants.hpp"

namespace signcount {

namespace {

void check_points_shape(const std::vector<RationalVector>& points) {
  if (points.size() < 3) throw MathError("slab instances need at least 3 points");
  if (points.size() > kSlabMaxM)
    throw GuardrailError("slab instances refuse more than " + std::to_string(kSlabMaxM) + " points");
  size_t dim = points.front().size();
  if (dim < 2) throw MathError("points must live in dimension >= 2");
  for (const auto& p : points)
    if (p.size() != dim) throw MathError("points must share one dimension");
}

ExactScalar dot(const RationalVector& a, const RationalVector& b) {
  ExactScalar acc = 0;
  for (size_t k = 0; k < a.size(); ++k) acc = acc + a[k] * b[k];
  return acc;
}

// Some signed sum of the points equals the zero vector? Gray-code walk
// maintaining one integer running sum per coordinate (each column normalized
// to integers; a sum is zero iff its scaled form is).
std::optional<SignMask> vanishing_vector_sum(const std::vector<RationalVector>& points) {
  int m = static_cast<int>(points.size());
  size_t dim = points.front().size();
  std::vector<std::vector<Int>> columns(dim);
  for (size_t c = 0; c < dim; ++c) {
    std::vector<ExactScalar> column;
    column.reserve(m);
    for (int k = 0; k < m; ++k) column.push_back(points[k][c]);
    columns[c] = WeightVector(std::move(column)).normalized();
  }
  std::vector<Int> sums(dim, Int(0));
  for (size_t c = 0; c < dim; ++c)
    for (int k = 0; k < m; ++k) sums[c] += columns[c][k];
  std::uint64_t mask = 0;
  std::uint64_t total = 1ull << m;
  for (std::uint64_t idx = 0;;) {
    bool zero = true;
    for (size_t c = 0; c < dim && zero; ++c) zero = sums[c] == 0;
    if (zero) return SignMask(mask, m);
    if (++idx == total) break;
    int b = std::countr_zero(idx);
    std::uint64_t bit = 1ull << b;
    mask ^= bit;
    for (size_t c = 0; c < dim; ++c) {
      if (mask & bit)
        sums[c] -= 2 * columns[c][b];
      else
        sums[c] += 2 * columns[c][b];
    }
  }
  return std::nullopt;
}

}  // namespace

SlabInstance SlabInstance::validate(std::vector<RationalVector> points, RationalVector normal) {
  check_points_shape(points);
  if (normal.size() != points.front().size())
    throw MathError("normal dimension does not match the points");
  if (std::all_of(normal.begin(), normal.end(), [](const ExactScalar& x) { return x.is_zero(); }))
    throw MathError("the zero vector is not a valid normal");

  std::vector<ExactScalar> proj;
  proj.reserve(points.size());
  for (const auto& p : points) proj.push_back(dot(p, normal));
  for (size_t k = 0; k < proj.size(); ++k)
    if (proj[k].is_zero())
      throw MathError("point " + std::to_string(k + 1) + " lies on the hyperplane");

  WeightVector projections(std::move(proj));
  DegeneracyStatus st = find_vanishing(projections);
  if (st.kind == Degeneracy::Degenerate)
    throw DegenerateError("a signed sum of the points projects to zero", st.witness);
  return SlabInstance(std::move(points), std::move(normal), std::move(projections));
}

SlabInstance SlabInstance::search(std::vector<RationalVector> points, std::uint64_t seed,
                                  int max_tries) {
  check_points_shape(points);
  for (size_t k = 0; k < points.size(); ++k) {
    if (std::all_of(points[k].begin(), points[k].end(),
                    [](const ExactScalar& x) { return x.is_zero(); }))
      throw MathError("point " + std::to_string(k + 1) +
                      " is the zero vector; every hyperplane through the origin contains it");
  }
  // no valid hyperplane exists at all when a signed sum vanishes as a vector
  if (auto witness = vanishing_vector_sum(points))
    throw DegenerateError("a signed sum of the points is the zero vector", *witness);

  SplitMix64 rng(seed);
  size_t dim = points.front().size();
  long long box = 8;
  int failures = 0;
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    RationalVector candidate;
    candidate.reserve(dim);
    bool all_zero = true;
    for (size_t c = 0; c < dim; ++c) {
      long long coord = rng.range(-box, box);
      all_zero = all_zero && coord == 0;
      candidate.emplace_back(coord);
    }
    if (!all_zero) {
      try {
        return validate(points, std::move(candidate));
      } catch (const MathError&) {
        // rejected draw, keep searching
      }
    }
    if (++failures % 16 == 0 && box < (1ll << 40)) box *= 2;
  }
  throw MathError("no valid normal found in " + std::to_string(max_tries) + " draws");
}

long long m_ij(const SlabInstance& inst, int i, int j, const EngineConfig& cfg) {
  if (i < 0 || j < 0 || i >= inst.m() || j >= inst.m() || i == j)
    throw MathError("pair index out of range or equal for m = " + std::to_string(inst.m()));
  const ExactScalar& ai = inst.projections().at(i);
  const ExactScalar& aj = inst.projections().at(j);
  ExactScalar lo = ai - aj;
  ExactScalar hi = ai + aj;
  if (hi < lo) std::swap(lo, hi);
  // all projections nonzero, so the endpoints never coincide
  return signed_count(inst.projections().erased(i, j), OpenInterval(lo, hi), cfg);
}

SlabReport slab_report(const SlabInstance& inst, const EngineConfig& cfg) {
  if (inst.m() % 2 == 0) throw MathError("slab report requires an odd number of points");
  SlabReport report;
  // the 1-D reduction: the subset map over the projections is even for odd m
  // and its pair value equals -h(projections)
  report.c = -h_alpha(AlphaInstance(inst.projections()), cfg);
  bool first = true;
  for (int i = 0; i < inst.m(); ++i) {
    for (int j = 0; j < inst.m(); ++j) {
      if (i == j) continue;
      SlabPairEntry entry;
      entry.i = i;
      entry.j = j;
      entry.m = m_ij(inst, i, j, cfg);
      entry.sign_aj = inst.projections().at(j).sgn();
      if (entry.m != -entry.sign_aj * report.c)
        throw CrossCheckError("slab count M(" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") = " + std::to_string(entry.m) +
                              " breaks the sign relation");
      unsigned long long abs_m = static_cast<unsigned long long>(entry.m < 0 ? -entry.m : entry.m);
      if (first) {
        report.abs_m = abs_m;
        first = false;
      } else if (report.abs_m != abs_m) {
        throw CrossCheckError("|M(i,j)| is not constant across pairs");
      }
      report.pairs.push_back(entry);
    }
  }
  return report;
}

}  // namespace signcount
