// Points in Q^n and a hyperplane through the origin avoiding all of their
// signed sums: projections onto the normal, the per-pair slab count M(i,j)
// of weighted points strictly between the two translated hyperplanes, and
// the report tying every M(i,j) to the one-dimensional closed form.
#pragma once

#include <cstdint>
#include <vector>

#include "signcount/sicount.hpp"

namespace signcount {

using RationalVector = std::vector<ExactScalar>;

constexpr int kSlabMaxM = 24;  // 2^m vector-sum scan cap

class SlabInstance {
 public:
  // accepts iff the projections are nondegenerate and all nonzero
  static SlabInstance validate(std::vector<RationalVector> points, RationalVector normal);

  // seeded deterministic search over integer normals in [-B, B]^n with B
  // doubling every 16 failures; a user-supplied normal goes through
  // validate() instead, never around it
  static SlabInstance search(std::vector<RationalVector> points, std::uint64_t seed,
                             int max_tries = 4096);

  int m() const { return static_cast<int>(points_.size()); }
  int dim() const { return static_cast<int>(normal_.size()); }
  const std::vector<RationalVector>& points() const { return points_; }
  const RationalVector& normal() const { return normal_; }
  const WeightVector& projections() const { return projections_; }

 private:
  SlabInstance(std::vector<RationalVector> points, RationalVector normal, WeightVector projections)
      : points_(std::move(points)), normal_(std::move(normal)), projections_(std::move(projections)) {}
  std::vector<RationalVector> points_;
  RationalVector normal_;
  WeightVector projections_;
};

// signed count of the weighted points projecting strictly between
// a_i - a_j and a_i + a_j (endpoints ordered; "between" is orderless)
long long m_ij(const SlabInstance& inst, int i, int j, const EngineConfig& cfg = {});

struct SlabPairEntry {
  int i = 0, j = 0;
  long long m = 0;
  int sign_aj = 0;
};

struct SlabReport {
  long long c = 0;  // the pair-independent value; every M(i,j) = -sgn(a_j) * c
  std::vector<SlabPairEntry> pairs;
  unsigned long long abs_m = 0;  // |M(i,j)|, constant over pairs
};

// odd m only; cross-checks every pair against the closed form
SlabReport slab_report(const SlabInstance& inst, const EngineConfig& cfg = {});

}  // namespace signcount
