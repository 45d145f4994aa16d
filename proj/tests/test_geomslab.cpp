#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "signcount/geomslab.hpp"

using namespace signcount;

namespace {

RationalVector point(std::initializer_list<long> coords) {
  RationalVector p;
  for (long c : coords) p.emplace_back(c);
  return p;
}

}  // namespace

TEST_CASE("validated instance on collinear points") {
  auto inst = SlabInstance::validate({point({3, 0}), point({4, 0}), point({5, 0})}, point({1, 0}));
  CHECK(inst.projections().weights() ==
        std::vector<ExactScalar>{ExactScalar(3), ExactScalar(4), ExactScalar(5)});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(m_ij(inst, i, j) == 1);
  SlabReport report = slab_report(inst);
  CHECK(report.c == -1);
  CHECK(report.abs_m == 1);
  CHECK(report.pairs.size() == 6);
}

TEST_CASE("rejections") {
  // projections (1, 1, 2) admit 1 + 1 - 2 = 0
  CHECK_THROWS_AS(
      SlabInstance::validate({point({1, 0}), point({0, 1}), point({1, 1})}, point({1, 1})),
      DegenerateError);
  CHECK_THROWS_AS(
      SlabInstance::validate({point({3, 0}), point({4, 0}), point({5, 0})}, point({0, 0})),
      MathError);
  // a point on the hyperplane is rejected even when sums are fine
  CHECK_THROWS_AS(
      SlabInstance::validate({point({0, 1}), point({1, 0}), point({3, 0})}, point({1, 0})),
      MathError);
  CHECK_THROWS_AS(SlabInstance::validate({point({1, 0}), point({0, 1})}, point({1, 1})), MathError);
  CHECK_THROWS_AS(
      SlabInstance::validate({point({1}), point({2}), point({4})}, point({1})), MathError);
}

TEST_CASE("normal search") {
  // all 8 signed sums of these points are nonzero vectors
  std::vector<std::array<long, 2>> pts{{1, 0}, {0, 1}, {2, 1}};
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    long x = 0, y = 0;
    for (int k = 0; k < 3; ++k) {
      long sign = ((bits >> k) & 1) ? -1 : 1;
      x += sign * pts[k][0];
      y += sign * pts[k][1];
    }
    CHECK((x != 0 || y != 0));
  }
  auto inst = SlabInstance::search({point({1, 0}), point({0, 1}), point({2, 1})}, 42);
  CHECK(inst.m() == 3);
  for (const auto& a : inst.projections().weights()) CHECK_FALSE(a.is_zero());

  // identical seed, identical normal
  auto again = SlabInstance::search({point({1, 0}), point({0, 1}), point({2, 1})}, 42);
  CHECK(inst.normal() == again.normal());

  // (1,0) + (0,1) - (1,1) = 0: no hyperplane can separate, fail fast
  CHECK_THROWS_AS(SlabInstance::search({point({1, 0}), point({0, 1}), point({1, 1})}, 7),
                  DegenerateError);

  // the zero point lies on every hyperplane through the origin
  CHECK_THROWS_AS(SlabInstance::search({point({0, 0}), point({0, 1}), point({2, 1})}, 7),
                  MathError);
}

TEST_CASE("mixed-sign projections split the slab signs") {
  auto inst =
      SlabInstance::validate({point({7, 0}), point({11, 0}), point({-13, 0})}, point({1, 0}));
  // M(1,2) and M(1,3) differ in sign
  CHECK(m_ij(inst, 0, 1) == -1);
  CHECK(m_ij(inst, 0, 2) == 1);
  SlabReport report = slab_report(inst);
  CHECK(report.c == 1);
  CHECK(report.abs_m == 1);
  for (const SlabPairEntry& e : report.pairs) CHECK(e.m == -e.sign_aj * report.c);

  CHECK_THROWS_AS(m_ij(inst, 1, 1), MathError);
}

TEST_CASE("slab count against a direct oracle") {
  auto inst = SlabInstance::validate({point({1, 3}), point({2, -1}), point({4, 1})}, point({2, 1}));
  // projections: 5, 3, 9
  CHECK(inst.projections().weights() ==
        std::vector<ExactScalar>{ExactScalar(5), ExactScalar(3), ExactScalar(9)});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<mpq_class> rest;
      std::vector<mpq_class> proj{5, 3, 9};
      for (int k = 0; k < 3; ++k)
        if (k != i && k != j) rest.push_back(proj[k]);
      mpq_class lo = proj[i] - proj[j];
      mpq_class hi = proj[i] + proj[j];
      if (hi < lo) std::swap(lo, hi);
      CHECK(m_ij(inst, i, j) == oracle::interval_count(rest, lo, hi).signed_sum);
    }
}

TEST_CASE("even point counts tabulate without claims") {
  auto inst = SlabInstance::validate(
      {point({1, 0}), point({2, 1}), point({4, 1}), point({8, 3})}, point({1, 0}));
  CHECK(inst.m() == 4);
  CHECK_THROWS_AS(slab_report(inst), MathError);  // odd m required
  // per-pair counts still compute
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) (void)m_ij(inst, i, j);
}

TEST_CASE("dominated projections give an empty slab everywhere") {
  auto inst = SlabInstance::validate({point({1, 0}), point({2, 0}), point({4, 0})}, point({1, 0}));
  SlabReport report = slab_report(inst);
  CHECK(report.c == 0);
  CHECK(report.abs_m == 0);
  for (const SlabPairEntry& e : report.pairs) CHECK(e.m == 0);
}

TEST_CASE("rational coordinates") {
  auto inst = SlabInstance::validate(
      {{ExactScalar::parse("3/2"), ExactScalar(0)}, {ExactScalar(2), ExactScalar(0)},
       {ExactScalar::parse("5/2"), ExactScalar(0)}},
      point({2, 0}));
  // projections (3, 4, 5) again after scaling
  SlabReport report = slab_report(inst);
  CHECK(report.c == -1);
  CHECK(report.abs_m == 1);
}
