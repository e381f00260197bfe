// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/curve.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "unit/fixtures.hpp"

namespace distortion {
namespace {

using testing::brute_force_points;
using testing::f701;

using testing::kind_of;

TEST(Curve, RejectsSingular) {
  EXPECT_EQ(kind_of([] { Curve(PrimeField(13), 0, 0); }), ErrorKind::SingularCurve);
  // 4(-3)^3 + 27(2)^2 = 0 over the integers.
  EXPECT_EQ(kind_of([] { Curve(PrimeField(101), -3, 2); }), ErrorKind::SingularCurve);
}

TEST(Curve, PointAddExamples) {
  const Curve c = f701();
  const Point p = make_point(c, 319, 0);
  const Point q = make_point(c, 389, 0);
  EXPECT_EQ(point_add(c, p, Point::identity()), p);
  EXPECT_TRUE(point_add(c, p, p).is_identity());
  EXPECT_EQ(point_add(c, p, q), make_point(c, 694, 0));
  EXPECT_TRUE(c.rhs(c.field().element(694)).is_zero());
}

TEST(Curve, RejectsOffCurvePoints) {
  const Curve c = f701();
  EXPECT_EQ(kind_of([&] { make_point(c, 1, 1); }), ErrorKind::PointNotOnCurve);
  const Point bogus = Point::affine(c.field().element(1), c.field().element(1));
  EXPECT_EQ(kind_of([&] { point_add(c, bogus, Point::identity()); }), ErrorKind::PointNotOnCurve);
}

TEST(Curve, ScalarMulExamples) {
  const Curve c = f701();
  const Point p = make_point(c, 224, 31);
  const Point q = make_point(c, 573, 450);
  EXPECT_TRUE(scalar_mul(c, 5, p).is_identity());
  EXPECT_TRUE(scalar_mul(c, 0, p).is_identity());
  EXPECT_EQ(scalar_mul(c, 2, q), point_add(c, q, q));
  EXPECT_EQ(scalar_mul(c, -2, q), point_neg(point_add(c, q, q)));
  EXPECT_EQ(scalar_mul(c, 6, p), p);
}

// Commutativity, associativity, identity and inverse over every point.
TEST(Curve, GroupLawsExhaustiveSmallPrimes) {
  const std::vector<std::tuple<std::uint64_t, std::int64_t, std::int64_t>> curves = {
      {13, 11, 4}, {31, 0, 1}, {37, 2, 9}, {53, 5, 7}, {97, -1, 3}};
  for (auto [p, a4, a6] : curves) {
    const Curve c(PrimeField(p), a4, a6);
    const auto pts = brute_force_points(c);
    for (const Point& a : pts) {
      ASSERT_EQ(point_add(c, a, Point::identity()), a);
      ASSERT_TRUE(point_add(c, a, point_neg(a)).is_identity());
      for (const Point& b : pts) {
        const Point ab = point_add(c, a, b);
        ASSERT_TRUE(is_on_curve(c, ab));
        ASSERT_EQ(ab, point_add(c, b, a));
      }
    }
    for (const Point& a : pts)
      for (const Point& b : pts)
        for (const Point& d : pts) {
          ASSERT_EQ(point_add(c, point_add(c, a, b), d), point_add(c, a, point_add(c, b, d)));
        }
  }
}

TEST(Curve, CountExamples) {
  const FrobeniusData f = count_points(f701());
  EXPECT_EQ(f.order, 700u);
  EXPECT_EQ(f.trace, 2);
  EXPECT_EQ(f.order % 25, 0u);

  const FrobeniusData e1 = count_points(Curve(PrimeField(5), 1, 0));
  EXPECT_EQ(e1.order % 4, 0u);
}

TEST(Curve, CountMatchesBruteForceAndLagrange) {
  for (std::uint64_t p : {13, 31, 101, 211}) {
    for (std::int64_t a4 = 0; a4 < 6; ++a4) {
      for (std::int64_t a6 = 1; a6 < 6; ++a6) {
        std::optional<Curve> c;
        try {
          c.emplace(PrimeField(p), a4, a6);
        } catch (const Error&) {
          continue;
        }
        const auto pts = brute_force_points(*c);
        ASSERT_EQ(count_points_serial(*c), pts.size());
        ASSERT_EQ(count_points_parallel(*c), pts.size());
        const double n = static_cast<double>(pts.size());
        const double sq = std::sqrt(static_cast<double>(p));
        ASSERT_LE((sq - 1) * (sq - 1), n);
        ASSERT_LE(n, (sq + 1) * (sq + 1));
        for (const Point& a : pts) ASSERT_TRUE(scalar_mul(*c, static_cast<std::int64_t>(pts.size()), a).is_identity());
        ASSERT_EQ(enumerate_points(*c).size(), pts.size());
      }
    }
  }
}

TEST(Curve, BsgsAgreesWithExhaustive) {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {1009, 7919, 65537, 1000003}) {
    const PrimeField f(p);
    for (int i = 0; i < 4; ++i) {
      const Curve c(f, static_cast<std::int64_t>(rng() % p), static_cast<std::int64_t>(rng() % p));
      EXPECT_EQ(count_points_bsgs(c), count_points_serial(c)) << "p=" << p;
    }
  }
  EXPECT_EQ(count_points(f701(), CountMode::BabyStepGiantStep).order, 700u);
}

TEST(Curve, BsgsLargeModulusWithinHasse) {
  const std::uint64_t p = 1000000000039ULL;  // prime, far beyond the exhaustive range
  const Curve c(PrimeField(p), 3, 7);
  const FrobeniusData f = count_points(c);
  const long double t = static_cast<long double>(f.trace);
  EXPECT_LE(t * t, 4.0L * static_cast<long double>(p));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5; ++i) {
    const FieldElement x(rng() % p, c.field());
    if (auto y = fe_sqrt(c.rhs(x))) {
      EXPECT_TRUE(scalar_mul_unchecked(c, f.order, Point::affine(x, *y)).is_identity());
    }
  }
}

TEST(Curve, ExhaustiveModeHasALimit) {
  const Curve c(PrimeField(1000000000039ULL), 3, 7);
  EXPECT_EQ(kind_of([&] { count_points(c, CountMode::Exhaustive); }), ErrorKind::CurveTooLarge);
}

TEST(Curve, SupersingularRejected) {
  // y^2 = x^3 + x over F_7 has t = 0.
  EXPECT_EQ(kind_of([] { count_points(Curve(PrimeField(7), 1, 0)); }), ErrorKind::SupersingularCurve);
}

TEST(Curve, RationalReductionExamples) {
  const Curve c = reduce_rational_curve(-3375, 121, 6750, 121, 13);
  EXPECT_EQ(c.a4().value(), 11u);
  EXPECT_EQ(c.a6().value(), 4u);
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < 13; ++x) {
    if (c.rhs(c.field().element(static_cast<std::int64_t>(x))).is_zero()) roots.push_back(x);
  }
  EXPECT_EQ(roots, (std::vector<std::uint64_t>{6, 9, 11}));

  EXPECT_EQ(kind_of([] { reduce_rational_curve(-3375, 121, 6750, 121, 11); }), ErrorKind::BadReduction);
  EXPECT_EQ(kind_of([] { reduce_rational_curve(0, 1, 0, 1, 13); }), ErrorKind::BadReduction);
  EXPECT_EQ(kind_of([] { reduce_rational_curve(0, 1, 0, 1, 701); }), ErrorKind::BadReduction);
}

TEST(Curve, PointFormatting) {
  const Curve c = f701();
  EXPECT_EQ(to_string(make_point(c, 224, 31)), "224,31");
  EXPECT_EQ(to_string(Point::identity()), "O");
}

}  // namespace
}  // namespace distortion
