// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/endo.hpp"

#include <gtest/gtest.h>

#include <random>

#include "unit/fixtures.hpp"

namespace distortion {
namespace {

using testing::f701;
using testing::f701_basis2;
using testing::f701_basis5;
using testing::kind_of;

Curve ex1(std::uint64_t p) { return Curve(PrimeField(p), 1, 0); }

// phi^2 - t*phi + n applied to a, computed with the group law only.
Point minpoly_residue(const RationalEndomorphism& e, const Point& a) {
  const Curve& c = e.curve();
  const Point fa = endo_eval(e, a);
  const Point ffa = endo_eval(e, fa);
  Point acc = point_add(c, ffa, scalar_mul(c, -e.minpoly().trace, fa));
  return point_add(c, acc, scalar_mul(c, e.minpoly().norm, a));
}

TEST(Endo, CatalogExamples) {
  const RationalEndomorphism a = make_catalog_endo(kAlpha701, f701());
  EXPECT_EQ(a.label(), "alpha_701");
  EXPECT_EQ(a.minpoly(), (MinPoly{1, 2}));
  EXPECT_FALSE(a.is_scalar());

  const Curve c13 = ex1(13);
  const RationalEndomorphism i = make_catalog_endo(kSqrtMinusOne, c13);
  EXPECT_EQ(i.minpoly(), (MinPoly{0, 1}));
  // (x, y) -> (-x, 5y) since 5 is the smaller square root of -1 mod 13.
  EXPECT_EQ(endo_eval(i, make_point(c13, 2, 6)), make_point(c13, 11, 4));

  const RationalEndomorphism s = make_catalog_endo("scalar(3)", f701());
  EXPECT_TRUE(s.is_scalar());
  EXPECT_EQ(s.minpoly(), (MinPoly{6, 9}));
  EXPECT_EQ(make_catalog_endo("scalar:-2", f701()).minpoly(), (MinPoly{-4, 4}));
}

TEST(Endo, IncompatibleCurves) {
  EXPECT_EQ(kind_of([] { make_catalog_endo(kSqrtMinusOne, ex1(7)); }), ErrorKind::IncompatibleCurve);
  EXPECT_EQ(kind_of([] { make_catalog_endo(kSqrtMinusOne, f701()); }), ErrorKind::IncompatibleCurve);
  EXPECT_EQ(kind_of([] { make_catalog_endo(kAlpha701, ex1(13)); }), ErrorKind::IncompatibleCurve);
  EXPECT_EQ(kind_of([] { make_catalog_endo("frobenius", f701()); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { make_catalog_endo("scalar(x)", f701()); }), ErrorKind::InvalidArgument);
  const RationalEndomorphism a = make_catalog_endo(kAlpha701, f701());
  EXPECT_EQ(kind_of([&] { endo_matrix(a, find_torsion_basis(TorsionContext(testing::f31(), 3))); }),
            ErrorKind::IncompatibleCurve);
}

TEST(Endo, AlphaExamples) {
  const Curve c = f701();
  const RationalEndomorphism a = make_catalog_endo(kAlpha701, c);
  // The x-map has its pole at x = 319, so the kernel is {O, (319, 0)}.
  EXPECT_TRUE(endo_eval(a, make_point(c, 319, 0)).is_identity());
  EXPECT_TRUE(endo_eval(a, Point::identity()).is_identity());
  const TorsionBasis b = f701_basis5();
  EXPECT_EQ(endo_eval(a, b.p()), scalar_mul(c, 2, b.q()));
  EXPECT_EQ(endo_eval(a, b.q()), point_add(c, point_neg(b.p()), b.q()));
  EXPECT_EQ(kind_of([&] { endo_eval(a, Point::affine(c.field().element(1), c.field().element(1))); }),
            ErrorKind::PointNotOnCurve);
}

TEST(Endo, MatrixExamples) {
  const RationalEndomorphism a = make_catalog_endo(kAlpha701, f701());
  EXPECT_EQ(endo_matrix(a, f701_basis5()).action, ModMatrix2(5, 0, 4, 2, 1));
  EXPECT_EQ(endo_matrix(a, f701_basis2()).action, ModMatrix2(2, 0, 0, 0, 1));
  const RationalEndomorphism s = make_catalog_endo("scalar(3)", f701());
  EXPECT_EQ(endo_matrix(s, f701_basis5()).action, ModMatrix2::scalar(5, 3));
  EXPECT_EQ(to_string(char_poly_mod_ell(endo_matrix(a, f701_basis5()))), "X^2 + 4X + 2");
  EXPECT_EQ(char_poly_mod_ell(ModMatrix2(7, 1, 2, 3, 4)), (MonicQuadratic{7, 5, 5}));
}

TEST(Endo, HomomorphismOnTorsion) {
  const RationalEndomorphism a = make_catalog_endo(kAlpha701, f701());
  for (const TorsionBasis& b : {f701_basis2(), f701_basis5()}) {
    const Curve& c = b.curve();
    for (std::uint64_t i = 0; i < b.ell() * b.ell(); ++i) {
      for (std::uint64_t j = 0; j < b.ell() * b.ell(); ++j) {
        const Point u = b.combine(i / b.ell(), i % b.ell());
        const Point v = b.combine(j / b.ell(), j % b.ell());
        ASSERT_EQ(endo_eval(a, point_add(c, u, v)), point_add(c, endo_eval(a, u), endo_eval(a, v)));
      }
    }
  }
}

TEST(Endo, HomomorphismOnRandomPairs) {
  std::mt19937_64 rng(7);
  const std::vector<std::pair<Curve, std::string_view>> cases = {
      {f701(), kAlpha701}, {ex1(13), kSqrtMinusOne}, {ex1(29), kSqrtMinusOne}, {ex1(10009), kSqrtMinusOne}};
  for (const auto& [c, label] : cases) {
    const RationalEndomorphism e = make_catalog_endo(label, c);
    std::vector<Point> pts;
    if (c.p() < 1000) {
      pts = enumerate_points(c);
    } else {
      for (std::uint64_t x = 0; pts.size() < 200; ++x) {
        if (auto y = fe_sqrt(c.rhs(c.field().element(static_cast<std::int64_t>(x))))) {
          pts.push_back(Point::affine(c.field().element(static_cast<std::int64_t>(x)), *y));
        }
      }
    }
    for (int k = 0; k < 100; ++k) {
      const Point& u = pts[rng() % pts.size()];
      const Point& v = pts[rng() % pts.size()];
      ASSERT_EQ(endo_eval(e, point_add(c, u, v)), point_add(c, endo_eval(e, u), endo_eval(e, v)));
    }
  }
}

TEST(Endo, SatisfiesMinimalPolynomialOnEveryPoint) {
  for (const auto& [c, label] : std::vector<std::pair<Curve, std::string_view>>{
           {f701(), kAlpha701}, {ex1(5), kSqrtMinusOne}, {ex1(13), kSqrtMinusOne}, {ex1(17), kSqrtMinusOne}}) {
    const RationalEndomorphism e = make_catalog_endo(label, c);
    for (const Point& pt : enumerate_points(c)) ASSERT_TRUE(minpoly_residue(e, pt).is_identity()) << pt;
    for (int k : {-3, 1, 4}) {
      const RationalEndomorphism shifted = e.plus_scalar(k);
      for (const Point& pt : enumerate_points(c)) ASSERT_TRUE(minpoly_residue(shifted, pt).is_identity());
    }
  }
}

TEST(Endo, PlusScalarShiftsMinpoly) {
  const RationalEndomorphism a = make_catalog_endo(kAlpha701, f701());
  const RationalEndomorphism b = a.plus_scalar(3);
  // alpha + 3 satisfies X^2 - 7X + 14.
  EXPECT_EQ(b.minpoly(), (MinPoly{7, 14}));
  EXPECT_EQ(b.label(), "alpha_701+3");
  const TorsionBasis basis = f701_basis5();
  const ModMatrix2 m = endo_matrix(a, basis).action;
  const ModMatrix2 mb = endo_matrix(b, basis).action;
  EXPECT_EQ(mb, ModMatrix2(5, m.at(0, 0) + 3, m.at(0, 1), m.at(1, 0), m.at(1, 1) + 3));
}

TEST(Endo, CharPolyMatchesMinpolyAcrossBases) {
  const RationalEndomorphism a = make_catalog_endo(kAlpha701, f701());
  for (std::uint64_t ell : {2, 5}) {
    const TorsionContext ctx(f701(), ell);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const TorsionMatrix tm = endo_matrix(a, find_torsion_basis(ctx, seed));
      ASSERT_EQ(char_poly_mod_ell(tm), a.minpoly().reduce(ell));
    }
  }
  const Curve c31 = testing::f31();
  const RationalEndomorphism s = make_catalog_endo("scalar(2)", c31);
  const TorsionMatrix tm = endo_matrix(s, find_torsion_basis(TorsionContext(c31, 3)));
  EXPECT_EQ(char_poly_mod_ell(tm), s.minpoly().reduce(3));
}

TEST(Endo, BrokenMapIsRejected) {
  const Curve c = f701();
  const PrimeField& f = c.field();
  const auto bad = RationalEndomorphism::rational(c, "bad", {{{f.one(), f.one()}}, {{f.one()}}},
                                                  {{{f.one()}}, {{f.one()}}}, MinPoly{0, 0});
  EXPECT_EQ(kind_of([&] { endo_eval(bad, make_point(c, 224, 31)); }), ErrorKind::ImageOffCurve);
}

}  // namespace
}  // namespace distortion
