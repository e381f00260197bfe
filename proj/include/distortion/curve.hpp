// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "distortion/field.hpp"

namespace distortion {

/// y^2 = x^3 + a4*x + a6 over F_p. Nonsingular by construction.
class Curve {
 public:
  /// Throws Error(SingularCurve) when 4*a4^3 + 27*a6^2 vanishes.
  Curve(const PrimeField& field, std::int64_t a4, std::int64_t a6);
  Curve(const PrimeField& field, const FieldElement& a4, const FieldElement& a6);

  const PrimeField& field() const noexcept { return field_; }
  std::uint64_t p() const noexcept { return field_.modulus(); }
  const FieldElement& a4() const noexcept { return a4_; }
  const FieldElement& a6() const noexcept { return a6_; }

  /// Right-hand side x^3 + a4*x + a6.
  FieldElement rhs(const FieldElement& x) const noexcept;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  PrimeField field_;
  FieldElement a4_;
  FieldElement a6_;
};

/// Either the identity 0_E or an affine point.
class Point {
 public:
  static Point identity() noexcept { return Point(); }
  static Point affine(const FieldElement& x, const FieldElement& y) noexcept { return Point(x, y); }

  bool is_identity() const noexcept { return !coords_.has_value(); }
  const FieldElement& x() const { return coords_->first; }
  const FieldElement& y() const { return coords_->second; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  Point() = default;
  Point(const FieldElement& x, const FieldElement& y) : coords_(std::in_place, x, y) {}

  std::optional<std::pair<FieldElement, FieldElement>> coords_;
};

/// Prints "x,y" or "O".
std::ostream& operator<<(std::ostream& os, const Point& a);
std::string to_string(const Point& a);

/// Builds an affine point from signed coordinates, checking it lies on the curve.
Point make_point(const Curve& c, std::int64_t x, std::int64_t y);

bool is_on_curve(const Curve& c, const Point& a) noexcept;

Point point_neg(const Point& a) noexcept;

/// Chord-tangent addition. Throws Error(PointNotOnCurve) on invalid input.
Point point_add(const Curve& c, const Point& a, const Point& b);

/// k*A by double-and-add; negative k negates the point.
Point scalar_mul(const Curve& c, std::int64_t k, const Point& a);

/// Addition without the on-curve checks, for inner loops over known points.
Point point_add_unchecked(const Curve& c, const Point& a, const Point& b) noexcept;
Point scalar_mul_unchecked(const Curve& c, std::uint64_t k, const Point& a) noexcept;

/// All rational points, identity first, then affine points ordered by (x, y).
std::vector<Point> enumerate_points(const Curve& c);

struct FrobeniusData {
  std::uint64_t q = 0;
  std::uint64_t order = 0;  // #E(F_q)
  std::int64_t trace = 0;   // q + 1 - #E(F_q)
};

enum class CountMode { Auto, Exhaustive, BabyStepGiantStep };

/// Exhaustive counting is limited to p below this bound.
inline constexpr std::uint64_t kExhaustiveCountLimit = std::uint64_t{1} << 24;

/// #E(F_p), its trace, and the Hasse and ordinarity checks.
/// Exhaustive mode sums the quadratic character over x in parallel;
/// Auto picks it below kExhaustiveCountLimit and BSGS above.
/// Throws Error(SupersingularCurve) when p divides t and Error(CurveTooLarge)
/// when the requested mode cannot handle p.
FrobeniusData count_points(const Curve& c, CountMode mode = CountMode::Auto);

/// Single-threaded exhaustive character sum; reference for the parallel kernel.
std::uint64_t count_points_serial(const Curve& c);

/// OpenMP exhaustive character sum.
std::uint64_t count_points_parallel(const Curve& c);

/// Hasse-interval BSGS on pseudo-random points until the order is pinned.
std::uint64_t count_points_bsgs(const Curve& c, std::uint64_t seed = 1);

/// Reduction of y^2 = x^3 + (n4/d4) x + (n6/d6) modulo p.
/// Throws Error(BadReduction) if p divides a denominator or the reduction is singular.
Curve reduce_rational_curve(std::int64_t num_a4, std::int64_t den_a4, std::int64_t num_a6,
                            std::int64_t den_a6, std::uint64_t p);

}  // namespace distortion
