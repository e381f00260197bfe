// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/pairing.hpp"

#include <bit>
#include <string>
#include <vector>

namespace distortion {

namespace {

struct Collision {};

// Running value of f(plus) / f(minus) kept as a fraction to defer inversion.
struct Ratio {
  FieldElement num;
  FieldElement den;
};

FieldElement require_nonzero(const FieldElement& v) {
  if (v.is_zero()) throw Collision{};
  return v;
}

// Multiplies r by l_{U,V}(D) / v_{U+V}(D), where l is the line through U and V
// and v the vertical through U + V. Returns U + V.
Point accumulate_line(const Curve& c, Ratio& r, const Point& u, const Point& v, const DivisorPair& d) {
  const Point sum = point_add_unchecked(c, u, v);
  auto line_at = [&](const Point& s) {
    if (sum.is_identity()) return s.x() - u.x();
    FieldElement slope = c.field().zero();
    if (u == v) {
      slope = fe_div(c.field().element(3) * u.x() * u.x() + c.a4(), u.y() + u.y());
    } else {
      slope = fe_div(v.y() - u.y(), v.x() - u.x());
    }
    return s.y() - u.y() - slope * (s.x() - u.x());
  };
  auto vertical_at = [&](const Point& s) {
    if (sum.is_identity()) return c.field().one();
    return s.x() - sum.x();
  };
  r.num *= require_nonzero(line_at(d.plus)) * require_nonzero(vertical_at(d.minus));
  r.den *= require_nonzero(vertical_at(d.plus)) * require_nonzero(line_at(d.minus));
  return sum;
}

FieldElement miller_loop(const Curve& c, std::uint64_t ell, const Point& a, const DivisorPair& d) {
  if (d.plus.is_identity() || d.minus.is_identity()) throw Collision{};
  Ratio r{c.field().one(), c.field().one()};
  if (a.is_identity()) return r.num;
  Point t = a;
  const int top = std::bit_width(ell) - 1;
  for (int bit = top - 1; bit >= 0; --bit) {
    r.num *= r.num;
    r.den *= r.den;
    t = accumulate_line(c, r, t, t, d);
    if ((ell >> bit) & 1) t = accumulate_line(c, r, t, a, d);
  }
  return fe_div(r.num, r.den);
}

// f_A(D_B) / f_B(D_A) with D_A = (A - U) - (-U), D_B = (B + U) - (U).
FieldElement raw_ratio(const Curve& c, std::uint64_t ell, const Point& a, const Point& b, const Point& u) {
  const Point minus_u = point_neg(u);
  const FieldElement fa = miller_loop(c, ell, a, {point_add_unchecked(c, b, u), u});
  const FieldElement fb = miller_loop(c, ell, b, {point_add_unchecked(c, a, minus_u), minus_u});
  return fe_div(fa, fb);
}

// Deterministic offsets: affine points with x = 1, 2, 3, ... (smaller root).
std::vector<Point> offset_points(const Curve& c, int count) {
  std::vector<Point> out;
  for (std::uint64_t xv = 1; xv < c.p() && static_cast<int>(out.size()) < count; ++xv) {
    const FieldElement x(xv, c.field());
    if (auto root = fe_sqrt(c.rhs(x)); root && !root->is_zero()) out.push_back(Point::affine(x, *root));
  }
  return out;
}

}  // namespace

FieldElement miller_eval(const Curve& c, std::uint64_t ell, const Point& a, const DivisorPair& d) {
  if (ell < 2) throw Error(ErrorKind::InvalidArgument, "ell must be at least 2");
  if (!is_on_curve(c, a) || !is_on_curve(c, d.plus) || !is_on_curve(c, d.minus)) {
    throw Error(ErrorKind::PointNotOnCurve, "miller_eval input is not on the curve");
  }
  if (!scalar_mul_unchecked(c, ell, a).is_identity()) {
    throw Error(ErrorKind::NotTorsion, to_string(a) + " is not killed by " + std::to_string(ell));
  }
  try {
    return miller_loop(c, ell, a, d);
  } catch (const Collision&) {
    throw Error(ErrorKind::DivisorCollision, "evaluation divisor meets the Miller function support");
  }
}

PairingValue weil_pairing(const Curve& c, std::uint64_t ell, const Point& a, const Point& b) {
  if (ell < 2 || !is_prime(ell)) throw Error(ErrorKind::InvalidArgument, "ell must be prime");
  if (!is_on_curve(c, a) || !is_on_curve(c, b)) {
    throw Error(ErrorKind::PointNotOnCurve, "pairing input is not on the curve");
  }
  if (!scalar_mul_unchecked(c, ell, a).is_identity() || !scalar_mul_unchecked(c, ell, b).is_identity()) {
    throw Error(ErrorKind::NotTorsion, "pairing inputs must be " + std::to_string(ell) + "-torsion");
  }
  if (a.is_identity() || b.is_identity()) return {c.field().one()};

  for (const Point& u : offset_points(c, kPairingOffsetAttempts)) {
    try {
      // Exported orientation is the swap of the raw ratio.
      return {raw_ratio(c, ell, b, a, u)};
    } catch (const Collision&) {
    }
  }
  if (ell == 2) {
    // mu_2 = {1, -1}; alternating and nondegenerate on a 2-dimensional space.
    return {a == b ? c.field().one() : -c.field().one()};
  }
  throw Error(ErrorKind::DivisorCollision,
              "no auxiliary offset avoided the Miller function support after " +
                  std::to_string(kPairingOffsetAttempts) + " attempts");
}

}  // namespace distortion
