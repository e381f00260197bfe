// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/torsion.hpp"

#include <random>
#include <string>
#include <utility>

namespace distortion {

TorsionContext::TorsionContext(Curve curve, std::uint64_t ell, FrobeniusData frob)
    : curve_(std::move(curve)), ell_(ell), frob_(frob) {
  if (ell < 2 || ell > kMaxTorsionPrime || !is_prime(ell)) {
    throw Error(ErrorKind::InvalidArgument, "ell=" + std::to_string(ell) + " must be a prime <= 997");
  }
  if (ell == curve_.p()) throw Error(ErrorKind::InvalidArgument, "ell must differ from the characteristic");
  if (frob_.q != curve_.p()) throw Error(ErrorKind::InvalidArgument, "Frobenius data is for another field");
  const std::string where = " (ell=" + std::to_string(ell) + ", #E=" + std::to_string(frob_.order) + ")";
  if (frob_.order % (ell * ell) != 0) {
    throw Error(ErrorKind::TorsionNotRational, "ell^2 does not divide #E" + where);
  }
  if (reduce_signed(frob_.trace - 2, ell) != 0 || frob_.q % ell != 1 % ell) {
    throw Error(ErrorKind::TorsionNotRational, "t = 2 and q = 1 mod ell fail" + where);
  }
}

TorsionContext::TorsionContext(const Curve& curve, std::uint64_t ell)
    : TorsionContext(curve, ell, count_points(curve)) {}

namespace {

void require_torsion(const Curve& c, std::uint64_t ell, const Point& pt) {
  if (!is_on_curve(c, pt)) throw Error(ErrorKind::PointNotOnCurve, to_string(pt) + " is not on the curve");
  if (!scalar_mul_unchecked(c, ell, pt).is_identity()) {
    throw Error(ErrorKind::NotInTorsion, to_string(pt) + " is not in E[" + std::to_string(ell) + "]");
  }
}

}  // namespace

TorsionBasis::TorsionBasis(TorsionContext ctx, Point p, Point q)
    : ctx_(std::move(ctx)), p_(std::move(p)), q_(std::move(q)), e_pq_{ctx_.curve().field().one()} {
  const Curve& c = ctx_.curve();
  require_torsion(c, ell(), p_);
  require_torsion(c, ell(), q_);
  if (p_.is_identity() || q_.is_identity()) throw Error(ErrorKind::NotInTorsion, "basis point is 0_E");
  e_pq_ = weil_pairing(c, ell(), p_, q_);
  if (e_pq_.is_one()) throw Error(ErrorKind::InconsistentInput, "e(P, Q) = 1: the points are dependent");
}

Point TorsionBasis::combine(std::int64_t a, std::int64_t b) const {
  const Curve& c = curve();
  return point_add_unchecked(c, scalar_mul(c, a, p_), scalar_mul(c, b, q_));
}

TorsionBasis find_torsion_basis(const TorsionContext& ctx, std::uint64_t seed) {
  const Curve& c = ctx.curve();
  const std::uint64_t ell = ctx.ell();
  std::uint64_t cofactor = ctx.frobenius().order;
  while (cofactor % ell == 0) cofactor /= ell;

  std::mt19937_64 rng(seed);
  // A random point pushed down to exact order ell, or 0_E.
  auto sample = [&]() {
    for (;;) {
      const FieldElement x(rng() % c.p(), c.field());
      const auto root = fe_sqrt(c.rhs(x));
      if (!root) continue;
      Point pt = scalar_mul_unchecked(c, cofactor, Point::affine(x, (rng() & 1) ? -*root : *root));
      if (pt.is_identity()) return pt;
      for (;;) {
        Point next = scalar_mul_unchecked(c, ell, pt);
        if (next.is_identity()) return pt;
        pt = std::move(next);
      }
    }
  };

  const std::uint64_t max_trials = 64 * ell;
  std::optional<Point> first;
  for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
    Point pt = sample();
    if (pt.is_identity()) continue;
    if (!first) {
      first = std::move(pt);
      continue;
    }
    if (!weil_pairing(c, ell, *first, pt).is_one()) return TorsionBasis(ctx, *first, pt);
  }
  throw Error(ErrorKind::SamplingExhausted,
              "no basis of E[" + std::to_string(ell) + "] after " + std::to_string(max_trials) + " samples");
}

Coords dlog2d(const TorsionBasis& basis, const Point& r) {
  const Curve& c = basis.curve();
  const std::uint64_t ell = basis.ell();
  require_torsion(c, ell, r);
  Point row = Point::identity();  // a*P
  for (std::uint64_t a = 0; a < ell; ++a) {
    Point cur = row;  // a*P + b*Q
    for (std::uint64_t b = 0; b < ell; ++b) {
      if (cur == r) return {a, b};
      cur = point_add_unchecked(c, cur, basis.q());
    }
    row = point_add_unchecked(c, row, basis.p());
  }
  throw Error(ErrorKind::NotInTorsion, to_string(r) + " is not in the span of the basis");
}

std::vector<Subgroup> enumerate_subgroups(const TorsionBasis& basis) {
  std::vector<Subgroup> out;
  for (const Coords& v : canonical_lines(basis.ell())) {
    out.push_back({v, basis.combine(static_cast<std::int64_t>(v.a), static_cast<std::int64_t>(v.b))});
  }
  return out;
}

}  // namespace distortion
