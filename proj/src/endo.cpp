// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/endo.hpp"

#include <charconv>
#include <utility>

namespace distortion {

FieldElement Polynomial::eval(const FieldElement& x) const {
  FieldElement acc = PrimeField(x.modulus()).zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<FieldElement> RationalFunction::eval(const FieldElement& x) const {
  const FieldElement d = den.eval(x);
  if (d.is_zero()) return std::nullopt;
  return fe_div(num.eval(x), d);
}

MonicQuadratic MinPoly::reduce(std::uint64_t ell) const {
  return {ell, reduce_signed(trace, ell), reduce_signed(norm, ell)};
}

RationalEndomorphism RationalEndomorphism::rational(Curve curve, std::string label, RationalFunction x_map,
                                                    RationalFunction y_factor, MinPoly minpoly) {
  RationalEndomorphism e(std::move(curve), std::move(label), minpoly);
  e.x_map_ = std::move(x_map);
  e.y_factor_ = std::move(y_factor);
  return e;
}

RationalEndomorphism RationalEndomorphism::multiplication(Curve curve, std::int64_t k) {
  RationalEndomorphism e(std::move(curve), "scalar(" + std::to_string(k) + ")", MinPoly{2 * k, k * k});
  e.base_scalar_ = k;
  return e;
}

RationalEndomorphism RationalEndomorphism::plus_scalar(std::int64_t k) const {
  RationalEndomorphism e = *this;
  e.shift_ += k;
  e.minpoly_ = {minpoly_.trace + 2 * k, minpoly_.norm + minpoly_.trace * k + k * k};
  e.label_ = label_ + (k >= 0 ? "+" : "") + std::to_string(k);
  return e;
}

Point endo_eval(const RationalEndomorphism& e, const Point& a) {
  const Curve& c = e.curve_;
  if (!is_on_curve(c, a)) throw Error(ErrorKind::PointNotOnCurve, to_string(a) + " is not on the curve");
  if (a.is_identity()) return a;

  Point image = Point::identity();
  if (e.x_map_) {
    const auto x = e.x_map_->eval(a.x());
    const auto f = e.y_factor_->eval(a.x());
    if (x && f) image = Point::affine(*x, a.y() * *f);
  } else {
    image = scalar_mul(c, e.base_scalar_, a);
  }
  if (e.shift_ != 0) image = point_add_unchecked(c, image, scalar_mul(c, e.shift_, a));
  if (!is_on_curve(c, image)) {
    throw Error(ErrorKind::ImageOffCurve, e.label_ + " sends " + to_string(a) + " off the curve");
  }
  return image;
}

namespace {

RationalEndomorphism sqrt_minus_one(const Curve& c) {
  if (!c.a6().is_zero() || c.p() % 4 != 1) {
    throw Error(ErrorKind::IncompatibleCurve,
                "sqrt_minus_one needs y^2 = x^3 + a4*x over F_p with p = 1 mod 4");
  }
  const PrimeField& f = c.field();
  const FieldElement i = *fe_sqrt(f.element(-1));
  return RationalEndomorphism::rational(c, std::string(kSqrtMinusOne),
                                        {{{f.zero(), f.element(-1)}}, {{f.one()}}},
                                        {{{i}}, {{f.one()}}}, MinPoly{0, 1});
}

// [alpha](x, y) = (alpha^-2 (x - c / (x + alpha^2 - 2)),
//                  alpha^-3 y (1 + c / (x + alpha^2 - 2)^2)),  c = 7 (1 - alpha)^4
RationalEndomorphism alpha_701(const Curve& c) {
  if (c.p() != 701 || c.a4() != c.field().element(-35) || c.a6() != c.field().element(98)) {
    throw Error(ErrorKind::IncompatibleCurve, "alpha_701 is defined only on y^2 = x^3 - 35x + 98 over F_701");
  }
  const PrimeField& f = c.field();
  const FieldElement one = f.one();
  const FieldElement alpha = fe_div(one + *fe_sqrt(f.element(-7)), f.element(2));
  const FieldElement shift = alpha * alpha - f.element(2);
  const FieldElement numer_c = f.element(7) * (one - alpha).pow(4);
  const FieldElement inv_a = fe_inv(alpha);
  const FieldElement inv_a2 = inv_a * inv_a;
  const FieldElement inv_a3 = inv_a2 * inv_a;

  // x-map: alpha^-2 (x^2 + shift*x - c) / (x + shift)
  RationalFunction x_map{{{-(inv_a2 * numer_c), inv_a2 * shift, inv_a2}}, {{shift, one}}};
  // y-factor: alpha^-3 ((x + shift)^2 + c) / (x + shift)^2
  RationalFunction y_factor{{{inv_a3 * (shift * shift + numer_c), inv_a3 * (shift + shift), inv_a3}},
                            {{shift * shift, shift + shift, one}}};
  return RationalEndomorphism::rational(c, std::string(kAlpha701), std::move(x_map), std::move(y_factor),
                                        MinPoly{1, 2});
}

std::optional<std::int64_t> parse_scalar_label(std::string_view label) {
  std::string_view body;
  if (label.starts_with("scalar(") && label.ends_with(")")) {
    body = label.substr(7, label.size() - 8);
  } else if (label.starts_with("scalar:")) {
    body = label.substr(7);
  } else {
    return std::nullopt;
  }
  std::int64_t k = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
  if (ec != std::errc{} || ptr != body.data() + body.size() || body.empty()) {
    throw Error(ErrorKind::InvalidArgument, "bad scalar label '" + std::string(label) + "'");
  }
  return k;
}

}  // namespace

RationalEndomorphism make_catalog_endo(std::string_view label, const Curve& curve) {
  if (label == kSqrtMinusOne) return sqrt_minus_one(curve);
  if (label == kAlpha701) return alpha_701(curve);
  if (auto k = parse_scalar_label(label)) return RationalEndomorphism::multiplication(curve, *k);
  throw Error(ErrorKind::InvalidArgument, "unknown endomorphism '" + std::string(label) + "'");
}

TorsionMatrix endo_matrix(const RationalEndomorphism& e, const TorsionBasis& basis) {
  if (!(e.curve() == basis.curve())) {
    throw Error(ErrorKind::IncompatibleCurve, e.label() + " lives on a different curve than the basis");
  }
  const Coords first = dlog2d(basis, endo_eval(e, basis.p()));
  const Coords second = dlog2d(basis, endo_eval(e, basis.q()));
  return {basis, ModMatrix2::from_columns(basis.ell(), first, second)};
}

MonicQuadratic char_poly_mod_ell(const ModMatrix2& m) { return {m.ell(), m.trace(), m.det()}; }

}  // namespace distortion
