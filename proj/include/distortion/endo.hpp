// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distortion/curve.hpp"
#include "distortion/modmat.hpp"
#include "distortion/torsion.hpp"

namespace distortion {

/// Polynomial over F_p, coefficients from the constant term up.
struct Polynomial {
  std::vector<FieldElement> coeffs;
  FieldElement eval(const FieldElement& x) const;
};

/// num(x) / den(x); empty at zeros of den.
struct RationalFunction {
  Polynomial num;
  Polynomial den;
  std::optional<FieldElement> eval(const FieldElement& x) const;
};

/// X^2 - trace*X + norm over the integers.
struct MinPoly {
  std::int64_t trace = 0;
  std::int64_t norm = 0;
  MonicQuadratic reduce(std::uint64_t ell) const;
  friend bool operator==(const MinPoly&, const MinPoly&) = default;
};

/// An endomorphism given either by explicit rational maps
/// (x, y) -> (x_map(x), y * y_factor(x)) or as multiplication by an integer,
/// optionally plus a multiple of the identity.
class RationalEndomorphism {
 public:
  static RationalEndomorphism rational(Curve curve, std::string label, RationalFunction x_map,
                                       RationalFunction y_factor, MinPoly minpoly);
  static RationalEndomorphism multiplication(Curve curve, std::int64_t k);

  const Curve& curve() const noexcept { return curve_; }
  const std::string& label() const noexcept { return label_; }
  const MinPoly& minpoly() const noexcept { return minpoly_; }
  bool is_scalar() const noexcept { return !x_map_.has_value(); }

  /// phi + k, with the minimal polynomial shifted accordingly.
  RationalEndomorphism plus_scalar(std::int64_t k) const;

  friend Point endo_eval(const RationalEndomorphism& e, const Point& a);

 private:
  RationalEndomorphism(Curve curve, std::string label, MinPoly minpoly)
      : curve_(std::move(curve)), label_(std::move(label)), minpoly_(minpoly) {}

  Curve curve_;
  std::string label_;
  MinPoly minpoly_;
  std::optional<RationalFunction> x_map_;
  std::optional<RationalFunction> y_factor_;
  std::int64_t base_scalar_ = 0;  // used when there is no rational map
  std::int64_t shift_ = 0;
};

/// Stable catalog labels.
inline constexpr std::string_view kSqrtMinusOne = "sqrt_minus_one";
inline constexpr std::string_view kAlpha701 = "alpha_701";

/// Builds a compiled-in endomorphism:
///  - "sqrt_minus_one": (x, y) -> (-x, i*y) on y^2 = x^3 + a4*x, p = 1 mod 4,
///    i the smaller square root of -1; minimal polynomial X^2 + 1.
///  - "alpha_701": multiplication by (1 + sqrt(-7))/2 = 386 on
///    y^2 = x^3 - 35x + 98 over F_701; minimal polynomial X^2 - X + 2.
///  - "scalar(k)" or "scalar:k": multiplication by k; minimal polynomial (X - k)^2.
/// Throws Error(IncompatibleCurve) or Error(InvalidArgument) for unknown labels.
RationalEndomorphism make_catalog_endo(std::string_view label, const Curve& curve);

/// Image of A. Points where the x-map has a pole go to 0_E.
/// Throws Error(ImageOffCurve) if the image fails the curve equation.
Point endo_eval(const RationalEndomorphism& e, const Point& a);

/// Action of an endomorphism on E[ell]; columns are the images of P and Q.
struct TorsionMatrix {
  TorsionBasis basis;
  ModMatrix2 action;
};

TorsionMatrix endo_matrix(const RationalEndomorphism& e, const TorsionBasis& basis);

MonicQuadratic char_poly_mod_ell(const ModMatrix2& m);
inline MonicQuadratic char_poly_mod_ell(const TorsionMatrix& m) { return char_poly_mod_ell(m.action); }

}  // namespace distortion
