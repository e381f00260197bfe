// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "distortion/curve.hpp"

namespace distortion {

/// An ell-th root of unity in F_p.
struct PairingValue {
  FieldElement value;

  bool is_one() const noexcept { return value.value() == 1; }
  friend bool operator==(const PairingValue&, const PairingValue&) = default;
};

/// Degree-zero divisor (plus) - (minus) given by its two support points.
struct DivisorPair {
  Point plus;
  Point minus;
};

/// Evaluates the Miller function f with div(f) = ell(A) - ell(O) at the divisor
/// D, i.e. f(D.plus) / f(D.minus). Throws Error(DivisorCollision) when an
/// evaluation point meets a zero or pole of one of the Miller lines.
FieldElement miller_eval(const Curve& c, std::uint64_t ell, const Point& a, const DivisorPair& d);

/// Number of auxiliary offsets tried before giving up on a pairing evaluation.
inline constexpr int kPairingOffsetAttempts = 16;

/// The Weil pairing e_ell(A, B) for ell-torsion points over F_p.
///
/// With D_A = (A - U) - (-U) and D_B = (B + U) - (U) for an auxiliary point U,
/// the value returned is f_B(D_A) / f_A(D_B). This orientation reproduces
/// e_5((224,31), (173,194)) = 464 on y^2 = x^3 - 35x + 98 over F_701; the
/// opposite orientation yields inverses. Offsets U are taken from a fixed
/// deterministic sequence of rational points.
///
/// Throws Error(NotTorsion) unless ell*A = ell*B = 0_E and
/// Error(DivisorCollision) if every offset collides. For ell = 2 the value is
/// forced by alternation and nondegeneracy, so an exhausted offset search
/// falls back to it.
PairingValue weil_pairing(const Curve& c, std::uint64_t ell, const Point& a, const Point& b);

}  // namespace distortion
