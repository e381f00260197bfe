// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "distortion/curve.hpp"
#include "distortion/modmat.hpp"
#include "distortion/pairing.hpp"

namespace distortion {

inline constexpr std::uint64_t kMaxTorsionPrime = 997;
inline constexpr std::uint64_t kDefaultSeed = 20070101;

/// A curve with a small prime ell whose full ell-torsion is expected to be
/// F_p-rational: ell^2 | #E, t = 2 and q = 1 (mod ell).
class TorsionContext {
 public:
  /// Throws Error(InvalidArgument) for a bad ell and Error(TorsionNotRational)
  /// when the divisibility or congruence conditions fail.
  TorsionContext(Curve curve, std::uint64_t ell, FrobeniusData frob);

  /// Counts points first.
  TorsionContext(const Curve& curve, std::uint64_t ell);

  const Curve& curve() const noexcept { return curve_; }
  std::uint64_t ell() const noexcept { return ell_; }
  const FrobeniusData& frobenius() const noexcept { return frob_; }

 private:
  Curve curve_;
  std::uint64_t ell_;
  FrobeniusData frob_;
};

/// Generators P, Q of E[ell] with e_ell(P, Q) != 1.
class TorsionBasis {
 public:
  /// Validates both points; throws Error(NotInTorsion) if either is zero or
  /// not killed by ell, Error(InconsistentInput) if they pair trivially.
  TorsionBasis(TorsionContext ctx, Point p, Point q);

  const TorsionContext& context() const noexcept { return ctx_; }
  const Curve& curve() const noexcept { return ctx_.curve(); }
  std::uint64_t ell() const noexcept { return ctx_.ell(); }
  const Point& p() const noexcept { return p_; }
  const Point& q() const noexcept { return q_; }
  const PairingValue& pairing() const noexcept { return e_pq_; }

  /// a*P + b*Q.
  Point combine(std::int64_t a, std::int64_t b) const;

 private:
  TorsionContext ctx_;
  Point p_;
  Point q_;
  PairingValue e_pq_;
};

/// Random search for a basis (deterministic under seed). Throws
/// Error(SamplingExhausted) after 64 * ell sampled points.
TorsionBasis find_torsion_basis(const TorsionContext& ctx, std::uint64_t seed = kDefaultSeed);

/// Unique (a, b) with R = a*P + b*Q, by exhaustive search.
/// Throws Error(NotInTorsion) unless ell*R = 0_E.
Coords dlog2d(const TorsionBasis& basis, const Point& r);

struct Subgroup {
  Coords coords;
  Point generator;
};

/// The ell + 1 order-ell subgroups: <Q>, then <P + kQ> for ascending k.
std::vector<Subgroup> enumerate_subgroups(const TorsionBasis& basis);

}  // namespace distortion
