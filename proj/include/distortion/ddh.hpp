// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "distortion/endo.hpp"
#include "distortion/torsion.hpp"

namespace distortion {

/// Hidden exponents of a generated instance: R = aP, S = bP, T = cP.
struct DdhTruth {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  bool is_dh(std::uint64_t ell) const noexcept { return (a * b) % ell == c % ell; }
};

struct DdhInstance {
  Point base;
  Point r;
  Point s;
  Point t;
  std::optional<DdhTruth> truth;
};

/// (aP, bP, cP) on the basis point P.
DdhInstance make_ddh_instance(const TorsionBasis& basis, std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// Decides whether (R, S, T) is a Diffie-Hellman triple on <base> by testing
/// e(R, phi(S)) == e(base, phi(T)).
/// Throws Error(NotADistortionMap) when e(base, phi(base)) = 1 and
/// Error(InstanceInvalid) when a point lies outside <base>.
bool ddh_decide(const TorsionBasis& basis, const RationalEndomorphism& phi, const DdhInstance& inst);

/// Honest: (aP, bP, abP) with a, b nonzero. Dishonest: (aP, bP, cP) with c != ab.
/// Deterministic under seed.
DdhInstance ddh_sample(const TorsionBasis& basis, bool honest, std::uint64_t seed);

/// All ell^3 triples (aP, bP, cP), ordered by (a, b, c).
std::vector<DdhInstance> ddh_enumerate(const TorsionBasis& basis);

/// Batch decisions, one per instance. The OpenMP kernel and its serial
/// reference return identical vectors; the first failing instance's error is
/// rethrown.
std::vector<std::uint8_t> ddh_decide_batch(const TorsionBasis& basis, const RationalEndomorphism& phi,
                                           std::span<const DdhInstance> instances);
std::vector<std::uint8_t> ddh_decide_batch_serial(const TorsionBasis& basis, const RationalEndomorphism& phi,
                                                  std::span<const DdhInstance> instances);

}  // namespace distortion
