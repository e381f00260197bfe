// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "distortion/curve.hpp"
#include "distortion/torsion.hpp"

namespace distortion::testing {

/// y^2 = x^3 - 35x + 98 over F_701; #E = 700, full 2- and 5-torsion.
inline Curve f701() { return Curve(PrimeField(701), -35, 98); }

/// y^2 = x^3 + 1 over F_31; #E = 36, t = -4, full 2- and 3-torsion.
inline Curve f31() { return Curve(PrimeField(31), 0, 1); }

inline TorsionBasis f701_basis5() {
  const Curve c = f701();
  return TorsionBasis(TorsionContext(c, 5), make_point(c, 224, 31), make_point(c, 573, 450));
}

inline TorsionBasis f701_basis2() {
  const Curve c = f701();
  return TorsionBasis(TorsionContext(c, 2), make_point(c, 319, 0), make_point(c, 389, 0));
}

/// Points by brute force over all (x, y), independent of fe_sqrt.
inline std::vector<Point> brute_force_points(const Curve& c) {
  std::vector<Point> out{Point::identity()};
  const PrimeField& f = c.field();
  for (std::uint64_t x = 0; x < c.p(); ++x) {
    for (std::uint64_t y = 0; y < c.p(); ++y) {
      const FieldElement fx(x, f), fy(y, f);
      if (fy * fy == c.rhs(fx)) out.push_back(Point::affine(fx, fy));
    }
  }
  return out;
}

/// Kind of the Error thrown by fn; InvalidArgument plus a test failure if none.
inline ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

inline std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace distortion::testing
