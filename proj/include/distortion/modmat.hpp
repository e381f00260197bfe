// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace distortion {

/// Coordinates (a, b) of a vector a*P + b*Q in (Z/ell)^2.
struct Coords {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const Coords&, const Coords&) = default;
};

/// Canonical generators of the ell + 1 lines of (Z/ell)^2:
/// (0,1) first, then (1,k) for k = 0..ell-1.
std::vector<Coords> canonical_lines(std::uint64_t ell);

/// 2x2 matrix over Z/ell. Columns hold the images of the basis vectors.
class ModMatrix2 {
 public:
  /// Entries given row-major as (m11 m12 / m21 m22); signed values are reduced.
  ModMatrix2(std::uint64_t ell, std::int64_t m11, std::int64_t m12, std::int64_t m21, std::int64_t m22);
  static ModMatrix2 from_columns(std::uint64_t ell, Coords first, Coords second);
  static ModMatrix2 scalar(std::uint64_t ell, std::int64_t k);

  std::uint64_t ell() const noexcept { return ell_; }
  std::uint64_t at(int row, int col) const noexcept { return m_[row][col]; }
  std::uint64_t trace() const noexcept;
  std::uint64_t det() const noexcept;
  bool is_scalar() const noexcept;

  Coords apply(const Coords& v) const noexcept;

  friend bool operator==(const ModMatrix2&, const ModMatrix2&) = default;

 private:
  std::uint64_t ell_;
  std::array<std::array<std::uint64_t, 2>, 2> m_;
};

std::ostream& operator<<(std::ostream& os, const ModMatrix2& m);

/// X^2 - s*X + n over Z/ell.
struct MonicQuadratic {
  std::uint64_t ell = 0;
  std::uint64_t trace = 0;
  std::uint64_t norm = 0;

  std::uint64_t eval(std::uint64_t x) const noexcept;
  /// Distinct roots in Z/ell, ascending.
  std::vector<std::uint64_t> roots() const;
  bool irreducible() const { return roots().empty(); }
  bool repeated_root() const { return roots().size() == 1; }

  friend bool operator==(const MonicQuadratic&, const MonicQuadratic&) = default;
};

/// Renders as e.g. "X^2 + 4X + 2" with coefficients in [0, ell).
std::string to_string(const MonicQuadratic& f);

/// (Z/ell)-determinant of the 2x2 matrix with columns u, v; zero iff u, v are dependent.
std::uint64_t cross(std::uint64_t ell, const Coords& u, const Coords& v) noexcept;

}  // namespace distortion
