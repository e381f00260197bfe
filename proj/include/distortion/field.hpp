// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>

#include "distortion/error.hpp"

namespace distortion {

/// Largest admissible modulus (exclusive). Products of two residues fit in
/// unsigned 128-bit arithmetic.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// Reduces any signed integer into [0, m).
std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) noexcept;

class FieldElement;

/// The prime field F_p for an odd prime p < 2^62.
class PrimeField {
 public:
  /// Throws Error(NotPrime) unless p is an odd prime below kMaxModulus.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  FieldElement element(std::int64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// A canonical residue in [0, p) tagged with its modulus.
class FieldElement {
 public:
  FieldElement(std::uint64_t value, const PrimeField& field) noexcept
      : value_(value % field.modulus()), p_(field.modulus()) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  /// Signed representative in (-p/2, p/2].
  std::int64_t centered() const noexcept;

  FieldElement operator-() const noexcept;
  FieldElement& operator+=(const FieldElement& o) noexcept;
  FieldElement& operator-=(const FieldElement& o) noexcept;
  FieldElement& operator*=(const FieldElement& o) noexcept;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) noexcept { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) noexcept { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) noexcept { return a *= b; }

  FieldElement pow(std::uint64_t e) const noexcept;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldElement(std::uint64_t value, std::uint64_t p, int) noexcept : value_(value), p_(p) {}

  std::uint64_t value_;
  std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// Multiplicative inverse. Throws Error(ZeroInverse) on zero.
FieldElement fe_inv(const FieldElement& a);

/// a / b. Throws Error(ZeroInverse) when b is zero.
FieldElement fe_div(const FieldElement& a, const FieldElement& b);

/// Square root by Tonelli-Shanks; the numerically smaller of the two roots
/// is returned. Empty for non-residues.
std::optional<FieldElement> fe_sqrt(const FieldElement& a);

/// Kronecker symbol (D | n) for n > 0.
int kronecker(std::int64_t d, std::int64_t n);

}  // namespace distortion
