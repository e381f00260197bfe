// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/field.hpp"

#include <array>
#include <string>

namespace distortion {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto b : kBases) {
    std::uint64_t x = pow_mod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) noexcept {
  if (v >= 0) return static_cast<std::uint64_t>(v) % m;
  // -(v+1) avoids overflow at INT64_MIN.
  const std::uint64_t r = (static_cast<std::uint64_t>(-(v + 1)) % m + 1) % m;
  return r == 0 ? 0 : m - r;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= kMaxModulus || !is_prime(p)) {
    throw Error(ErrorKind::NotPrime, "modulus " + std::to_string(p) + " is not an odd prime below 2^62");
  }
}

FieldElement PrimeField::element(std::int64_t v) const { return FieldElement(reduce_signed(v, p_), *this); }
FieldElement PrimeField::zero() const { return FieldElement(0, *this); }
FieldElement PrimeField::one() const { return FieldElement(1, *this); }

std::int64_t FieldElement::centered() const noexcept {
  return value_ > p_ / 2 ? -static_cast<std::int64_t>(p_ - value_) : static_cast<std::int64_t>(value_);
}

FieldElement FieldElement::operator-() const noexcept {
  return FieldElement(value_ == 0 ? 0 : p_ - value_, p_, 0);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) noexcept {
  value_ += o.value_;
  if (value_ >= p_) value_ -= p_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) noexcept {
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) noexcept {
  value_ = mul_mod(value_, o.value_, p_);
  return *this;
}

FieldElement FieldElement::pow(std::uint64_t e) const noexcept {
  return FieldElement(pow_mod(value_, e, p_), p_, 0);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value(); }

FieldElement fe_inv(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInverse, "inverse of zero mod " + std::to_string(a.modulus()));
  return a.pow(a.modulus() - 2);
}

FieldElement fe_div(const FieldElement& a, const FieldElement& b) { return a * fe_inv(b); }

std::optional<FieldElement> fe_sqrt(const FieldElement& a) {
  const std::uint64_t p = a.modulus();
  if (a.is_zero()) return a;
  if (a.pow((p - 1) / 2).value() != 1) return std::nullopt;

  FieldElement root = a;
  if (p % 4 == 3) {
    root = a.pow((p + 1) / 4);
  } else {
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    const FieldElement one = a.pow(0);
    FieldElement z = one + one;
    const FieldElement minus_one = -one;
    while (z.pow((p - 1) / 2) != minus_one) z += one;

    unsigned m = s;
    FieldElement c = z.pow(q);
    FieldElement t = a.pow(q);
    root = a.pow((q + 1) / 2);
    while (t != one) {
      unsigned i = 0;
      FieldElement t2 = t;
      while (t2 != one) {
        t2 *= t2;
        ++i;
      }
      FieldElement b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
      m = i;
      c = b * b;
      t *= c;
      root *= b;
    }
  }
  if (root.value() > p - root.value()) root = -root;
  return root;
}

int kronecker(std::int64_t d, std::int64_t n) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "kronecker symbol needs n > 0");
  // Strip factors of two from n using (d | 2).
  int result = 1;
  while ((n & 1) == 0) {
    n >>= 1;
    if ((d & 1) == 0) return 0;
    const std::uint64_t d8 = reduce_signed(d, 8);
    if (d8 == 3 || d8 == 5) result = -result;
  }
  if (n == 1) return result;
  // Jacobi symbol for odd n.
  std::int64_t a = static_cast<std::int64_t>(reduce_signed(d, static_cast<std::uint64_t>(n)));
  std::int64_t m = n;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const std::int64_t r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

}  // namespace distortion
