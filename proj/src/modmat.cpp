// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/modmat.hpp"

#include <sstream>

#include "distortion/error.hpp"
#include "distortion/field.hpp"

namespace distortion {

std::vector<Coords> canonical_lines(std::uint64_t ell) {
  std::vector<Coords> out;
  out.reserve(ell + 1);
  out.push_back({0, 1});
  for (std::uint64_t k = 0; k < ell; ++k) out.push_back({1, k});
  return out;
}

ModMatrix2::ModMatrix2(std::uint64_t ell, std::int64_t m11, std::int64_t m12, std::int64_t m21,
                       std::int64_t m22)
    : ell_(ell) {
  if (ell < 2) throw Error(ErrorKind::InvalidArgument, "matrix modulus must be at least 2");
  m_ = {{{reduce_signed(m11, ell), reduce_signed(m12, ell)}, {reduce_signed(m21, ell), reduce_signed(m22, ell)}}};
}

ModMatrix2 ModMatrix2::from_columns(std::uint64_t ell, Coords first, Coords second) {
  return ModMatrix2(ell, static_cast<std::int64_t>(first.a), static_cast<std::int64_t>(second.a),
                    static_cast<std::int64_t>(first.b), static_cast<std::int64_t>(second.b));
}

ModMatrix2 ModMatrix2::scalar(std::uint64_t ell, std::int64_t k) { return ModMatrix2(ell, k, 0, 0, k); }

std::uint64_t ModMatrix2::trace() const noexcept { return (m_[0][0] + m_[1][1]) % ell_; }

std::uint64_t ModMatrix2::det() const noexcept {
  const std::uint64_t ad = mul_mod(m_[0][0], m_[1][1], ell_);
  const std::uint64_t bc = mul_mod(m_[0][1], m_[1][0], ell_);
  return (ad + ell_ - bc) % ell_;
}

bool ModMatrix2::is_scalar() const noexcept { return m_[0][1] == 0 && m_[1][0] == 0 && m_[0][0] == m_[1][1]; }

Coords ModMatrix2::apply(const Coords& v) const noexcept {
  return {(mul_mod(m_[0][0], v.a, ell_) + mul_mod(m_[0][1], v.b, ell_)) % ell_,
          (mul_mod(m_[1][0], v.a, ell_) + mul_mod(m_[1][1], v.b, ell_)) % ell_};
}

std::ostream& operator<<(std::ostream& os, const ModMatrix2& m) {
  return os << '[' << m.at(0, 0) << ' ' << m.at(0, 1) << "; " << m.at(1, 0) << ' ' << m.at(1, 1) << ']';
}

std::uint64_t MonicQuadratic::eval(std::uint64_t x) const noexcept {
  x %= ell;
  const std::uint64_t sx = mul_mod(trace, x, ell);
  return (mul_mod(x, x, ell) + ell - sx + norm) % ell;
}

std::vector<std::uint64_t> MonicQuadratic::roots() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < ell; ++x) {
    if (eval(x) == 0) out.push_back(x);
  }
  return out;
}

std::string to_string(const MonicQuadratic& f) {
  std::ostringstream os;
  os << "X^2";
  const std::uint64_t linear = (f.ell - f.trace % f.ell) % f.ell;
  if (linear == 1) {
    os << " + X";
  } else if (linear != 0) {
    os << " + " << linear << 'X';
  }
  if (f.norm % f.ell != 0) os << " + " << f.norm % f.ell;
  return os.str();
}

std::uint64_t cross(std::uint64_t ell, const Coords& u, const Coords& v) noexcept {
  return (mul_mod(u.a, v.b, ell) + ell - mul_mod(u.b, v.a, ell)) % ell;
}

}  // namespace distortion
