// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <utility>

namespace distortion {

namespace {

FieldElement discriminant_part(const FieldElement& a4, const FieldElement& a6) {
  const FieldElement four = PrimeField(a4.modulus()).element(4);
  const FieldElement twenty_seven = PrimeField(a4.modulus()).element(27);
  return four * a4 * a4 * a4 + twenty_seven * a6 * a6;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Curve::Curve(const PrimeField& field, std::int64_t a4, std::int64_t a6)
    : Curve(field, field.element(a4), field.element(a6)) {}

Curve::Curve(const PrimeField& field, const FieldElement& a4, const FieldElement& a6)
    : field_(field), a4_(a4), a6_(a6) {
  if (a4.modulus() != field.modulus() || a6.modulus() != field.modulus()) {
    throw Error(ErrorKind::InvalidArgument, "coefficients live in a different field");
  }
  if (discriminant_part(a4_, a6_).is_zero()) {
    std::ostringstream msg;
    msg << "4*a4^3 + 27*a6^2 = 0 for a4=" << a4_ << " a6=" << a6_ << " mod " << p();
    throw Error(ErrorKind::SingularCurve, msg.str());
  }
}

FieldElement Curve::rhs(const FieldElement& x) const noexcept { return (x * x + a4_) * x + a6_; }

std::ostream& operator<<(std::ostream& os, const Point& a) {
  if (a.is_identity()) return os << 'O';
  return os << a.x() << ',' << a.y();
}

std::string to_string(const Point& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

Point make_point(const Curve& c, std::int64_t x, std::int64_t y) {
  Point pt = Point::affine(c.field().element(x), c.field().element(y));
  if (!is_on_curve(c, pt)) {
    throw Error(ErrorKind::PointNotOnCurve, "(" + to_string(pt) + ") is not on the curve");
  }
  return pt;
}

bool is_on_curve(const Curve& c, const Point& a) noexcept {
  if (a.is_identity()) return true;
  if (a.x().modulus() != c.p() || a.y().modulus() != c.p()) return false;
  return a.y() * a.y() == c.rhs(a.x());
}

Point point_neg(const Point& a) noexcept {
  if (a.is_identity()) return a;
  return Point::affine(a.x(), -a.y());
}

Point point_add_unchecked(const Curve& c, const Point& a, const Point& b) noexcept {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  FieldElement slope = c.field().zero();
  if (a.x() == b.x()) {
    if ((a.y() + b.y()).is_zero()) return Point::identity();
    const FieldElement three = c.field().element(3);
    slope = fe_div(three * a.x() * a.x() + c.a4(), a.y() + a.y());
  } else {
    slope = fe_div(b.y() - a.y(), b.x() - a.x());
  }
  const FieldElement x3 = slope * slope - a.x() - b.x();
  const FieldElement y3 = slope * (a.x() - x3) - a.y();
  return Point::affine(x3, y3);
}

Point point_add(const Curve& c, const Point& a, const Point& b) {
  if (!is_on_curve(c, a) || !is_on_curve(c, b)) {
    throw Error(ErrorKind::PointNotOnCurve, "point_add operand is not on the curve");
  }
  return point_add_unchecked(c, a, b);
}

Point scalar_mul_unchecked(const Curve& c, std::uint64_t k, const Point& a) noexcept {
  Point result = Point::identity();
  Point addend = a;
  while (k != 0) {
    if (k & 1) result = point_add_unchecked(c, result, addend);
    k >>= 1;
    if (k != 0) addend = point_add_unchecked(c, addend, addend);
  }
  return result;
}

Point scalar_mul(const Curve& c, std::int64_t k, const Point& a) {
  if (!is_on_curve(c, a)) throw Error(ErrorKind::PointNotOnCurve, "scalar_mul operand is not on the curve");
  const std::uint64_t magnitude =
      k >= 0 ? static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(-(k + 1)) + 1;
  const Point r = scalar_mul_unchecked(c, magnitude, a);
  return k >= 0 ? r : point_neg(r);
}

std::vector<Point> enumerate_points(const Curve& c) {
  if (c.p() >= kExhaustiveCountLimit) {
    throw Error(ErrorKind::CurveTooLarge, "point enumeration needs p < 2^24");
  }
  std::vector<Point> out{Point::identity()};
  for (std::uint64_t xv = 0; xv < c.p(); ++xv) {
    const FieldElement x(xv, c.field());
    const auto root = fe_sqrt(c.rhs(x));
    if (!root) continue;
    out.push_back(Point::affine(x, *root));
    if (!root->is_zero()) out.push_back(Point::affine(x, -*root));
  }
  return out;
}

namespace {

std::int64_t character_term(const Curve& c, std::uint64_t xv) {
  const FieldElement x(xv, c.field());
  const FieldElement r = c.rhs(x);
  if (r.is_zero()) return 1;
  return 1 + kronecker(static_cast<std::int64_t>(r.value()), static_cast<std::int64_t>(c.p()));
}

}  // namespace

std::uint64_t count_points_serial(const Curve& c) {
  std::int64_t sum = 1;
  for (std::uint64_t x = 0; x < c.p(); ++x) sum += character_term(c, x);
  return static_cast<std::uint64_t>(sum);
}

std::uint64_t count_points_parallel(const Curve& c) {
  const auto p = static_cast<std::int64_t>(c.p());
  std::int64_t sum = 1;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::int64_t x = 0; x < p; ++x) {
    sum += character_term(c, static_cast<std::uint64_t>(x));
  }
  return static_cast<std::uint64_t>(sum);
}

namespace {

struct HasseInterval {
  std::uint64_t lo;
  std::uint64_t hi;
};

HasseInterval hasse_interval(std::uint64_t p) {
  const std::uint64_t w = isqrt(4 * p);
  return {p + 1 - w, p + 1 + w};
}

Point random_point(const Curve& c, std::mt19937_64& rng) {
  for (;;) {
    const FieldElement x(rng() % c.p(), c.field());
    const auto root = fe_sqrt(c.rhs(x));
    if (!root) continue;
    return Point::affine(x, (rng() & 1) ? -*root : *root);
  }
}

// All N in the interval with N*X = O, or nullopt when that set is too large
// to be useful (X has small order).
std::optional<std::vector<std::uint64_t>> annihilators(const Curve& c, const Point& x,
                                                      const HasseInterval& iv) {
  constexpr std::size_t kMaxCandidates = 1 << 16;
  const std::uint64_t width = iv.hi - iv.lo + 1;
  const std::uint64_t baby = isqrt(width) + 1;

  auto key = [](const Point& pt) { return std::make_pair(pt.x().value(), pt.y().value()); };
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> table;
  Point cur = Point::identity();
  for (std::uint64_t j = 0; j < baby; ++j) {
    if (j > 0 && cur.is_identity()) {
      // ord(X) = j divides every annihilator.
      if (width / j > kMaxCandidates) return std::nullopt;
      std::vector<std::uint64_t> out;
      for (std::uint64_t n = (iv.lo + j - 1) / j * j; n <= iv.hi; n += j) out.push_back(n);
      return out;
    }
    if (!cur.is_identity()) table.emplace(key(cur), j);
    cur = point_add_unchecked(c, cur, x);
  }
  const Point giant_step = cur;  // baby * X
  Point g = scalar_mul_unchecked(c, iv.lo, x);
  std::vector<std::uint64_t> out;
  for (std::uint64_t base = iv.lo; base <= iv.hi; base += baby) {
    // (base + j) X = O  <=>  j X = -G
    if (g.is_identity()) {
      out.push_back(base);
    } else if (auto it = table.find(key(point_neg(g))); it != table.end()) {
      if (base + it->second <= iv.hi) out.push_back(base + it->second);
    }
    if (out.size() > kMaxCandidates) return std::nullopt;
    g = point_add_unchecked(c, g, giant_step);
  }
  return out;
}

}  // namespace

std::uint64_t count_points_bsgs(const Curve& c, std::uint64_t seed) {
  const std::uint64_t p = c.p();
  const HasseInterval iv = hasse_interval(p);

  // Quadratic twist by a non-residue d: #E + #E' = 2p + 2.
  FieldElement d = c.field().element(2);
  while (fe_sqrt(d)) d += c.field().one();
  const Curve twist(c.field(), c.a4() * d * d, c.a6() * d * d * d);

  std::mt19937_64 rng(seed);
  std::optional<std::vector<std::uint64_t>> candidates;
  constexpr int kMaxSamples = 64;
  for (int i = 0; i < kMaxSamples; ++i) {
    const bool on_twist = (i % 2) == 1;
    const Curve& target = on_twist ? twist : c;
    auto found = annihilators(target, random_point(target, rng), iv);
    if (!found) continue;
    std::vector<std::uint64_t> orders = std::move(*found);
    if (on_twist) {
      for (auto& n : orders) n = 2 * p + 2 - n;
      std::sort(orders.begin(), orders.end());
    }
    if (!candidates) {
      candidates = std::move(orders);
    } else {
      std::vector<std::uint64_t> both;
      std::set_intersection(candidates->begin(), candidates->end(), orders.begin(), orders.end(),
                            std::back_inserter(both));
      *candidates = std::move(both);
    }
    if (candidates->size() == 1) return candidates->front();
    if (candidates->empty()) break;
  }
  throw Error(ErrorKind::CurveTooLarge, "BSGS could not pin the group order for p=" + std::to_string(p));
}

FrobeniusData count_points(const Curve& c, CountMode mode) {
  const std::uint64_t p = c.p();
  if (mode == CountMode::Auto) {
    mode = p < kExhaustiveCountLimit ? CountMode::Exhaustive : CountMode::BabyStepGiantStep;
  }
  if (mode == CountMode::Exhaustive && p >= kExhaustiveCountLimit) {
    throw Error(ErrorKind::CurveTooLarge, "exhaustive counting needs p < 2^24");
  }
  FrobeniusData out;
  out.q = p;
  out.order = mode == CountMode::Exhaustive ? count_points_parallel(c) : count_points_bsgs(c);
  out.trace = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(out.order);
  if (reduce_signed(out.trace, p) == 0) {
    throw Error(ErrorKind::SupersingularCurve,
                "trace " + std::to_string(out.trace) + " is divisible by p=" + std::to_string(p));
  }
  return out;
}

Curve reduce_rational_curve(std::int64_t num_a4, std::int64_t den_a4, std::int64_t num_a6,
                            std::int64_t den_a6, std::uint64_t p) {
  const PrimeField field(p);
  if (den_a4 == 0 || den_a6 == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  const FieldElement d4 = field.element(den_a4);
  const FieldElement d6 = field.element(den_a6);
  if (d4.is_zero() || d6.is_zero()) {
    throw Error(ErrorKind::BadReduction, "p=" + std::to_string(p) + " divides a coefficient denominator");
  }
  const FieldElement a4 = field.element(num_a4) * fe_inv(d4);
  const FieldElement a6 = field.element(num_a6) * fe_inv(d6);
  try {
    return Curve(field, a4, a6);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularCurve) throw;
    throw Error(ErrorKind::BadReduction, "reduction mod " + std::to_string(p) + " is singular");
  }
}

}  // namespace distortion
