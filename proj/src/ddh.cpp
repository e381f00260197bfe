// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/ddh.hpp"

#include <exception>
#include <random>

namespace distortion {

namespace {

void require_distortion(const TorsionBasis& basis, const RationalEndomorphism& phi, const Point& base) {
  if (!(phi.curve() == basis.curve())) {
    throw Error(ErrorKind::IncompatibleCurve, phi.label() + " lives on a different curve than the basis");
  }
  if (base.is_identity() || !is_on_curve(basis.curve(), base) ||
      !scalar_mul_unchecked(basis.curve(), basis.ell(), base).is_identity()) {
    throw Error(ErrorKind::InstanceInvalid, "base " + to_string(base) + " does not have order ell");
  }
  if (weil_pairing(basis.curve(), basis.ell(), base, endo_eval(phi, base)).is_one()) {
    throw Error(ErrorKind::NotADistortionMap, phi.label() + " maps <" + to_string(base) + "> into itself");
  }
}

void require_members(const TorsionBasis& basis, const DdhInstance& inst) {
  const std::uint64_t ell = basis.ell();
  const Coords base = dlog2d(basis, inst.base);
  for (const Point* pt : {&inst.r, &inst.s, &inst.t}) {
    if (!is_on_curve(basis.curve(), *pt) || !scalar_mul_unchecked(basis.curve(), ell, *pt).is_identity() ||
        cross(ell, base, dlog2d(basis, *pt)) != 0) {
      throw Error(ErrorKind::InstanceInvalid, to_string(*pt) + " is not in <" + to_string(inst.base) + ">");
    }
  }
}

bool decide_unchecked(const TorsionBasis& basis, const RationalEndomorphism& phi, const DdhInstance& inst) {
  const Curve& c = basis.curve();
  const std::uint64_t ell = basis.ell();
  return weil_pairing(c, ell, inst.r, endo_eval(phi, inst.s)) ==
         weil_pairing(c, ell, inst.base, endo_eval(phi, inst.t));
}

}  // namespace

DdhInstance make_ddh_instance(const TorsionBasis& basis, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  const Curve& cv = basis.curve();
  const Point& p = basis.p();
  return {p, scalar_mul_unchecked(cv, a, p), scalar_mul_unchecked(cv, b, p), scalar_mul_unchecked(cv, c, p),
          DdhTruth{a % basis.ell(), b % basis.ell(), c % basis.ell()}};
}

bool ddh_decide(const TorsionBasis& basis, const RationalEndomorphism& phi, const DdhInstance& inst) {
  require_distortion(basis, phi, inst.base);
  require_members(basis, inst);
  return decide_unchecked(basis, phi, inst);
}

DdhInstance ddh_sample(const TorsionBasis& basis, bool honest, std::uint64_t seed) {
  const std::uint64_t ell = basis.ell();
  std::mt19937_64 rng(seed);
  const std::uint64_t a = 1 + rng() % (ell - 1);
  const std::uint64_t b = 1 + rng() % (ell - 1);
  const std::uint64_t ab = (a * b) % ell;
  const std::uint64_t c = honest ? ab : (ab + 1 + rng() % (ell - 1)) % ell;
  return make_ddh_instance(basis, a, b, c);
}

std::vector<DdhInstance> ddh_enumerate(const TorsionBasis& basis) {
  const std::uint64_t ell = basis.ell();
  std::vector<DdhInstance> out;
  out.reserve(ell * ell * ell);
  for (std::uint64_t a = 0; a < ell; ++a) {
    for (std::uint64_t b = 0; b < ell; ++b) {
      for (std::uint64_t c = 0; c < ell; ++c) out.push_back(make_ddh_instance(basis, a, b, c));
    }
  }
  return out;
}

std::vector<std::uint8_t> ddh_decide_batch_serial(const TorsionBasis& basis, const RationalEndomorphism& phi,
                                                  std::span<const DdhInstance> instances) {
  std::vector<std::uint8_t> out(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) out[i] = ddh_decide(basis, phi, instances[i]) ? 1 : 0;
  return out;
}

std::vector<std::uint8_t> ddh_decide_batch(const TorsionBasis& basis, const RationalEndomorphism& phi,
                                           std::span<const DdhInstance> instances) {
  const auto n = static_cast<std::int64_t>(instances.size());
  std::vector<std::uint8_t> out(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[i] = ddh_decide(basis, phi, instances[i]) ? 1 : 0;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace distortion
