// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/classify.hpp"

#include <limits>
#include <sstream>

namespace distortion {

namespace {

bool squarefree(std::int64_t n) {
  n = n < 0 ? -n : n;
  for (std::int64_t k = 2; k * k <= n; ++k) {
    if (n % (k * k) == 0) return false;
    if (n % k == 0) n /= k;
  }
  return true;
}

std::int64_t mod4(std::int64_t d) { return static_cast<std::int64_t>(reduce_signed(d, 4)); }

}  // namespace

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  if (mod4(d) == 1) return squarefree(d);
  if (mod4(d) != 0) return false;
  const std::int64_t m = d / 4;
  return (mod4(m) == 2 || mod4(m) == 3) && squarefree(m);
}

DiscriminantSplit decompose_discriminant(std::int64_t t, std::uint64_t q) {
  if (q > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / 4)) {
    throw Error(ErrorKind::InvalidArgument, "q too large for discriminant arithmetic");
  }
  const __int128 disc = static_cast<__int128>(t) * t - 4 * static_cast<__int128>(q);
  if (disc >= 0) throw Error(ErrorKind::NotImaginary, "t^2 - 4q is not negative");

  // Split |disc| = f^2 * s with s squarefree, by trial division.
  auto rest = static_cast<std::int64_t>(-disc);
  std::int64_t f = 1;
  std::int64_t s = 1;
  for (std::int64_t k = 2; k * k <= rest; ++k) {
    int e = 0;
    while (rest % k == 0) {
      rest /= k;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) f *= k;
    if (e % 2 == 1) s *= k;
  }
  s *= rest;
  std::int64_t d = -s;
  if (mod4(d) != 1) {
    d *= 4;
    f /= 2;
  }
  return {d, f};
}

void OrderData::validate() const {
  if (d_k >= 0 || !is_fundamental_discriminant(d_k)) {
    throw Error(ErrorKind::InconsistentInput, "d_K=" + std::to_string(d_k) + " is not a negative fundamental discriminant");
  }
  if (f_pi <= 0 || conductor <= 0) throw Error(ErrorKind::InconsistentInput, "conductors must be positive");
  if (f_pi % conductor != 0) {
    throw Error(ErrorKind::InconsistentInput,
                "conductor c=" + std::to_string(conductor) + " does not divide f_pi=" + std::to_string(f_pi));
  }
}

OrderData make_order_data(std::int64_t t, std::uint64_t q, std::int64_t conductor) {
  const DiscriminantSplit s = decompose_discriminant(t, q);
  OrderData od{s.d_k, s.f_pi, conductor};
  od.validate();
  return od;
}

std::string_view to_string(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::NoDistortion: return "NoDistortion";
    case CaseTag::Inert: return "Inert";
    case CaseTag::Split: return "Split";
    case CaseTag::Ramified: return "Ramified";
  }
  return "Unknown";
}

ClassificationReport classify_case(const OrderData& od, std::uint64_t ell) {
  od.validate();
  if (ell < 2 || !is_prime(ell)) throw Error(ErrorKind::InvalidArgument, "ell must be prime");
  const auto l = static_cast<std::int64_t>(ell);

  ClassificationReport r;
  r.ell = ell;
  const bool divides_c = od.conductor % l == 0;
  const bool divides_index = od.index_in_endo() % l == 0;
  const bool divides_disc = od.d_k % l == 0;
  if (!divides_c && !divides_index && !divides_disc) {
    r.notes.push_back("ell divides none of [O:Z[pi]], [O_K:O], d_K; E[ell] cannot be fully rational");
  }
  if (divides_c) {
    r.case_tag = CaseTag::NoDistortion;
    r.notes.push_back("ell | [O_K:O]: every endomorphism acts on E[ell] as a scalar");
    return r;
  }
  if (divides_index) r.notes.push_back("ell | [O:Z[pi]] but not [O_K:O]; O/(ell) = O_K/(ell)");
  switch (kronecker(od.d_k, l)) {
    case -1: r.case_tag = CaseTag::Inert; break;
    case 1: r.case_tag = CaseTag::Split; break;
    default: r.case_tag = CaseTag::Ramified; break;
  }
  return r;
}

std::uint64_t predicted_census(CaseTag tag, std::uint64_t ell) noexcept {
  switch (tag) {
    case CaseTag::Inert: return ell + 1;
    case CaseTag::Split: return ell - 1;
    case CaseTag::Ramified: return ell;
    case CaseTag::NoDistortion: return 0;
  }
  return 0;
}

ClassificationReport distortion_census(const ModMatrix2& m) {
  const std::uint64_t ell = m.ell();
  ClassificationReport r;
  r.ell = ell;
  std::uint64_t distorted = 0;
  for (const Coords& v : canonical_lines(ell)) {
    if (cross(ell, v, m.apply(v)) == 0) {
      r.eigen_subgroups.push_back(v);
    } else {
      ++distorted;
    }
  }
  r.census_distorted = distorted;
  switch (r.eigen_subgroups.size()) {
    case 0: r.case_tag = CaseTag::Inert; break;
    case 1: r.case_tag = CaseTag::Ramified; break;
    case 2: r.case_tag = CaseTag::Split; break;
    default: r.case_tag = CaseTag::NoDistortion; break;
  }
  return r;
}

TheoremCheck verify_theorem1(const OrderData& od, const ModMatrix2& m, std::uint64_t ell) {
  if (m.ell() != ell) throw Error(ErrorKind::InvalidArgument, "matrix modulus differs from ell");
  TheoremCheck check{classify_case(od, ell), distortion_census(m)};
  const std::uint64_t want = predicted_census(check.predicted.case_tag, ell);
  const std::uint64_t got = *check.observed.census_distorted;
  const bool scalar_ok = check.predicted.case_tag == CaseTag::NoDistortion ? m.is_scalar() : !m.is_scalar();
  if (got != want || !scalar_ok) {
    std::ostringstream msg;
    msg << "predicted " << to_string(check.predicted.case_tag) << " (" << want << " distorted of " << ell + 1
        << ") but the matrix " << m << " distorts " << got;
    throw PredicateViolation(msg.str(), std::move(check));
  }
  return check;
}

}  // namespace distortion
