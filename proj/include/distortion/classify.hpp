// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distortion/endo.hpp"
#include "distortion/modmat.hpp"

namespace distortion {

/// t^2 - 4q = f_pi^2 * d_K with d_K a fundamental discriminant.
struct DiscriminantSplit {
  std::int64_t d_k = 0;
  std::int64_t f_pi = 0;
};

/// Throws Error(NotImaginary) when t^2 - 4q >= 0.
DiscriminantSplit decompose_discriminant(std::int64_t t, std::uint64_t q);

bool is_fundamental_discriminant(std::int64_t d);

/// Z[pi] in O = End(E) in O_K, recorded through d_K, the conductor f_pi of
/// Z[pi] and the conductor c = [O_K : O] of End(E).
struct OrderData {
  std::int64_t d_k = 0;
  std::int64_t f_pi = 0;
  std::int64_t conductor = 1;  // c = [O_K : O]

  /// [O : Z[pi]] = f_pi / c.
  std::int64_t index_in_endo() const noexcept { return f_pi / conductor; }

  /// Throws Error(InconsistentInput) on a non-fundamental d_K, non-positive
  /// indices or c not dividing f_pi.
  void validate() const;
};

/// Decomposes t^2 - 4q and attaches the supplied endomorphism conductor.
OrderData make_order_data(std::int64_t t, std::uint64_t q, std::int64_t conductor);

enum class CaseTag { NoDistortion, Inert, Split, Ramified };

std::string_view to_string(CaseTag tag) noexcept;

struct ClassificationReport {
  CaseTag case_tag = CaseTag::NoDistortion;
  std::uint64_t ell = 0;
  /// Lines fixed by the action; filled only by the census.
  std::vector<Coords> eigen_subgroups;
  /// Number of distorted lines; filled only by the census.
  std::optional<std::uint64_t> census_distorted;
  std::vector<std::string> notes;
};

/// Case of the classification for ell, from the order data alone.
ClassificationReport classify_case(const OrderData& od, std::uint64_t ell);

/// Marks each of the ell + 1 lines <v> as distorted iff M v is not in <v>.
/// The case tag is the one implied by the number of eigenlines.
ClassificationReport distortion_census(const ModMatrix2& m);
inline ClassificationReport distortion_census(const TorsionMatrix& m) { return distortion_census(m.action); }

/// Number of distorted lines predicted for each case.
std::uint64_t predicted_census(CaseTag tag, std::uint64_t ell) noexcept;

struct TheoremCheck {
  ClassificationReport predicted;
  ClassificationReport observed;
};

/// Thrown by verify_theorem1 when the census disagrees with the prediction.
class PredicateViolation : public Error {
 public:
  PredicateViolation(const std::string& what, TheoremCheck check)
      : Error(ErrorKind::PredicateViolated, what), check_(std::move(check)) {}
  const TheoremCheck& check() const noexcept { return check_; }

 private:
  TheoremCheck check_;
};

/// Compares the census of M with the count predicted from the order data.
/// M must generate O/(ell) (non-scalar) unless the case is NoDistortion, in
/// which case M must be scalar. Throws PredicateViolation on mismatch.
TheoremCheck verify_theorem1(const OrderData& od, const ModMatrix2& m, std::uint64_t ell);

}  // namespace distortion
