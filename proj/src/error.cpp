// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/error.hpp"

namespace distortion {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::SupersingularCurve: return "SupersingularCurve";
    case ErrorKind::CurveTooLarge: return "CurveTooLarge";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::TorsionNotRational: return "TorsionNotRational";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::NotInTorsion: return "NotInTorsion";
    case ErrorKind::NotTorsion: return "NotTorsion";
    case ErrorKind::DivisorCollision: return "DivisorCollision";
    case ErrorKind::IncompatibleCurve: return "IncompatibleCurve";
    case ErrorKind::ImageOffCurve: return "ImageOffCurve";
    case ErrorKind::NotImaginary: return "NotImaginary";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::PredicateViolated: return "PredicateViolated";
    case ErrorKind::NotADistortionMap: return "NotADistortionMap";
    case ErrorKind::InstanceInvalid: return "InstanceInvalid";
  }
  return "Unknown";
}

}  // namespace distortion
