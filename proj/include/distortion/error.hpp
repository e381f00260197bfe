// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace distortion {

enum class ErrorKind {
  InvalidArgument,
  NotPrime,
  ZeroInverse,
  SingularCurve,
  PointNotOnCurve,
  SupersingularCurve,
  CurveTooLarge,
  BadReduction,
  TorsionNotRational,
  SamplingExhausted,
  NotInTorsion,
  NotTorsion,
  DivisorCollision,
  IncompatibleCurve,
  ImageOffCurve,
  NotImaginary,
  InconsistentInput,
  PredicateViolated,
  NotADistortionMap,
  InstanceInvalid,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and machine
/// checkable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace distortion
