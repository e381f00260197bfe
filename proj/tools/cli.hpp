// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>

namespace distortion::cli {

/// Exit codes: 0 success / true, 1 negative decision or failed verification,
/// 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInvalid = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace distortion::cli
