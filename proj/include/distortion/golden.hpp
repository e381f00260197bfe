// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "distortion/catalog.hpp"

namespace distortion {

struct GoldenRow {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs every reference check against the catalog (normally the built-in one)
/// and returns one row per assertion, in a fixed order. Failures inside a
/// check become failing rows instead of exceptions.
std::vector<GoldenRow> run_golden_checks(const Catalog& catalog);

}  // namespace distortion
