// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "distortion/classify.hpp"
#include "distortion/curve.hpp"

namespace distortion {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A torsion basis recorded as affine coordinates.
struct KnownBasis {
  std::uint64_t ell = 0;
  std::int64_t px = 0, py = 0, qx = 0, qy = 0;
  friend bool operator==(const KnownBasis&, const KnownBasis&) = default;
};

struct CurveCatalogEntry {
  std::string name;
  Rational a4;
  Rational a6;
  std::optional<std::uint64_t> p;  // absent for curves over Q without a default prime
  std::vector<std::string> endos;
  std::int64_t conductor = 1;  // [O_K : End(E)]
  std::vector<KnownBasis> bases;
  std::string notes;

  friend bool operator==(const CurveCatalogEntry&, const CurveCatalogEntry&) = default;
};

/// Curve of an entry reduced mod p (the override, else the entry's own prime).
/// Throws Error(InvalidArgument) if no prime is known and Error(BadReduction)
/// for a bad prime.
Curve entry_curve(const CurveCatalogEntry& entry, std::optional<std::uint64_t> p_override = std::nullopt);

struct ValidatedEntry {
  Curve curve;
  FrobeniusData frob;
  OrderData order;
};

/// Nonsingular, ordinary and c | f_pi; throws the corresponding Error otherwise.
ValidatedEntry validate_entry(const CurveCatalogEntry& entry, std::optional<std::uint64_t> p_override = std::nullopt);

std::optional<KnownBasis> known_basis(const CurveCatalogEntry& entry, std::uint64_t ell);

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CurveCatalogEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<CurveCatalogEntry>& entries() const noexcept { return entries_; }

  /// Throws Error(InvalidArgument) for unknown names.
  const CurveCatalogEntry& find(std::string_view name) const;
  bool contains(std::string_view name) const noexcept;

  /// Adds or replaces entries by name, keeping the original order for replacements.
  void merge(const Catalog& other);

 private:
  std::vector<CurveCatalogEntry> entries_;
};

/// The compiled-in curves.
const Catalog& builtin_catalog();

/// Plain-text catalog: "[name]" headers, key=value lines, '#' comments.
void export_catalog(const Catalog& catalog, std::ostream& os);

/// Throws Error(InvalidArgument) with the offending line number on malformed input.
Catalog parse_catalog(std::istream& is);
Catalog load_catalog_file(const std::string& path);

}  // namespace distortion
