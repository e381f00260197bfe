// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace distortion {

namespace {

CurveCatalogEntry integral(std::string name, std::uint64_t p, std::int64_t a4, std::int64_t a6,
                           std::vector<std::string> endos, std::int64_t conductor, std::string notes) {
  CurveCatalogEntry e;
  e.name = std::move(name);
  e.p = p;
  e.a4 = {a4, 1};
  e.a6 = {a6, 1};
  e.endos = std::move(endos);
  e.conductor = conductor;
  e.notes = std::move(notes);
  return e;
}

Catalog make_builtin() {
  std::vector<CurveCatalogEntry> entries;
  for (std::uint64_t p : {5, 13, 17, 29}) {
    entries.push_back(integral("ex1-p" + std::to_string(p), p, 1, 0, {"sqrt_minus_one"}, 1,
                               "y^2 = x^3 + x, CM by Z[i]; [i](x,y) = (-x, i*y) fixes <(0,0)>"));
  }
  auto ex2 = integral("ex2-f701", 701, -35, 98, {"alpha_701"}, 1,
                      "End(E) is the maximal order of Q(sqrt(-7)); t=2 gives t^2-4q = -2800 = 20^2*(-7), "
                      "so Z[pi] has conductor 20 (a value of 10 quoted for this curve disagrees with the count)");
  ex2.bases = {{5, 224, 31, 573, 450}, {2, 319, 0, 389, 0}};
  entries.push_back(std::move(ex2));

  CurveCatalogEntry ex4;
  ex4.name = "ex4-rational";
  ex4.a4 = {-3375, 121};
  ex4.a6 = {6750, 121};
  ex4.conductor = 2;
  ex4.notes = "curve over Q with j = 2^4 3^3 5^3, CM by the order of conductor 2 in Q(sqrt(-3)); "
              "conductor 108900 = 2^2 3^2 5^2 11^2";
  entries.push_back(ex4);
  ex4.name = "ex4-13";
  ex4.p = 13;
  ex4.notes = "good reduction of ex4-rational at 13; full 2-torsion over F_13";
  entries.push_back(std::move(ex4));
  return Catalog(std::move(entries));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename Int>
Int parse_int(std::string_view s, std::size_t line) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "catalog line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
  }
  return v;
}

Rational parse_rational(std::string_view s, std::size_t line) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return {parse_int<std::int64_t>(s, line), 1};
  Rational r{parse_int<std::int64_t>(s.substr(0, slash), line), parse_int<std::int64_t>(s.substr(slash + 1), line)};
  if (r.den == 0) throw Error(ErrorKind::InvalidArgument, "catalog line " + std::to_string(line) + ": zero denominator");
  return r;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string format_rational(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace

Curve entry_curve(const CurveCatalogEntry& entry, std::optional<std::uint64_t> p_override) {
  const auto p = p_override ? p_override : entry.p;
  if (!p) throw Error(ErrorKind::InvalidArgument, "entry '" + entry.name + "' needs a prime (--p)");
  return reduce_rational_curve(entry.a4.num, entry.a4.den, entry.a6.num, entry.a6.den, *p);
}

ValidatedEntry validate_entry(const CurveCatalogEntry& entry, std::optional<std::uint64_t> p_override) {
  Curve curve = entry_curve(entry, p_override);
  const FrobeniusData frob = count_points(curve);
  OrderData order = make_order_data(frob.trace, frob.q, entry.conductor);
  return {std::move(curve), frob, order};
}

std::optional<KnownBasis> known_basis(const CurveCatalogEntry& entry, std::uint64_t ell) {
  for (const auto& b : entry.bases) {
    if (b.ell == ell) return b;
  }
  return std::nullopt;
}

const CurveCatalogEntry& Catalog::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown catalog entry '" + std::string(name) + "'");
}

bool Catalog::contains(std::string_view name) const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.name == name; });
}

void Catalog::merge(const Catalog& other) {
  for (const auto& e : other.entries_) {
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& x) { return x.name == e.name; });
    if (it != entries_.end()) {
      *it = e;
    } else {
      entries_.push_back(e);
    }
  }
}

const Catalog& builtin_catalog() {
  static const Catalog catalog = make_builtin();
  return catalog;
}

void export_catalog(const Catalog& catalog, std::ostream& os) {
  os << "# curve catalog: [name] sections with key=value lines\n";
  for (const auto& e : catalog.entries()) {
    os << "\n[" << e.name << "]\n";
    if (e.p) os << "p=" << *e.p << '\n';
    os << "a4=" << format_rational(e.a4) << '\n';
    os << "a6=" << format_rational(e.a6) << '\n';
    if (!e.endos.empty()) {
      os << "endos=";
      for (std::size_t i = 0; i < e.endos.size(); ++i) os << (i ? "," : "") << e.endos[i];
      os << '\n';
    }
    os << "conductor=" << e.conductor << '\n';
    for (const auto& b : e.bases) {
      os << "basis." << b.ell << '=' << b.px << ',' << b.py << ';' << b.qx << ',' << b.qy << '\n';
    }
    if (!e.notes.empty()) os << "notes=" << e.notes << '\n';
  }
}

Catalog parse_catalog(std::istream& is) {
  std::vector<CurveCatalogEntry> entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorKind::InvalidArgument, "catalog line " + std::to_string(line_no) + ": " + why);
    };
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) fail("malformed section header");
      entries.emplace_back();
      entries.back().name = trim(std::string_view(line).substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key=value");
    if (entries.empty()) fail("key outside of a section");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    CurveCatalogEntry& e = entries.back();
    if (key == "p") {
      e.p = parse_int<std::uint64_t>(value, line_no);
    } else if (key == "a4") {
      e.a4 = parse_rational(value, line_no);
    } else if (key == "a6") {
      e.a6 = parse_rational(value, line_no);
    } else if (key == "endos") {
      e.endos = split(value, ',');
    } else if (key == "conductor") {
      e.conductor = parse_int<std::int64_t>(value, line_no);
    } else if (key.starts_with("basis.")) {
      KnownBasis b;
      b.ell = parse_int<std::uint64_t>(std::string_view(key).substr(6), line_no);
      const auto pts = split(value, ';');
      if (pts.size() != 2) fail("basis needs two points 'x,y;x,y'");
      const auto pc = split(pts[0], ',');
      const auto qc = split(pts[1], ',');
      if (pc.size() != 2 || qc.size() != 2) fail("basis points are 'x,y'");
      b.px = parse_int<std::int64_t>(pc[0], line_no);
      b.py = parse_int<std::int64_t>(pc[1], line_no);
      b.qx = parse_int<std::int64_t>(qc[0], line_no);
      b.qy = parse_int<std::int64_t>(qc[1], line_no);
      e.bases.push_back(b);
    } else if (key == "notes") {
      e.notes = value;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  return Catalog(std::move(entries));
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open catalog file '" + path + "'");
  return parse_catalog(in);
}

}  // namespace distortion
