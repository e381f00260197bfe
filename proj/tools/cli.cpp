// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "distortion/catalog.hpp"
#include "distortion/classify.hpp"
#include "distortion/ddh.hpp"
#include "distortion/endo.hpp"
#include "distortion/golden.hpp"

namespace distortion::cli {

namespace {

struct CurveArgs {
  std::string name;
  std::optional<std::uint64_t> p;
  std::string a4;
  std::string a6;
  std::optional<std::int64_t> conductor;
  std::string catalog_file;
};

struct Options {
  CurveArgs curve;
  std::uint64_t ell = 0;
  std::string a;
  std::string b;
  std::string phi;
  std::string triple;
  std::string sample;
  std::uint64_t seed = kDefaultSeed;
  std::string out_file;
};

std::int64_t parse_i64(const std::string& s, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

Rational parse_coeff(const std::string& s, const char* what) {
  const auto parts = split(s, '/');
  if (parts.size() == 1) return {parse_i64(parts[0], what), 1};
  if (parts.size() != 2) throw Error(ErrorKind::InvalidArgument, std::string("bad ") + what + " '" + s + "'");
  return {parse_i64(parts[0], what), parse_i64(parts[1], what)};
}

Point parse_point(const Curve& c, const std::string& s, const char* what) {
  if (s == "O") return Point::identity();
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be 'x,y' or 'O'");
  return make_point(c, parse_i64(parts[0], what), parse_i64(parts[1], what));
}

Catalog load_catalog(const CurveArgs& args) {
  Catalog catalog = builtin_catalog();
  if (!args.catalog_file.empty()) catalog.merge(load_catalog_file(args.catalog_file));
  return catalog;
}

// Catalog entry named on the command line, or an ad-hoc one from --p/--a4/--a6.
CurveCatalogEntry resolve_entry(const CurveArgs& args) {
  CurveCatalogEntry entry;
  if (!args.name.empty()) {
    entry = load_catalog(args).find(args.name);
    if (args.p) entry.p = args.p;
  } else {
    if (!args.p || args.a4.empty() || args.a6.empty()) {
      throw Error(ErrorKind::InvalidArgument, "give --name or all of --p, --a4, --a6");
    }
    entry.name = "custom";
    entry.p = args.p;
    entry.a4 = parse_coeff(args.a4, "--a4");
    entry.a6 = parse_coeff(args.a6, "--a6");
    entry.conductor = 0;  // unknown unless --conductor
  }
  if (args.conductor) entry.conductor = *args.conductor;
  return entry;
}

void require_ell(const Options& o) {
  if (o.ell == 0) throw Error(ErrorKind::InvalidArgument, "--ell is required");
}

TorsionBasis resolve_basis(const Options& o, const CurveCatalogEntry& entry, const Curve& curve) {
  require_ell(o);
  TorsionContext ctx(curve, o.ell);
  if (!o.a.empty() || !o.b.empty()) {
    if (o.a.empty() || o.b.empty()) throw Error(ErrorKind::InvalidArgument, "give both --A and --B for a basis");
    return TorsionBasis(ctx, parse_point(curve, o.a, "--A"), parse_point(curve, o.b, "--B"));
  }
  if (auto kb = known_basis(entry, o.ell)) {
    return TorsionBasis(ctx, make_point(curve, kb->px, kb->py), make_point(curve, kb->qx, kb->qy));
  }
  return find_torsion_basis(ctx, o.seed);
}

RationalEndomorphism resolve_phi(const Options& o, const Curve& curve) {
  if (o.phi.empty()) throw Error(ErrorKind::InvalidArgument, "--phi is required");
  return make_catalog_endo(o.phi, curve);
}

std::string factorization(const MonicQuadratic& f) {
  switch (f.roots().size()) {
    case 0: return "irreducible";
    case 1: return "repeated";
    default: return "split";
  }
}

int cmd_curve_info(const Options& o, std::ostream& out) {
  const CurveCatalogEntry entry = resolve_entry(o.curve);
  const Curve curve = entry_curve(entry);
  const FrobeniusData frob = count_points(curve);
  const DiscriminantSplit split = decompose_discriminant(frob.trace, frob.q);
  out << "name=" << entry.name << '\n'
      << "p=" << curve.p() << '\n'
      << "a4=" << curve.a4() << '\n'
      << "a6=" << curve.a6() << '\n'
      << "order=" << frob.order << '\n'
      << "t=" << frob.trace << '\n'
      << "ordinary=true\n"
      << "d_K=" << split.d_k << '\n'
      << "f_pi=" << split.f_pi << '\n';
  if (entry.conductor > 0) {
    const OrderData od{split.d_k, split.f_pi, entry.conductor};
    od.validate();
    out << "conductor=" << od.conductor << '\n' << "index_O_Zpi=" << od.index_in_endo() << '\n';
  }
  return kExitOk;
}

int cmd_pairing(const Options& o, std::ostream& out) {
  require_ell(o);
  const Curve curve = entry_curve(resolve_entry(o.curve));
  const Point a = parse_point(curve, o.a, "--A");
  const Point b = parse_point(curve, o.b, "--B");
  const PairingValue e = weil_pairing(curve, o.ell, a, b);
  out << "ell=" << o.ell << '\n' << "A=" << a << '\n' << "B=" << b << '\n' << "e=" << e.value << '\n';
  return kExitOk;
}

int cmd_endo_apply(const Options& o, std::ostream& out) {
  const Curve curve = entry_curve(resolve_entry(o.curve));
  const RationalEndomorphism phi = resolve_phi(o, curve);
  const Point a = parse_point(curve, o.a, "--A");
  out << "phi=" << phi.label() << '\n' << "A=" << a << '\n' << "image=" << endo_eval(phi, a) << '\n';
  return kExitOk;
}

void print_basis(const TorsionBasis& basis, std::ostream& out) {
  out << "ell=" << basis.ell() << '\n'
      << "P=" << basis.p() << '\n'
      << "Q=" << basis.q() << '\n'
      << "e_PQ=" << basis.pairing().value << '\n';
}

int cmd_endo_matrix(const Options& o, std::ostream& out) {
  const CurveCatalogEntry entry = resolve_entry(o.curve);
  const Curve curve = entry_curve(entry);
  const RationalEndomorphism phi = resolve_phi(o, curve);
  const TorsionMatrix m = endo_matrix(phi, resolve_basis(o, entry, curve));
  const MonicQuadratic f = char_poly_mod_ell(m);
  out << "phi=" << phi.label() << '\n';
  print_basis(m.basis, out);
  out << "m11=" << m.action.at(0, 0) << '\n'
      << "m12=" << m.action.at(0, 1) << '\n'
      << "m21=" << m.action.at(1, 0) << '\n'
      << "m22=" << m.action.at(1, 1) << '\n'
      << "trace=" << m.action.trace() << '\n'
      << "det=" << m.action.det() << '\n'
      << "charpoly=" << to_string(f) << '\n'
      << "minpoly_mod_ell=" << to_string(phi.minpoly().reduce(m.basis.ell())) << '\n'
      << "factorization=" << factorization(f) << '\n';
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  require_ell(o);
  const CurveCatalogEntry entry = resolve_entry(o.curve);
  if (entry.conductor <= 0) throw Error(ErrorKind::InvalidArgument, "--conductor is required for custom curves");
  const ValidatedEntry v = validate_entry(entry);
  const ClassificationReport r = classify_case(v.order, o.ell);
  out << "ell=" << o.ell << '\n'
      << "t=" << v.frob.trace << '\n'
      << "d_K=" << v.order.d_k << '\n'
      << "f_pi=" << v.order.f_pi << '\n'
      << "conductor=" << v.order.conductor << '\n'
      << "index_O_Zpi=" << v.order.index_in_endo() << '\n'
      << "kronecker=" << kronecker(v.order.d_k, static_cast<std::int64_t>(o.ell)) << '\n'
      << "case=" << to_string(r.case_tag) << '\n'
      << "predicted_distorted=" << predicted_census(r.case_tag, o.ell) << '\n';
  for (const auto& note : r.notes) out << "note=" << note << '\n';
  return r.case_tag == CaseTag::NoDistortion ? kExitNegative : kExitOk;
}

int cmd_census(const Options& o, std::ostream& out) {
  const CurveCatalogEntry entry = resolve_entry(o.curve);
  const Curve curve = entry_curve(entry);
  const RationalEndomorphism phi = resolve_phi(o, curve);
  const TorsionMatrix m = endo_matrix(phi, resolve_basis(o, entry, curve));
  const ClassificationReport census = distortion_census(m);
  out << "phi=" << phi.label() << '\n';
  print_basis(m.basis, out);
  const auto subgroups = enumerate_subgroups(m.basis);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const Coords v = subgroups[i].coords;
    const bool fixed = cross(m.basis.ell(), v, m.action.apply(v)) == 0;
    out << "subgroup." << i << "=" << v.a << ',' << v.b << " generator=" << subgroups[i].generator
        << " distorted=" << (fixed ? "false" : "true") << '\n';
  }
  out << "census_distorted=" << *census.census_distorted << '\n'
      << "census_case=" << to_string(census.case_tag) << '\n';
  int code = *census.census_distorted == 0 ? kExitNegative : kExitOk;
  if (entry.conductor > 0) {
    const ValidatedEntry v = validate_entry(entry);
    try {
      const TheoremCheck check = verify_theorem1(v.order, m.action, m.basis.ell());
      out << "predicted_case=" << to_string(check.predicted.case_tag) << '\n' << "theorem1=holds\n";
    } catch (const PredicateViolation& e) {
      out << "predicted_case=" << to_string(e.check().predicted.case_tag) << '\n' << "theorem1=violated\n";
      code = kExitNegative;
    }
  }
  return code;
}

int cmd_ddh(const Options& o, std::ostream& out) {
  const CurveCatalogEntry entry = resolve_entry(o.curve);
  const Curve curve = entry_curve(entry);
  const RationalEndomorphism phi = resolve_phi(o, curve);
  const TorsionBasis basis = resolve_basis(o, entry, curve);
  DdhInstance inst = [&] {
    if (!o.sample.empty()) {
      if (o.sample != "honest" && o.sample != "dishonest") {
        throw Error(ErrorKind::InvalidArgument, "--sample is 'honest' or 'dishonest'");
      }
      return ddh_sample(basis, o.sample == "honest", o.seed);
    }
    const auto parts = split(o.triple, ',');
    if (parts.size() != 3) throw Error(ErrorKind::InvalidArgument, "--triple takes a,b,c");
    const std::uint64_t ell = basis.ell();
    return make_ddh_instance(basis, reduce_signed(parse_i64(parts[0], "--triple"), ell),
                             reduce_signed(parse_i64(parts[1], "--triple"), ell),
                             reduce_signed(parse_i64(parts[2], "--triple"), ell));
  }();
  const bool decision = ddh_decide(basis, phi, inst);
  out << "phi=" << phi.label() << '\n'
      << "ell=" << basis.ell() << '\n'
      << "base=" << inst.base << '\n'
      << "R=" << inst.r << '\n'
      << "S=" << inst.s << '\n'
      << "T=" << inst.t << '\n'
      << "lhs=" << weil_pairing(curve, basis.ell(), inst.r, endo_eval(phi, inst.s)).value << '\n'
      << "rhs=" << weil_pairing(curve, basis.ell(), inst.base, endo_eval(phi, inst.t)).value << '\n'
      << "ddh=" << (decision ? "true" : "false") << '\n';
  return decision ? kExitOk : kExitNegative;
}

int cmd_paper_examples(const Options& o, std::ostream& out) {
  const auto rows = run_golden_checks(load_catalog(o.curve));
  std::size_t failed = 0;
  for (const auto& row : rows) {
    out << "C" << row.criterion << '.' << row.name << '=' << (row.pass ? "PASS" : "FAIL") << ' ' << row.detail
        << '\n';
    if (!row.pass) ++failed;
  }
  out << "passed=" << rows.size() - failed << '\n' << "failed=" << failed << '\n';
  return failed == 0 ? kExitOk : kExitNegative;
}

int cmd_catalog_export(const Options& o, std::ostream& out) {
  const Catalog catalog = load_catalog(o.curve);
  if (o.out_file.empty()) {
    export_catalog(catalog, out);
  } else {
    std::ofstream file(o.out_file);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + o.out_file + "'");
    export_catalog(catalog, file);
    out << "written=" << o.out_file << '\n';
  }
  return kExitOk;
}

void add_curve_options(CLI::App* app, Options& o) {
  app->add_option("--name", o.curve.name, "Catalog entry name");
  app->add_option("--p", o.curve.p, "Prime modulus");
  app->add_option("--a4,--a", o.curve.a4, "Coefficient a4 (integer or num/den)");
  app->add_option("--a6,--b", o.curve.a6, "Coefficient a6 (integer or num/den)");
  app->add_option("--conductor", o.curve.conductor, "Conductor [O_K : End(E)]");
  app->add_option("--catalog", o.curve.catalog_file, "Extra catalog file merged over the built-in one");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Distortion maps on ordinary elliptic curves with rational ell-torsion"};
  app.require_subcommand(1);

  auto* curve_info = app.add_subcommand("curve-info", "Point count, trace and discriminant data");
  add_curve_options(curve_info, o);

  auto* pairing = app.add_subcommand("pairing", "Weil pairing e_ell(A, B)");
  add_curve_options(pairing, o);

  auto* endo_apply = app.add_subcommand("endo-apply", "Apply a catalog endomorphism to a point");
  add_curve_options(endo_apply, o);

  auto* endo_mat = app.add_subcommand("endo-matrix", "Action matrix of an endomorphism on E[ell]");
  add_curve_options(endo_mat, o);

  auto* classify = app.add_subcommand("classify", "Splitting case of ell from the order data");
  add_curve_options(classify, o);

  auto* census = app.add_subcommand("census", "Which order-ell subgroups an endomorphism distorts");
  add_curve_options(census, o);

  auto* ddh = app.add_subcommand("ddh", "Decide a Diffie-Hellman triple with a distortion map");
  add_curve_options(ddh, o);

  auto* examples = app.add_subcommand("paper-examples", "Run every reference check and print PASS/FAIL rows");
  examples->add_option("--catalog", o.curve.catalog_file, "Catalog file merged over the built-in one");

  auto* catalog = app.add_subcommand("catalog", "Catalog utilities");
  auto* catalog_export = catalog->add_subcommand("export", "Write the catalog as key=value text");
  catalog->require_subcommand(1);
  catalog_export->add_option("--out", o.out_file, "Output file (stdout by default)");
  catalog_export->add_option("--catalog", o.curve.catalog_file, "Catalog file merged over the built-in one");

  for (auto* sub : {pairing, endo_mat, classify, census, ddh}) sub->add_option("--ell", o.ell, "Torsion prime");
  for (auto* sub : {pairing, endo_apply, endo_mat, census, ddh}) sub->add_option("--A", o.a, "Point x,y");
  for (auto* sub : {pairing, endo_mat, census, ddh}) sub->add_option("--B", o.b, "Point x,y");
  for (auto* sub : {endo_apply, endo_mat, census, ddh}) sub->add_option("--phi", o.phi, "Endomorphism label");
  for (auto* sub : {endo_mat, census, ddh}) sub->add_option("--seed", o.seed, "Basis/instance sampling seed");
  ddh->add_option("--triple", o.triple, "Exponents a,b,c of (aP, bP, cP)");
  ddh->add_option("--sample", o.sample, "Generate an 'honest' or 'dishonest' instance from --seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*curve_info) return cmd_curve_info(o, out);
    if (*pairing) return cmd_pairing(o, out);
    if (*endo_apply) return cmd_endo_apply(o, out);
    if (*endo_mat) return cmd_endo_matrix(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*census) return cmd_census(o, out);
    if (*ddh) return cmd_ddh(o, out);
    if (*examples) return cmd_paper_examples(o, out);
    if (*catalog_export) return cmd_catalog_export(o, out);
  } catch (const Error& e) {
    err << "error=" << to_string(e.kind()) << '\n' << "message=" << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace distortion::cli
