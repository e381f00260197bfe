// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "distortion/golden.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "distortion/ddh.hpp"

namespace distortion {

namespace {

class Recorder {
 public:
  // fn returns (pass, detail); exceptions are reported as failures.
  void check(int criterion, std::string name, const std::function<std::pair<bool, std::string>()>& fn) {
    GoldenRow row{criterion, std::move(name), false, {}};
    try {
      auto [ok, detail] = fn();
      row.pass = ok;
      row.detail = std::move(detail);
    } catch (const std::exception& e) {
      row.detail = e.what();
    }
    rows_.push_back(std::move(row));
  }

  std::vector<GoldenRow> take() { return std::move(rows_); }

 private:
  std::vector<GoldenRow> rows_;
};

std::string str(const Point& p) { return to_string(p); }

TorsionBasis catalog_basis(const CurveCatalogEntry& entry, const Curve& curve, std::uint64_t ell) {
  TorsionContext ctx(curve, ell);
  if (auto kb = known_basis(entry, ell)) {
    return TorsionBasis(ctx, make_point(curve, kb->px, kb->py), make_point(curve, kb->qx, kb->qy));
  }
  return find_torsion_basis(ctx);
}

std::string matrix_str(const ModMatrix2& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

// e(A1 + A2, B) = e(A1, B) e(A2, B), e(A, A) = 1 and e(P, Q) of exact order ell,
// over all of E[ell].
std::pair<bool, std::string> pairing_properties(const TorsionBasis& basis) {
  const Curve& c = basis.curve();
  const std::uint64_t ell = basis.ell();
  std::vector<Point> pts;
  for (std::uint64_t a = 0; a < ell; ++a) {
    for (std::uint64_t b = 0; b < ell; ++b) pts.push_back(basis.combine(a, b));
  }
  const std::size_t n = pts.size();
  auto index = [&](std::size_t i, std::size_t j) {
    const std::uint64_t a = (i / ell + j / ell) % ell;
    const std::uint64_t b = (i % ell + j % ell) % ell;
    return a * ell + b;
  };
  std::vector<FieldElement> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table.push_back(weil_pairing(c, ell, pts[i], pts[j]).value);
  }
  auto e = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (e(i, i).value() != 1) return {false, "e(A,A) != 1 at " + str(pts[i])};
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (e(index(i, j), k) != e(i, k) * e(j, k)) return {false, "left bilinearity fails"};
        if (e(k, index(i, j)) != e(k, i) * e(k, j)) return {false, "right bilinearity fails"};
      }
    }
  }
  const FieldElement w = basis.pairing().value;
  for (std::uint64_t k = 1; k < ell; ++k) {
    if (w.pow(k).value() == 1) return {false, "e(P,Q) has order below ell"};
  }
  if (w.pow(ell).value() != 1) return {false, "e(P,Q)^ell != 1"};
  return {true, std::to_string(n * n) + " pairings"};
}

}  // namespace

std::vector<GoldenRow> run_golden_checks(const Catalog& catalog) {
  Recorder rec;

  // The F_701 curve.
  const CurveCatalogEntry* ex2 = catalog.contains("ex2-f701") ? &catalog.find("ex2-f701") : nullptr;
  auto ex2_curve = [&] {
    if (!ex2) throw Error(ErrorKind::InvalidArgument, "catalog lacks ex2-f701");
    return entry_curve(*ex2);
  };
  auto alpha = [&] { return make_catalog_endo(kAlpha701, ex2_curve()); };

  rec.check(1, "ex2.alpha_image_P", [&] {
    const Curve c = ex2_curve();
    const Point img = endo_eval(alpha(), make_point(c, 224, 31));
    return std::pair{img == make_point(c, 173, 194), "[alpha](224,31)=" + str(img)};
  });
  rec.check(1, "ex2.alpha_image_Q", [&] {
    const Curve c = ex2_curve();
    const Point img = endo_eval(alpha(), make_point(c, 573, 450));
    return std::pair{img == make_point(c, 463, 495), "[alpha](573,450)=" + str(img)};
  });

  rec.check(2, "ex2.pairing_P_alphaP", [&] {
    const Curve c = ex2_curve();
    const Point p = make_point(c, 224, 31);
    const auto e = weil_pairing(c, 5, p, endo_eval(alpha(), p));
    return std::pair{e.value.value() == 464, "e=" + std::to_string(e.value.value()) + " want 464"};
  });
  rec.check(2, "ex2.pairing_Q_alphaQ", [&] {
    const Curve c = ex2_curve();
    const Point q = make_point(c, 573, 450);
    const auto e = weil_pairing(c, 5, q, endo_eval(alpha(), q));
    return std::pair{e.value.value() == 89, "e=" + std::to_string(e.value.value()) + " want 89"};
  });

  rec.check(3, "ex2.matrix_trace_det_charpoly", [&] {
    const Curve c = ex2_curve();
    const TorsionMatrix m = endo_matrix(alpha(), catalog_basis(*ex2, c, 5));
    const MonicQuadratic f = char_poly_mod_ell(m);
    const bool ok = m.action.trace() == 1 && m.action.det() == 2 && f.irreducible();
    return std::pair{ok, "trace=" + std::to_string(m.action.trace()) + " det=" + std::to_string(m.action.det()) +
                             " charpoly=" + to_string(f)};
  });
  rec.check(3, "ex2.matrix_entries", [&] {
    const Curve c = ex2_curve();
    const TorsionMatrix m = endo_matrix(alpha(), catalog_basis(*ex2, c, 5));
    return std::pair{m.action == ModMatrix2(5, 0, -1, 2, 1), "matrix=" + matrix_str(m.action)};
  });

  rec.check(4, "ex3.alpha_kernel_and_fixed", [&] {
    const Curve c = ex2_curve();
    const Point p = make_point(c, 319, 0);
    const Point q = make_point(c, 389, 0);
    const Point ip = endo_eval(alpha(), p);
    const Point iq = endo_eval(alpha(), q);
    return std::pair{ip.is_identity() && iq == q, "[alpha]P=" + str(ip) + " [alpha]Q=" + str(iq)};
  });
  rec.check(4, "ex3.census_split", [&] {
    const Curve c = ex2_curve();
    const ClassificationReport census = distortion_census(endo_matrix(alpha(), catalog_basis(*ex2, c, 2)));
    const ClassificationReport cls = classify_case(OrderData{-7, 20, 1}, 2);
    const bool ok = *census.census_distorted == 1 && cls.case_tag == CaseTag::Split;
    return std::pair{ok, "census=" + std::to_string(*census.census_distorted) + " case=" +
                             std::string(to_string(cls.case_tag))};
  });

  for (std::uint64_t p : {5, 13, 17, 29}) {
    const std::string name = "ex1-p" + std::to_string(p);
    rec.check(5, name + ".fix_and_swap", [&] {
      const CurveCatalogEntry& entry = catalog.find(name);
      const Curve c = entry_curve(entry);
      const RationalEndomorphism i = make_catalog_endo(kSqrtMinusOne, c);
      const FieldElement root = *fe_sqrt(c.field().element(-1));
      const Point zero = make_point(c, 0, 0);
      const Point plus = Point::affine(root, c.field().zero());
      const Point minus = Point::affine(-root, c.field().zero());
      const bool ok = endo_eval(i, zero) == zero && endo_eval(i, plus) == minus && endo_eval(i, minus) == plus;
      return std::pair{ok, "[i](" + str(plus) + ")=" + str(endo_eval(i, plus))};
    });
    rec.check(5, name + ".ramified_census", [&] {
      const CurveCatalogEntry& entry = catalog.find(name);
      const ValidatedEntry v = validate_entry(entry);
      const ClassificationReport cls = classify_case(v.order, 2);
      const TorsionBasis basis = catalog_basis(entry, v.curve, 2);
      const ClassificationReport census = distortion_census(endo_matrix(make_catalog_endo(kSqrtMinusOne, v.curve), basis));
      const bool ok = v.order.d_k == -4 && cls.case_tag == CaseTag::Ramified && *census.census_distorted == 2;
      return std::pair{ok, "d_K=" + std::to_string(v.order.d_k) + " case=" + std::string(to_string(cls.case_tag)) +
                               " census=" + std::to_string(*census.census_distorted)};
    });
  }

  rec.check(6, "ex4.reduction_mod_13", [&] {
    const Curve c = entry_curve(catalog.find("ex4-rational"), 13);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < 13; ++x) {
      if (c.rhs(c.field().element(static_cast<std::int64_t>(x))).is_zero()) roots.push_back(x);
    }
    const bool ok = c.a4().value() == 11 && c.a6().value() == 4 && roots == std::vector<std::uint64_t>{6, 9, 11};
    return std::pair{ok, "a4=" + std::to_string(c.a4().value()) + " a6=" + std::to_string(c.a6().value()) +
                             " roots=" + std::to_string(roots.size())};
  });
  rec.check(6, "ex4.no_distortion", [&] {
    const ClassificationReport cls = classify_case(validate_entry(catalog.find("ex4-13")).order, 2);
    const ClassificationReport direct = classify_case(OrderData{-3, 4, 2}, 2);
    const bool ok = cls.case_tag == CaseTag::NoDistortion && direct.case_tag == CaseTag::NoDistortion;
    return std::pair{ok, "case=" + std::string(to_string(cls.case_tag))};
  });
  rec.check(6, "ex4.bad_reduction_mod_11", [&] {
    try {
      entry_curve(catalog.find("ex4-rational"), 11);
    } catch (const Error& e) {
      return std::pair{e.kind() == ErrorKind::BadReduction, std::string(to_string(e.kind()))};
    }
    return std::pair{false, std::string("reduction mod 11 succeeded")};
  });

  rec.check(7, "ex2.ddh_exhaustive", [&] {
    const Curve c = ex2_curve();
    const TorsionBasis basis = catalog_basis(*ex2, c, 5);
    const auto instances = ddh_enumerate(basis);
    const auto got = ddh_decide_batch(basis, alpha(), instances);
    std::size_t agree = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if ((got[i] != 0) == instances[i].truth->is_dh(5)) ++agree;
    }
    return std::pair{agree == instances.size(),
                     std::to_string(agree) + "/" + std::to_string(instances.size()) + " triples"};
  });

  for (std::uint64_t ell : {2, 5}) {
    rec.check(8, "ex2.pairing_properties_ell" + std::to_string(ell), [&] {
      return pairing_properties(catalog_basis(*ex2, ex2_curve(), ell));
    });
  }
  rec.check(8, "catalog.charpoly_identity", [&] {
    std::size_t checked = 0;
    for (const auto& entry : catalog.entries()) {
      if (!entry.p) continue;
      const Curve c = entry_curve(entry);
      const FrobeniusData frob = count_points(c);
      for (std::uint64_t ell : {2, 3, 5, 7}) {
        if (frob.order % (ell * ell) != 0) continue;
        std::optional<TorsionBasis> basis;
        try {
          basis.emplace(catalog_basis(entry, c, ell));
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::TorsionNotRational || e.kind() == ErrorKind::SamplingExhausted) continue;
          throw;
        }
        std::vector<std::string> labels = entry.endos;
        labels.push_back("scalar(3)");
        for (const auto& label : labels) {
          const RationalEndomorphism e = make_catalog_endo(label, c);
          if (char_poly_mod_ell(endo_matrix(e, *basis)) != e.minpoly().reduce(ell)) {
            return std::pair{false, label + " on " + entry.name + " ell=" + std::to_string(ell)};
          }
          ++checked;
        }
      }
    }
    return std::pair{checked > 0, std::to_string(checked) + " (endo, ell) pairs"};
  });
  rec.check(8, "census_trichotomy", [&] {
    std::size_t matrices = 0;
    for (std::uint64_t ell : {2, 3, 5}) {
      const auto l = static_cast<std::int64_t>(ell);
      for (std::int64_t a = 0; a < l; ++a)
        for (std::int64_t b = 0; b < l; ++b)
          for (std::int64_t c = 0; c < l; ++c)
            for (std::int64_t d = 0; d < l; ++d) {
              const ModMatrix2 m(ell, a, b, c, d);
              if (m.is_scalar()) continue;
              const std::uint64_t n = *distortion_census(m).census_distorted;
              if (n != ell - 1 && n != ell && n != ell + 1) return std::pair{false, "census " + matrix_str(m)};
              ++matrices;
            }
    }
    return std::pair{true, std::to_string(matrices) + " non-scalar matrices"};
  });
  rec.check(8, "catalog.hasse_lagrange", [&] {
    std::size_t curves = 0;
    for (const auto& entry : catalog.entries()) {
      if (!entry.p) continue;
      const Curve c = entry_curve(entry);
      const FrobeniusData frob = count_points(c);
      const auto t = static_cast<long double>(frob.trace);
      if (t * t > 4.0L * static_cast<long double>(frob.q)) return std::pair{false, "Hasse fails on " + entry.name};
      for (const Point& pt : enumerate_points(c)) {
        if (!scalar_mul_unchecked(c, frob.order, pt).is_identity()) {
          return std::pair{false, "#E*A != O on " + entry.name};
        }
      }
      ++curves;
    }
    return std::pair{curves > 0, std::to_string(curves) + " curves"};
  });

  rec.check(9, "theorem.inert_ex2", [&] {
    const ValidatedEntry v = validate_entry(*ex2);
    verify_theorem1(v.order, endo_matrix(alpha(), catalog_basis(*ex2, v.curve, 5)).action, 5);
    return std::pair{true, std::string("6 of 6 distorted")};
  });
  rec.check(9, "theorem.split_ex3", [&] {
    const ValidatedEntry v = validate_entry(*ex2);
    verify_theorem1(v.order, endo_matrix(alpha(), catalog_basis(*ex2, v.curve, 2)).action, 2);
    return std::pair{true, std::string("1 of 3 distorted")};
  });
  rec.check(9, "theorem.ramified_ex1", [&] {
    for (std::uint64_t p : {5, 13, 17, 29}) {
      const CurveCatalogEntry& entry = catalog.find("ex1-p" + std::to_string(p));
      const ValidatedEntry v = validate_entry(entry);
      verify_theorem1(v.order,
                      endo_matrix(make_catalog_endo(kSqrtMinusOne, v.curve), catalog_basis(entry, v.curve, 2)).action,
                      2);
    }
    return std::pair{true, std::string("2 of 3 distorted for p in {5,13,17,29}")};
  });
  rec.check(9, "theorem.no_distortion_ex4", [&] {
    const CurveCatalogEntry& entry = catalog.find("ex4-13");
    const ValidatedEntry v = validate_entry(entry);
    const TorsionBasis basis = catalog_basis(entry, v.curve, 2);
    verify_theorem1(v.order, endo_matrix(make_catalog_endo("scalar(3)", v.curve), basis).action, 2);
    return std::pair{true, std::string("0 of 3 distorted")};
  });

  return rec.take();
}

}  // namespace distortion
