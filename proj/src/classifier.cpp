#include "realforms/classifier.hpp"

#include <algorithm>

#include "realforms/errors.hpp"
#include "realforms/sturm.hpp"

namespace realforms {

namespace {

RealFormRep make_representative(const SurfaceInvariants& inv, int a, int b,
                                int c) {
  CycloNum sign_b = b ? -CycloNum::one() : CycloNum::one();
  CycloNum sign_c = c ? -CycloNum::one() : CycloNum::one();
  UniPoly inner =
      UniPoly::monomial(sign_c, inv.n.value_or(1), "z");  // (-1)^c z^n
  UniPoly u = sign_b * (UniPoly::monomial(CycloNum::one(), inv.m, "z") *
                        inv.q.compose(inner));
  MultiPoly eq = MultiPoly::term(CycloNum::one(), {2, 0, 0}) +
                 MultiPoly::term(a ? -CycloNum::one() : CycloNum::one(),
                                 {0, 2, 0}) +
                 MultiPoly::from_unipoly(u, "z");
  RealFormRep rep;
  rep.a = a;
  rep.b = b;
  rep.c = c;
  rep.equation = eq;
  rep.univariate = u;
  rep.label = "S_" + std::to_string(a) + std::to_string(b) +
              std::to_string(c);
  rep.has_real_points = real_point_status(rep);
  return rep;
}

}  // namespace

bool real_point_status(const RealFormRep& rep) {
  if (rep.a == 1) return true;
  return attains_nonpositive(rep.univariate);
}

unsigned count_from_case_list(const SurfaceInvariants& inv) {
  if (inv.d == 2) return inv.hp.infinite ? 2 : 4;
  if (inv.hp.infinite) return inv.d % 2 == 1 ? 2 : 3;
  if (inv.hp.order % 2 == 1) return 3;
  return inv.d % 2 == 1 ? 4 : 6;
}

ClassificationResult classify(const UniPoly& p) {
  if (!p.has_rational_coeffs()) {
    RealFormExistence ex = real_form_exists(p);
    if (!ex.exists)
      throw DomainError("classify: the surface admits no real form");
    if (!ex.real_witness)
      throw DomainError(
          "classify: a real form exists but its witness scalar leaves the "
          "working field");
    ClassificationResult res = classify(*ex.real_witness);
    res.notes.insert(res.notes.begin(),
                     "input had nonrational coefficients; classified the "
                     "real model " + ex.real_witness->to_string());
    return res;
  }
  if (p.degree() < 2)
    throw DomainError("classify: polynomial degree must be at least 2");

  SurfaceInvariants inv = analyze(p);
  ClassificationResult res;
  res.invariants = inv;

  const std::vector<std::array<int, 3>> two = {{0, 0, 0}, {1, 1, 0}};
  const std::vector<std::array<int, 3>> three = {
      {0, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  const std::vector<std::array<int, 3>> four = {
      {0, 0, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 1}};  // S_abb
  const std::vector<std::array<int, 3>> six = {
      {0, 0, 0}, {0, 0, 1}, {0, 1, 0},
      {0, 1, 1}, {1, 1, 0}, {1, 1, 1}};  // S_00c and S_a1c

  std::vector<std::array<int, 3>> bits;
  if (!inv.n.has_value()) {
    if (inv.d == 2) {
      res.table_row = "q = 1, d = 2";
      bits = two;
    } else if (inv.d % 2 == 1) {
      res.table_row = "q = 1, d >= 3 odd";
      bits = two;
      res.notes.push_back(
          "S_010 is merged into S_000 by the isomorphism (x, y, -z)");
    } else {
      res.table_row = "q = 1, d >= 4 even";
      bits = three;
    }
  } else {
    unsigned n = *inv.n;
    if (n % 2 == 1) {
      res.table_row = "q != 1, n odd";
      bits = three;
    } else if (inv.d % 2 == 1) {
      res.table_row = "q != 1, n even, d odd";
      bits = four;
    } else if (n == 2 && inv.d == 2) {
      res.table_row = "q != 1, (n, d) = (2, 2)";
      bits = four;
      UniPoly target = UniPoly::monomial(CycloNum::one(), 2, "z") -
                       UniPoly::constant(CycloNum::one(), "z");
      res.degree2_witness = iso_test(inv.reduced_p, target, ScalarField::QI);
      res.notes.push_back(
          "degree-2 surface isomorphic to the model z^2 - 1; representative "
          "equations keep the actual constant term");
    } else {
      res.table_row = "q != 1, n and d even, (n, d) != (2, 2)";
      bits = six;
    }
  }

  for (const auto& abc : bits)
    res.representatives.push_back(
        make_representative(inv, abc[0], abc[1], abc[2]));
  std::sort(res.representatives.begin(), res.representatives.end(),
            [](const RealFormRep& l, const RealFormRep& r) {
              return std::tie(l.a, l.b, l.c) < std::tie(r.a, r.b, r.c);
            });
  res.count = (unsigned)res.representatives.size();

  if (res.count != count_from_case_list(inv))
    throw InternalError(
        "classify: table row and cohomology case list disagree");
  return res;
}

std::vector<TorusClassEntry> classify_torus(TorusKind which) {
  const TorusClassEntry g1{"Gamma_1", {"x*y - 1 = 0"}, true};
  const TorusClassEntry g2{"Gamma_2", {"x^2 + y^2 - 1 = 0"}, true};
  const TorusClassEntry g3{"Gamma_3", {"x^2 + y^2 + 1 = 0"}, false};
  auto product = [](const TorusClassEntry& u, const TorusClassEntry& v) {
    TorusClassEntry e;
    e.label = u.label + " x " + v.label;
    e.equations = {u.equations[0] + "  (in x1, y1)",
                   v.equations[0] + "  (in x2, y2)"};
    e.has_real_points = u.has_real_points && v.has_real_points;
    return e;
  };
  switch (which) {
    case TorusKind::punctured_line:
      return {g1, g2, g3};
    case TorusKind::torus:
      return {product(g1, g1), product(g1, g2), product(g1, g3),
              product(g2, g2), product(g3, g3),
              {"A^2 minus conic",
               {"complement of x^2 + y^2 = 0 in the affine plane"},
               true}};
    case TorusKind::half_torus: {
      auto line = [&](const TorusClassEntry& v) {
        TorusClassEntry e;
        e.label = "A^1 x " + v.label;
        e.equations = {v.equations[0] + "  (in y1, y2; x free)"};
        e.has_real_points = v.has_real_points;
        return e;
      };
      return {line(g1), line(g2), line(g3),
              {"P^2 minus conic",
               {"complement of x^2 + y^2 = 0 in the projective plane"},
               true}};
    }
  }
  throw InternalError("unreachable torus kind");
}

}  // namespace realforms
