#include "realforms/verifier.hpp"

#include <array>

#include "realforms/errors.hpp"
#include "realforms/multipoly.hpp"
#include "realforms/psi.hpp"
#include "realforms/torus.hpp"
#include "realforms/unipoly.hpp"

namespace realforms {

namespace {

using Map3 = std::array<MultiPoly, 3>;

Map3 compose_maps(const Map3& f, const Map3& g) {
  std::vector<MultiPoly> images{g[0], g[1], g[2]};
  return {f[0].substitute(images), f[1].substitute(images),
          f[2].substitute(images)};
}

Map3 conj_map(const Map3& f) {
  return {f[0].conj(), f[1].conj(), f[2].conj()};
}

// linear map (cx x + cy y + cz z) as one component
MultiPoly lin(const CycloNum& cx, const CycloNum& cy, const CycloNum& cz) {
  return cx * MultiPoly::variable("x") + cy * MultiPoly::variable("y") +
         cz * MultiPoly::variable("z");
}

void push(std::vector<VerificationCase>& out, std::string id,
          std::string desc, bool ok, std::string detail = "") {
  out.push_back({std::move(id), std::move(desc), ok,
                 ok ? std::string() : std::move(detail)});
}

// checks (i) tau o conj(theta) = theta and (ii) theta^*(xy - p) = expected
void check_table_row(std::vector<VerificationCase>& out,
                     const std::string& id, const Map3& tau, const Map3& theta,
                     const UniPoly& p, const MultiPoly& expected) {
  Map3 lhs = compose_maps(tau, conj_map(theta));
  bool inter = lhs[0] == theta[0] && lhs[1] == theta[1] && lhs[2] == theta[2];
  push(out, id + "/intertwine",
       "tau o conj(theta) = theta, componentwise", inter,
       "map identity failed");
  MultiPoly F = danielewski_equation(p);
  MultiPoly pulled = substitute_map(F, theta[0], theta[1], theta[2]);
  push(out, id + "/pullback", "theta^*(xy - p) matches the stated equation",
       pulled == expected,
       "pullback gave " + pulled.to_string());
}

MultiPoly x2() { return MultiPoly::term(CycloNum::one(), {2, 0, 0}); }
MultiPoly y2() { return MultiPoly::term(CycloNum::one(), {0, 2, 0}); }

}  // namespace

std::vector<VerificationCase> verify_theta_tables() {
  std::vector<VerificationCase> out;
  const CycloNum one = CycloNum::one();
  const CycloNum I = CycloNum::imaginary_unit();
  const CycloNum zero = CycloNum::zero();
  auto zvar = [] { return MultiPoly::variable("z"); };
  auto zpow = [](unsigned d) {
    return MultiPoly::term(CycloNum::one(), {0, 0, (int)d});
  };

  {  // the four classes over z^2 - 1
    UniPoly p = UniPoly::monomial(one, 2) - UniPoly::constant(one);
    MultiPoly c1 = MultiPoly::constant(one);
    check_table_row(out, "quadric-minus-1/row1",
                    {lin(zero, one, zero), lin(one, zero, zero),
                     lin(zero, zero, -one)},  // (y, x, -z)
                    {lin(one, I, zero), lin(one, -I, zero),
                     lin(zero, zero, I)},  // (x+iy, x-iy, iz)
                    p, x2() + y2() + zpow(2) + c1);
    check_table_row(out, "quadric-minus-1/row2",
                    {lin(zero, -one, zero), lin(-one, zero, zero),
                     lin(zero, zero, one)},  // (-y, -x, z)
                    {lin(one, I, zero), lin(-one, I, zero),
                     lin(zero, zero, one)},  // (x+iy, -x+iy, z)
                    p, -(x2() + y2() + zpow(2) - c1));
    check_table_row(out, "quadric-minus-1/row3",
                    {lin(one, zero, zero), lin(zero, one, zero),
                     lin(zero, zero, one)},  // identity
                    {lin(one, one, zero), lin(-one, one, zero),
                     lin(zero, zero, one)},  // (x+y, y-x, z)
                    p, -(x2() - y2() + zpow(2) - c1));
    check_table_row(out, "quadric-minus-1/row4",
                    {lin(-one, zero, zero), lin(zero, -one, zero),
                     lin(zero, zero, -one)},  // (-x, -y, -z)
                    {lin(-I, I, zero), lin(I, I, zero),
                     lin(zero, zero, I)},  // (i(-x+y), i(x+y), iz)
                    p, x2() - y2() + zpow(2) + c1);
  }

  {  // the two classes over z^2
    UniPoly p = UniPoly::monomial(one, 2);
    check_table_row(out, "cone/row1",
                    {lin(zero, one, zero), lin(one, zero, zero),
                     lin(zero, zero, -one)},
                    {lin(one, I, zero), lin(one, -I, zero),
                     lin(zero, zero, I)},
                    p, x2() + y2() + zpow(2));
    check_table_row(out, "cone/row2",
                    {lin(one, zero, zero), lin(zero, one, zero),
                     lin(zero, zero, one)},
                    {lin(one, -one, zero), lin(one, one, zero),
                     lin(zero, zero, one)},  // (x-y, x+y, z)
                    p, x2() - y2() - zpow(2));
  }

  for (unsigned d : {3u, 4u, 5u, 6u}) {  // monomial surfaces xy = z^d
    UniPoly p = UniPoly::monomial(one, d);
    std::string base = "monomial-d" + std::to_string(d);
    check_table_row(out, base + "/row1",
                    {lin(one, zero, zero), lin(zero, one, zero),
                     lin(zero, zero, one)},
                    {lin(one, one, zero), lin(one, -one, zero),
                     lin(zero, zero, one)},
                    p, x2() - y2() - zpow(d));
    check_table_row(out, base + "/row3",
                    {lin(zero, one, zero), lin(one, zero, zero),
                     lin(zero, zero, one)},
                    {lin(one, I, zero), lin(one, -I, zero),
                     lin(zero, zero, one)},
                    p, x2() + y2() - zpow(d));
    check_table_row(out, base + "/row4",
                    {lin(zero, -one, zero), lin(-one, zero, zero),
                     lin(zero, zero, one)},
                    {lin(one, I, zero), lin(-one, I, zero),
                     lin(zero, zero, one)},
                    p, -(x2() + y2() + zpow(d)));
  }

  // the generic table over z^m q(z^n), on a concrete battery
  std::vector<UniPoly> qs = {
      UniPoly::variable("t") + UniPoly::constant(one, "t"),
      UniPoly::variable("t") - UniPoly::constant(one, "t"),
      UniPoly::monomial(one, 2, "t") + UniPoly::variable("t") +
          UniPoly::constant(one, "t"),
      CycloNum::from_int(2) * UniPoly::variable("t") +
          UniPoly::constant(CycloNum::from_int(3), "t")};
  std::vector<std::pair<unsigned, unsigned>> mns = {
      {0, 2}, {1, 2}, {2, 4}, {3, 2}};
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    for (auto [m, n] : mns) {
      const UniPoly& q = qs[qi];
      UniPoly zn = UniPoly::monomial(one, n);
      UniPoly p = UniPoly::monomial(one, m) * q.compose(zn);
      UniPoly pm = UniPoly::monomial(one, m) * q.compose(-zn);  // z^m q(-z^n)
      CycloNum alpha = CycloNum::zeta(2 * n, 1);
      CycloNum beta = CycloNum::zeta(4 * n, (long)m);
      CycloNum a = alpha.pow((long)m);
      CycloNum c = CycloNum::zeta(n, 1);
      CycloNum b2 = beta * beta;
      std::string base = "periodic-q" + std::to_string(qi) + "-m" +
                         std::to_string(m) + "-n" + std::to_string(n);
      MultiPoly Zp = MultiPoly::from_unipoly(p, "z");
      MultiPoly Zm = MultiPoly::from_unipoly(pm, "z");
      check_table_row(out, base + "/row1",
                      {lin(one, zero, zero), lin(zero, one, zero),
                       lin(zero, zero, one)},
                      {lin(one, one, zero), lin(one, -one, zero),
                       lin(zero, zero, one)},
                      p, x2() - y2() - Zp);
      check_table_row(out, base + "/row2",
                      {lin(a, zero, zero), lin(zero, a, zero),
                       lin(zero, zero, c)},  // (ax, ay, cz)
                      {lin(beta, beta, zero), lin(beta, -beta, zero),
                       lin(zero, zero, alpha)},
                      p, b2 * (x2() - y2() - Zm));
      check_table_row(out, base + "/row3",
                      {lin(zero, one, zero), lin(one, zero, zero),
                       lin(zero, zero, one)},
                      {lin(one, I, zero), lin(one, -I, zero),
                       lin(zero, zero, one)},
                      p, x2() + y2() - Zp);
      check_table_row(out, base + "/row4",
                      {lin(zero, -one, zero), lin(-one, zero, zero),
                       lin(zero, zero, one)},
                      {lin(one, I, zero), lin(-one, I, zero),
                       lin(zero, zero, one)},
                      p, -(x2() + y2() + Zp));
      check_table_row(out, base + "/row5",
                      {lin(zero, a, zero), lin(a, zero, zero),
                       lin(zero, zero, c)},  // (ay, ax, cz)
                      {lin(beta, beta * I, zero), lin(beta, -beta * I, zero),
                       lin(zero, zero, alpha)},
                      p, b2 * (x2() + y2() - Zm));
      check_table_row(out, base + "/row6",
                      {lin(zero, -a, zero), lin(-a, zero, zero),
                       lin(zero, zero, c)},  // (-ay, -ax, cz)
                      {lin(beta, beta * I, zero), lin(-beta, beta * I, zero),
                       lin(zero, zero, alpha)},
                      p, -(b2 * (x2() + y2() + Zm)));
    }
  }
  return out;
}

std::vector<VerificationCase> verify_quadric_isomorphism() {
  std::vector<VerificationCase> out;
  const CycloNum one = CycloNum::one();
  const CycloNum two = CycloNum::from_int(2);
  const CycloNum four = CycloNum::from_int(4);

  {  // parametrization (2ac, 2bd, ad+bc)/(ad-bc) of xy - z^2 + 1 = 0
    std::vector<std::string> vars = {"a", "b", "c", "d"};
    auto V = [&](const std::string& s) {
      return MultiPoly::variable(s, vars);
    };
    MultiPoly ad = V("a") * V("d"), bc = V("b") * V("c");
    MultiPoly lhs = four * V("a") * V("b") * V("c") * V("d") -
                    (ad + bc) * (ad + bc) + (ad - bc) * (ad - bc);
    push(out, "parametrization/identity",
         "4abcd - (ad+bc)^2 + (ad-bc)^2 = 0", lhs.is_zero(),
         "nonzero remainder " + lhs.to_string());
  }

  // the 3x3 matrix action with formal parameters
  std::vector<std::string> vars = {"x", "y", "z", "al", "be", "ga", "de"};
  auto V = [&](const std::string& s) { return MultiPoly::variable(s, vars); };
  MultiPoly al = V("al"), be = V("be"), ga = V("ga"), de = V("de");
  MultiPoly X = al * al * V("x") + be * be * V("y") + two * al * be * V("z");
  MultiPoly Y = ga * ga * V("x") + de * de * V("y") + two * ga * de * V("z");
  MultiPoly Z = al * ga * V("x") + be * de * V("y") +
                (al * de + be * ga) * V("z");
  MultiPoly D = al * de - be * ga;
  MultiPoly residual =
      X * Y - Z * Z - D * D * (V("x") * V("y") - V("z") * V("z"));
  push(out, "pgl2-action/preserves-quadric",
       "matrix action satisfies XY - Z^2 = (al de - be ga)^2 (xy - z^2)",
       residual.is_zero(), "nonzero remainder " + residual.to_string());

  {  // determinant of the unscaled matrix is (al de - be ga)^3
    MultiPoly det =
        al * al * (de * de * (al * de + be * ga) - two * ga * de * be * de) -
        be * be * (ga * ga * (al * de + be * ga) - two * ga * de * al * ga) +
        two * al * be * (ga * ga * be * de - de * de * al * ga);
    push(out, "pgl2-action/determinant",
         "matrix determinant equals (al de - be ga)^3",
         det == D * D * D, "determinant mismatch");
  }

  {  // specialization to the identity
    MultiPoly x3 = MultiPoly::variable("x", vars);
    MultiPoly y3 = MultiPoly::variable("y", vars);
    MultiPoly z3 = MultiPoly::variable("z", vars);
    MultiPoly one7 = MultiPoly::constant(one, vars);
    MultiPoly zero7 = MultiPoly::zero(vars);
    std::vector<MultiPoly> images = {x3, y3, z3, one7, zero7, zero7, one7};
    bool ok = X.substitute(images) == x3 && Y.substitute(images) == y3 &&
              Z.substitute(images) == z3 && D.substitute(images) == one7;
    push(out, "pgl2-action/identity-specialization",
         "al = de = 1, be = ga = 0 gives the identity map", ok,
         "specialization failed");
  }
  return out;
}

std::vector<VerificationCase> verify_group_laws() {
  std::vector<VerificationCase> out;
  const CycloNum one = CycloNum::one();
  const CycloNum z3 = CycloNum::zeta(3, 1);

  struct Sample {
    UniPoly p;
    PsiElement f;
  };
  UniPoly psq = UniPoly::monomial(one, 2);
  UniPoly pcube = UniPoly::monomial(one, 3);
  UniPoly pquad = UniPoly::monomial(one, 2) - UniPoly::constant(one);
  std::vector<Sample> samples = {
      {psq, {one, one, one, CycloNum::zero(), UniPoly::variable("x")}},
      {psq, PsiElement::identity()},
      {pcube,
       {z3, z3 * z3, one, CycloNum::zero(),
        UniPoly::monomial(one, 2, "x") + UniPoly::constant(one, "x")}},
      {pquad,
       {CycloNum::from_int(2), CycloNum{Rational(1, 2)}, -one,
        CycloNum::zero(), CycloNum::from_int(3) * UniPoly::variable("x")}},
  };
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [p, f] = samples[i];
    std::string id = "psi-pullback/sample" + std::to_string(i);
    if (!f.is_valid_for(p)) {
      push(out, id, "sample element preserves the fibration", false,
           "invalid sample");
      continue;
    }
    MultiPoly F = danielewski_equation(p);
    Map3 m = f.to_map(p);
    MultiPoly pulled = substitute_map(F, m[0], m[1], m[2]);
    push(out, id, "psi^*(xy - p) = ab (xy - p)", pulled == (f.a * f.b) * F,
         "pullback gave " + pulled.to_string());
  }

  {  // composition law against raw substitution, and associativity
    UniPoly p = pcube;
    PsiElement f{z3, z3 * z3, one, CycloNum::zero(), UniPoly::variable("x")};
    PsiElement g{one, one, z3, CycloNum::zero(),
                 UniPoly::monomial(one, 2, "x")};
    PsiElement h{z3 * z3, z3, one, CycloNum::zero(),
                 UniPoly::constant(CycloNum::imaginary_unit(), "x")};
    bool valid = f.is_valid_for(p) && g.is_valid_for(p) && h.is_valid_for(p);
    push(out, "psi-composition/valid", "composition samples preserve xy = z^3",
         valid, "invalid samples");
    Map3 fg = (f * g).to_map(p);
    Map3 fg2 = compose_maps(f.to_map(p), g.to_map(p));
    push(out, "psi-composition/substitution",
         "(f o g) as a group element matches componentwise substitution",
         fg == fg2, "composition mismatch");
    push(out, "psi-composition/associativity", "(f g) h = f (g h)",
         (f * g) * h == f * (g * h), "associativity failed");
  }
  return out;
}

std::vector<VerificationCase> verify_torus_conjugations() {
  std::vector<VerificationCase> out;
  const CycloNum one = CycloNum::one();
  const CycloNum I = CycloNum::imaginary_unit();
  const GL2ZMatrix minusI{-1, 0, 0, -1};

  {  // torus, sigma2 family: (x, xy) merges the mixed-sign structure
    MonomialAut nu{-one, one, minusI};  // (-x^-1, y^-1)
    MonomialAut alpha{one, one, {1, 0, 1, 1}};  // (x, xy)
    MonomialAut target{-one, -one, minusI};
    push(out, "torus-sigma2/xy-merge",
         "alpha = (x, xy) conjugates (-x^-1, y^-1) to (-x^-1, -y^-1)",
         is_cocycle(nu) && nu.twisted_conjugate_by(alpha) == target,
         "conjugation mismatch");
  }
  {  // torus, sigma2 family: the factor swap
    MonomialAut nu{one, -one, minusI};  // (x^-1, -y^-1)
    MonomialAut alpha{one, one, {0, 1, 1, 0}};  // (y, x)
    MonomialAut target{-one, one, minusI};
    push(out, "torus-sigma2/swap",
         "alpha = (y, x) exchanges the two mixed-sign structures",
         is_cocycle(nu) && nu.twisted_conjugate_by(alpha) == target,
         "conjugation mismatch");
  }
  {  // torus, sigma3 family: (lambda^-1 y, conj(lambda) x) ~ (y, x)
    CycloNum lam = CycloNum::zeta(8, 1);
    MonomialAut nu{lam.inverse(), lam.conj(), {0, 1, 1, 0}};
    MonomialAut alpha{lam.inverse(), one, GL2ZMatrix::identity()};
    MonomialAut target{one, one, {0, 1, 1, 0}};
    push(out, "torus-sigma3/scalar-strip",
         "alpha = (x/lambda, y) reduces the swap structure to (y, x)",
         is_cocycle(nu) && nu.twisted_conjugate_by(alpha) == target,
         "conjugation mismatch");
  }

  LaurentPoly cy =
      I * (LaurentPoly::term(one, 1) + LaurentPoly::term(one, -1));
  CycloNum half{Rational(1, 2)};
  {  // half-torus, trivial matrix part: translation elimination
    bool cond = (cy + cy.conj()).is_zero();
    HalfTorusAut nu{one, 0, cy, one, 1};
    HalfTorusAut alpha{one, 0, half * cy, one, 1};
    push(out, "halftorus-sigma0/shift",
         "c(y) = i(y + y^-1) satisfies c + conj(c) = 0 and "
         "alpha = (x + c(y)/2, y) trivializes (x + c(y), y)",
         cond && is_cocycle(nu) &&
             nu.twisted_conjugate_by(alpha).is_identity(),
         "conjugation mismatch");
  }
  {  // half-torus, sigma1: same c against (x + c(y), y^-1)
    LaurentPoly cond = cy.conj() + cy.substitute_monomial(one, -1);
    HalfTorusAut nu{one, 0, cy, one, -1};
    HalfTorusAut alpha{one, 0, -(half * cy.conj()), one, 1};
    HalfTorusAut target{one, 0, LaurentPoly::zero(), one, -1};
    push(out, "halftorus-sigma1/shift",
         "conj(c)(y) + c(y^-1) = 0 and alpha = (x - conj(c)(y)/2, y) "
         "removes the translation part",
         cond.is_zero() && is_cocycle(nu) &&
             nu.twisted_conjugate_by(alpha) == target,
         "conjugation mismatch");
  }
  {  // half-torus, sigma2: nu = (x y^-1 + c(y), y^-1) with c = i(1 + y^-1)
    LaurentPoly c2 =
        I * (LaurentPoly::constant(one) + LaurentPoly::term(one, -1));
    LaurentPoly cond = c2.conj() * LaurentPoly::term(one, 1) +
                       c2.substitute_monomial(one, -1);
    HalfTorusAut nu{one, -1, c2, one, -1};
    HalfTorusAut alpha{one, 0,
                       -(half * (c2.conj() * LaurentPoly::term(one, 1))), one,
                       1};
    HalfTorusAut target{one, -1, LaurentPoly::zero(), one, -1};
    push(out, "halftorus-sigma2/shift",
         "conj(c)(y) y + c(y^-1) = 0 and alpha = (x - conj(c)(y) y / 2, y) "
         "reduces to (x y^-1, y^-1)",
         cond.is_zero() && is_cocycle(nu) &&
             nu.twisted_conjugate_by(alpha) == target,
         "conjugation mismatch");
  }
  return out;
}

std::vector<VerificationCase> verify_all() {
  std::vector<VerificationCase> out;
  for (auto* fn :
       {verify_theta_tables, verify_quadric_isomorphism, verify_group_laws,
        verify_torus_conjugations}) {
    auto cases = fn();
    out.insert(out.end(), cases.begin(), cases.end());
  }
  return out;
}

}  // namespace realforms
