#include <doctest.h>

#include <random>

#include "realforms/errors.hpp"
#include "realforms/invariants.hpp"
#include "realforms/parse.hpp"
#include "realforms/psi.hpp"
#include "realforms/torus.hpp"

using namespace realforms;

namespace {

PsiElement make_psi(const CycloNum& a, const CycloNum& b, const CycloNum& c,
                    const CycloNum& d, const UniPoly& r) {
  PsiElement f;
  f.a = a;
  f.b = b;
  f.c = c;
  f.d = d;
  f.r = r;
  return f;
}

std::array<MultiPoly, 3> compose_maps(const std::array<MultiPoly, 3>& f,
                                      const std::array<MultiPoly, 3>& g) {
  return {f[0].substitute({g[0], g[1], g[2]}),
          f[1].substitute({g[0], g[1], g[2]}),
          f[2].substitute({g[0], g[1], g[2]})};
}

}  // namespace

TEST_CASE("composition of fibration-preserving automorphisms") {
  const UniPoly p = parse_poly("z^2");
  const CycloNum one = CycloNum::one();
  const UniPoly r = parse_poly("1 + 2*x", "x");
  const UniPoly r2 = parse_poly("x^2 - 3", "x");

  const PsiElement f = make_psi(one, one, one, CycloNum::zero(), r);
  const PsiElement g = make_psi(one, one, one, CycloNum::zero(), r2);
  CHECK((f * g).r == r + r2);

  const PsiElement h =
      make_psi(CycloNum::from_int(2), CycloNum(Rational(1, 2)), one,
               CycloNum::zero(), r);
  CHECK(h.is_valid_for(p));
  CHECK(h * h.inverse() == PsiElement::identity());
  CHECK(h.inverse() * h == PsiElement::identity());

  // closed-form law agrees with substitution of the full maps
  const auto lhs = (h * g).to_map(p);
  const auto rhs = compose_maps(h.to_map(p), g.to_map(p));
  for (int k = 0; k < 3; ++k) CHECK(lhs[k] == rhs[k]);
}

TEST_CASE("coefficientwise Galois conjugation") {
  const CycloNum i = CycloNum::imaginary_unit();
  const PsiElement f = make_psi(i, -i, CycloNum::one(), CycloNum::zero(),
                                UniPoly::zero("x"));
  CHECK(f.galois_conj() ==
        make_psi(-i, i, CycloNum::one(), CycloNum::zero(), UniPoly::zero("x")));
  CHECK(f.galois_conj().galois_conj() == f);

  MonomialAut m;
  m.a = i;
  m.b = -i;
  m.M = GL2ZMatrix::identity();
  CHECK(m.galois_conj().a == -i);
  CHECK(m.galois_conj().b == i);
  CHECK(m.galois_conj().galois_conj() == m);
}

TEST_CASE("cocycle condition") {
  CHECK(is_cocycle(PsiElement::identity()));
  const CycloNum i = CycloNum::imaginary_unit();
  const PsiElement f =
      make_psi(CycloNum::one(), CycloNum::one(), CycloNum::one(),
               CycloNum::zero(), parse_poly("i*x^2", "x"));
  CHECK(is_cocycle(f));
  const PsiElement g =
      make_psi(CycloNum::from_int(2), CycloNum(Rational(1, 2)),
               CycloNum::one(), CycloNum::zero(), UniPoly::zero("x"));
  CHECK_FALSE(is_cocycle(g));
}

TEST_CASE("reduction of fibration-preserving cocycles") {
  const UniPoly p = parse_poly("z^2");

  PsiElement tau =
      make_psi(CycloNum::one(), CycloNum::one(), CycloNum::one(),
               CycloNum::zero(), parse_poly("i*x^2", "x"));
  BReductionResult red = reduce_B_cocycle(tau, p);
  CHECK(red.normal_form == PsiElement::identity());
  CHECK(tau.twisted_conjugate_by(red.witness) == red.normal_form);

  red = reduce_B_cocycle(PsiElement::identity(), p);
  CHECK(red.normal_form == PsiElement::identity());

  tau = make_psi(-CycloNum::one(), -CycloNum::one(), CycloNum::one(),
                 CycloNum::zero(), UniPoly::zero("x"));
  CHECK(tau.is_valid_for(p));
  CHECK(is_cocycle(tau));
  red = reduce_B_cocycle(tau, p);
  CHECK(red.normal_form.a == CycloNum::one());
  CHECK(red.normal_form.r.is_zero());
  CHECK(tau.twisted_conjugate_by(red.witness) == red.normal_form);

  CHECK_THROWS_AS(
      reduce_B_cocycle(make_psi(CycloNum::from_int(2), CycloNum(Rational(1, 2)),
                                CycloNum::one(), CycloNum::zero(),
                                UniPoly::zero("x")),
                       p),
      DomainError);
}

TEST_CASE("classification of affine cocycles") {
  const SurfaceInvariants quartic = analyze(parse_poly("z^4 + 1"));
  AClassification r =
      classify_A_cocycle(AffineAutElement::identity(), quartic);
  CHECK(r.cls == ACocycleClass::t1);

  const SurfaceInvariants cubic_monomial = analyze(parse_poly("z^3"));
  const AffineAutElement minus_swap = AffineAutElement::swapped(
      -CycloNum::one(), -CycloNum::one(), CycloNum::one());
  r = classify_A_cocycle(minus_swap, cubic_monomial);
  CHECK(r.cls == ACocycleClass::t3);
  CHECK(minus_swap.twisted_conjugate_by(r.witness) == r.representative);

  r = classify_A_cocycle(minus_swap, quartic);
  CHECK(r.cls == ACocycleClass::t4);
  CHECK(minus_swap.twisted_conjugate_by(r.witness) == r.representative);
}

TEST_CASE("first cohomology of the cyclic groups by brute force") {
  CHECK(h1_mu_bruteforce(3).size() == 1);
  CHECK(h1_mu_bruteforce(4).size() == 2);
  CHECK(h1_mu_bruteforce(1).size() == 1);
  CHECK_THROWS_AS(h1_mu_bruteforce(0), DomainError);
  CHECK_THROWS_AS(h1_mu_bruteforce(65), DomainError);
}

TEST_CASE("sign invariant of projective-linear cocycles") {
  const CycloNum one = CycloNum::one();
  const CycloNum i = CycloNum::imaginary_unit();

  Mat2 id{one, CycloNum::zero(), CycloNum::zero(), one};
  Pgl2Epsilon e = pgl2_cocycle_epsilon(id);
  CHECK(e.epsilon == 1);

  Mat2 j{CycloNum::zero(), -one, one, CycloNum::zero()};
  e = pgl2_cocycle_epsilon(j);
  CHECK(e.epsilon == -1);

  Mat2 diag{i, CycloNum::zero(), CycloNum::zero(), -i};
  e = pgl2_cocycle_epsilon(diag);
  CHECK(e.epsilon == 1);

  Mat2 bad{one, one, CycloNum::zero(), one};
  CHECK_THROWS_AS(pgl2_cocycle_epsilon(bad), DomainError);
}

TEST_CASE("integer involution classes") {
  InvolutionClassification r = gl2z_involution_class({0, 1, 1, 0});
  CHECK(r.cls == InvolutionClass::sigma3);
  CHECK(r.conjugator == GL2ZMatrix::identity());

  r = gl2z_involution_class({-1, 0, 0, -1});
  CHECK(r.cls == InvolutionClass::sigma2);

  r = gl2z_involution_class({1, 3, 0, -1});
  CHECK(r.cls == InvolutionClass::sigma3);
  const GL2ZMatrix M{1, 3, 0, -1};
  CHECK(r.conjugator.inverse() * M * r.conjugator ==
        involution_representative(InvolutionClass::sigma3));

  CHECK_THROWS_AS(gl2z_involution_class({1, 1, 0, 1}), DomainError);
}

TEST_CASE("reduction of torus cocycles") {
  TorusReduction r = reduce_torus_cocycle(MonomialAut::identity());
  CHECK(r.cls == TorusFormClass::g1xg1);

  MonomialAut inv2;  // (x^{-1}, y^{-1})
  inv2.a = CycloNum::one();
  inv2.b = CycloNum::one();
  inv2.M = {-1, 0, 0, -1};
  r = reduce_torus_cocycle(inv2);
  CHECK(r.cls == TorusFormClass::g2xg2);
  CHECK(inv2.twisted_conjugate_by(r.witness) == r.representative);

  MonomialAut mixed;  // (-x^{-1}, y^{-1})
  mixed.a = -CycloNum::one();
  mixed.b = CycloNum::one();
  mixed.M = {-1, 0, 0, -1};
  r = reduce_torus_cocycle(mixed);
  CHECK(r.cls == TorusFormClass::g3xg3);
  CHECK(mixed.twisted_conjugate_by(r.witness) == r.representative);

  MonomialAut notc;
  notc.a = CycloNum::from_int(2);
  notc.b = CycloNum::one();
  notc.M = GL2ZMatrix::identity();
  CHECK_THROWS_AS(reduce_torus_cocycle(notc), DomainError);
}

TEST_CASE("reduction of half-torus cocycles") {
  HalfTorusReduction r = reduce_halftorus_cocycle(HalfTorusAut::identity());
  CHECK(r.cls == HalfTorusFormClass::a1xg1);

  HalfTorusAut f = HalfTorusAut::identity();  // (x, -y^{-1})
  f.mu = -CycloNum::one();
  f.e = -1;
  r = reduce_halftorus_cocycle(f);
  CHECK(r.cls == HalfTorusFormClass::a1xg3);
  CHECK(f.twisted_conjugate_by(r.witness) == r.representative);

  HalfTorusAut g = HalfTorusAut::identity();  // (x*y^{-1}, y^{-1})
  g.m = -1;
  g.mu = CycloNum::one();
  g.e = -1;
  r = reduce_halftorus_cocycle(g);
  CHECK(r.cls == HalfTorusFormClass::projective_minus_conic);
  CHECK(g.twisted_conjugate_by(r.witness) == r.representative);
}

TEST_CASE("group inverses in the torus groups") {
  std::mt19937 rng(301);
  std::uniform_int_distribution<int> small(-2, 2);
  const CycloNum i = CycloNum::imaginary_unit();
  for (int t = 0; t < 20; ++t) {
    MonomialAut m;
    m.a = CycloNum(Rational(small(rng))) + i;
    m.b = CycloNum::from_int(2) + CycloNum(Rational(small(rng))) * i;
    m.M = {1, small(rng), 0, -1};
    if (m.M.det() != -1 && m.M.det() != 1) continue;
    CHECK(m * m.inverse() == MonomialAut::identity());
    CHECK(m.inverse() * m == MonomialAut::identity());

    HalfTorusAut h;
    h.lambda = CycloNum::one() + CycloNum(Rational(small(rng))) * i;
    h.m = small(rng);
    h.c = LaurentPoly::term(CycloNum(Rational(small(rng))), small(rng)) +
          LaurentPoly::term(i, 0);
    h.mu = CycloNum::from_int(3);
    h.e = (t % 2 == 0) ? 1 : -1;
    CHECK(h * h.inverse() == HalfTorusAut::identity());
    CHECK(h.inverse() * h == HalfTorusAut::identity());
  }
}
