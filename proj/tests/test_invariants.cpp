#include <doctest.h>

#include <random>

#include "realforms/errors.hpp"
#include "realforms/invariants.hpp"
#include "realforms/parse.hpp"

using namespace realforms;

namespace {

// lambda * p(z + mu) computed directly, for witness soundness checks
UniPoly apply_reduction_witness(const UniPoly& p, const CycloNum& lambda,
                                const CycloNum& mu) {
  return lambda * p.compose_affine(CycloNum::one(), mu);
}

}  // namespace

TEST_CASE("reduction to monic form with vanishing subleading term") {
  SurfaceInvariants inv = reduce_form(parse_poly("2*z^2 + 4*z + 2"));
  CHECK(inv.reduced_p == parse_poly("z^2"));
  CHECK(inv.witness_lambda == CycloNum(Rational(1, 2)));
  CHECK(inv.witness_mu == CycloNum::from_int(-1));

  inv = reduce_form(parse_poly("z^3"));
  CHECK(inv.reduced_p == parse_poly("z^3"));
  CHECK(inv.witness_lambda == CycloNum::one());
  CHECK(inv.witness_mu == CycloNum::zero());

  inv = reduce_form(parse_poly("z^3 + 3*z^2"));
  CHECK(inv.reduced_p == parse_poly("z^3 - 3*z + 2"));

  CHECK_THROWS_AS(reduce_form(parse_poly("5")), DomainError);
}

TEST_CASE("reduction witnesses reproduce the reduced polynomial") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int t = 0; t < 30; ++t) {
    std::vector<CycloNum> cs(deg(rng) + 1);
    for (auto& c : cs) c = CycloNum(Rational(coeff(rng)));
    if (cs.back().is_zero()) cs.back() = CycloNum::from_int(2);
    const UniPoly p(cs);
    const SurfaceInvariants inv = reduce_form(p);
    CHECK(apply_reduction_witness(p, inv.witness_lambda, inv.witness_mu) ==
          inv.reduced_p);
    CHECK(inv.reduced_p.leading() == CycloNum::one());
    if (inv.d >= 2) CHECK(inv.reduced_p.coeff(inv.d - 1).is_zero());
  }
}

TEST_CASE("multiplicity-period decomposition") {
  SurfaceInvariants inv = analyze(parse_poly("z^6 + z^2"));
  CHECK(inv.m == 2);
  CHECK(inv.n == 4u);
  CHECK(inv.q == parse_poly("z + 1"));

  inv = analyze(parse_poly("z^4"));
  CHECK(inv.m == 4);
  CHECK_FALSE(inv.n.has_value());
  CHECK(inv.q == parse_poly("1"));

  inv = analyze(parse_poly("z^3 + z"));
  CHECK(inv.m == 1);
  CHECK(inv.n == 2u);
  CHECK(inv.q == parse_poly("z + 1"));
}

TEST_CASE("decomposition reconstructs the reduced polynomial") {
  std::mt19937 rng(102);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> deg(2, 8);
  for (int t = 0; t < 30; ++t) {
    std::vector<CycloNum> cs(deg(rng) + 1);
    for (auto& c : cs) c = CycloNum(Rational(coeff(rng)));
    cs.back() = CycloNum::one();
    if (cs.size() >= 2) cs[cs.size() - 2] = CycloNum::zero();
    const UniPoly p(cs);
    const SurfaceInvariants inv = analyze(p);
    const unsigned n_eff = inv.n.value_or(1);
    // z^m q(z^n) expanded
    UniPoly rebuilt = UniPoly::zero();
    for (std::size_t k = 0; k < inv.q.coeffs().size(); ++k)
      rebuilt = rebuilt +
                UniPoly::monomial(inv.q.coeff(k), inv.m + n_eff * unsigned(k));
    CHECK(rebuilt == inv.reduced_p);
    CHECK_FALSE(inv.q.coeff(0).is_zero());
    // maximality: no larger period works
    if (inv.n.has_value()) {
      for (unsigned np = *inv.n + 1; np <= inv.d - inv.m; ++np) {
        bool works = true;
        for (std::size_t e = 0; e < inv.reduced_p.coeffs().size(); ++e)
          if (!inv.reduced_p.coeff(e).is_zero())
            works = works && (long(e) - long(inv.m)) % long(np) == 0;
        CHECK_FALSE(works);
      }
    }
  }
}

TEST_CASE("symmetry group of the reduced polynomial") {
  CHECK(analyze(parse_poly("z^5")).hp == HpKind::inf());
  CHECK(analyze(parse_poly("z^6 + z^2")).hp == HpKind::cyclic(4));
  CHECK(analyze(parse_poly("z^3 + z^2 - 1")).hp == HpKind::cyclic(1));
}

TEST_CASE("isomorphism testing over Q") {
  auto w = iso_test(parse_poly("z^2"), parse_poly("z^2 + 2*z + 1"),
                    ScalarField::Q);
  REQUIRE(w.has_value());
  CHECK(parse_poly("z^2").compose_affine(w->a, w->b) ==
        w->lambda * parse_poly("z^2 + 2*z + 1"));

  CHECK_FALSE(
      iso_test(parse_poly("z^3"), parse_poly("z^3 + 1"), ScalarField::Q)
          .has_value());

  w = iso_test(parse_poly("z^2"), parse_poly("2*z^2 + 4*z + 2"),
               ScalarField::Q);
  REQUIRE(w.has_value());
  CHECK(parse_poly("z^2").compose_affine(w->a, w->b) ==
        w->lambda * parse_poly("2*z^2 + 4*z + 2"));
}

TEST_CASE("isomorphism testing is reflexive and symmetric") {
  const std::vector<std::string> polys = {"z^2 - 1", "z^3 + z", "z^4 + z^2",
                                          "2*z^3 - 6*z + 1"};
  for (const auto& s : polys) {
    const UniPoly p = parse_poly(s);
    auto w = iso_test(p, p, ScalarField::Q);
    REQUIRE(w.has_value());
    CHECK(p.compose_affine(w->a, w->b) == w->lambda * p);
  }
  // a witness in one direction implies one in the other
  const UniPoly p = parse_poly("z^2 - 4");
  const UniPoly q = parse_poly("z^2 - 1");
  auto fwd = iso_test(p, q, ScalarField::Q);
  auto bwd = iso_test(q, p, ScalarField::Q);
  REQUIRE(fwd.has_value());
  REQUIRE(bwd.has_value());
  CHECK(p.compose_affine(fwd->a, fwd->b) == fwd->lambda * q);
  CHECK(q.compose_affine(bwd->a, bwd->b) == bwd->lambda * p);
}

TEST_CASE("isomorphism testing against a brute-force search") {
  // exhaustive small search: a in {+-1,+-2,+-1/2}, b in {-2..2 step 1/2},
  // lambda determined by leading coefficients
  std::mt19937 rng(103);
  std::uniform_int_distribution<int> coeff(-2, 2);
  const std::vector<Rational> avals = {Rational(1),     Rational(-1),
                                       Rational(2),     Rational(-2),
                                       Rational(1, 2),  Rational(-1, 2)};
  for (int t = 0; t < 40; ++t) {
    std::vector<CycloNum> cs(4);
    for (auto& c : cs) c = CycloNum(Rational(coeff(rng)));
    if (cs.back().is_zero()) cs.back() = CycloNum::one();
    const UniPoly p(cs);
    std::vector<CycloNum> ds(4);
    for (auto& c : ds) c = CycloNum(Rational(coeff(rng)));
    if (ds.back().is_zero()) ds.back() = CycloNum::one();
    const UniPoly q(ds);
    bool oracle_found = false;
    for (const auto& a : avals) {
      for (int bb = -4; bb <= 4 && !oracle_found; ++bb) {
        const CycloNum av(a);
        const CycloNum bv(Rational(bb, 2));
        const UniPoly lhs = p.compose_affine(av, bv);
        const CycloNum lam = lhs.leading() / q.leading();
        if (lhs == lam * q) oracle_found = true;
      }
    }
    if (oracle_found) {
      auto w = iso_test(p, q, ScalarField::Q);
      REQUIRE(w.has_value());
      CHECK(p.compose_affine(w->a, w->b) == w->lambda * q);
    }
  }
}

TEST_CASE("existence of real models") {
  RealFormExistence e = real_form_exists(parse_poly("z^3 + i"));
  CHECK(e.exists);
  REQUIRE(e.real_witness.has_value());
  CHECK(*e.real_witness == parse_poly("z^3 - 1"));

  e = real_form_exists(parse_poly("z^3 + z + 1 + i"));
  CHECK_FALSE(e.exists);

  e = real_form_exists(parse_poly("z^4 - 2*z^2 + 1"));
  CHECK(e.exists);
  REQUIRE(e.real_witness.has_value());
  CHECK(*e.real_witness == parse_poly("z^4 - 2*z^2 + 1"));
}

TEST_CASE("real-model existence is conjugation invariant") {
  std::mt19937 rng(104);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> deg(2, 5);
  const CycloNum i = CycloNum::imaginary_unit();
  for (int t = 0; t < 30; ++t) {
    std::vector<CycloNum> cs(deg(rng) + 1);
    for (auto& c : cs)
      c = CycloNum(Rational(coeff(rng))) + CycloNum(Rational(coeff(rng))) * i;
    if (cs.back().is_zero()) cs.back() = CycloNum::one();
    const UniPoly p(cs);
    const RealFormExistence a = real_form_exists(p);
    const RealFormExistence b = real_form_exists(p.conj());
    CHECK(a.exists == b.exists);
    if (a.real_witness.has_value()) CHECK(a.real_witness->is_real());
  }
}
