#include <doctest.h>

#include <random>

#include "realforms/classifier.hpp"
#include "realforms/errors.hpp"
#include "realforms/json_io.hpp"
#include "realforms/parse.hpp"
#include "realforms/verifier.hpp"

using namespace realforms;

TEST_CASE("class counts for the classification table") {
  const std::vector<std::pair<std::string, unsigned>> corpus = {
      {"z^2 - 1", 4}, {"z^2", 2},       {"z^3", 2},       {"z^4", 3},
      {"z^3 + z", 4}, {"z^4 + z^2", 6}, {"z^6 + z^2", 6}, {"z^3 + 3*z^2", 3},
  };
  for (const auto& [text, expected] : corpus) {
    const ClassificationResult res = classify(parse_poly(text));
    CHECK_MESSAGE(res.count == expected, text);
    CHECK(res.count == res.representatives.size());
    CHECK(res.count == count_from_case_list(res.invariants));
  }
}

TEST_CASE("degree-two representatives") {
  const ClassificationResult res = classify(parse_poly("z^2"));
  REQUIRE(res.count == 2);
  const MultiPoly x = MultiPoly::variable("x");
  const MultiPoly y = MultiPoly::variable("y");
  const MultiPoly z = MultiPoly::variable("z");
  CHECK(res.representatives[0].equation == x * x + y * y + z * z);
  CHECK(res.representatives[1].equation == x * x - y * y - z * z);
  CHECK(res.representatives[0].has_real_points);
  CHECK(res.representatives[1].has_real_points);
}

TEST_CASE("emptiness of real loci") {
  const ClassificationResult res = classify(parse_poly("z^2 - 1"));
  REQUIRE(res.count == 4);
  unsigned empty = 0;
  for (const auto& rep : res.representatives)
    if (!rep.has_real_points) {
      ++empty;
      const MultiPoly x = MultiPoly::variable("x");
      const MultiPoly y = MultiPoly::variable("y");
      const MultiPoly z = MultiPoly::variable("z");
      const MultiPoly one = MultiPoly::constant(CycloNum::one());
      CHECK(rep.equation == x * x + y * y + z * z + one);
    }
  CHECK(empty == 1);
}

TEST_CASE("representative equations are pairwise distinct") {
  for (const auto& text :
       {"z^2 - 1", "z^2", "z^3", "z^4", "z^3 + z", "z^4 + z^2", "z^6 + z^2"}) {
    const ClassificationResult res = classify(parse_poly(text));
    for (std::size_t i = 0; i < res.representatives.size(); ++i)
      for (std::size_t j = i + 1; j < res.representatives.size(); ++j)
        CHECK(res.representatives[i].equation !=
              res.representatives[j].equation);
  }
}

TEST_CASE("classification is invariant under affine rescaling of the input") {
  std::mt19937 rng(401);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  const std::vector<std::string> base = {"z^2 - 1", "z^3 + z", "z^4 + z^2",
                                         "z^5", "z^6 + z^2", "z^3 + 3*z^2"};
  for (const auto& text : base) {
    const UniPoly p = parse_poly(text);
    const ClassificationResult ref = classify(p);
    for (int t = 0; t < 5; ++t) {
      Rational a = make_rational(num(rng), den(rng));
      if (a == 0) a = Rational(1);
      Rational lam = make_rational(num(rng), den(rng));
      if (lam == 0) lam = Rational(-2);
      const Rational b = make_rational(num(rng), den(rng));
      const UniPoly moved =
          CycloNum(lam) * p.compose_affine(CycloNum(a), CycloNum(b));
      const ClassificationResult res = classify(moved);
      CHECK(res.count == ref.count);
      CHECK(res.invariants.m == ref.invariants.m);
      CHECK(res.invariants.n == ref.invariants.n);
      // q transforms equivariantly: rescaling z by a sends q(t) to
      // s^{-k} q(s t) with s = a^n and k = deg q (the shift-only reduction
      // witness cannot absorb a rescale, so q itself is not fixed)
      const unsigned n_eff = ref.invariants.n.value_or(1);
      const CycloNum s = CycloNum(a).pow(long(n_eff));
      const long k = ref.invariants.q.degree();
      CHECK(res.invariants.q ==
            s.pow(-k) * ref.invariants.q.compose_affine(s, CycloNum::zero()));
      REQUIRE(res.representatives.size() == ref.representatives.size());
      for (std::size_t k = 0; k < res.representatives.size(); ++k) {
        CHECK(res.representatives[k].a == ref.representatives[k].a);
        CHECK(res.representatives[k].b == ref.representatives[k].b);
        CHECK(res.representatives[k].c == ref.representatives[k].c);
      }
    }
  }
}

TEST_CASE("inputs outside the classification domain") {
  CHECK_THROWS_AS(classify(parse_poly("z + 1")), DomainError);
  CHECK_THROWS_AS(classify(parse_poly("z^3 + z + 1 + i")), DomainError);
  // a complex input with a real model (z^3 - 1, so n = 3 odd) is classified
  // through that model
  const ClassificationResult res = classify(parse_poly("z^3 + i"));
  CHECK(res.count == 3);
}

TEST_CASE("fixed listings for the torus-like surfaces") {
  const auto punctured = classify_torus(TorusKind::punctured_line);
  REQUIRE(punctured.size() == 3);
  CHECK(punctured[0].has_real_points);
  CHECK(punctured[1].has_real_points);
  CHECK_FALSE(punctured[2].has_real_points);

  CHECK(classify_torus(TorusKind::torus).size() == 6);
  CHECK(classify_torus(TorusKind::half_torus).size() == 4);
}

TEST_CASE("symbolic verification suite passes in full") {
  const auto cases = verify_all();
  CHECK(cases.size() > 100);
  for (const auto& c : cases) CHECK_MESSAGE(c.pass, c.id, ": ", c.detail);
}

TEST_CASE("JSON round trips") {
  std::mt19937 rng(402);
  std::uniform_int_distribution<int> small(-3, 3);
  const CycloNum i = CycloNum::imaginary_unit();

  for (int t = 0; t < 10; ++t) {
    const CycloNum s = CycloNum(Rational(small(rng), 2)) +
                       CycloNum(Rational(small(rng))) * CycloNum::zeta(6);
    CHECK(scalar_from_json(scalar_to_json(s)) == s);

    const UniPoly p = parse_poly("z^3 + i*z - 1/2");
    CHECK(unipoly_from_json(unipoly_to_json(p), "z") == p);

    const LaurentPoly c =
        LaurentPoly::term(i, -2) + LaurentPoly::term(CycloNum::one(), 1);
    CHECK(laurent_from_json(laurent_to_json(c)) == c);

    PsiElement f;
    f.a = s.is_zero() ? CycloNum::one() : s;
    f.b = CycloNum::one() / f.a;
    f.c = CycloNum::one();
    f.d = CycloNum(Rational(small(rng)));
    f.r = parse_poly("i*x^2 - x", "x");
    CHECK(psi_from_json(psi_to_json(f)) == f);

    AffineAutElement g = AffineAutElement::swapped(
        f.a, f.b, -CycloNum::one(), CycloNum(Rational(small(rng), 3)));
    CHECK(affine_from_json(affine_to_json(g)) == g);

    MonomialAut m;
    m.a = f.a;
    m.b = i;
    m.M = {0, 1, 1, small(rng)};
    CHECK(monomial_from_json(monomial_to_json(m)) == m);

    HalfTorusAut h;
    h.lambda = f.a;
    h.m = small(rng);
    h.c = c;
    h.mu = i;
    h.e = -1;
    CHECK(halftorus_from_json(halftorus_to_json(h)) == h);
  }

  // serialization is deterministic: encode, decode, re-encode, compare bytes
  const UniPoly p = parse_poly("z^4 + z^2");
  const auto doc = with_schema(classification_to_json(classify(p), p));
  CHECK(doc["schema"] == "realforms/1");
  const std::string once = doc.dump(2);
  const auto doc2 = with_schema(classification_to_json(classify(p), p));
  CHECK(once == doc2.dump(2));
}
