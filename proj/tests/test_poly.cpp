#include <doctest.h>

#include <random>

#include "realforms/errors.hpp"
#include "realforms/laurent.hpp"
#include "realforms/multipoly.hpp"
#include "realforms/parse.hpp"
#include "realforms/sturm.hpp"
#include "realforms/unipoly.hpp"

using namespace realforms;

namespace {

UniPoly random_rational_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> num(-3, 3);
  std::vector<CycloNum> coeffs(deg(rng) + 1);
  for (auto& c : coeffs) c = CycloNum(Rational(num(rng)));
  if (coeffs.back().is_zero()) coeffs.back() = CycloNum::one();
  return UniPoly(coeffs);
}

}  // namespace

TEST_CASE("univariate arithmetic and composition") {
  const UniPoly z = UniPoly::variable();
  CHECK((z * z).compose_affine(CycloNum::one(), CycloNum::one()) ==
        parse_poly("z^2 + 2*z + 1"));

  const UniPoly p = parse_poly("z^3 + i");
  CHECK(p.conj() == parse_poly("z^3 - i"));

  const MultiPoly x = MultiPoly::variable("x");
  const MultiPoly y = MultiPoly::variable("y");
  const CycloNum i = CycloNum::imaginary_unit();
  CHECK((x + i * y) * (x - i * y) == x * x + y * y);
}

TEST_CASE("map substitution on surface equations") {
  const MultiPoly x = MultiPoly::variable("x");
  const MultiPoly y = MultiPoly::variable("y");
  const MultiPoly z = MultiPoly::variable("z");
  const MultiPoly one = MultiPoly::constant(CycloNum::one());
  const CycloNum i = CycloNum::imaginary_unit();

  const MultiPoly quadric = x * y - z * z + one;
  CHECK(substitute_map(quadric, x + i * y, x - i * y, i * z) ==
        x * x + y * y + z * z + one);
  CHECK(substitute_map(quadric, x, y, z) == quadric);

  const MultiPoly cone = x * y - z * z;
  CHECK(substitute_map(cone, x - y, x + y, z) == x * x - y * y - z * z);
}

TEST_CASE("Sturm counts of real roots") {
  CHECK(sturm_count(parse_poly("z^2 + 1")) == 0);
  CHECK(sturm_count(parse_poly("z^3 - z")) == 3);
  CHECK(sturm_count(parse_poly("z^4 - 5*z^2 + 4"),
                    Interval::half_open(Rational(0), Rational(3))) == 2);
  CHECK_THROWS_AS(sturm_count(parse_poly("z^2 + i*z")), DomainError);
}

TEST_CASE("Sturm count agrees with products of known linear factors") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> root(-5, 5);
  for (int t = 0; t < 25; ++t) {
    std::vector<int> roots;
    UniPoly f = UniPoly::constant(CycloNum::one());
    for (int k = 0; k < 4; ++k) {
      int r = root(rng);
      bool fresh = true;
      for (int s : roots) fresh = fresh && s != r;
      if (!fresh) continue;
      roots.push_back(r);
      f = f * (UniPoly::variable() - UniPoly::constant(CycloNum::from_int(r)));
    }
    CHECK(sturm_count(f) == roots.size());
  }
}

TEST_CASE("nonpositive value detection") {
  CHECK_FALSE(attains_nonpositive(parse_poly("z^2 + 1")));
  CHECK(attains_nonpositive(parse_poly("z^2 - 1")));
  CHECK(attains_nonpositive(parse_poly("-z^2 - 1")));
  CHECK(attains_nonpositive(parse_poly("z^3 + 7")));

  // g^2 + positive constant never attains a nonpositive value
  std::mt19937 rng(78);
  for (int t = 0; t < 20; ++t) {
    const UniPoly g = random_rational_poly(rng, 3);
    CHECK_FALSE(attains_nonpositive(g * g + parse_poly("1/2")));
  }
}

TEST_CASE("ring axioms hold exactly on random samples") {
  std::mt19937 rng(79);
  for (int t = 0; t < 20; ++t) {
    const UniPoly a = random_rational_poly(rng, 4);
    const UniPoly b = random_rational_poly(rng, 4);
    const UniPoly c = random_rational_poly(rng, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
    if (!a.is_zero() && !b.is_zero())
      CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("Laurent polynomial substitution") {
  const CycloNum i = CycloNum::imaginary_unit();
  LaurentPoly c = LaurentPoly::term(i, 1) + LaurentPoly::term(i, -1);
  // y -> mu * y^{-1} with mu = -1 sends i(y + y^{-1}) to -i(y^{-1} + y)
  CHECK(c.substitute_monomial(-CycloNum::one(), -1) == -c);
  CHECK(c.conj() == -c);
  LaurentPoly prod = c * c;
  CHECK(prod.coeff(0) == CycloNum::from_int(-2));
  CHECK(prod.coeff(2) == CycloNum::from_int(-1));
}

TEST_CASE("polynomial and scalar parsing") {
  CHECK(parse_poly("z^4 - 2*z^2 + 1") ==
        UniPoly::monomial(CycloNum::one(), 4) +
            UniPoly::monomial(CycloNum::from_int(-2), 2) +
            UniPoly::constant(CycloNum::one()));
  CHECK(parse_scalar("3/7") == CycloNum(Rational(3, 7)));
  CHECK(parse_scalar("i") == CycloNum::imaginary_unit());
  CHECK(parse_scalar("zeta(8)^3") == CycloNum::zeta(8, 3));
  CHECK(parse_scalar("1 - 2*i") ==
        CycloNum::one() - CycloNum::from_int(2) * CycloNum::imaginary_unit());

  CHECK_THROWS_AS(parse_poly("z^^2"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("z + w"), ParseError);
  CHECK_THROWS_AS(parse_scalar("z"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}

TEST_CASE("parsing round-trips printed polynomials") {
  std::mt19937 rng(80);
  for (int t = 0; t < 20; ++t) {
    const UniPoly p = random_rational_poly(rng, 5);
    CHECK(parse_poly(p.to_string()) == p);
  }
}
