#include <doctest.h>

#include <random>

#include "realforms/cyclo.hpp"
#include "realforms/errors.hpp"

using namespace realforms;

namespace {

CycloNum random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<unsigned> ord(1, 12);
  unsigned n = ord(rng);
  CycloNum v(make_rational(num(rng), den(rng)));
  return v + CycloNum(make_rational(num(rng), den(rng))) * CycloNum::zeta(n, 1);
}

}  // namespace

TEST_CASE("field operations on cyclotomic scalars") {
  const CycloNum i = CycloNum::imaginary_unit();
  CHECK(i.conj() == -i);

  const CycloNum z3 = CycloNum::zeta(3);
  CHECK(z3 * z3 * z3 == CycloNum::one());

  const CycloNum one = CycloNum::one();
  CHECK((one + i) / (one - i) == i);

  CHECK_THROWS_AS(one / CycloNum::zero(), DomainError);
}

TEST_CASE("is_real") {
  CHECK_FALSE(CycloNum::zeta(4).is_real());
  const CycloNum c = CycloNum::zeta(6) + CycloNum::zeta(6).inverse();
  CHECK(c.is_real());
  CHECK(c == CycloNum::one());  // 2 cos(pi/3) = 1
  CHECK(CycloNum(Rational(3, 7)).is_real());
}

TEST_CASE("is_unimodular") {
  CHECK(CycloNum::zeta(8).is_unimodular());
  const CycloNum i = CycloNum::imaginary_unit();
  const CycloNum v = (CycloNum::from_int(3) + CycloNum::from_int(4) * i) /
                     CycloNum::from_int(5);
  CHECK(v.is_unimodular());
  CHECK_FALSE(CycloNum::from_int(2).is_unimodular());
}

TEST_CASE("square roots of roots of unity") {
  const RootOfUnity minus_one = RootOfUnity::minus_one();
  const RootOfUnity r = square_root_as_root_of_unity(minus_one);
  CHECK(r == RootOfUnity(4, 1));

  CHECK(square_root_as_root_of_unity(RootOfUnity::one()) == RootOfUnity::one());

  const RootOfUnity z3(3, 1);
  const RootOfUnity s = square_root_as_root_of_unity(z3);
  CHECK(s * s == z3);
}

TEST_CASE("square roots exist for every root of unity up to order 24") {
  for (unsigned n = 1; n <= 24; ++n) {
    for (unsigned k = 0; k < n; ++k) {
      const RootOfUnity a(n, k);
      const RootOfUnity s = square_root_as_root_of_unity(a);
      CHECK(s * s == a);
      CHECK(s.to_cyclo() * s.to_cyclo() == a.to_cyclo());
    }
  }
}

TEST_CASE("conjugation is a ring homomorphism") {
  std::mt19937 rng(20240601);
  for (int t = 0; t < 40; ++t) {
    const CycloNum x = random_scalar(rng);
    const CycloNum y = random_scalar(rng);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK(x.conj().conj() == x);
  }
}

TEST_CASE("unimodular elements have norm one") {
  for (unsigned n = 1; n <= 16; ++n) {
    const CycloNum z = CycloNum::zeta(n);
    CHECK(z.is_unimodular());
    CHECK((z * z.conj()).is_real());
    CHECK(z * z.conj() == CycloNum::one());
  }
}

TEST_CASE("embedding into a larger field commutes with arithmetic") {
  const CycloNum a = CycloNum::zeta(6) + CycloNum::from_int(2);
  const CycloNum b = CycloNum::zeta(6, 5);
  const CycloNum small = a * b + a;
  const CycloNum large = a.embedded(24) * b.embedded(24) + a.embedded(24);
  CHECK(small == large);
  CHECK(a.embedded(12).embedded(24) == a);
}

TEST_CASE("root-of-unity normalization") {
  CHECK(RootOfUnity(4, 2) == RootOfUnity(2, 1));
  CHECK(RootOfUnity(6, 4) == RootOfUnity(3, 2));
  CHECK(RootOfUnity(5, 7) == RootOfUnity(5, 2));
  const CycloNum z = RootOfUnity(12, 5).to_cyclo();
  CHECK(RootOfUnity::from_cyclo(z) == RootOfUnity(12, 5));
  CHECK_FALSE(RootOfUnity::from_cyclo(CycloNum::from_int(2)).has_value());
}
