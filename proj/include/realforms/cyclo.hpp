#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realforms/rational.hpp"

namespace realforms {

// An element of the cyclotomic field Q(zeta_N), stored in the power basis
// {1, zeta, ..., zeta^(phi(N)-1)} modulo the N-th cyclotomic polynomial.
// Values are immutable after construction; all operations are pure.
//
// Arithmetic between elements of different orders lifts both operands into
// Q(zeta_lcm). Orders are capped (REALFORMS_MAX_ORDER, default 240).
class CycloNum {
 public:
  CycloNum();  // zero, order 1
  explicit CycloNum(Rational r);
  CycloNum(unsigned order, std::vector<Rational> coeffs);

  static CycloNum zero() { return CycloNum(); }
  static CycloNum one() { return CycloNum(Rational(1)); }
  static CycloNum from_int(long v) { return CycloNum(Rational(v)); }
  // zeta_N^k
  static CycloNum zeta(unsigned n, long k = 1);
  // i = zeta_4
  static CycloNum imaginary_unit() { return zeta(4, 1); }

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  // Lift into Q(zeta_M); requires order | M.
  CycloNum embedded(unsigned m) const;

  CycloNum conj() const;  // zeta -> zeta^(N-1)
  bool is_real() const;   // conj(x) == x
  bool is_unimodular() const;  // x * conj(x) == 1

  CycloNum operator-() const;
  CycloNum inverse() const;  // DomainError on zero

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) {
    return !(a == b);
  }

  CycloNum pow(long e) const;

  // x * conj(x), which is always real; returned as a rational when it is one.
  std::optional<Rational> norm_as_rational() const;

  std::string to_string() const;  // "1+2*zeta(8)^3" style, deterministic

 private:
  unsigned order_;
  std::vector<Rational> coeffs_;
};

unsigned euler_phi(unsigned n);
unsigned max_cyclotomic_order();  // REALFORMS_MAX_ORDER or 240

// A root of unity tracked by exponent arithmetic. Always normalized:
// 0 <= exponent < order and gcd(exponent, order) == 1 (so order 1 is
// the element 1 itself and order is the exact multiplicative order).
struct RootOfUnity {
  unsigned order = 1;
  unsigned exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(unsigned n, long k);  // zeta_n^k, normalized

  static RootOfUnity one() { return RootOfUnity(); }
  static RootOfUnity minus_one() { return RootOfUnity(2, 1); }

  CycloNum to_cyclo() const;
  static std::optional<RootOfUnity> from_cyclo(const CycloNum& x);

  RootOfUnity inverse() const { return RootOfUnity(order, -long(exponent)); }
  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    return a.order == b.order && a.exponent == b.exponent;
  }
  RootOfUnity pow(long e) const;
};

// epsilon in mu_2N with epsilon^2 = a; smallest nonnegative exponent.
RootOfUnity square_root_as_root_of_unity(const RootOfUnity& a);

}  // namespace realforms
