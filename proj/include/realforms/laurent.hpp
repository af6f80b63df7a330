#pragma once

#include <map>
#include <string>

#include "realforms/cyclo.hpp"

namespace realforms {

// Exact Laurent polynomial in one variable; no zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<long, CycloNum> terms);

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(const CycloNum& c);
  static LaurentPoly term(const CycloNum& c, long exp);

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, CycloNum>& terms() const { return terms_; }
  CycloNum coeff(long e) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const CycloNum& c, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  // substitution y -> mu * y^sign with sign in {+1, -1}
  LaurentPoly substitute_monomial(const CycloNum& mu, int sign) const;
  LaurentPoly conj() const;

  std::string to_string(const std::string& var = "y") const;

 private:
  std::map<long, CycloNum> terms_;
  void prune();
};

}  // namespace realforms
