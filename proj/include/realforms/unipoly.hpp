#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realforms/cyclo.hpp"

namespace realforms {

// Dense exact univariate polynomial over Q(zeta), index = degree.
// Zero polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<CycloNum> coeffs, std::string var = "z");

  static UniPoly zero(std::string var = "z") { return UniPoly({}, var); }
  static UniPoly constant(CycloNum c, std::string var = "z");
  static UniPoly monomial(CycloNum c, unsigned deg, std::string var = "z");
  // the variable itself
  static UniPoly variable(std::string var = "z") {
    return monomial(CycloNum::one(), 1, var);
  }

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is reported as -1
  long degree() const { return (long)coeffs_.size() - 1; }
  const std::string& var() const { return var_; }
  const std::vector<CycloNum>& coeffs() const { return coeffs_; }
  CycloNum coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : CycloNum::zero();
  }
  CycloNum leading() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const CycloNum& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

  CycloNum eval(const CycloNum& x) const;
  // p(a*z + b)
  UniPoly compose_affine(const CycloNum& a, const CycloNum& b) const;
  // substitute the variable by an arbitrary polynomial
  UniPoly compose(const UniPoly& inner) const;
  UniPoly conj() const;  // coefficientwise
  bool has_rational_coeffs() const;
  bool is_real() const;  // all coefficients fixed by conj

  std::string to_string() const;

 private:
  std::vector<CycloNum> coeffs_;
  std::string var_ = "z";
};

}  // namespace realforms
