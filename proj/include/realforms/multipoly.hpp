#pragma once

#include <map>
#include <string>
#include <vector>

#include "realforms/cyclo.hpp"
#include "realforms/unipoly.hpp"

namespace realforms {

// Sparse exact multivariate polynomial over a fixed, ordered variable list.
// The default list is {x, y, z}; the verifier uses wider lists for
// formal-parameter identities. Operands must share the same variable list.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(std::vector<std::string> vars = {"x", "y", "z"});
  MultiPoly(std::vector<std::string> vars,
            std::map<Exponents, CycloNum> terms);

  static MultiPoly zero(std::vector<std::string> vars = {"x", "y", "z"}) {
    return MultiPoly(std::move(vars));
  }
  static MultiPoly constant(const CycloNum& c,
                            std::vector<std::string> vars = {"x", "y", "z"});
  static MultiPoly variable(const std::string& name,
                            std::vector<std::string> vars = {"x", "y", "z"});
  // c * prod(vars[i]^exps[i])
  static MultiPoly term(const CycloNum& c, Exponents exps,
                        std::vector<std::string> vars = {"x", "y", "z"});
  // lift a univariate polynomial into the variable `name`
  static MultiPoly from_unipoly(const UniPoly& p, const std::string& name,
                                std::vector<std::string> vars = {"x", "y",
                                                                 "z"});

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const CycloNum& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  MultiPoly pow(unsigned e) const;
  MultiPoly conj() const;

  // P(images[0], ..., images[n-1]); a ring homomorphism.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  // exact division by a single variable; DomainError if not divisible
  MultiPoly divide_by_variable(const std::string& name) const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, CycloNum> terms_;
  void prune();
  std::size_t var_index(const std::string& name) const;
};

// f*(P) = P(fx, fy, fz) for the three standard variables.
MultiPoly substitute_map(const MultiPoly& p, const MultiPoly& fx,
                         const MultiPoly& fy, const MultiPoly& fz);

// xy - p(z) for a univariate p
MultiPoly danielewski_equation(const UniPoly& p);

}  // namespace realforms
