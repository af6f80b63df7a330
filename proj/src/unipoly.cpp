#include "realforms/unipoly.hpp"

#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

UniPoly::UniPoly(std::vector<CycloNum> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(CycloNum c, std::string var) {
  return UniPoly({std::move(c)}, std::move(var));
}

UniPoly UniPoly::monomial(CycloNum c, unsigned deg, std::string var) {
  std::vector<CycloNum> v(deg + 1, CycloNum::zero());
  v[deg] = std::move(c);
  return UniPoly(std::move(v), std::move(var));
}

CycloNum UniPoly::leading() const {
  if (is_zero()) return CycloNum::zero();
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  std::vector<CycloNum> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return UniPoly(std::move(out), var_);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<CycloNum> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                            CycloNum::zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
    out[i] = out[i] + b.coeffs_[i];
  return UniPoly(std::move(out), a.var_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly::zero(a.var_);
  std::vector<CycloNum> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                            CycloNum::zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(out), a.var_);
}

UniPoly operator*(const CycloNum& c, const UniPoly& p) {
  std::vector<CycloNum> out;
  out.reserve(p.coeffs_.size());
  for (const auto& x : p.coeffs_) out.push_back(c * x);
  return UniPoly(std::move(out), p.var_);
}

CycloNum UniPoly::eval(const CycloNum& x) const {
  CycloNum acc = CycloNum::zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UniPoly UniPoly::compose_affine(const CycloNum& a, const CycloNum& b) const {
  UniPoly inner({b, a}, var_);
  return compose(inner);
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc = UniPoly::zero(inner.var());
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * inner + UniPoly::constant(coeffs_[i], inner.var());
  return acc;
}

UniPoly UniPoly::conj() const {
  std::vector<CycloNum> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.conj());
  return UniPoly(std::move(out), var_);
}

bool UniPoly::has_rational_coeffs() const {
  for (const auto& c : coeffs_)
    if (!c.is_rational()) return false;
  return true;
}

bool UniPoly::is_real() const {
  for (const auto& c : coeffs_)
    if (!c.is_real()) return false;
  return true;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    std::string cs = coeffs_[i].to_string();
    bool negated = false;
    if (auto r = coeffs_[i].as_rational()) {
      if (*r < 0) {
        negated = true;
        cs = (-coeffs_[i]).to_string();
      }
    }
    if (first) {
      if (negated) out << "-";
      first = false;
    } else {
      out << (negated ? " - " : " + ");
    }
    bool compound = cs.find(' ') != std::string::npos;
    if (i == 0) {
      out << (compound ? "(" + cs + ")" : cs);
    } else {
      if (cs != "1") out << (compound ? "(" + cs + ")" : cs) << "*";
      out << var_;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace realforms
