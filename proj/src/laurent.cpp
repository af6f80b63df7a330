#include "realforms/laurent.hpp"

#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

LaurentPoly::LaurentPoly(std::map<long, CycloNum> terms)
    : terms_(std::move(terms)) {
  prune();
}

void LaurentPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::constant(const CycloNum& c) {
  return LaurentPoly({{0, c}});
}

LaurentPoly LaurentPoly::term(const CycloNum& c, long exp) {
  return LaurentPoly({{exp, c}});
}

CycloNum LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycloNum::zero() : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  std::map<long, CycloNum> out;
  for (const auto& [e, c] : terms_) out.emplace(e, -c);
  return LaurentPoly(std::move(out));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<long, CycloNum> out = a.terms_;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = out.emplace(e, c);
    if (!inserted) it->second = it->second + c;
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<long, CycloNum> out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      CycloNum prod = ca * cb;
      auto [it, inserted] = out.emplace(ea + eb, prod);
      if (!inserted) it->second = it->second + prod;
    }
  return LaurentPoly(std::move(out));
}

LaurentPoly operator*(const CycloNum& c, const LaurentPoly& p) {
  std::map<long, CycloNum> out;
  for (const auto& [e, x] : p.terms_) out.emplace(e, c * x);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::substitute_monomial(const CycloNum& mu,
                                             int sign) const {
  if (sign != 1 && sign != -1)
    throw DomainError("Laurent substitution exponent must be +-1");
  std::map<long, CycloNum> out;
  for (const auto& [e, c] : terms_) {
    CycloNum nc = c * mu.pow(e);
    long ne = sign == 1 ? e : -e;
    auto [it, inserted] = out.emplace(ne, nc);
    if (!inserted) it->second = it->second + nc;
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::conj() const {
  std::map<long, CycloNum> out;
  for (const auto& [e, c] : terms_) out.emplace(e, c.conj());
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string cs = c.to_string();
    bool compound = cs.find(' ') != std::string::npos;
    if (e == 0) {
      out << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (cs != "1") out << (compound ? "(" + cs + ")" : cs) << "*";
    out << var;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace realforms
