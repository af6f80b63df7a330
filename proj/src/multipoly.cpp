#include "realforms/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars,
                     std::map<Exponents, CycloNum> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (const auto& [e, c] : terms_)
    if (e.size() != vars_.size())
      throw InternalError("MultiPoly: exponent arity mismatch");
  prune();
}

void MultiPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

std::size_t MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end())
    throw DomainError("unknown variable '" + name + "'");
  return (std::size_t)(it - vars_.begin());
}

MultiPoly MultiPoly::constant(const CycloNum& c,
                              std::vector<std::string> vars) {
  MultiPoly out(std::move(vars));
  if (!c.is_zero()) out.terms_.emplace(Exponents(out.vars_.size(), 0), c);
  return out;
}

MultiPoly MultiPoly::variable(const std::string& name,
                              std::vector<std::string> vars) {
  MultiPoly out(std::move(vars));
  Exponents e(out.vars_.size(), 0);
  e[out.var_index(name)] = 1;
  out.terms_.emplace(std::move(e), CycloNum::one());
  return out;
}

MultiPoly MultiPoly::term(const CycloNum& c, Exponents exps,
                          std::vector<std::string> vars) {
  MultiPoly out(std::move(vars));
  if (exps.size() != out.vars_.size())
    throw InternalError("MultiPoly::term arity mismatch");
  if (!c.is_zero()) out.terms_.emplace(std::move(exps), c);
  return out;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, const std::string& name,
                                  std::vector<std::string> vars) {
  MultiPoly out(std::move(vars));
  std::size_t idx = out.var_index(name);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    Exponents e(out.vars_.size(), 0);
    e[idx] = (int)i;
    out.terms_.emplace(std::move(e), p.coeffs()[i]);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

static void check_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars())
    throw InternalError("MultiPoly: mixed variable lists");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_vars(a, b);
  MultiPoly out(a.vars_);
  out.terms_ = a.terms_;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = out.terms_.emplace(e, c);
    if (!inserted) it->second = it->second + c;
  }
  out.prune();
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return a + (-b);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_vars(a, b);
  MultiPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      CycloNum prod = ca * cb;
      auto [it, inserted] = out.terms_.emplace(std::move(e), prod);
      if (!inserted) it->second = it->second + prod;
    }
  out.prune();
  return out;
}

MultiPoly operator*(const CycloNum& c, const MultiPoly& p) {
  MultiPoly out(p.vars_);
  for (const auto& [e, x] : p.terms_) out.terms_.emplace(e, c * x);
  out.prune();
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = MultiPoly::constant(CycloNum::one(), vars_);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MultiPoly MultiPoly::conj() const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size())
    throw DomainError("substitute: wrong number of images");
  for (const auto& img : images) check_vars(images[0], img);
  const auto& target_vars = images[0].vars();
  MultiPoly acc = MultiPoly::zero(target_vars);
  for (const auto& [exps, c] : terms_) {
    MultiPoly t = MultiPoly::constant(c, target_vars);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0)
        throw DomainError("substitute: negative exponent");
      if (exps[i] > 0) t = t * images[i].pow((unsigned)exps[i]);
    }
    acc = acc + t;
  }
  return acc;
}

MultiPoly MultiPoly::divide_by_variable(const std::string& name) const {
  std::size_t idx = var_index(name);
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] < 1)
      throw DomainError("polynomial not divisible by " + name);
    Exponents ne = e;
    ne[idx] -= 1;
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // highest-degree terms first, deterministic
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.to_string();
    bool negated = false;
    if (auto r = c.as_rational(); r && *r < 0) {
      negated = true;
      cs = (-c).to_string();
    }
    if (first) {
      if (negated) out << "-";
      first = false;
    } else {
      out << (negated ? " - " : " + ");
    }
    bool compound = cs.find(' ') != std::string::npos;
    bool all_zero = std::all_of(e.begin(), e.end(), [](int x) { return !x; });
    if (all_zero) {
      out << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    bool wrote = false;
    if (cs != "1") {
      out << (compound ? "(" + cs + ")" : cs);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << vars_[i];
      if (e[i] != 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

MultiPoly substitute_map(const MultiPoly& p, const MultiPoly& fx,
                         const MultiPoly& fy, const MultiPoly& fz) {
  return p.substitute({fx, fy, fz});
}

MultiPoly danielewski_equation(const UniPoly& p) {
  MultiPoly xy = MultiPoly::variable("x") * MultiPoly::variable("y");
  return xy - MultiPoly::from_unipoly(p, "z");
}

}  // namespace realforms
