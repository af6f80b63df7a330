#include "realforms/json_io.hpp"

#include "realforms/parse.hpp"

#include "realforms/errors.hpp"

namespace realforms {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json scalar_to_json(const CycloNum& c) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(rational_to_string(r));
  return ordered_json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

CycloNum scalar_from_json(const json& j) {
  // either the {order, coeffs} power-basis form, or a scalar literal
  // ("-1", "i", "zeta(8)^3", ...) for hand-written payloads
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return CycloNum::from_int(j.get<long>());
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw ParseError("scalar document must have 'order' and 'coeffs'");
  unsigned order = j.at("order").get<unsigned>();
  std::vector<Rational> coeffs;
  for (const auto& e : j.at("coeffs")) {
    auto r = parse_rational(e.get<std::string>());
    if (!r) throw ParseError("malformed rational coefficient");
    coeffs.push_back(*r);
  }
  return CycloNum(order, std::move(coeffs));
}

ordered_json unipoly_to_json(const UniPoly& p) {
  ordered_json terms = ordered_json::array();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (!p.coeff(i).is_zero())
      terms.push_back(ordered_json::array({i, scalar_to_json(p.coeff(i))}));
  return terms;
}

UniPoly unipoly_from_json(const json& j, const std::string& var) {
  if (!j.is_array()) throw ParseError("polynomial document must be an array");
  UniPoly p = UniPoly::zero(var);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("polynomial term must be [exponent, scalar]");
    long exp = e.at(0).get<long>();
    if (exp < 0) throw ParseError("polynomial exponent must be nonnegative");
    p = p + UniPoly::monomial(scalar_from_json(e.at(1)), (unsigned)exp, var);
  }
  return p;
}

ordered_json laurent_to_json(const LaurentPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [exp, c] : p.terms())
    terms.push_back(ordered_json::array({exp, scalar_to_json(c)}));
  return terms;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array())
    throw ParseError("Laurent polynomial document must be an array");
  LaurentPoly p;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("Laurent term must be [exponent, scalar]");
    p = p + LaurentPoly::term(scalar_from_json(e.at(1)), e.at(0).get<long>());
  }
  return p;
}

ordered_json psi_to_json(const PsiElement& f) {
  return ordered_json{{"a", scalar_to_json(f.a)},
                      {"b", scalar_to_json(f.b)},
                      {"c", scalar_to_json(f.c)},
                      {"d", scalar_to_json(f.d)},
                      {"r", unipoly_to_json(f.r)}};
}

PsiElement psi_from_json(const json& j) {
  for (const char* k : {"a", "b", "c", "d", "r"})
    if (!j.contains(k))
      throw ParseError(std::string("psi document missing field '") + k + "'");
  return PsiElement{scalar_from_json(j.at("a")), scalar_from_json(j.at("b")),
                    scalar_from_json(j.at("c")), scalar_from_json(j.at("d")),
                    unipoly_from_json(j.at("r"), "x")};
}

ordered_json affine_to_json(const AffineAutElement& f) {
  return ordered_json{{"swap", f.swap},
                      {"a", scalar_to_json(f.a)},
                      {"b", scalar_to_json(f.b)},
                      {"c", scalar_to_json(f.c)},
                      {"d", scalar_to_json(f.d)}};
}

AffineAutElement affine_from_json(const json& j) {
  for (const char* k : {"swap", "a", "b", "c", "d"})
    if (!j.contains(k))
      throw ParseError(std::string("affine document missing field '") + k +
                       "'");
  AffineAutElement f;
  f.swap = j.at("swap").get<bool>();
  f.a = scalar_from_json(j.at("a"));
  f.b = scalar_from_json(j.at("b"));
  f.c = scalar_from_json(j.at("c"));
  f.d = scalar_from_json(j.at("d"));
  return f;
}

ordered_json monomial_to_json(const MonomialAut& f) {
  return ordered_json{
      {"a", scalar_to_json(f.a)},
      {"b", scalar_to_json(f.b)},
      {"matrix", {{f.M.m11, f.M.m12}, {f.M.m21, f.M.m22}}}};
}

MonomialAut monomial_from_json(const json& j) {
  for (const char* k : {"a", "b", "matrix"})
    if (!j.contains(k))
      throw ParseError(std::string("monomial document missing field '") + k +
                       "'");
  const auto& m = j.at("matrix");
  if (!m.is_array() || m.size() != 2 || m.at(0).size() != 2 ||
      m.at(1).size() != 2)
    throw ParseError("matrix must be a 2x2 integer array");
  return MonomialAut{
      scalar_from_json(j.at("a")), scalar_from_json(j.at("b")),
      GL2ZMatrix{m.at(0).at(0).get<long>(), m.at(0).at(1).get<long>(),
                 m.at(1).at(0).get<long>(), m.at(1).at(1).get<long>()}};
}

ordered_json halftorus_to_json(const HalfTorusAut& f) {
  return ordered_json{{"lambda", scalar_to_json(f.lambda)},
                      {"m", f.m},
                      {"c", laurent_to_json(f.c)},
                      {"mu", scalar_to_json(f.mu)},
                      {"e", f.e}};
}

HalfTorusAut halftorus_from_json(const json& j) {
  for (const char* k : {"lambda", "m", "c", "mu", "e"})
    if (!j.contains(k))
      throw ParseError(std::string("half-torus document missing field '") +
                       k + "'");
  int e = j.at("e").get<int>();
  if (e != 1 && e != -1) throw ParseError("field 'e' must be +1 or -1");
  return HalfTorusAut{scalar_from_json(j.at("lambda")), j.at("m").get<long>(),
                      laurent_from_json(j.at("c")),
                      scalar_from_json(j.at("mu")), e};
}

ordered_json classification_to_json(const ClassificationResult& r,
                                    const UniPoly& input) {
  const SurfaceInvariants& inv = r.invariants;
  ordered_json reps = ordered_json::array();
  for (const auto& rep : r.representatives) {
    reps.push_back(ordered_json{{"bits", {rep.a, rep.b, rep.c}},
                                {"label", rep.label},
                                {"equation", rep.equation.to_string()},
                                {"real_points", rep.has_real_points}});
  }
  ordered_json doc{
      {"input", input.to_string()},
      {"reduced", inv.reduced_p.to_string()},
      {"witness",
       {{"lambda", scalar_to_json(inv.witness_lambda)},
        {"mu", scalar_to_json(inv.witness_mu)}}},
      {"m", inv.m},
      {"n", inv.n ? ordered_json(*inv.n) : ordered_json(nullptr)},
      {"q", inv.q.to_string()},
      {"hp", inv.hp.infinite
                 ? ordered_json{{"kind", "infinite"}}
                 : ordered_json{{"kind", "cyclic"}, {"order", inv.hp.order}}},
      {"row", r.table_row},
      {"count", r.count},
      {"representatives", std::move(reps)}};
  if (r.degree2_witness) {
    doc["degree2_witness"] =
        ordered_json{{"a", scalar_to_json(r.degree2_witness->a)},
                     {"b", scalar_to_json(r.degree2_witness->b)},
                     {"lambda", scalar_to_json(r.degree2_witness->lambda)}};
  }
  if (!r.notes.empty()) doc["notes"] = r.notes;
  return doc;
}

ordered_json verification_to_json(const std::vector<VerificationCase>& cases) {
  ordered_json arr = ordered_json::array();
  unsigned passed = 0;
  for (const auto& c : cases) {
    if (c.pass) ++passed;
    ordered_json e{{"id", c.id},
                   {"description", c.description},
                   {"pass", c.pass}};
    if (!c.pass) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  return ordered_json{{"total", cases.size()},
                      {"passed", passed},
                      {"cases", std::move(arr)}};
}

ordered_json with_schema(ordered_json payload) {
  ordered_json doc{{"schema", "realforms/1"}};
  for (auto& [k, v] : payload.items()) doc[k] = std::move(v);
  return doc;
}

}  // namespace realforms
