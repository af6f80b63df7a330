#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "realforms/classifier.hpp"
#include "realforms/errors.hpp"
#include "realforms/json_io.hpp"
#include "realforms/parse.hpp"
#include "realforms/psi.hpp"
#include "realforms/torus.hpp"
#include "realforms/verifier.hpp"

namespace rf = realforms;
using nlohmann::ordered_json;

namespace {

void emit(const ordered_json& payload, bool json_mode,
          const std::string& human) {
  if (json_mode)
    std::cout << rf::with_schema(payload).dump(2) << "\n";
  else
    std::cout << human;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

const char* a_class_name(rf::ACocycleClass c) {
  switch (c) {
    case rf::ACocycleClass::t1: return "t1";
    case rf::ACocycleClass::t2: return "t2";
    case rf::ACocycleClass::t3: return "t3";
    case rf::ACocycleClass::t4: return "t4";
    case rf::ACocycleClass::t5: return "t5";
    case rf::ACocycleClass::t6: return "t6";
  }
  return "?";
}

const char* torus_class_name(rf::TorusFormClass c) {
  switch (c) {
    case rf::TorusFormClass::g1xg1: return "g1xg1";
    case rf::TorusFormClass::g1xg2: return "g1xg2";
    case rf::TorusFormClass::g1xg3: return "g1xg3";
    case rf::TorusFormClass::g2xg2: return "g2xg2";
    case rf::TorusFormClass::g3xg3: return "g3xg3";
    case rf::TorusFormClass::plane_minus_conic: return "plane_minus_conic";
  }
  return "?";
}

const char* halftorus_class_name(rf::HalfTorusFormClass c) {
  switch (c) {
    case rf::HalfTorusFormClass::a1xg1: return "a1xg1";
    case rf::HalfTorusFormClass::a1xg2: return "a1xg2";
    case rf::HalfTorusFormClass::a1xg3: return "a1xg3";
    case rf::HalfTorusFormClass::projective_minus_conic:
      return "projective_minus_conic";
  }
  return "?";
}

const char* involution_class_name(rf::InvolutionClass c) {
  switch (c) {
    case rf::InvolutionClass::identity: return "identity";
    case rf::InvolutionClass::sigma1: return "sigma1";
    case rf::InvolutionClass::sigma2: return "sigma2";
    case rf::InvolutionClass::sigma3: return "sigma3";
  }
  return "?";
}

nlohmann::json parse_json_arg(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw rf::ParseError(std::string("malformed JSON argument: ") + e.what());
  }
}

int run_classify(const std::string& poly_text, bool json_mode) {
  rf::UniPoly p = rf::parse_poly(poly_text);
  rf::ClassificationResult res = rf::classify(p);
  std::string human;
  {
    std::string nstr =
        res.invariants.n ? std::to_string(*res.invariants.n) : "infinite";
    human += "reduced:  " + res.invariants.reduced_p.to_string() + "\n";
    human += "shape:    m = " + std::to_string(res.invariants.m) +
             ", n = " + nstr + ", q = " + res.invariants.q.to_string() + "\n";
    human += "row:      " + res.table_row + "\n";
    human += "count:    " + std::to_string(res.count) + "\n";
    for (const auto& rep : res.representatives)
      human += "  " + rep.label + "  " + rep.equation.to_string() +
               " = 0  real points: " + yesno(rep.has_real_points) + "\n";
    for (const auto& note : res.notes) human += "note:     " + note + "\n";
  }
  emit(rf::classification_to_json(res, p), json_mode, human);
  return 0;
}

int run_isotest(const std::string& ptext, const std::string& qtext,
                const std::string& field, bool json_mode) {
  rf::UniPoly p = rf::parse_poly(ptext);
  rf::UniPoly q = rf::parse_poly(qtext);
  rf::ScalarField f =
      field == "QI" ? rf::ScalarField::QI : rf::ScalarField::Q;
  auto w = rf::iso_test(p, q, f);
  ordered_json doc{{"isomorphic", w.has_value()}};
  std::string human =
      "isomorphic over " + field + ": " + yesno(w.has_value()) + "\n";
  if (w) {
    doc["witness"] = ordered_json{{"a", rf::scalar_to_json(w->a)},
                                  {"b", rf::scalar_to_json(w->b)},
                                  {"lambda", rf::scalar_to_json(w->lambda)}};
    human += "witness:  p(a z + b) = lambda q(z) with a = " +
             w->a.to_string() + ", b = " + w->b.to_string() +
             ", lambda = " + w->lambda.to_string() + "\n";
  }
  emit(doc, json_mode, human);
  return 0;
}

int run_exists(const std::string& ptext, bool json_mode) {
  rf::UniPoly p = rf::parse_poly(ptext);
  rf::RealFormExistence ex = rf::real_form_exists(p);
  ordered_json doc{{"exists", ex.exists}};
  std::string human = "real form exists: " + yesno(ex.exists) + "\n";
  if (ex.real_witness) {
    doc["witness"] = rf::unipoly_to_json(*ex.real_witness);
    human += "real model: " + ex.real_witness->to_string() + "\n";
  }
  doc["witness_omitted"] = ex.witness_omitted;
  if (ex.witness_omitted)
    human += "witness scalar lies outside the cyclotomic tower\n";
  emit(doc, json_mode, human);
  return 0;
}

int run_involution(long m11, long m12, long m21, long m22, bool json_mode) {
  rf::GL2ZMatrix M{m11, m12, m21, m22};
  rf::InvolutionClassification res = rf::gl2z_involution_class(M);
  const rf::GL2ZMatrix& B = res.conjugator;
  ordered_json doc{
      {"class", involution_class_name(res.cls)},
      {"conjugator", {{B.m11, B.m12}, {B.m21, B.m22}}}};
  std::string human = std::string("class:      ") +
                      involution_class_name(res.cls) + "\n" +
                      "conjugator: " + B.to_string() + "\n";
  emit(doc, json_mode, human);
  return 0;
}

int run_h1mu(unsigned n, bool json_mode) {
  auto reps = rf::h1_mu_bruteforce(n);
  ordered_json arr = ordered_json::array();
  std::string human =
      "H^1(mu_" + std::to_string(n) + "): " + std::to_string(reps.size()) +
      (reps.size() == 1 ? " class\n" : " classes\n");
  for (const auto& r : reps) {
    arr.push_back(ordered_json{{"order", r.order}, {"exponent", r.exponent}});
    human += "  zeta(" + std::to_string(r.order) + ")^" +
             std::to_string(r.exponent) + "\n";
  }
  ordered_json doc{
      {"n", n}, {"count", reps.size()}, {"representatives", std::move(arr)}};
  emit(doc, json_mode, human);
  return 0;
}

int run_reduce(const std::string& kind, const std::string& element_text,
               const std::string& poly_text, bool json_mode) {
  nlohmann::json ej = parse_json_arg(element_text);
  ordered_json doc{{"kind", kind}};
  std::string human;
  if (kind == "psi" || kind == "affine") {
    if (poly_text.empty())
      throw rf::ParseError("kinds 'psi' and 'affine' require --poly");
    rf::UniPoly p = rf::parse_poly(poly_text);
    if (kind == "psi") {
      rf::PsiElement tau = rf::psi_from_json(ej);
      rf::BReductionResult res = rf::reduce_B_cocycle(tau, p);
      doc["normal_form"] = rf::psi_to_json(res.normal_form);
      doc["witness"] = rf::psi_to_json(res.witness);
      human = "normal form: " + res.normal_form.to_string() + "\n" +
              "witness:     " + res.witness.to_string() + "\n";
    } else {
      rf::AffineAutElement tau = rf::affine_from_json(ej);
      rf::SurfaceInvariants inv = rf::analyze(p);
      rf::AClassification res = rf::classify_A_cocycle(tau, inv);
      doc["class"] = a_class_name(res.cls);
      doc["representative"] = rf::affine_to_json(res.representative);
      doc["witness"] = rf::affine_to_json(res.witness);
      human = std::string("class:          ") + a_class_name(res.cls) + "\n" +
              "representative: " + res.representative.to_string() + "\n" +
              "witness:        " + res.witness.to_string() + "\n";
    }
  } else if (kind == "torus") {
    rf::MonomialAut nu = rf::monomial_from_json(ej);
    rf::TorusReduction res = rf::reduce_torus_cocycle(nu);
    doc["class"] = torus_class_name(res.cls);
    doc["representative"] = rf::monomial_to_json(res.representative);
    doc["witness"] = rf::monomial_to_json(res.witness);
    human = std::string("class:          ") + torus_class_name(res.cls) +
            "\n" + "representative: " + res.representative.to_string() +
            "\n" + "witness:        " + res.witness.to_string() + "\n";
  } else if (kind == "halftorus") {
    rf::HalfTorusAut nu = rf::halftorus_from_json(ej);
    rf::HalfTorusReduction res = rf::reduce_halftorus_cocycle(nu);
    doc["class"] = halftorus_class_name(res.cls);
    doc["representative"] = rf::halftorus_to_json(res.representative);
    doc["witness"] = rf::halftorus_to_json(res.witness);
    human = std::string("class:          ") + halftorus_class_name(res.cls) +
            "\n" + "representative: " + res.representative.to_string() +
            "\n" + "witness:        " + res.witness.to_string() + "\n";
  } else {
    throw rf::ParseError(
        "kind must be one of psi, affine, torus, halftorus");
  }
  emit(doc, json_mode, human);
  return 0;
}

int run_classify_torus(const std::string& which, bool json_mode) {
  rf::TorusKind kind;
  if (which == "torus")
    kind = rf::TorusKind::torus;
  else if (which == "half-torus")
    kind = rf::TorusKind::half_torus;
  else if (which == "punctured-line")
    kind = rf::TorusKind::punctured_line;
  else
    throw rf::ParseError(
        "argument must be torus, half-torus or punctured-line");
  auto classes = rf::classify_torus(kind);
  ordered_json arr = ordered_json::array();
  std::string human =
      which + ": " + std::to_string(classes.size()) + " classes\n";
  for (const auto& c : classes) {
    arr.push_back(ordered_json{{"label", c.label},
                               {"equations", c.equations},
                               {"real_points", c.has_real_points}});
    human += "  " + c.label + "  real points: " + yesno(c.has_real_points) +
             "\n";
    for (const auto& e : c.equations) human += "      " + e + "\n";
  }
  ordered_json doc{
      {"which", which}, {"count", classes.size()}, {"classes", std::move(arr)}};
  emit(doc, json_mode, human);
  return 0;
}

int run_verify(const std::string& case_filter, bool json_mode) {
  auto cases = rf::verify_all();
  if (!case_filter.empty()) {
    std::vector<rf::VerificationCase> selected;
    for (auto& c : cases)
      if (c.id.rfind(case_filter, 0) == 0) selected.push_back(std::move(c));
    if (selected.empty())
      throw rf::ParseError("no verification case matches '" + case_filter +
                           "'");
    cases = std::move(selected);
  }
  unsigned failed = 0;
  std::string human;
  for (const auto& c : cases) {
    if (!c.pass) ++failed;
    human += std::string(c.pass ? "pass  " : "FAIL  ") + c.id + "\n";
    if (!c.pass) human += "      " + c.detail + "\n";
  }
  human += std::to_string(cases.size() - failed) + "/" +
           std::to_string(cases.size()) + " cases passed\n";
  emit(rf::verification_to_json(cases), json_mode, human);
  return failed == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of the real forms of the surfaces "
               "xy = p(z) and of the torus surfaces"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit a single JSON document");

  std::string classify_poly;
  auto* c_classify =
      app.add_subcommand("classify", "count and list the real forms");
  c_classify->add_option("poly", classify_poly, "polynomial in z")->required();

  std::string iso_p, iso_q, iso_field = "QI";
  auto* c_iso = app.add_subcommand(
      "isotest", "decide whether two surfaces are isomorphic");
  c_iso->add_option("p", iso_p, "first polynomial")->required();
  c_iso->add_option("q", iso_q, "second polynomial")->required();
  c_iso->add_option("--field", iso_field, "scalar field, Q or QI")
      ->check(CLI::IsMember({"Q", "QI"}));

  std::string exists_poly;
  auto* c_exists = app.add_subcommand(
      "exists", "decide whether the surface admits a real form");
  c_exists->add_option("poly", exists_poly, "polynomial in z")->required();

  std::vector<long> inv_entries;
  auto* c_inv = app.add_subcommand(
      "involution", "classify an involution of GL2(Z) up to conjugacy");
  c_inv->add_option("entries", inv_entries, "m11 m12 m21 m22")
      ->expected(4)
      ->required();

  unsigned h1mu_n = 0;
  auto* c_h1 = app.add_subcommand(
      "h1mu", "first cohomology of the n-th roots of unity");
  c_h1->add_option("n", h1mu_n, "group order")->required();

  std::string red_kind, red_element, red_poly;
  auto* c_red = app.add_subcommand(
      "reduce-cocycle", "reduce a 1-cocycle to its class representative");
  c_red->add_option("kind", red_kind, "psi | affine | torus | halftorus")
      ->required();
  c_red->add_option("element", red_element, "JSON-encoded group element")
      ->required();
  c_red->add_option("--poly,-p", red_poly,
                    "ambient polynomial (psi and affine kinds)");

  std::string torus_which;
  auto* c_torus = app.add_subcommand(
      "classify-torus", "fixed classification lists of the torus surfaces");
  c_torus->add_option("which", torus_which,
                      "torus | half-torus | punctured-line")
      ->required();

  std::string verify_case;
  auto* c_verify = app.add_subcommand(
      "verify-paper", "run the symbolic identity verification suite");
  c_verify->add_option("--case", verify_case, "restrict to ids with prefix");

  for (CLI::App* sc : {c_classify, c_iso, c_exists, c_inv, c_h1, c_red,
                       c_torus, c_verify})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_classify->parsed()) return run_classify(classify_poly, json_mode);
    if (c_iso->parsed()) return run_isotest(iso_p, iso_q, iso_field, json_mode);
    if (c_exists->parsed()) return run_exists(exists_poly, json_mode);
    if (c_inv->parsed())
      return run_involution(inv_entries[0], inv_entries[1], inv_entries[2],
                            inv_entries[3], json_mode);
    if (c_h1->parsed()) return run_h1mu(h1mu_n, json_mode);
    if (c_red->parsed())
      return run_reduce(red_kind, red_element, red_poly, json_mode);
    if (c_torus->parsed()) return run_classify_torus(torus_which, json_mode);
    if (c_verify->parsed()) return run_verify(verify_case, json_mode);
  } catch (const rf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const rf::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const rf::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
