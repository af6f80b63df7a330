#pragma once

#include <json.hpp>

#include "realforms/classifier.hpp"
#include "realforms/psi.hpp"
#include "realforms/torus.hpp"
#include "realforms/verifier.hpp"

namespace realforms {

// JSON encodings of the domain types. Scalars are {order, coeffs} in the
// power basis of Q(zeta_order); polynomials are lists of [exponent, scalar]
// pairs. Decoders throw ParseError on malformed documents.

nlohmann::ordered_json scalar_to_json(const CycloNum& c);
CycloNum scalar_from_json(const nlohmann::json& j);

nlohmann::ordered_json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j, const std::string& var);

nlohmann::ordered_json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::ordered_json psi_to_json(const PsiElement& f);
PsiElement psi_from_json(const nlohmann::json& j);

nlohmann::ordered_json affine_to_json(const AffineAutElement& f);
AffineAutElement affine_from_json(const nlohmann::json& j);

nlohmann::ordered_json monomial_to_json(const MonomialAut& f);
MonomialAut monomial_from_json(const nlohmann::json& j);

nlohmann::ordered_json halftorus_to_json(const HalfTorusAut& f);
HalfTorusAut halftorus_from_json(const nlohmann::json& j);

nlohmann::ordered_json classification_to_json(const ClassificationResult& r,
                                              const UniPoly& input);

nlohmann::ordered_json verification_to_json(
    const std::vector<VerificationCase>& cases);

// wraps a payload with the schema version tag
nlohmann::ordered_json with_schema(nlohmann::ordered_json payload);

}  // namespace realforms
