#pragma once

#include <string>
#include <vector>

namespace realforms {

// One exact symbolic identity check: an equality of polynomials, maps or
// matrices that the classification relies on.
struct VerificationCase {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;  // filled on failure
};

// Conjugation tables tying each cocycle class to its real model equation:
// for every table row, both the intertwining identity tau o conj(theta) =
// theta and the stated pullback theta^*(xy - p) are re-derived, including
// a battery of concrete (m, n, q) instances for the generic table.
std::vector<VerificationCase> verify_theta_tables();

// The quadric model of xy = z^2 - 1: the parametrization identity and the
// 3x3 matrix action with formal parameters preserving xy - z^2.
std::vector<VerificationCase> verify_quadric_isomorphism();

// Composition and pullback laws of the fibration-preserving group.
std::vector<VerificationCase> verify_group_laws();

// The explicit conjugation computations used in the torus and half-torus
// classifications.
std::vector<VerificationCase> verify_torus_conjugations();

std::vector<VerificationCase> verify_all();

}  // namespace realforms
