#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realforms/invariants.hpp"
#include "realforms/multipoly.hpp"

namespace realforms {

// One real-form representative S_abc of the surface xy = p(z):
//   x^2 + (-1)^a y^2 + (-1)^b z^m q((-1)^c z^n) = 0
struct RealFormRep {
  int a = 0, b = 0, c = 0;  // bits
  MultiPoly equation;
  UniPoly univariate;  // (-1)^b z^m q((-1)^c z^n), the z-part of the equation
  std::string label;   // "S_abc"
  bool has_real_points = false;
};

// For a = 1 the quadratic part x^2 - y^2 is indefinite, so points always
// exist; for a = 0 the real locus is nonempty iff the z-part attains a
// nonpositive value.
bool real_point_status(const RealFormRep& rep);

struct ClassificationResult {
  SurfaceInvariants invariants;
  unsigned count = 0;
  std::vector<RealFormRep> representatives;  // sorted by (a, b, c)
  std::string table_row;  // which classification condition fired
  // present for degree-2 nonmonomial inputs: the isomorphism onto z^2 - 1
  std::optional<IsoWitness> degree2_witness;
  std::vector<std::string> notes;
};

// The number of real-form classes computed from the cohomology case list
// (symmetry group infinite / cyclic of odd / even order, crossed with the
// degree parity), independently of the classification table used by
// classify(). The two routes must always agree.
unsigned count_from_case_list(const SurfaceInvariants& inv);

// Full classification of the real forms of xy = p(z), deg(p) >= 2.
// Inputs with nonrational coefficients are first routed through
// real_form_exists; classification proceeds on the real witness.
ClassificationResult classify(const UniPoly& p);

enum class TorusKind { torus, half_torus, punctured_line };

struct TorusClassEntry {
  std::string label;
  std::vector<std::string> equations;  // defining data, as display strings
  bool has_real_points = false;
};

// The fixed classification lists for (A^1 \ 0)^2, A^1 x (A^1 \ 0) and
// A^1 \ 0 itself.
std::vector<TorusClassEntry> classify_torus(TorusKind which);

}  // namespace realforms
