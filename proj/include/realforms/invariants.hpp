#pragma once

#include <optional>
#include <vector>

#include "realforms/cyclo.hpp"
#include "realforms/unipoly.hpp"

namespace realforms {

// Symmetry group of a reduced polynomial: all of C* for monomials,
// otherwise the cyclic group of n-th roots of unity.
struct HpKind {
  bool infinite = false;
  unsigned order = 1;  // meaningful only when finite

  static HpKind inf() { return {true, 0}; }
  static HpKind cyclic(unsigned n) { return {false, n}; }
  friend bool operator==(const HpKind&, const HpKind&) = default;
};

// Complete classification input for a surface xy = p(z):
// reduced_p = lambda * p(z + mu), monic with vanishing subleading term,
// and reduced_p(z) = z^m q(z^n) with q(0) != 0 and n maximal when q != 1.
struct SurfaceInvariants {
  unsigned d = 0;                    // degree
  unsigned m = 0;                    // multiplicity of the root 0
  std::optional<unsigned> n;         // period; nullopt means INFINITE (q = 1)
  UniPoly q;                         // q(0) != 0; the constant 1 when monomial
  UniPoly reduced_p;
  CycloNum witness_lambda;
  CycloNum witness_mu;
  HpKind hp;
};

// Normalization step only: fills reduced_p and the witness.
// DomainError on constant polynomials.
SurfaceInvariants reduce_form(const UniPoly& p);

// (m, n, q) of a monic reduced polynomial of degree >= 2.
void decompose(SurfaceInvariants& inv);

// Full pipeline: reduce_form + decompose + symmetry group.
SurfaceInvariants analyze(const UniPoly& p);

HpKind symmetry_group(const UniPoly& reduced_p);

enum class ScalarField { Q, QI };

struct IsoWitness {
  CycloNum a, b, lambda;  // p(a z + b) = lambda * q(z)
};

// Isomorphism test for D_p and D_q over the stated field. The scaling
// constant a is searched among rational multiples of roots of unity lying
// in the field (so {+-t} over Q and {+-t, +-it} over Q(i)).
std::optional<IsoWitness> iso_test(const UniPoly& p, const UniPoly& q,
                                   ScalarField field);

struct RealFormExistence {
  bool exists = false;
  // Explicit real polynomial alpha^(-d) * reduced_p(alpha z) when the
  // required scalar lands in the cyclotomic tower.
  std::optional<UniPoly> real_witness;
  // True when existence holds but the witness scalar is unimodular
  // without being a root of unity, so no explicit polynomial is produced.
  bool witness_omitted = false;
};

// Whether D_p admits a real form: lambda * p(a z + b) real for some
// a, lambda in C*, b in C.
RealFormExistence real_form_exists(const UniPoly& p);

// Shared solver for systems a^{k_i} = v_i, searching scalars of the form
// t * zeta (t rational > 0, zeta a root of unity, optionally restricted to
// mu_max_zeta_order). Returns all in-tower solutions, sorted by
// (zeta order, zeta exponent, t).
struct PowerSystemEquation {
  unsigned k;  // exponent >= 1
  CycloNum v;  // nonzero target
};
struct PowerSystemResult {
  // Solvability over all of C (meaningful only when every v is unimodular).
  bool solvable_over_c = false;
  std::vector<CycloNum> tower_solutions;
};
PowerSystemResult solve_power_system(const std::vector<PowerSystemEquation>& eqs,
                                     unsigned max_zeta_order = 0);

}  // namespace realforms
