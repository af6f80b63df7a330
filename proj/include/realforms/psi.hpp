#pragma once

#include <array>
#include <optional>

#include "realforms/invariants.hpp"
#include "realforms/multipoly.hpp"
#include "realforms/unipoly.hpp"

namespace realforms {

// Fibration-preserving automorphism of xy = p(z):
//   (a x, b y + (p(cz + d + x r(x)) - ab p(z)) / (a x), cz + d + x r(x)),
// valid when ab p(z) = p(cz + d).
struct PsiElement {
  CycloNum a, b, c, d;
  UniPoly r{std::vector<CycloNum>{}, "x"};

  static PsiElement identity();

  bool is_identity() const;
  bool is_valid_for(const UniPoly& p) const;  // ab p(z) = p(cz+d)

  PsiElement inverse() const;
  PsiElement galois_conj() const;
  // one-sided conjugation theta^{-1} o tau o conj(theta), the cocycle move
  PsiElement twisted_conjugate_by(const PsiElement& theta) const;

  // the three polynomial components on the ambient surface
  std::array<MultiPoly, 3> to_map(const UniPoly& p) const;

  friend PsiElement operator*(const PsiElement& f, const PsiElement& g);
  friend bool operator==(const PsiElement& f, const PsiElement& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c && f.d == g.d && f.r == g.r;
  }
  friend bool operator!=(const PsiElement& f, const PsiElement& g) {
    return !(f == g);
  }

  std::string to_string() const;
};

bool is_cocycle(const PsiElement& f);

// Element of the affine automorphism group:
//   (a x, b y, cz + d), optionally precomposed with the factor swap,
//   giving (a y, b x, cz + d).
struct AffineAutElement {
  bool swap = false;
  CycloNum a, b, c, d;

  static AffineAutElement identity();
  static AffineAutElement diagonal(CycloNum a, CycloNum b, CycloNum c,
                                   CycloNum d = CycloNum::zero());
  static AffineAutElement swapped(CycloNum a, CycloNum b, CycloNum c,
                                  CycloNum d = CycloNum::zero());

  bool is_identity() const;
  bool is_valid_for(const UniPoly& p) const;

  AffineAutElement inverse() const;
  AffineAutElement galois_conj() const;
  AffineAutElement twisted_conjugate_by(const AffineAutElement& theta) const;

  std::array<MultiPoly, 3> to_map() const;

  friend AffineAutElement operator*(const AffineAutElement& f,
                                    const AffineAutElement& g);
  friend bool operator==(const AffineAutElement& f, const AffineAutElement& g);
  friend bool operator!=(const AffineAutElement& f,
                         const AffineAutElement& g) {
    return !(f == g);
  }

  std::string to_string() const;
};

bool is_cocycle(const AffineAutElement& f);

struct BReductionResult {
  PsiElement normal_form;  // psi_{1,b,c,d,0}
  PsiElement witness;      // theta with theta^{-1} o tau o conj(theta) = nf
};

// Reduces a 1-cocycle of the fibration-preserving group to its
// intersection-with-affine normal form psi_{1,b,c,d,0}. The witness is
// verified before returning. Requires p real of degree >= 2 and a valid
// cocycle input.
BReductionResult reduce_B_cocycle(const PsiElement& tau, const UniPoly& p);

// The six cocycle classes of the affine group for degree >= 3, in the
// normalization c = zeta_n, a = zeta_{2n}^d.
enum class ACocycleClass { t1 = 1, t2, t3, t4, t5, t6 };

struct AClassification {
  ACocycleClass cls;
  AffineAutElement representative;
  AffineAutElement witness;  // verified conjugator onto the representative
};

AClassification classify_A_cocycle(const AffineAutElement& tau,
                                   const SurfaceInvariants& inv);

}  // namespace realforms
