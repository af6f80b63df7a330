#pragma once

#include <array>
#include <vector>

#include "realforms/cyclo.hpp"
#include "realforms/laurent.hpp"

namespace realforms {

// Integer 2x2 matrix with determinant +-1.
struct GL2ZMatrix {
  long m11 = 1, m12 = 0, m21 = 0, m22 = 1;

  static GL2ZMatrix identity() { return {}; }

  long det() const { return m11 * m22 - m12 * m21; }
  GL2ZMatrix inverse() const;

  friend GL2ZMatrix operator*(const GL2ZMatrix& a, const GL2ZMatrix& b);
  friend bool operator==(const GL2ZMatrix& a, const GL2ZMatrix& b) {
    return a.m11 == b.m11 && a.m12 == b.m12 && a.m21 == b.m21 &&
           a.m22 == b.m22;
  }
  friend bool operator!=(const GL2ZMatrix& a, const GL2ZMatrix& b) {
    return !(a == b);
  }

  std::string to_string() const;
};

// the three conjugacy classes of involutions, plus the identity
enum class InvolutionClass { identity, sigma1, sigma2, sigma3 };

GL2ZMatrix involution_representative(InvolutionClass c);

struct InvolutionClassification {
  InvolutionClass cls;
  GL2ZMatrix conjugator;  // B with B^{-1} M B = representative
};

// Requires M^2 = I (DomainError otherwise); conjugator verified exactly.
InvolutionClassification gl2z_involution_class(const GL2ZMatrix& M);

// H^1(mu_n) by brute-force enumeration: Z^1 = mu_n, nu ~ nu * alpha^{-2}.
std::vector<RootOfUnity> h1_mu_bruteforce(unsigned n);

// 2x2 matrix over the cyclotomic field, for the projective-linear cocycles.
struct Mat2 {
  CycloNum a, b, c, d;  // (a b; c d)
  CycloNum det() const { return a * d - b * c; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  Mat2 conj() const;
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

struct Pgl2Epsilon {
  int epsilon;  // +1 or -1
  Mat2 witness;  // R with R^{-1} A conj(R) = (0 eps; 1 0), verified
};

// A must have det 1 and satisfy A * conj(A) = eps * I.
Pgl2Epsilon pgl2_cocycle_epsilon(const Mat2& A);

// Monomial automorphism (a x^m11 y^m12, b x^m21 y^m22) of the torus.
struct MonomialAut {
  CycloNum a, b;
  GL2ZMatrix M;

  static MonomialAut identity();

  bool is_identity() const;
  MonomialAut inverse() const;
  MonomialAut galois_conj() const;
  MonomialAut twisted_conjugate_by(const MonomialAut& theta) const;

  friend MonomialAut operator*(const MonomialAut& f, const MonomialAut& g);
  friend bool operator==(const MonomialAut& f, const MonomialAut& g) {
    return f.a == g.a && f.b == g.b && f.M == g.M;
  }
  friend bool operator!=(const MonomialAut& f, const MonomialAut& g) {
    return !(f == g);
  }

  std::string to_string() const;
};

bool is_cocycle(const MonomialAut& f);

enum class TorusFormClass {
  g1xg1,          // (A^1 \ 0)_R x (A^1 \ 0)_R
  g1xg2,
  g1xg3,
  g2xg2,
  g3xg3,
  plane_minus_conic  // A^2_R \ {x^2 + y^2 = 0}
};

struct TorusReduction {
  TorusFormClass cls;
  MonomialAut representative;
  MonomialAut witness;
};

TorusReduction reduce_torus_cocycle(const MonomialAut& nu);

// Automorphism (lambda x y^m + c(y), mu y^e) of A^1 x (A^1 \ 0), e = +-1.
struct HalfTorusAut {
  CycloNum lambda;
  long m = 0;
  LaurentPoly c;
  CycloNum mu;
  int e = 1;

  static HalfTorusAut identity();

  bool is_identity() const;
  HalfTorusAut inverse() const;
  HalfTorusAut galois_conj() const;
  HalfTorusAut twisted_conjugate_by(const HalfTorusAut& theta) const;

  friend HalfTorusAut operator*(const HalfTorusAut& f, const HalfTorusAut& g);
  friend bool operator==(const HalfTorusAut& f, const HalfTorusAut& g) {
    return f.lambda == g.lambda && f.m == g.m && f.c == g.c && f.mu == g.mu &&
           f.e == g.e;
  }
  friend bool operator!=(const HalfTorusAut& f, const HalfTorusAut& g) {
    return !(f == g);
  }

  std::string to_string() const;
};

bool is_cocycle(const HalfTorusAut& f);

enum class HalfTorusFormClass {
  a1xg1,
  a1xg2,
  a1xg3,
  projective_minus_conic  // P^2_R \ {x^2 + y^2 = 0}
};

struct HalfTorusReduction {
  HalfTorusFormClass cls;
  HalfTorusAut representative;
  HalfTorusAut witness;
};

HalfTorusReduction reduce_halftorus_cocycle(const HalfTorusAut& nu);

}  // namespace realforms
