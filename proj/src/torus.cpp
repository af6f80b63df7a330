#include "realforms/torus.hpp"

#include <numeric>
#include <sstream>

#include "realforms/errors.hpp"
#include "realforms/rational.hpp"

namespace realforms {

namespace {

CycloNum exact_unimodular_sqrt(const CycloNum& a, const char* who) {
  auto ru = RootOfUnity::from_cyclo(a);
  if (!ru)
    throw DomainError(std::string(who) +
                      ": scalar is not a root of unity, its square root "
                      "leaves the working field");
  return square_root_as_root_of_unity(*ru).to_cyclo();
}

// positive rational square root of |r| for real rational r
Rational rational_abs_sqrt(const CycloNum& x, const char* who) {
  auto r = x.as_rational();
  if (!r) throw DomainError(std::string(who) + ": scalar is not rational");
  Rational v = *r < 0 ? Rational(-*r) : *r;
  auto s = rational_nth_root(v, 2);
  if (!s)
    throw DomainError(std::string(who) +
                      ": scalar modulus has no rational square root, the "
                      "conjugator leaves the working field");
  return *s;
}

}  // namespace

GL2ZMatrix GL2ZMatrix::inverse() const {
  long D = det();
  if (D != 1 && D != -1)
    throw DomainError("GL2Z inverse: determinant must be +-1");
  return {D * m22, -D * m12, -D * m21, D * m11};
}

GL2ZMatrix operator*(const GL2ZMatrix& a, const GL2ZMatrix& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

std::string GL2ZMatrix::to_string() const {
  std::ostringstream os;
  os << "[" << m11 << " " << m12 << "; " << m21 << " " << m22 << "]";
  return os.str();
}

GL2ZMatrix involution_representative(InvolutionClass c) {
  switch (c) {
    case InvolutionClass::identity: return GL2ZMatrix::identity();
    case InvolutionClass::sigma1: return {1, 0, 0, -1};
    case InvolutionClass::sigma2: return {-1, 0, 0, -1};
    case InvolutionClass::sigma3: return {0, 1, 1, 0};
  }
  throw InternalError("unreachable involution class");
}

InvolutionClassification gl2z_involution_class(const GL2ZMatrix& M) {
  if (M.det() != 1 && M.det() != -1)
    throw DomainError("involution classification: determinant must be +-1");
  if (M * M != GL2ZMatrix::identity())
    throw DomainError("involution classification: matrix must square to I");
  if (M == GL2ZMatrix::identity())
    return {InvolutionClass::identity, GL2ZMatrix::identity()};
  if (M == involution_representative(InvolutionClass::sigma2))
    return {InvolutionClass::sigma2, GL2ZMatrix::identity()};
  if (M == involution_representative(InvolutionClass::sigma1))
    return {InvolutionClass::sigma1, GL2ZMatrix::identity()};
  if (M == involution_representative(InvolutionClass::sigma3))
    return {InvolutionClass::sigma3, GL2ZMatrix::identity()};

  // a nonzero column of M + I is a primitive-izable eigenvector for +1
  long v1 = M.m11 + 1, v2 = M.m21;
  if (v1 == 0 && v2 == 0) {
    v1 = M.m12;
    v2 = M.m22 + 1;
  }
  long g = std::gcd(std::abs(v1), std::abs(v2));
  v1 /= g;
  v2 /= g;
  // complete (v1, v2) to a determinant-1 matrix via Bezout
  long a = v1, b = v2, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (b != 0) {
    long q = a / b;
    std::tie(a, b) = std::pair(b, a - q * b);
    std::tie(x0, x1) = std::pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::pair(y1, y0 - q * y1);
  }
  if (a < 0) { x0 = -x0; y0 = -y0; }
  GL2ZMatrix B{v1, -y0, v2, x0};  // det = v1*x0 + v2*y0 = 1
  GL2ZMatrix Mp = B.inverse() * M * B;
  if (Mp.m11 != 1 || Mp.m21 != 0 || Mp.m22 != -1)
    throw InternalError("involution classification: eigenbasis step failed");
  long bent = Mp.m12;
  long parity = ((bent % 2) + 2) % 2;
  // conjugating (1 b; 0 -1) by (1 u; 0 1) yields (1 b+2u; 0 -1)
  GL2ZMatrix shear{1, (parity - bent) / 2, 0, 1};
  B = B * shear;
  InvolutionClass cls;
  if (parity == 0) {
    cls = InvolutionClass::sigma1;
  } else {
    // (1 1; 0 -1) = C^{-1} sigma3 C for C = (1 1; 1 0)
    GL2ZMatrix C{1, 1, 1, 0};
    B = B * C.inverse();
    cls = InvolutionClass::sigma3;
  }
  if (B.inverse() * M * B != involution_representative(cls))
    throw InternalError("involution classification: conjugator failed");
  return {cls, B};
}

std::vector<RootOfUnity> h1_mu_bruteforce(unsigned n) {
  if (n == 0 || n > 64)
    throw DomainError("h1_mu_bruteforce: n must be in 1..64");
  // Z^1(mu_n) = mu_n, and nu ~ nu * alpha^{-2}: orbits of 2Z/nZ translation
  std::vector<bool> seen(n, false);
  std::vector<RootOfUnity> reps;
  for (unsigned k = 0; k < n; ++k) {
    if (seen[k]) continue;
    reps.emplace_back(n, (long)k);
    for (unsigned j = 0; j < n; ++j) seen[(k + 2 * j) % n] = true;
  }
  return reps;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 Mat2::conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }

Pgl2Epsilon pgl2_cocycle_epsilon(const Mat2& A) {
  if (A.det() != CycloNum::one())
    throw DomainError("pgl2 epsilon: determinant must be 1");
  Mat2 P = A * A.conj();
  if (!P.b.is_zero() || !P.c.is_zero() || P.a != P.d)
    throw DomainError("pgl2 epsilon: A * conj(A) is not scalar");
  int eps;
  if (P.a == CycloNum::one())
    eps = 1;
  else if (P.a == -CycloNum::one())
    eps = -1;
  else
    throw DomainError("pgl2 epsilon: scalar of A * conj(A) is not +-1");

  CycloNum i = CycloNum::imaginary_unit();
  const std::array<std::array<CycloNum, 2>, 4> candidates = {{
      {CycloNum::one(), CycloNum::zero()},
      {CycloNum::zero(), CycloNum::one()},
      {CycloNum::one(), i},
      {CycloNum::one(), CycloNum::one()},
  }};
  for (const auto& v : candidates) {
    CycloNum w1 = A.a * v[0].conj() + A.b * v[1].conj();
    CycloNum w2 = A.c * v[0].conj() + A.d * v[1].conj();
    Mat2 R{v[0], w1, v[1], w2};
    CycloNum D = R.det();
    if (D.is_zero()) continue;
    Mat2 Rinv{R.d / D, -R.b / D, -R.c / D, R.a / D};
    Mat2 nf = Rinv * A * R.conj();
    Mat2 expected{CycloNum::zero(), CycloNum::from_int(eps), CycloNum::one(),
                  CycloNum::zero()};
    if (!(nf == expected))
      throw InternalError("pgl2 epsilon: reduction identity failed");
    return {eps, R};
  }
  throw InternalError("pgl2 epsilon: no independent vector found");
}

MonomialAut MonomialAut::identity() {
  return {CycloNum::one(), CycloNum::one(), GL2ZMatrix::identity()};
}

bool MonomialAut::is_identity() const { return *this == identity(); }

MonomialAut operator*(const MonomialAut& f, const MonomialAut& g) {
  // (f o g)(x) = f.a * g(x)^f.m11 * g(y)^f.m12, etc.
  return {f.a * g.a.pow(f.M.m11) * g.b.pow(f.M.m12),
          f.b * g.a.pow(f.M.m21) * g.b.pow(f.M.m22), f.M * g.M};
}

MonomialAut MonomialAut::inverse() const {
  GL2ZMatrix N = M.inverse();
  return {a.pow(-N.m11) * b.pow(-N.m12), a.pow(-N.m21) * b.pow(-N.m22), N};
}

MonomialAut MonomialAut::galois_conj() const {
  return {a.conj(), b.conj(), M};
}

MonomialAut MonomialAut::twisted_conjugate_by(const MonomialAut& theta) const {
  return theta.inverse() * (*this) * theta.galois_conj();
}

std::string MonomialAut::to_string() const {
  std::ostringstream os;
  os << "(" << a.to_string() << "*x^" << M.m11 << "*y^" << M.m12 << ", "
     << b.to_string() << "*x^" << M.m21 << "*y^" << M.m22 << ")";
  return os.str();
}

bool is_cocycle(const MonomialAut& f) {
  return (f * f.galois_conj()).is_identity();
}

TorusReduction reduce_torus_cocycle(const MonomialAut& nu) {
  if (!is_cocycle(nu))
    throw DomainError("reduce_torus_cocycle: input is not a 1-cocycle");

  auto inv_cls = gl2z_involution_class(nu.M);
  MonomialAut theta{CycloNum::one(), CycloNum::one(), inv_cls.conjugator};
  MonomialAut cur = nu.twisted_conjugate_by(theta);

  auto apply = [&](const MonomialAut& step) {
    theta = theta * step;
    cur = cur.twisted_conjugate_by(step);
  };
  auto diag = [](CycloNum s, CycloNum t) {
    return MonomialAut{std::move(s), std::move(t), GL2ZMatrix::identity()};
  };

  TorusFormClass cls;
  MonomialAut rep = MonomialAut::identity();
  switch (inv_cls.cls) {
    case InvolutionClass::identity: {
      apply(diag(exact_unimodular_sqrt(cur.a, "reduce_torus_cocycle"),
                 exact_unimodular_sqrt(cur.b, "reduce_torus_cocycle")));
      cls = TorusFormClass::g1xg1;
      rep = MonomialAut::identity();
      break;
    }
    case InvolutionClass::sigma1: {
      // (lambda x, mu y^-1): lambda unimodular, mu real
      CycloNum xi1 = exact_unimodular_sqrt(cur.a, "reduce_torus_cocycle");
      CycloNum xi2{rational_abs_sqrt(cur.b, "reduce_torus_cocycle")};
      apply(diag(xi1, xi2));
      if (cur.b == CycloNum::one()) {
        cls = TorusFormClass::g1xg2;
      } else if (cur.b == -CycloNum::one()) {
        cls = TorusFormClass::g1xg3;
      } else {
        throw InternalError("reduce_torus_cocycle: sigma1 scalar out of range");
      }
      rep = MonomialAut{CycloNum::one(), cur.b, {1, 0, 0, -1}};
      break;
    }
    case InvolutionClass::sigma2: {
      // (lambda x^-1, mu y^-1): both scalars real
      CycloNum xi1{rational_abs_sqrt(cur.a, "reduce_torus_cocycle")};
      CycloNum xi2{rational_abs_sqrt(cur.b, "reduce_torus_cocycle")};
      apply(diag(xi1, xi2));
      bool neg_a = cur.a == -CycloNum::one();
      bool neg_b = cur.b == -CycloNum::one();
      if ((!neg_a && cur.a != CycloNum::one()) ||
          (!neg_b && cur.b != CycloNum::one()))
        throw InternalError("reduce_torus_cocycle: sigma2 scalar out of range");
      if (neg_a != neg_b) {
        if (!neg_a) {
          // (x^-1, -y^-1) -> (-x^-1, y^-1) by the factor swap (y, x)
          apply(MonomialAut{CycloNum::one(), CycloNum::one(), {0, 1, 1, 0}});
        }
        // (-x^-1, y^-1) -> (-x^-1, -y^-1) via (x, xy)
        apply(MonomialAut{CycloNum::one(), CycloNum::one(), {1, 0, 1, 1}});
        neg_a = neg_b = true;
      }
      if (neg_a) {
        cls = TorusFormClass::g3xg3;
        rep = MonomialAut{-CycloNum::one(), -CycloNum::one(), {-1, 0, 0, -1}};
      } else {
        cls = TorusFormClass::g2xg2;
        rep = MonomialAut{CycloNum::one(), CycloNum::one(), {-1, 0, 0, -1}};
      }
      break;
    }
    case InvolutionClass::sigma3: {
      // (a y, (1/conj(a)) x) -> (y, x) via (a x, y)
      apply(diag(cur.a, CycloNum::one()));
      cls = TorusFormClass::plane_minus_conic;
      rep = MonomialAut{CycloNum::one(), CycloNum::one(), {0, 1, 1, 0}};
      break;
    }
    default:
      throw InternalError("unreachable");
  }

  if (nu.twisted_conjugate_by(theta) != rep)
    throw InternalError("reduce_torus_cocycle: witness failed verification");
  return {cls, rep, theta};
}

HalfTorusAut HalfTorusAut::identity() {
  return {CycloNum::one(), 0, LaurentPoly::zero(), CycloNum::one(), 1};
}

bool HalfTorusAut::is_identity() const { return *this == identity(); }

HalfTorusAut operator*(const HalfTorusAut& f, const HalfTorusAut& g) {
  // f o g on (lambda x y^m + c(y), mu y^e) generators, by substitution:
  //   x-part: f.lambda * g_x(x,y) * (g_y)^f.m + f.c(g_y)
  CycloNum lam = f.lambda * g.lambda * g.mu.pow(f.m);
  long m = g.m + g.e * f.m;
  CycloNum coef = f.lambda * g.mu.pow(f.m);
  LaurentPoly c = (coef * g.c) * LaurentPoly::term(CycloNum::one(), g.e * f.m) +
                  f.c.substitute_monomial(g.mu, g.e);
  CycloNum mu = f.mu * g.mu.pow(f.e);
  return {lam, m, c, mu, f.e * g.e};
}

HalfTorusAut HalfTorusAut::inverse() const {
  int einv = e;  // e is its own inverse sign
  CycloNum muinv = mu.pow(-(long)e);
  long minv = -einv * m;
  CycloNum laminv = (lambda * muinv.pow(m)).inverse();
  // solve (this o h) c-part = 0: c_h = -laminv * y^{-e m} * c(muinv y^e)
  LaurentPoly cinv = -(laminv)*LaurentPoly::term(CycloNum::one(), -einv * m) *
                     c.substitute_monomial(muinv, einv);
  HalfTorusAut h{laminv, minv, cinv, muinv, einv};
  if (!((*this) * h).is_identity())
    throw InternalError("half-torus inverse failed verification");
  return h;
}

HalfTorusAut HalfTorusAut::galois_conj() const {
  return {lambda.conj(), m, c.conj(), mu.conj(), e};
}

HalfTorusAut HalfTorusAut::twisted_conjugate_by(
    const HalfTorusAut& theta) const {
  return theta.inverse() * (*this) * theta.galois_conj();
}

std::string HalfTorusAut::to_string() const {
  std::ostringstream os;
  os << "(" << lambda.to_string() << "*x*y^" << m;
  if (!c.is_zero()) os << " + " << c.to_string();
  os << ", " << mu.to_string() << "*y^" << e << ")";
  return os.str();
}

bool is_cocycle(const HalfTorusAut& f) {
  return (f * f.galois_conj()).is_identity();
}

HalfTorusReduction reduce_halftorus_cocycle(const HalfTorusAut& nu) {
  if (!is_cocycle(nu))
    throw DomainError("reduce_halftorus_cocycle: input is not a 1-cocycle");

  HalfTorusAut theta = HalfTorusAut::identity();
  HalfTorusAut cur = nu;
  auto apply = [&](const HalfTorusAut& step) {
    theta = theta * step;
    cur = cur.twisted_conjugate_by(step);
  };
  auto scalar_step = [](CycloNum xi1, CycloNum xi2) {
    return HalfTorusAut{std::move(xi1), 0, LaurentPoly::zero(), std::move(xi2),
                        1};
  };
  auto shift_step = [](const LaurentPoly& h) {
    return HalfTorusAut{CycloNum::one(), 0, h, CycloNum::one(), 1};
  };
  auto monomial_step = [](long k) {
    return HalfTorusAut{CycloNum::one(), k, LaurentPoly::zero(),
                        CycloNum::one(), 1};
  };
  CycloNum half{Rational(1, 2)};

  HalfTorusFormClass cls;
  HalfTorusAut rep = HalfTorusAut::identity();
  if (cur.e == 1) {
    // sigma0: (lambda x + c(y), mu y), both scalars unimodular
    if (cur.m != 0)
      throw InternalError("reduce_halftorus_cocycle: e=1 forces m=0");
    apply(scalar_step(
        exact_unimodular_sqrt(cur.lambda, "reduce_halftorus_cocycle"),
        exact_unimodular_sqrt(cur.mu, "reduce_halftorus_cocycle")));
    apply(shift_step(half * cur.c));
    cls = HalfTorusFormClass::a1xg1;
    rep = HalfTorusAut::identity();
  } else if (((cur.m % 2) + 2) % 2 == 0) {
    // matrix part (1 m; 0 -1), m even: slide to m = 0, then sigma1
    if (cur.m != 0) apply(monomial_step(-cur.m / 2));
    apply(scalar_step(
        exact_unimodular_sqrt(cur.lambda, "reduce_halftorus_cocycle"),
        CycloNum{rational_abs_sqrt(cur.mu, "reduce_halftorus_cocycle")}));
    apply(shift_step(-(half * cur.c.conj())));
    if (cur.mu == CycloNum::one()) {
      cls = HalfTorusFormClass::a1xg2;
    } else if (cur.mu == -CycloNum::one()) {
      cls = HalfTorusFormClass::a1xg3;
    } else {
      throw InternalError("reduce_halftorus_cocycle: sigma1 scalar out of range");
    }
    rep = HalfTorusAut{CycloNum::one(), 0, LaurentPoly::zero(), cur.mu, -1};
  } else {
    // m odd: slide to m = -1, the sigma2 case (x y^-1 + c(y), mu y^-1)
    if (cur.m != -1) apply(monomial_step(-(cur.m + 1) / 2));
    apply(scalar_step(
        CycloNum::one(),
        CycloNum{rational_abs_sqrt(cur.mu, "reduce_halftorus_cocycle")}));
    apply(scalar_step(
        exact_unimodular_sqrt(cur.lambda, "reduce_halftorus_cocycle"),
        CycloNum::one()));
    apply(shift_step(-(half * (cur.c.conj() *
                               LaurentPoly::term(CycloNum::one(), 1)))));
    cls = HalfTorusFormClass::projective_minus_conic;
    rep = HalfTorusAut{CycloNum::one(), -1, LaurentPoly::zero(),
                       CycloNum::one(), -1};
  }

  if (nu.twisted_conjugate_by(theta) != rep)
    throw InternalError("reduce_halftorus_cocycle: witness failed verification");
  return {cls, rep, theta};
}

}  // namespace realforms
