#include "realforms/psi.hpp"

#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

namespace {

// r(s * x) for a polynomial in x
UniPoly scale_argument(const UniPoly& r, const CycloNum& s) {
  return r.compose_affine(s, CycloNum::zero());
}

// square root inside the root-of-unity part of the tower; the scalar must
// be a root of unity for the witness to stay exact
CycloNum exact_unimodular_sqrt(const CycloNum& a, const char* who) {
  auto ru = RootOfUnity::from_cyclo(a);
  if (!ru)
    throw DomainError(std::string(who) +
                      ": scalar is not a root of unity, its square root "
                      "leaves the working field");
  return square_root_as_root_of_unity(*ru).to_cyclo();
}

}  // namespace

PsiElement PsiElement::identity() {
  return {CycloNum::one(), CycloNum::one(), CycloNum::one(), CycloNum::zero(),
          UniPoly::zero("x")};
}

bool PsiElement::is_identity() const { return *this == identity(); }

bool PsiElement::is_valid_for(const UniPoly& p) const {
  if (a.is_zero() || b.is_zero() || c.is_zero())
    return false;
  return p.compose_affine(c, d) == (a * b) * p;
}

PsiElement operator*(const PsiElement& f, const PsiElement& g) {
  // psi_{a,b,c,d,r} o psi_{a',b',c',d',r'}
  //   = psi_{aa', bb', cc', cd'+d, c r'(x) + a' r(a' x)}
  return {f.a * g.a, f.b * g.b, f.c * g.c, f.c * g.d + f.d,
          f.c * g.r + g.a * scale_argument(f.r, g.a)};
}

PsiElement PsiElement::inverse() const {
  CycloNum ai = a.inverse(), ci = c.inverse();
  // solve f o g = id from the composition law
  return {ai, b.inverse(), ci, -(ci * d),
          -(ci * ai) * scale_argument(r, ai)};
}

PsiElement PsiElement::galois_conj() const {
  return {a.conj(), b.conj(), c.conj(), d.conj(), r.conj()};
}

PsiElement PsiElement::twisted_conjugate_by(const PsiElement& theta) const {
  return theta.inverse() * (*this) * theta.galois_conj();
}

std::array<MultiPoly, 3> PsiElement::to_map(const UniPoly& p) const {
  if (!is_valid_for(p)) throw DomainError("psi element invalid for ambient p");
  MultiPoly X = MultiPoly::variable("x");
  MultiPoly Y = MultiPoly::variable("y");
  MultiPoly Z = MultiPoly::variable("z");
  MultiPoly rX = MultiPoly::from_unipoly(r, "x");
  MultiPoly inner = c * Z + MultiPoly::constant(d) + X * rX;
  // p(inner)
  MultiPoly p_inner = MultiPoly::zero();
  for (long e = (long)p.degree(); e >= 0; --e)
    p_inner = p_inner * inner + MultiPoly::constant(p.coeff((std::size_t)e));
  MultiPoly pZ = MultiPoly::from_unipoly(p, "z");
  MultiPoly numer = p_inner - (a * b) * pZ;
  MultiPoly quot = numer.divide_by_variable("x");
  return {a * X, b * Y + a.inverse() * quot, inner};
}

std::string PsiElement::to_string() const {
  std::ostringstream os;
  os << "psi{a=" << a.to_string() << ", b=" << b.to_string()
     << ", c=" << c.to_string() << ", d=" << d.to_string()
     << ", r=" << r.to_string() << "}";
  return os.str();
}

bool is_cocycle(const PsiElement& f) {
  return (f * f.galois_conj()).is_identity();
}

AffineAutElement AffineAutElement::identity() {
  return diagonal(CycloNum::one(), CycloNum::one(), CycloNum::one());
}

AffineAutElement AffineAutElement::diagonal(CycloNum a, CycloNum b, CycloNum c,
                                            CycloNum d) {
  return {false, std::move(a), std::move(b), std::move(c), std::move(d)};
}

AffineAutElement AffineAutElement::swapped(CycloNum a, CycloNum b, CycloNum c,
                                           CycloNum d) {
  return {true, std::move(a), std::move(b), std::move(c), std::move(d)};
}

bool AffineAutElement::is_identity() const { return *this == identity(); }

bool AffineAutElement::is_valid_for(const UniPoly& p) const {
  if (a.is_zero() || b.is_zero() || c.is_zero())
    return false;
  return p.compose_affine(c, d) == (a * b) * p;
}

AffineAutElement operator*(const AffineAutElement& f,
                           const AffineAutElement& g) {
  // f(x,y,z) = (a_f u, b_f v, c_f z + d_f) with (u,v) swapped when f.swap
  return {f.swap != g.swap, f.a * (f.swap ? g.b : g.a),
          f.b * (f.swap ? g.a : g.b), f.c * g.c, f.c * g.d + f.d};
}

AffineAutElement AffineAutElement::inverse() const {
  CycloNum ci = c.inverse();
  if (!swap)
    return {false, a.inverse(), b.inverse(), ci, -(ci * d)};
  // (a y, b x, cz+d): x <- y/b, y <- x/a
  return {true, b.inverse(), a.inverse(), ci, -(ci * d)};
}

AffineAutElement AffineAutElement::galois_conj() const {
  return {swap, a.conj(), b.conj(), c.conj(), d.conj()};
}

AffineAutElement AffineAutElement::twisted_conjugate_by(
    const AffineAutElement& theta) const {
  return theta.inverse() * (*this) * theta.galois_conj();
}

std::array<MultiPoly, 3> AffineAutElement::to_map() const {
  MultiPoly X = MultiPoly::variable("x");
  MultiPoly Y = MultiPoly::variable("y");
  MultiPoly Z = MultiPoly::variable("z");
  return {a * (swap ? Y : X), b * (swap ? X : Y),
          c * Z + MultiPoly::constant(d)};
}

bool operator==(const AffineAutElement& f, const AffineAutElement& g) {
  return f.swap == g.swap && f.a == g.a && f.b == g.b && f.c == g.c &&
         f.d == g.d;
}

std::string AffineAutElement::to_string() const {
  std::ostringstream os;
  std::string u = swap ? "y" : "x", v = swap ? "x" : "y";
  os << "(" << a.to_string() << "*" << u << ", " << b.to_string() << "*" << v
     << ", " << c.to_string() << "*z";
  if (!d.is_zero()) os << " + " << d.to_string();
  os << ")";
  return os.str();
}

bool is_cocycle(const AffineAutElement& f) {
  return (f * f.galois_conj()).is_identity();
}

BReductionResult reduce_B_cocycle(const PsiElement& tau, const UniPoly& p) {
  if (p.degree() < 2 || !p.is_real())
    throw DomainError("reduce_B_cocycle: ambient p must be real of degree >= 2");
  if (!tau.is_valid_for(p))
    throw DomainError("reduce_B_cocycle: element invalid for ambient p");
  if (!is_cocycle(tau))
    throw DomainError("reduce_B_cocycle: input is not a 1-cocycle");

  // step 1: kill the a-coordinate with theta1 = psi_{eps, eps^-1, 1, 0, 0}
  CycloNum eps = exact_unimodular_sqrt(tau.a, "reduce_B_cocycle");
  PsiElement theta1{eps, eps.inverse(), CycloNum::one(), CycloNum::zero(),
                    UniPoly::zero("x")};
  PsiElement mid = tau.twisted_conjugate_by(theta1);

  // step 2: kill the polynomial part with theta2 = psi_{1,1,1,0,s/2}
  UniPoly half_s = (CycloNum(Rational(1, 2))) * mid.r;
  PsiElement theta2{CycloNum::one(), CycloNum::one(), CycloNum::one(),
                    CycloNum::zero(), half_s};
  PsiElement theta = theta1 * theta2;
  PsiElement nf = tau.twisted_conjugate_by(theta);
  if (!nf.r.is_zero() || nf.a != CycloNum::one())
    throw InternalError("reduce_B_cocycle: normal form not psi_{1,b,c,d,0}");
  if (tau.twisted_conjugate_by(theta) != nf)
    throw InternalError("reduce_B_cocycle: witness failed verification");
  return {nf, theta};
}

namespace {

struct HpData {
  bool infinite;
  unsigned n = 0;       // meaningful when finite
  CycloNum c_can;       // zeta_n (or 1 when infinite / n == 1)
  CycloNum a_can;       // zeta_{2n}^d
};

HpData hp_data(const SurfaceInvariants& inv) {
  HpData h;
  h.infinite = inv.hp.infinite;
  if (h.infinite) {
    h.c_can = CycloNum::one();
    h.a_can = CycloNum::one();
  } else {
    h.n = inv.hp.order;
    h.c_can = CycloNum::zeta(h.n, 1);
    h.a_can = CycloNum::zeta(2 * h.n, (long)inv.d);
  }
  return h;
}

}  // namespace

AClassification classify_A_cocycle(const AffineAutElement& tau,
                                   const SurfaceInvariants& inv) {
  const UniPoly& p = inv.reduced_p;
  if (inv.d < 3) throw DomainError("classify_A_cocycle: requires degree >= 3");
  if (!p.is_real())
    throw DomainError("classify_A_cocycle: ambient p must be real");
  if (!tau.is_valid_for(p))
    throw DomainError("classify_A_cocycle: element invalid for ambient p");
  if (!tau.d.is_zero())
    throw DomainError("classify_A_cocycle: reduced ambient p forces d = 0");
  if (!is_cocycle(tau))
    throw DomainError("classify_A_cocycle: input is not a 1-cocycle");

  HpData hp = hp_data(inv);
  unsigned d = inv.d;
  bool clubs = (d % 2 == 1) && (hp.infinite || hp.n % 2 == 0);

  AffineAutElement theta = AffineAutElement::identity();
  AffineAutElement cur = tau;

  // normalize the z-scalar to 1 or zeta_n, the two H^1(H_p) representatives
  auto cr = RootOfUnity::from_cyclo(cur.c);
  if (!cr)
    throw DomainError("classify_A_cocycle: z-scalar is not a root of unity");
  bool nontrivial_hp_class = false;
  CycloNum gamma;
  if (hp.infinite) {
    gamma = square_root_as_root_of_unity(*cr).to_cyclo();
  } else {
    if (hp.n % cr->order != 0)
      throw DomainError("classify_A_cocycle: z-scalar not in the symmetry group");
    long k = (long)cr->exponent * (long)(hp.n / cr->order);
    if (hp.n % 2 == 0 && k % 2 == 1) {
      nontrivial_hp_class = true;
      gamma = CycloNum::zeta(hp.n, (k - 1) / 2);
    } else {
      // squares of mu_n: even exponent (or n odd, where everything is one)
      long half = (k % 2 == 0) ? k / 2 : (k + (long)hp.n) / 2;
      gamma = CycloNum::zeta(hp.n, half);
    }
  }
  if (gamma != CycloNum::one()) {
    AffineAutElement step =
        AffineAutElement::diagonal(gamma.pow((long)d), CycloNum::one(), gamma);
    theta = theta * step;
    cur = cur.twisted_conjugate_by(step);
  }
  CycloNum target_c = nontrivial_hp_class ? hp.c_can : CycloNum::one();
  if (cur.c != target_c)
    throw InternalError("classify_A_cocycle: z-scalar normalization failed");

  ACocycleClass cls;
  AffineAutElement rep = AffineAutElement::identity();
  if (!cur.swap) {
    if (!nontrivial_hp_class) {
      // (a x, a^-1 y, z) -> identity via lambda^2 = a
      CycloNum lam = exact_unimodular_sqrt(cur.a, "classify_A_cocycle");
      AffineAutElement step =
          AffineAutElement::diagonal(lam, lam.inverse(), CycloNum::one());
      theta = theta * step;
      cur = cur.twisted_conjugate_by(step);
      cls = ACocycleClass::t1;
      rep = AffineAutElement::identity();
    } else {
      // (a x, b y, c z) -> (a' x, a' y, c z) via lambda^4 = a/b
      auto ratio = RootOfUnity::from_cyclo(cur.a / cur.b);
      if (!ratio)
        throw DomainError(
            "classify_A_cocycle: scalar ratio is not a root of unity");
      CycloNum lam =
          RootOfUnity(4 * ratio->order, (long)ratio->exponent).to_cyclo();
      AffineAutElement step =
          AffineAutElement::diagonal(lam, lam.inverse(), CycloNum::one());
      theta = theta * step;
      cur = cur.twisted_conjugate_by(step);
      if (cur.a == -hp.a_can) {
        CycloNum i = CycloNum::imaginary_unit();
        AffineAutElement flip =
            AffineAutElement::diagonal(i, -i, CycloNum::one());
        theta = theta * flip;
        cur = cur.twisted_conjugate_by(flip);
      }
      if (cur.a != hp.a_can || cur.b != hp.a_can)
        throw InternalError("classify_A_cocycle: scalar normalization failed");
      cls = ACocycleClass::t2;
      rep = AffineAutElement::diagonal(hp.a_can, hp.a_can, hp.c_can);
    }
  } else {
    // (a y, b x, c z): strip the rational modulus of a with (s x, s^-1 y, z)
    auto norm = cur.a.norm_as_rational();
    if (!norm) throw InternalError("classify_A_cocycle: non-real norm");
    auto s = rational_nth_root(*norm, 4);
    if (!s)
      throw DomainError(
          "classify_A_cocycle: scalar modulus has no rational square root, "
          "the conjugator leaves the working field");
    if (*s != 1) {
      CycloNum sc{*s};
      AffineAutElement step =
          AffineAutElement::diagonal(sc, sc.inverse(), CycloNum::one());
      theta = theta * step;
      cur = cur.twisted_conjugate_by(step);
    }
    if (cur.a != cur.b)
      throw InternalError("classify_A_cocycle: swap scalars disagree");
    CycloNum a_target = nontrivial_hp_class ? hp.a_can : CycloNum::one();
    bool negated = (cur.a == -a_target);
    if (!negated && cur.a != a_target)
      throw InternalError("classify_A_cocycle: swap scalar out of range");
    if (negated && clubs) {
      // (x, -y, -z) merges the two sign classes when d is odd and -1 in H_p
      AffineAutElement flip = AffineAutElement::diagonal(
          CycloNum::one(), -CycloNum::one(), -CycloNum::one());
      theta = theta * flip;
      cur = cur.twisted_conjugate_by(flip);
      negated = false;
    }
    CycloNum sign = negated ? -CycloNum::one() : CycloNum::one();
    if (!nontrivial_hp_class) {
      cls = negated ? ACocycleClass::t4 : ACocycleClass::t3;
      rep = AffineAutElement::swapped(sign, sign, CycloNum::one());
    } else {
      cls = negated ? ACocycleClass::t6 : ACocycleClass::t5;
      rep = AffineAutElement::swapped(sign * hp.a_can, sign * hp.a_can,
                                      hp.c_can);
    }
  }

  if (tau.twisted_conjugate_by(theta) != rep)
    throw InternalError("classify_A_cocycle: witness failed verification");
  return {cls, rep, theta};
}

}  // namespace realforms
