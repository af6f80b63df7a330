#include "realforms/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "realforms/errors.hpp"

namespace realforms {

namespace {

// g = gcd(ks), with coefficients c such that sum c_i k_i = g.
std::pair<long, std::vector<long>> gcd_with_bezout(
    const std::vector<unsigned>& ks) {
  long g = (long)ks[0];
  std::vector<long> coeffs{1};
  for (std::size_t i = 1; i < ks.size(); ++i) {
    // extended gcd of (g, ks[i])
    long a = g, b = (long)ks[i];
    long x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      long q = a / b;
      std::tie(a, b) = std::pair(b, a - q * b);
      std::tie(x0, x1) = std::pair(x1, x0 - q * x1);
      std::tie(y0, y1) = std::pair(y1, y0 - q * y1);
    }
    for (auto& c : coeffs) c *= x0;
    coeffs.push_back(y0);
    g = a;
  }
  return {g, coeffs};
}

struct SortedSolution {
  unsigned zeta_order;
  unsigned zeta_exp;
  CycloNum value;
};

}  // namespace

PowerSystemResult solve_power_system(
    const std::vector<PowerSystemEquation>& eqs, unsigned max_zeta_order) {
  PowerSystemResult result;
  if (eqs.empty()) {
    result.solvable_over_c = true;
    result.tower_solutions.push_back(CycloNum::one());
    return result;
  }
  std::vector<unsigned> ks;
  for (const auto& eq : eqs) {
    if (eq.k == 0 || eq.v.is_zero())
      throw DomainError("power system: exponents must be >= 1, targets nonzero");
    ks.push_back(eq.k);
  }
  auto [g, bezout] = gcd_with_bezout(ks);
  CycloNum w = CycloNum::one();
  for (std::size_t i = 0; i < eqs.size(); ++i)
    w = w * eqs[i].v.pow(bezout[i]);

  // Over C: the solutions of a^g = w are a0 * mu_g for any fixed g-th root
  // a0 with a0^{k_i} = w^{k_i / g}; the system is solvable iff some
  // zeta in mu_g matches every equation.
  for (long j = 0; j < g; ++j) {
    CycloNum zeta = CycloNum::zeta((unsigned)g, j);
    bool ok = true;
    for (const auto& eq : eqs) {
      if (w.pow((long)eq.k / g) * zeta.pow((long)eq.k) != eq.v) {
        ok = false;
        break;
      }
    }
    if (ok) {
      result.solvable_over_c = true;
      break;
    }
  }

  // In-tower solutions of the form t * zeta, t rational > 0, zeta a root
  // of unity: t is forced by |a|^{2g} = w * conj(w), then zeta^g is forced.
  auto norm = w.norm_as_rational();
  if (!norm) return result;
  auto t = rational_nth_root(*norm, 2 * (unsigned)g);
  if (!t || *t == 0) return result;
  CycloNum tc{*t};
  auto u = RootOfUnity::from_cyclo(w / tc.pow(g));
  if (!u) return result;

  std::vector<SortedSolution> found;
  unsigned big = (unsigned)g * u->order;
  for (long j = 0; j < g; ++j) {
    RootOfUnity zeta(big, (long)u->exponent + j * (long)u->order);
    if (max_zeta_order != 0 && max_zeta_order % zeta.order != 0) continue;
    CycloNum a;
    try {
      a = tc * zeta.to_cyclo();
    } catch (const DomainError&) {
      continue;  // beyond the order cap
    }
    bool ok = true;
    for (const auto& eq : eqs) {
      if (a.pow((long)eq.k) != eq.v) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back({zeta.order, zeta.exponent, a});
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return std::tie(x.zeta_order, x.zeta_exp) <
           std::tie(y.zeta_order, y.zeta_exp);
  });
  for (auto& s : found) result.tower_solutions.push_back(std::move(s.value));
  return result;
}

SurfaceInvariants reduce_form(const UniPoly& p) {
  long deg = p.degree();
  if (deg < 1) throw DomainError("reduce_form: polynomial must be nonconstant");
  SurfaceInvariants inv;
  inv.d = (unsigned)deg;
  CycloNum lead = p.leading();
  inv.witness_lambda = lead.inverse();
  inv.witness_mu = -(p.coeff((std::size_t)deg - 1) /
                     (CycloNum::from_int(deg) * lead));
  inv.reduced_p =
      inv.witness_lambda * p.compose_affine(CycloNum::one(), inv.witness_mu);
  if (inv.reduced_p.leading() != CycloNum::one() ||
      (deg >= 2 && !inv.reduced_p.coeff((std::size_t)deg - 1).is_zero()))
    throw InternalError("reduce_form: result not in reduced form");
  return inv;
}

void decompose(SurfaceInvariants& inv) {
  const UniPoly& p = inv.reduced_p;
  std::vector<unsigned> support;
  for (std::size_t e = 0; e < p.coeffs().size(); ++e)
    if (!p.coeffs()[e].is_zero()) support.push_back((unsigned)e);
  inv.m = support.front();
  if (support.size() == 1) {
    // monomial z^d
    inv.n = std::nullopt;
    inv.q = UniPoly::constant(CycloNum::one(), "t");
    inv.hp = HpKind::inf();
    return;
  }
  unsigned n = 0;
  for (unsigned e : support) n = std::gcd(n, e - inv.m);
  inv.n = n;
  std::vector<CycloNum> qc((inv.d - inv.m) / n + 1, CycloNum::zero());
  for (unsigned e : support) qc[(e - inv.m) / n] = p.coeff(e);
  inv.q = UniPoly(std::move(qc), "t");
  inv.hp = HpKind::cyclic(n);
}

SurfaceInvariants analyze(const UniPoly& p) {
  SurfaceInvariants inv = reduce_form(p);
  decompose(inv);
  return inv;
}

HpKind symmetry_group(const UniPoly& reduced_p) {
  SurfaceInvariants inv;
  inv.d = (unsigned)reduced_p.degree();
  inv.reduced_p = reduced_p;
  decompose(inv);
  return inv.hp;
}

std::optional<IsoWitness> iso_test(const UniPoly& p, const UniPoly& q,
                                   ScalarField field) {
  if (p.degree() < 1 || q.degree() < 1)
    throw DomainError("iso_test: both polynomials must be nonconstant");
  if (p.degree() != q.degree()) return std::nullopt;
  SurfaceInvariants ip = reduce_form(p), iq = reduce_form(q);
  unsigned d = ip.d;

  std::vector<PowerSystemEquation> eqs;
  for (unsigned e = 0; e < d; ++e) {
    bool zp = ip.reduced_p.coeff(e).is_zero();
    bool zq = iq.reduced_p.coeff(e).is_zero();
    if (zp != zq) return std::nullopt;  // supports must match
    if (!zp)
      eqs.push_back({d - e, ip.reduced_p.coeff(e) / iq.reduced_p.coeff(e)});
  }

  unsigned zeta_cap = field == ScalarField::Q ? 2 : 4;
  auto sols = solve_power_system(eqs, zeta_cap);
  for (const CycloNum& a : sols.tower_solutions) {
    // assemble the witness on the original inputs
    CycloNum b = ip.witness_mu - a * iq.witness_mu;
    CycloNum lambda = a.pow((long)d) * iq.witness_lambda / ip.witness_lambda;
    IsoWitness w{a, b, lambda};
    if (p.compose_affine(w.a, w.b) != lambda * q)
      throw InternalError("iso_test: assembled witness failed verification");
    return w;
  }
  return std::nullopt;
}

RealFormExistence real_form_exists(const UniPoly& p) {
  if (p.degree() < 1)
    throw DomainError("real_form_exists: polynomial must be nonconstant");
  SurfaceInvariants inv = reduce_form(p);
  unsigned d = inv.d;
  const UniPoly& pr = inv.reduced_p;

  RealFormExistence out;
  std::vector<PowerSystemEquation> eqs;
  for (unsigned e = 0; e < d; ++e) {
    CycloNum c = pr.coeff(e);
    if (c.is_zero()) continue;
    eqs.push_back({d - e, c / c.conj()});
  }
  if (eqs.empty()) {
    out.exists = true;  // monomial z^d
    out.real_witness = pr;
    return out;
  }
  if (pr.is_real()) {
    out.exists = true;
    out.real_witness = pr;
    return out;
  }
  auto sols = solve_power_system(eqs, 0);
  out.exists = sols.solvable_over_c;
  if (!out.exists) return out;
  for (const CycloNum& a : sols.tower_solutions) {
    auto a_ru = RootOfUnity::from_cyclo(a);
    if (!a_ru) continue;  // unimodular non-root-of-unity scalar
    RootOfUnity alpha = square_root_as_root_of_unity(*a_ru);
    CycloNum ac;
    try {
      ac = alpha.to_cyclo();
    } catch (const DomainError&) {
      continue;
    }
    UniPoly witness = ac.pow(-(long)d) * pr.compose_affine(ac, CycloNum::zero());
    if (!witness.is_real())
      throw InternalError("real_form_exists: witness polynomial is not real");
    out.real_witness = witness;
    return out;
  }
  out.witness_omitted = true;
  return out;
}

}  // namespace realforms
