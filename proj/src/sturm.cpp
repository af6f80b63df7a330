#include "realforms/sturm.hpp"

#include <vector>

#include "realforms/errors.hpp"

namespace realforms {

namespace {

using QVec = std::vector<Rational>;  // dense, index = degree

QVec to_rational_poly(const UniPoly& f) {
  QVec out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    auto r = c.as_rational();
    if (!r) throw DomainError("Sturm counting requires rational coefficients");
    out.push_back(*r);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

int sign(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

Rational eval(const QVec& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// sign at +infinity (dir=+1) or -infinity (dir=-1)
int sign_at_infinity(const QVec& p, int dir) {
  if (p.empty()) return 0;
  int s = sign(p.back());
  if (dir < 0 && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

QVec derivative(const QVec& p) {
  QVec out;
  for (std::size_t i = 1; i < p.size(); ++i)
    out.push_back(Rational((long)i) * p[i]);
  return out;
}

QVec neg_remainder(QVec a, const QVec& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  for (auto& c : a) c = -c;
  return a;
}

// squarefree part f / gcd(f, f')
QVec squarefree(const QVec& f) {
  QVec a = f, b = derivative(f);
  while (!b.empty()) {
    QVec r = neg_remainder(a, b);
    for (auto& c : r) c = -c;  // plain remainder for gcd
    a = std::move(b);
    b = std::move(r);
  }
  // a = gcd(f, f') up to scalar; divide f by it
  if (a.size() == 1) return f;
  QVec num = f, quot(f.size() - a.size() + 1, Rational(0));
  while (num.size() >= a.size() && !num.empty()) {
    Rational c = num.back() / a.back();
    std::size_t shift = num.size() - a.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < a.size(); ++i) num[shift + i] -= c * a[i];
    while (!num.empty() && num.back() == 0) num.pop_back();
  }
  if (!num.empty()) throw InternalError("squarefree division not exact");
  return quot;
}

std::vector<QVec> sturm_chain(const QVec& f) {
  std::vector<QVec> chain;
  chain.push_back(f);
  QVec d = derivative(f);
  if (!d.empty()) chain.push_back(d);
  while (chain.back().size() > 1) {
    QVec r = neg_remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

unsigned variations_at(const std::vector<QVec>& chain, const Rational& x) {
  unsigned v = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign(eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

unsigned variations_at_infinity(const std::vector<QVec>& chain, int dir) {
  unsigned v = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at_infinity(p, dir);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

unsigned sturm_count(const UniPoly& f, const Interval& iv) {
  QVec p = to_rational_poly(f);
  if (p.empty()) throw DomainError("sturm_count of the zero polynomial");
  if (p.size() == 1) return 0;
  p = squarefree(p);
  auto chain = sturm_chain(p);
  unsigned v_lo = iv.lo ? variations_at(chain, *iv.lo)
                        : variations_at_infinity(chain, -1);
  unsigned v_hi = iv.hi ? variations_at(chain, *iv.hi)
                        : variations_at_infinity(chain, +1);
  return v_lo - v_hi;
}

bool attains_nonpositive(const UniPoly& f) {
  QVec p = to_rational_poly(f);
  if (p.empty()) return true;             // identically zero
  if (p.size() == 1) return p[0] <= 0;    // constant
  if ((p.size() - 1) % 2 == 1) return true;  // odd degree: unbounded below
  if (p.back() < 0) return true;          // negative leading term
  // positive leading, even degree: min <= 0 iff f has a real root
  return sturm_count(f) > 0;
}

}  // namespace realforms
