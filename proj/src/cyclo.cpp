#include "realforms/cyclo.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

namespace {

// Dense polynomial over Q, index = degree. Internal helper only.
using QVec = std::vector<Rational>;

void trim(QVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Exact division of monic-divisor polynomials; remainder must vanish.
QVec divide_exact(QVec num, const QVec& den) {
  QVec quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0,
            Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rational c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  if (!num.empty()) throw InternalError("cyclotomic division not exact");
  return quot;
}

std::recursive_mutex cache_mutex;

const QVec& cyclotomic_poly(unsigned n) {
  static std::map<unsigned, QVec> cache;
  std::lock_guard<std::recursive_mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  QVec num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divide_exact(std::move(num), cyclotomic_poly(d));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

// zeta_n^j expressed in the power basis mod Phi_n, for j = 0..n-1.
const std::vector<QVec>& power_table(unsigned n) {
  static std::map<unsigned, std::vector<QVec>> table_cache;
  std::lock_guard<std::recursive_mutex> lock(cache_mutex);
  auto it = table_cache.find(n);
  if (it != table_cache.end()) return it->second;
  const QVec& phi = cyclotomic_poly(n);
  const std::size_t deg = phi.size() - 1;  // phi(n)
  std::vector<QVec> table(n, QVec(deg, Rational(0)));
  QVec cur(deg, Rational(0));
  cur[0] = 1;
  for (unsigned j = 0; j < n; ++j) {
    table[j] = cur;
    // multiply by zeta: shift and reduce the single overflow term
    QVec next(deg, Rational(0));
    Rational top = cur[deg - 1];
    for (std::size_t k = deg - 1; k >= 1; --k) next[k] = cur[k - 1];
    if (top != 0)
      for (std::size_t k = 0; k < deg; ++k) next[k] -= top * phi[k];
    cur = std::move(next);
  }
  return table_cache.emplace(n, std::move(table)).first->second;
}

unsigned checked_lcm(unsigned a, unsigned b) {
  unsigned g = std::gcd(a, b);
  unsigned long long l = (unsigned long long)a / g * b;
  if (l > max_cyclotomic_order())
    throw DomainError("cyclotomic order " + std::to_string(l) +
                      " exceeds cap " + std::to_string(max_cyclotomic_order()));
  return (unsigned)l;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned max_cyclotomic_order() {
  static unsigned cap = [] {
    if (const char* env = std::getenv("REALFORMS_MAX_ORDER")) {
      long v = std::atol(env);
      if (v >= 1) return (unsigned)v;
    }
    return 240u;
  }();
  return cap;
}

CycloNum::CycloNum() : order_(1), coeffs_(1, Rational(0)) {}

CycloNum::CycloNum(Rational r) : order_(1), coeffs_(1, std::move(r)) {
  // mpq_class values built from a (num, den) pair are not canonical until
  // told so, and exact comparison relies on canonical form
  coeffs_[0].canonicalize();
}

CycloNum::CycloNum(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ == 0 || coeffs_.size() != euler_phi(order_))
    throw InternalError("CycloNum: coefficient vector length != phi(order)");
  for (auto& c : coeffs_) c.canonicalize();
}

CycloNum CycloNum::zeta(unsigned n, long k) {
  if (n == 0) throw DomainError("zeta(0) is undefined");
  if (n > max_cyclotomic_order())
    throw DomainError("cyclotomic order " + std::to_string(n) +
                      " exceeds cap " + std::to_string(max_cyclotomic_order()));
  long kk = ((k % (long)n) + (long)n) % (long)n;
  return CycloNum(n, power_table(n)[(unsigned)kk]);
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Rational> CycloNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

CycloNum CycloNum::embedded(unsigned m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw InternalError("embedded: order does not divide");
  if (m > max_cyclotomic_order())
    throw DomainError("cyclotomic order " + std::to_string(m) +
                      " exceeds cap " + std::to_string(max_cyclotomic_order()));
  const auto& table = power_table(m);
  unsigned step = m / order_;
  QVec out(euler_phi(m), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const QVec& basis = table[(unsigned)((unsigned long long)k * step % m)];
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] += coeffs_[k] * basis[j];
  }
  return CycloNum(m, std::move(out));
}

CycloNum CycloNum::conj() const {
  const auto& table = power_table(order_);
  QVec out(coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const QVec& basis = table[k == 0 ? 0 : order_ - (unsigned)k];
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] += coeffs_[k] * basis[j];
  }
  return CycloNum(order_, std::move(out));
}

bool CycloNum::is_real() const { return conj() == *this; }

bool CycloNum::is_unimodular() const { return (*this) * conj() == one(); }

CycloNum CycloNum::operator-() const {
  QVec out = coeffs_;
  for (auto& c : out) c = -c;
  return CycloNum(order_, std::move(out));
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  unsigned m = checked_lcm(a.order_, b.order_);
  CycloNum x = a.embedded(m), y = b.embedded(m);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    x.coeffs_[i] += y.coeffs_[i];
  return x;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  unsigned m = checked_lcm(a.order_, b.order_);
  CycloNum x = a.embedded(m), y = b.embedded(m);
  const std::size_t deg = x.coeffs_.size();
  QVec prod(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (y.coeffs_[j] == 0) continue;
      prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  const auto& table = power_table(m);
  QVec out(deg, Rational(0));
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    if (k < deg) {
      out[k] += prod[k];
    } else {
      const QVec& basis = table[k % m];
      for (std::size_t j = 0; j < deg; ++j) out[j] += prod[k] * basis[j];
    }
  }
  return CycloNum(m, std::move(out));
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta)");
  if (is_rational()) return CycloNum(Rational(1) / coeffs_[0]);
  // Extended Euclid of (this, Phi_N) in Q[x]; gcd is 1 since Phi_N is
  // irreducible and this is a nonzero residue.
  QVec r0 = cyclotomic_poly(order_);
  QVec r1 = coeffs_;
  trim(r1);
  QVec s0{Rational(0)}, s1{Rational(1)};  // coefficients of `this`
  auto poly_mul = [](const QVec& p, const QVec& q) {
    if (p.empty() || q.empty()) return QVec{};
    QVec out(p.size() + q.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
  };
  auto poly_sub = [](QVec a, const QVec& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
  };
  while (!r1.empty() && r1.size() > 1) {
    // quotient of r0 by r1
    QVec q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
           Rational(0));
    QVec rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      trim(rem);
    }
    QVec s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw InternalError("inverse: zero residue with nonzero input");
  // r1 is a nonzero constant: this * s1 == r1[0]
  QVec out(euler_phi(order_), Rational(0));
  for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i)
    out[i] = s1[i] / r1[0];
  // s1 may exceed the basis length only if reduction failed
  if (s1.size() > out.size()) throw InternalError("inverse: cofactor too long");
  return CycloNum(order_, std::move(out));
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) {
  return a * b.inverse();
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  unsigned m = checked_lcm(a.order_, b.order_);
  return a.embedded(m).coeffs_ == b.embedded(m).coeffs_;
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum base = *this, acc = one();
  unsigned long ue = (unsigned long)e;
  while (ue) {
    if (ue & 1) acc = acc * base;
    base = base * base;
    ue >>= 1;
  }
  return acc;
}

std::optional<Rational> CycloNum::norm_as_rational() const {
  return ((*this) * conj()).as_rational();
}

std::string CycloNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (abs_c == 1);
    if (k == 0) {
      out << rational_to_string(abs_c);
    } else {
      if (!unit) out << rational_to_string(abs_c) << "*";
      if (order_ == 4 && k == 1) {
        out << "i";
      } else {
        out << "zeta(" << order_ << ")";
        if (k > 1) out << "^" << k;
      }
    }
  }
  return out.str();
}

RootOfUnity::RootOfUnity(unsigned n, long k) {
  if (n == 0) throw DomainError("root of unity of order 0");
  unsigned kk = (unsigned)(((k % (long)n) + (long)n) % (long)n);
  unsigned g = std::gcd(kk, n);
  if (kk == 0) {
    order = 1;
    exponent = 0;
  } else {
    order = n / g;
    exponent = kk / g;
  }
}

CycloNum RootOfUnity::to_cyclo() const {
  return CycloNum::zeta(order, (long)exponent);
}

std::optional<RootOfUnity> RootOfUnity::from_cyclo(const CycloNum& x) {
  if (auto r = x.as_rational()) {
    if (*r == 1) return RootOfUnity();
    if (*r == -1) return RootOfUnity(2, 1);
    return std::nullopt;
  }
  unsigned n = x.order();
  // roots of unity inside Q(zeta_n) are exactly +-zeta_n^k
  for (unsigned k = 1; k < n; ++k) {
    CycloNum z = CycloNum::zeta(n, (long)k);
    if (x == z) return RootOfUnity(n, (long)k);
    if (x == -z) {
      // -zeta_n^k = zeta_2n^(n+2k)
      return RootOfUnity(2 * n, (long)(n + 2 * k));
    }
  }
  return std::nullopt;
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  unsigned l = std::lcm(a.order, b.order);
  long e = (long)a.exponent * (long)(l / a.order) +
           (long)b.exponent * (long)(l / b.order);
  return RootOfUnity(l, e);
}

RootOfUnity RootOfUnity::pow(long e) const {
  long long ee = (long long)exponent * e;
  return RootOfUnity(order, (long)(((ee % (long long)order) + order) %
                                   (long long)order));
}

RootOfUnity square_root_as_root_of_unity(const RootOfUnity& a) {
  // In mu_2N the element a has exponent 2k; solutions of 2e = 2k (mod 2N)
  // are e = k and e = k + N, so k is the smallest nonnegative choice.
  return RootOfUnity(2 * a.order, (long)a.exponent);
}

}  // namespace realforms
