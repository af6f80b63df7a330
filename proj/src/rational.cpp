#include "realforms/rational.hpp"

namespace realforms {

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) return std::nullopt;
      return Rational(mpz_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::optional<Rational> rational_nth_root(const Rational& q, unsigned n) {
  if (q < 0 || n == 0) return std::nullopt;
  mpz_class num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), q.get_num().get_mpz_t(), n) == 0)
    return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), q.get_den().get_mpz_t(), n) == 0)
    return std::nullopt;
  return Rational(num_root, den_root);
}

}  // namespace realforms
