#include "realforms/parse.hpp"

#include <cctype>
#include <cstdlib>

#include "realforms/errors.hpp"
#include "realforms/rational.hpp"

namespace realforms {

namespace {

// minimal recursive-descent parser over
//   poly   := [sign] term (sign term)*
//   term   := factor ('*' factor)*
//   factor := number | fraction | 'i' | 'zeta(N)' ['^' int] | var ['^' int]
class PolyParser {
 public:
  PolyParser(const std::string& text, std::string var)
      : s_(text), var_(std::move(var)) {}

  UniPoly parse() {
    UniPoly result = UniPoly::zero(var_);
    skip_ws();
    if (eof()) throw ParseError("empty polynomial literal");
    bool neg = consume_sign();
    result = result + term(neg);
    skip_ws();
    while (!eof()) {
      char c = peek();
      if (c != '+' && c != '-')
        throw ParseError(std::string("unexpected character '") + c +
                         "' in polynomial literal");
      ++pos_;
      skip_ws();
      result = result + term(c == '-');
      skip_ws();
    }
    return result;
  }

 private:
  const std::string& s_;
  std::string var_;
  std::size_t pos_ = 0;

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace((unsigned char)peek())) ++pos_;
  }
  bool consume_sign() {
    if (!eof() && (peek() == '+' || peek() == '-')) {
      bool neg = peek() == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (!eof() && (peek() == '+' || peek() == '-')) {
      neg = peek() == '-';
      ++pos_;
    }
    if (eof() || !std::isdigit((unsigned char)peek()))
      throw ParseError("expected an integer");
    long v = 0;
    while (!eof() && std::isdigit((unsigned char)peek())) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000) throw ParseError("integer literal too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  long exponent_suffix(long dflt) {
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      return integer();
    }
    return dflt;
  }

  bool lookahead_word(const std::string& w) {
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    std::size_t after = pos_ + w.size();
    // the next character must not extend the identifier
    if (after < s_.size() && (std::isalnum((unsigned char)s_[after]) ||
                              s_[after] == '_'))
      return false;
    pos_ = after;
    return true;
  }

  // one factor, multiplied into (coeff, exp)
  void factor(CycloNum& coeff, long& exp) {
    skip_ws();
    if (eof()) throw ParseError("unexpected end of polynomial literal");
    if (std::isdigit((unsigned char)peek())) {
      long num = integer();
      long den = 1;
      skip_ws();
      if (!eof() && peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator");
      }
      coeff = coeff * CycloNum{make_rational(num, den)};
      return;
    }
    if (lookahead_word("zeta")) {
      skip_ws();
      if (eof() || peek() != '(') throw ParseError("expected '(' after zeta");
      ++pos_;
      long n = integer();
      skip_ws();
      if (eof() || peek() != ')')
        throw ParseError("expected ')' in zeta literal");
      ++pos_;
      if (n <= 0) throw ParseError("zeta order must be positive");
      long k = exponent_suffix(1);
      long kk = ((k % n) + n) % n;
      coeff = coeff * CycloNum::zeta((unsigned)n, kk);
      return;
    }
    if (lookahead_word("i")) {
      long k = exponent_suffix(1);
      coeff = coeff * CycloNum::imaginary_unit().pow(k);
      return;
    }
    if (lookahead_word(var_)) {
      long k = exponent_suffix(1);
      if (k < 0) throw ParseError("negative exponents are not allowed");
      exp += k;
      return;
    }
    throw ParseError(std::string("unexpected character '") + peek() +
                     "' in polynomial literal");
  }

  UniPoly term(bool neg) {
    CycloNum coeff = neg ? -CycloNum::one() : CycloNum::one();
    long exp = 0;
    factor(coeff, exp);
    skip_ws();
    while (!eof() && peek() == '*') {
      ++pos_;
      factor(coeff, exp);
      skip_ws();
    }
    return UniPoly::monomial(coeff, (unsigned)exp, var_);
  }
};

}  // namespace

CycloNum parse_scalar(const std::string& text) {
  UniPoly p = PolyParser(text, "\x01no-variable\x01").parse();
  if (p.degree() > 0) throw ParseError("expected a scalar literal");
  return p.coeff(0);
}

UniPoly parse_poly(const std::string& text, const std::string& var) {
  return PolyParser(text, var).parse();
}

}  // namespace realforms
