#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace realforms {

// Exact rational scalar. Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q);

// Parses "3", "-3", "3/7". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

// Exact integer n-th root of a nonnegative rational, if one exists.
std::optional<Rational> rational_nth_root(const Rational& q, unsigned n);

}  // namespace realforms
