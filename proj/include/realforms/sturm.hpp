#pragma once

#include <optional>

#include "realforms/rational.hpp"
#include "realforms/unipoly.hpp"

namespace realforms {

struct Interval {
  // half-open (lo, hi]; unset bounds mean the whole real line
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  static Interval whole_line() { return {}; }
  static Interval half_open(Rational l, Rational h) {
    return {std::move(l), std::move(h)};
  }
};

// Number of distinct real roots of f in the interval, by exact Sturm chains.
// f must be nonzero with rational coefficients (DomainError otherwise).
unsigned sturm_count(const UniPoly& f, const Interval& iv = {});

// True iff f(t) <= 0 for some real t. Exact: reduces to leading-term sign,
// degree parity, and root existence via sturm_count.
bool attains_nonpositive(const UniPoly& f);

}  // namespace realforms
