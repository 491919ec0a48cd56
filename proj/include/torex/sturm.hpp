#pragma once

#include <optional>
#include <vector>

#include "torex/polynomial.hpp"

namespace torex {

// Sturm sequence of p: p, p', then negated remainders.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

// Number of distinct real roots of p in the half-open interval (a, b].
int count_roots(const std::vector<UniPoly>& seq, const Rational& a, const Rational& b);
int count_roots(const UniPoly& p, const Rational& a, const Rational& b);

struct RootInterval {
  Rational lo, hi;  // lo < root <= hi, exactly one root inside
};

// Isolating intervals for all distinct real roots of p in (a, b].
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& a, const Rational& b);

// Bisection refinement of an isolating interval until hi - lo <= width.
RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& width);

inline double refine_root_to_double(const UniPoly& p, RootInterval iv) {
  iv = refine_root(p, iv, Rational(1, 1000000000000LL) * (iv.hi - iv.lo + 1));
  return to_double((iv.lo + iv.hi) / 2);
}

// Exact: p > 0 on the open interval (a, b). Assumes a < b.
bool positive_on_open_interval(const UniPoly& p, const Rational& a, const Rational& b);

}  // namespace torex
