#pragma once

#include <vector>

#include "qes/upoly.hpp"

namespace qes {

// One real root of a rational polynomial. Rational roots are recovered
// exactly; irrational ones carry an isolating interval refined to the
// requested precision (value = midpoint).
struct RealRoot {
  bool is_rational = false;
  Rational value;
  Rational lo, hi;  // lo == hi == value for rational roots
  int multiplicity = 1;
};

struct RootSet {
  std::vector<RealRoot> roots;  // ascending
  int complex_pairs = 0;        // conjugate non-real pairs, with multiplicity
};

// Sturm sequence of a squarefree polynomial.
std::vector<UPoly> sturm_sequence(const UPoly& f);

// Number of real roots of squarefree f in (a, b].
int sturm_count(const std::vector<UPoly>& seq, const Rational& a,
                const Rational& b);

// Simplest rational in [lo, hi] (smallest denominator, then numerator).
Rational simplest_in(const Rational& lo, const Rational& hi);

// All real roots of p with multiplicities; intervals shrunk below
// 2^-precision_bits.
RootSet real_roots(const UPoly& p, int precision_bits = 128);

// Roots known to be rational; throws if any real root resists exact
// reconstruction.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p);

}  // namespace qes
