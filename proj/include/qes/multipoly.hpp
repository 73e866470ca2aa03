#pragma once

#include <map>
#include <string>
#include <vector>

#include "qes/common.hpp"

namespace qes {

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no explicit zero coefficients; every exponent vector has
// length nvars(); terms ordered graded-lexicographically.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int var);  // x_var
  static MultiPoly monomial(int nvars, const Exponents& e, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  Rational constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;
  const TermMap& terms() const { return terms_; }

  void set_coeff(const Exponents& e, const Rational& c);
  Rational coeff(const Exponents& e) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scale(const Rational& c) const;
  MultiPoly diff(int var) const;
  MultiPoly pow(int e) const;

  // Substitute each variable by a polynomial (homomorphism of rings).
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  Rational eval(const std::vector<Rational>& point) const;

  // Leading term under graded-lex.
  const Exponents& leading_exponents() const;
  const Rational& leading_coeff() const;

  // Exact division: returns quotient iff divisor divides this exactly.
  static std::optional<MultiPoly> divide_exact(const MultiPoly& num,
                                               const MultiPoly& den);

  // GCD over Q[x_1..x_n], canonicalized to integer-primitive form with
  // positive leading coefficient.
  static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

  // Rational content (gcd of numerators / lcm of denominators, signed so the
  // primitive part has positive leading coefficient).
  Rational content() const;
  MultiPoly primitive_part() const;

  // Embed into a ring with more variables (existing variables keep indices).
  MultiPoly extended(int new_nvars) const;
  // Drop trailing unused variables.
  MultiPoly restricted(int new_nvars) const;

  // Sorted term list "coeff * x1^e1 ..." serialization.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void check_compatible(const MultiPoly& o) const;
  int nvars_;
  TermMap terms_;
};

MultiPoly operator*(const Rational& c, const MultiPoly& p);

}  // namespace qes
