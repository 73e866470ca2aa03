#pragma once

#include <string>
#include <vector>

#include "qes/multipoly.hpp"

namespace qes {

// Quotient of multivariate polynomials, kept in canonical form: numerator
// and denominator coprime (multivariate gcd removed), denominator
// integer-primitive with positive leading coefficient under graded-lex.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(MultiPoly::constant(0, 1)) {}
  explicit RatFunc(MultiPoly p)
      : num_(std::move(p)), den_(MultiPoly::constant(num_.nvars(), 1)) {}
  RatFunc(MultiPoly num, MultiPoly den);
  static RatFunc constant(int nvars, const Rational& c) {
    return RatFunc(MultiPoly::constant(nvars, c));
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // Numerator/denominator as a polynomial; throws if not polynomial.
  MultiPoly as_polynomial() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc scale(const Rational& c) const;
  RatFunc diff(int var) const;
  RatFunc substitute(const std::vector<RatFunc>& images) const;
  Rational eval(const std::vector<Rational>& point) const;  // throws on pole
  RatFunc extended(int new_nvars) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void normalize();
  MultiPoly num_, den_;
};

RatFunc operator*(const Rational& c, const RatFunc& f);

}  // namespace qes
