#pragma once

#include <string>
#include <vector>

#include "qes/common.hpp"
#include "qes/multipoly.hpp"

namespace qes {

// Dense univariate polynomial over Q, coefficients low -> high.
// Workhorse for characteristic polynomials, Sturm sequences and
// arithmetic modulo a fixed minimal polynomial.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rational& r);
  static UPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
  }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly scale(const Rational& r) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  UPoly derivative() const;
  Rational eval(const Rational& x) const;
  UPoly monic() const;
  UPoly pow(int e) const;

  // Euclidean division; throws on zero divisor.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  static UPoly gcd(const UPoly& a, const UPoly& b);  // monic

  // Square-free decomposition (Yun): returns f_i with p = prod f_i^i,
  // index 0 unused.
  static std::vector<UPoly> squarefree_decomposition(const UPoly& p);

  MultiPoly to_multipoly() const;  // univariate MultiPoly
  static UPoly from_multipoly(const MultiPoly& p);

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace qes
