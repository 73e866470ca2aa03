#pragma once

#include <map>
#include <string>
#include <vector>

#include "qes/ratfunc.hpp"
#include "qes/rfmatrix.hpp"

namespace qes {

// Element of the Weyl-like algebra: finite sum c_alpha(x) d^alpha with
// rational-function coefficients. Canonical ("normal") form keeps all
// derivatives to the right of the coefficients.
class DiffOp {
 public:
  using MultiIndex = std::vector<int>;
  using TermMap = std::map<MultiIndex, RatFunc, GradedLex>;

  explicit DiffOp(int nvars = 0) : nvars_(nvars) {}
  // c(x) * d^alpha
  static DiffOp term(const RatFunc& c, const MultiIndex& alpha);
  static DiffOp mult_by(const RatFunc& f);       // zero-order operator
  static DiffOp mult_by(const MultiPoly& p);
  static DiffOp partial(int nvars, int var);     // d/dx_var
  static DiffOp constant(int nvars, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;  // max |alpha|, -1 for zero operator
  const TermMap& terms() const { return terms_; }
  RatFunc coeff(const MultiIndex& alpha) const;
  void set_coeff(const MultiIndex& alpha, const RatFunc& c);
  bool has_polynomial_coeffs() const;

  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp scale(const Rational& c) const;
  DiffOp scale(const RatFunc& c) const;
  bool operator==(const DiffOp& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const DiffOp& o) const { return !(*this == o); }

  // Non-commutative product, expanded to normal form via the generalized
  // Leibniz rule.
  static DiffOp compose(const DiffOp& A, const DiffOp& B);
  static DiffOp commutator(const DiffOp& A, const DiffOp& B);

  RatFunc apply(const MultiPoly& p) const;
  // Image as a polynomial; throws if a denominator survives.
  MultiPoly apply_poly(const MultiPoly& p) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  TermMap terms_;
};

enum class GlKind { lower, diag, euler, raise };

// Generators J_i^- = d_i, J0_ij = x_i d_j, J0(k) = sum x_j d_j - k,
// J_i^+(k) = x_i J0(k) of the hidden gl_n algebra.
DiffOp gl_generator(GlKind kind, int n, int i = 0, int j = 0, long k = 0);

// Prod_t base_t^{exp_t} * exp(arg); the scalar factor used for gauge
// rotations. Only its logarithmic derivatives enter operator arithmetic,
// so rational exponents never produce radicals.
struct GaugeFactor {
  struct Power {
    MultiPoly base;
    Rational exponent;
  };
  std::vector<Power> powers;
  MultiPoly exp_arg;  // zero polynomial when absent

  explicit GaugeFactor(int nvars) : exp_arg(nvars) {}
  int nvars() const { return exp_arg.nvars(); }
  GaugeFactor inverse() const;
  RatFunc dlog(int var) const;  // d_var log(factor)
};

enum class GaugeDir {
  similarity,      // g^-1 A g : d_i -> d_i + dlog_i
  inv_similarity,  // g A g^-1 : d_i -> d_i - dlog_i
};

DiffOp gauge_conjugate(const DiffOp& A, const GaugeFactor& g, GaugeDir dir);

// Birational coordinate change with an explicitly supplied inverse,
// probe-verified at construction.
class CoordMap {
 public:
  // forward: new coordinates as functions of the old ones;
  // inverse: old coordinates as functions of the new ones.
  CoordMap(std::vector<RatFunc> forward, std::vector<RatFunc> inverse);

  int old_nvars() const { return static_cast<int>(forward_.size()); }
  int new_nvars() const { return static_cast<int>(inverse_.size()); }
  const std::vector<RatFunc>& forward() const { return forward_; }
  const std::vector<RatFunc>& inverse() const { return inverse_; }
  // J[j][i] = (d new_j / d old_i) expressed in the new variables.
  const RFMatrix& jacobian_in_new() const { return jac_; }

 private:
  std::vector<RatFunc> forward_, inverse_;
  RFMatrix jac_;
};

// Push A (an operator in the old variables) through the map: exact chain
// rule, result expressed in the new variables.
DiffOp change_coordinates(const DiffOp& A, const CoordMap& m);

}  // namespace qes
