#pragma once

#include <string>
#include <vector>

#include "qes/models.hpp"
#include "qes/qmatrix.hpp"
#include "qes/roots.hpp"

namespace qes {

// Monomial basis of P_k^(n): all exponent vectors of total degree <= k in
// ascending graded-lex order.
struct Basis {
  int n = 1;
  long k = 0;
  std::vector<std::vector<int>> exps;

  static Basis build(int n, long k);
  int size() const { return static_cast<int>(exps.size()); }
  int index_of(const std::vector<int>& e) const;  // -1 if absent
};

// Printed dimension sum for P_k^(n): sum_{j=1}^k (n)_j / j! with the rising
// factorial (n)_j; differs from C(n+k, n) by the missing j=0 term.
Integer printed_dim_sum(int n, long k);

struct OperatorMatrix {
  Basis basis;
  QMatrix mat;  // column j = coordinates of the image of basis monomial j
  bool invariant = true;
  // Image terms of degree > k, per source column; empty iff invariant.
  std::vector<std::pair<int, MultiPoly>> overflow;
};

// Exact matrix of A on P_k^(n); throws on non-polynomial coefficients.
OperatorMatrix matrix_rep(const DiffOp& A, int n, long k);

struct SpectralLine {
  RealRoot value;
  int multiplicity = 1;            // algebraic
  std::vector<Rational> c_labels;  // separation constants when known
};

struct Spectrum {
  std::vector<SpectralLine> lines;  // ascending
  int complex_pairs = 0;
  UPoly charpoly;
};

// Algebraic spectrum of an invariant matrix; throws std::domain_error if the
// invariance flag is false.
Spectrum spectrum(const OperatorMatrix& M, int precision_bits = 128);

// One joint eigenspace of the commuting chain, labelled by the accumulated
// separation constants c_1..c_{n-1}.
struct JointBlock {
  std::vector<Rational> c;
  std::vector<std::vector<Rational>> span;  // columns in basis coordinates
  QMatrix h_block;                          // restriction of h^(QES)
  UPoly charpoly;
  RootSet roots;
  // Exact eigenvectors (basis coordinates) per rational eigenvalue.
  std::vector<std::pair<Rational, std::vector<std::vector<Rational>>>> eigvecs;
  bool defective = false;  // geometric < algebraic multiplicity detected
};

struct JointDecomposition {
  Basis basis;
  std::vector<JointBlock> blocks;
};

// Simultaneous eigendecomposition of L_1..L_{n-1} and h by recursive
// splitting. The chain relation (L_j + c_{j-1}) psi = c_j psi accumulates the
// labels: c_j = mu_j + c_{j-1} with mu_j the raw L_j eigenvalue. Throws if
// the supplied matrices do not commute pairwise or a separation constant
// turns out irrational.
JointDecomposition joint_eigenbasis(const std::vector<QMatrix>& Ls,
                                    const QMatrix& h, const Basis& basis,
                                    int precision_bits = 128);
// Convenience wrapper building the matrices from the model.
JointDecomposition joint_eigenbasis(const SphereParams& p,
                                    int precision_bits = 128);

// A closed-form energy family as printed: the roots of poly (in E) are the
// predicted eigenvalues, each with the stated multiplicity.
struct ClosedForm {
  std::string id;
  UPoly poly;
  int multiplicity = 1;
};

// The printed section-3.4 catalog for (n, k) in {1,2,3} x {0,1,2}; throws
// std::out_of_range outside it.
std::vector<ClosedForm> closed_form_catalog(const SphereParams& p);

// Exactly solvable spectrum eps_j = -j(j + G + (n-1)/2) on P_k with
// multiplicity C(j+n-1, n-1), j = 0..k.
std::vector<std::pair<Rational, int>> es_closed_spectrum(int n, long k,
                                                         const Rational& G);

}  // namespace qes
