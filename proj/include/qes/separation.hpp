#pragma once

#include <optional>
#include <vector>

#include "qes/repspace.hpp"

namespace qes {

// Spherical chart u_1..u_n: x_1 = u_1 u_2 ... u_n,
// x_j = (1 - u_{j-1}) u_j ... u_n, with sum x_i = u_n; the inverse is
// u_l = s_l / s_{l+1} on the partial sums s_l = x_1 + ... + x_l.
CoordMap spherical_map(int n);

// The multi-spectral chain: h^(QES) in the u chart telescopes as
// h = sum_l (prod_{j>l} u_j)^{-1} D_l with D_l univariate in u_l; the
// eigenproblem at level l is (D_l + c_{l-1}/u) U = c_l U (c_0 = 0, c_n = E).
struct SeparationChain {
  SphereParams params;
  CoordMap map;
  DiffOp in_u;             // full operator in the u chart
  std::vector<DiffOp> D;   // D_1..D_n, each a 1-variable operator
};

// Mechanical derivation by change of variables; throws std::logic_error if
// the operator fails to telescope (engine bug, not a parameter issue).
SeparationChain derive_separation_ops(const SphereParams& p);

struct Reduction {
  Rational A_selected;
  Rational A_other;
  DiffOp reduced;  // u^{-A} (D_l + c_{l-1}/u) u^{A}, univariate
};

// Conjugate level l (1 <= l <= n-1) to hypergeometric form. A is a rational
// root of A^2 + A(G_l + l/2 - 1) + c_{l-1} = 0; throws std::domain_error if
// none exists. When A_expected is supplied it must be a root and is
// selected; otherwise the larger root is taken.
Reduction reduce_hypergeometric(const SeparationChain& ch, int l,
                                const Rational& c_prev,
                                std::optional<Rational> A_expected = {});

// Terminating 2F1(-q_l, 2S + q_l + G_{l+1} + (l-1)/2; 2S + G_l + l/2; u)
// with S = A_l = sum_{i<l} q_i; a 1-variable polynomial of degree q_l.
// Throws std::domain_error if the lower parameter hits a nonpositive
// integer before the series terminates.
MultiPoly hypergeometric_factor(int l, int q_l, const SphereParams& p,
                                long A_sum);

struct HeunResult {
  long m = 0;          // polynomial degree bound, m = k - A_n
  QMatrix mat;         // radial operator on 1, u, ..., u^m
  UPoly charpoly;
  RootSet roots;
  // Confluent Heun polynomial coefficients (low -> high) per rational E.
  std::vector<std::pair<Rational, std::vector<Rational>>> polys;
};

// Spectrum of the conjugated radial operator u^{-A_n}(D_n + c_{n-1}/u)u^{A_n}
// on polynomials of degree <= m; throws std::domain_error if k - A_n is not
// a nonnegative integer.
HeunResult heun_spectrum(const SeparationChain& ch, const Rational& c_prev,
                         const Rational& A_n, int precision_bits = 128);

struct SeparatedEigenfunction {
  std::vector<int> q;            // q_1..q_{n-1}
  std::vector<Rational> A;       // A_2..A_n
  std::vector<Rational> c;       // c_1..c_{n-1}
  Rational E;
  std::vector<MultiPoly> factors;  // V_1..V_n, univariate
  MultiPoly assembled;             // in the x variables, lies in P_k
};

// Reassemble Psi = u_2^{A_2}..u_n^{A_n} prod V_i in the x chart and verify
// it is an exact eigenvector of the h^(QES) matrix; throws on failure.
SeparatedEigenfunction assemble(const SeparationChain& ch,
                                const std::vector<int>& q,
                                const std::vector<MultiPoly>& factors,
                                const Rational& E);

struct ChainSolution {
  std::vector<int> q;        // q_1..q_{n-1}
  std::vector<Rational> A;   // A_1..A_n (A_1 = 0)
  std::vector<Rational> c;   // c_1..c_{n-1}
  long m = 0;
  UPoly radial_charpoly;
  RootSet energies;
  std::vector<SeparatedEigenfunction> eigenfunctions;  // rational E lines
  // Count of irrational lines whose eigenvectors were verified at matrix
  // level (adjugate construction modulo the annihilating factor).
  int irrational_verified = 0;
};

// Full pipeline over all admissible label tuples. Total energy count over
// all chains is C(n+k, n).
std::vector<ChainSolution> separate(const SphereParams& p,
                                    int precision_bits = 128);

}  // namespace qes
