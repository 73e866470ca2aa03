#include "qes/repspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace qes {

namespace {

void enumerate(int n, long k, int pos, long used, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (long e = 0; used + e <= k; ++e) {
    cur[pos] = static_cast<int>(e);
    enumerate(n, k, pos + 1, used + e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

Basis Basis::build(int n, long k) {
  if (n < 1 || k < 0) throw std::invalid_argument("basis: need n >= 1, k >= 0");
  Basis b;
  b.n = n;
  b.k = k;
  std::vector<int> cur(n, 0);
  enumerate(n, k, 0, 0, cur, b.exps);
  std::sort(b.exps.begin(), b.exps.end(), GradedLex{});
  return b;
}

int Basis::index_of(const std::vector<int>& e) const {
  auto it = std::lower_bound(exps.begin(), exps.end(), e, GradedLex{});
  if (it == exps.end() || *it != e) return -1;
  return static_cast<int>(it - exps.begin());
}

Integer printed_dim_sum(int n, long k) {
  Integer total = 0;
  for (long j = 1; j <= k; ++j) {
    Rational term = 1;
    for (long i = 0; i < j; ++i) term *= Rational(n + i, j - i);
    term.canonicalize();
    total += term.get_num();
  }
  return total;
}

OperatorMatrix matrix_rep(const DiffOp& A, int n, long k) {
  if (A.nvars() != n) throw std::invalid_argument("matrix_rep: variable count");
  if (!A.has_polynomial_coeffs())
    throw std::invalid_argument("matrix_rep: non-polynomial coefficients");
  OperatorMatrix M;
  M.basis = Basis::build(n, k);
  int d = M.basis.size();
  M.mat = QMatrix(d, d);
  for (int j = 0; j < d; ++j) {
    MultiPoly img =
        A.apply_poly(MultiPoly::monomial(n, M.basis.exps[j], 1));
    MultiPoly over(n);
    for (const auto& [e, c] : img.terms()) {
      int row = M.basis.index_of(e);
      if (row >= 0)
        M.mat.at(row, j) = c;
      else
        over.set_coeff(e, c);
    }
    if (!over.is_zero()) M.overflow.emplace_back(j, over);
  }
  M.invariant = M.overflow.empty();
  return M;
}

Spectrum spectrum(const OperatorMatrix& M, int precision_bits) {
  if (!M.invariant) throw std::domain_error("spectrum: non-invariant matrix");
  Spectrum s;
  s.charpoly = M.mat.charpoly();
  RootSet rs = real_roots(s.charpoly, precision_bits);
  s.complex_pairs = rs.complex_pairs;
  for (const auto& r : rs.roots)
    s.lines.push_back({r, r.multiplicity, {}});
  return s;
}

namespace {

QMatrix to_matrix(const std::vector<std::vector<Rational>>& cols) {
  int rows = static_cast<int>(cols[0].size());
  QMatrix V(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < V.cols(); ++j)
    for (int i = 0; i < rows; ++i) V.at(i, j) = cols[j][i];
  return V;
}

// Restriction S of M to span(cols): M V = V S, solved exactly.
QMatrix restrict_to(const QMatrix& M, const QMatrix& V) {
  auto S = V.solve(M * V);
  if (!S) throw std::logic_error("restrict_to: subspace not invariant");
  return *S;
}

std::vector<std::vector<Rational>> matrix_cols(const QMatrix& V) {
  std::vector<std::vector<Rational>> cols(V.cols(),
                                          std::vector<Rational>(V.rows()));
  for (int j = 0; j < V.cols(); ++j)
    for (int i = 0; i < V.rows(); ++i) cols[j][i] = V.at(i, j);
  return cols;
}

QMatrix shift(const QMatrix& S, const Rational& mu) {
  QMatrix out = S;
  for (int i = 0; i < out.rows(); ++i) out.at(i, i) -= mu;
  return out;
}

}  // namespace

JointDecomposition joint_eigenbasis(const std::vector<QMatrix>& Ls,
                                    const QMatrix& h, const Basis& basis,
                                    int precision_bits) {
  std::vector<QMatrix> ops = Ls;
  ops.push_back(h);
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (ops[i] * ops[j] != ops[j] * ops[i])
        throw std::invalid_argument("joint_eigenbasis: matrices do not commute");

  struct Piece {
    std::vector<Rational> c;
    QMatrix V;
    bool defective = false;
  };
  int d = basis.size();
  std::vector<Piece> pieces{{{}, QMatrix::identity(d), false}};
  for (const QMatrix& L : Ls) {
    std::vector<Piece> next;
    for (const Piece& pc : pieces) {
      QMatrix S = restrict_to(L, pc.V);
      Rational c_prev = pc.c.empty() ? Rational(0) : pc.c.back();
      for (const auto& [mu, mult] : rational_roots(S.charpoly())) {
        QMatrix sh = shift(S, mu);
        auto plain = sh.kernel_basis();
        bool defect = static_cast<int>(plain.size()) < mult;
        QMatrix pw = sh;
        for (int e = 1; e < mult; ++e) pw = pw * sh;
        auto gen = pw.kernel_basis();  // generalized eigenspace, dim = mult
        Piece np;
        np.c = pc.c;
        np.c.push_back(mu + c_prev);
        np.V = pc.V * to_matrix(gen);
        np.defective = pc.defective || defect;
        next.push_back(std::move(np));
      }
    }
    pieces = std::move(next);
  }

  JointDecomposition out;
  out.basis = basis;
  for (const Piece& pc : pieces) {
    JointBlock blk;
    blk.c = pc.c;
    blk.span = matrix_cols(pc.V);
    blk.h_block = restrict_to(h, pc.V);
    blk.charpoly = blk.h_block.charpoly();
    blk.roots = real_roots(blk.charpoly, precision_bits);
    blk.defective = pc.defective;
    for (const auto& r : blk.roots.roots) {
      if (!r.is_rational) continue;
      auto kb = shift(blk.h_block, r.value).kernel_basis();
      if (static_cast<int>(kb.size()) < r.multiplicity) blk.defective = true;
      std::vector<std::vector<Rational>> ambient;
      for (const auto& v : kb) ambient.push_back(pc.V.apply(v));
      blk.eigvecs.emplace_back(r.value, std::move(ambient));
    }
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

JointDecomposition joint_eigenbasis(const SphereParams& p, int precision_bits) {
  Basis basis = Basis::build(p.n, p.k);
  std::vector<QMatrix> Ls;
  if (p.n >= 2)
    for (const DiffOp& L : build_L_chain(p))
      Ls.push_back(matrix_rep(L, p.n, p.k).mat);
  QMatrix h = matrix_rep(build_qes_sphere(p), p.n, p.k).mat;
  return joint_eigenbasis(Ls, h, basis, precision_bits);
}

namespace {

// (E - s)^2 - D/4: the printed E_pm = s +- sqrt(D)/2 pair as a quadratic.
UPoly pm_quadratic(const Rational& s, const Rational& D) {
  return UPoly({s * s - D / 4, -2 * s, Rational(1)});
}

UPoly linear_root(const Rational& r) { return UPoly({-r, Rational(1)}); }

}  // namespace

std::vector<ClosedForm> closed_form_catalog(const SphereParams& p) {
  int n = p.n;
  long k = p.k;
  if (n < 1 || n > 3 || k < 0 || k > 2)
    throw std::out_of_range("closed_form_catalog: (n,k) outside the catalog");
  const Rational G = p.G();
  const Rational a = p.a;
  std::string tag = "S34-N" + std::to_string(n) + "-K" + std::to_string(k);
  std::vector<ClosedForm> out;
  if (k == 0) {
    out.push_back({tag + "-E0", UPoly::x(), 1});
    return out;
  }
  if (n == 1) {
    const Rational G1 = p.G_j(1);
    if (k == 1) {
      out.push_back({tag + "-EPM",
                     pm_quadratic(-G / 2 - rat(1, 2),
                                  (G + 1) * (G + 1) - 2 * a * (1 + 2 * G1)),
                     1});
    } else {
      out.push_back({tag + "-CUBIC",
                     UPoly({2 * a * (2 * G1 + 1) * (G + 2),
                            2 * (2 * a * (G1 + 1) + (G + 2) * (G + 1)),
                            3 * G + 5, Rational(1)}),
                     1});
    }
  } else if (n == 2) {
    const Rational G2 = p.G_j(2);
    if (k == 1) {
      out.push_back({tag + "-SINGLE", linear_root(rat(3, 2) - G), 1});
      out.push_back({tag + "-EPM",
                     pm_quadratic(rat(3, 4) - G / 2,
                                  (G - rat(3, 2)) * (G - rat(3, 2)) -
                                      4 * a * (1 + G2)),
                     1});
    } else {
      out.push_back({tag + "-SINGLE", linear_root(1 - 2 * G), 1});
      out.push_back({tag + "-EPM",
                     pm_quadratic(rat(5, 4) - 3 * G / 2,
                                  (G + rat(1, 2)) * (G + rat(1, 2)) -
                                      4 * a * (3 + G2)),
                     1});
      out.push_back({tag + "-CUBIC",
                     UPoly({4 * a * (G2 + 1) * (2 * G - 1),
                            4 * a * (3 + 2 * G2) + (1 - 2 * G) * (3 - 2 * G),
                            6 * G - 5, Rational(2)}),
                     1});
    }
  } else {
    const Rational G3 = p.G_j(3);
    if (k == 1) {
      out.push_back({tag + "-SINGLE", linear_root(2 - G), 2});
      out.push_back({tag + "-EPM",
                     pm_quadratic(1 - G / 2,
                                  (G - 2) * (G - 2) - 2 * a * (3 + 2 * G3)),
                     1});
    } else {
      out.push_back({tag + "-SINGLE", linear_root(2 * (1 - G)), 3});
      out.push_back({tag + "-EPM",
                     pm_quadratic(2 - 3 * G / 2, G * G - 2 * a * (7 + 2 * G3)),
                     2});
      out.push_back({tag + "-CUBIC",
                     UPoly({2 * a * (2 * G3 + 3) * (G - 1),
                            2 * (2 * a * (G3 + 2) + (G - 1) * (G - 2)),
                            3 * G - 4, Rational(1)}),
                     1});
    }
  }
  return out;
}

std::vector<std::pair<Rational, int>> es_closed_spectrum(int n, long k,
                                                         const Rational& G) {
  std::vector<std::pair<Rational, int>> out;
  for (long j = 0; j <= k; ++j) {
    Rational eps = -Rational(j) * (Rational(j) + G + rat(n - 1, 2));
    Rational mult = binomial(static_cast<int>(j) + n - 1, n - 1);
    out.emplace_back(eps, static_cast<int>(mult.get_num().get_si()));
  }
  return out;
}

}  // namespace qes
