#include "qes/separation.hpp"

#include <stdexcept>

namespace qes {

namespace {

MultiPoly uvar(int n, int i) { return MultiPoly::variable(n, i); }

// c_l = -A_{l+1}(A_{l+1} + G_{l+1} + (l-1)/2) with A_{l+1} = sum_{i<=l} q_i.
Rational chain_constant(const SphereParams& p, int l, const Rational& A_next) {
  return -A_next * (A_next + p.G_j(l + 1) + rat(l - 1, 2));
}

}  // namespace

CoordMap spherical_map(int n) {
  // partial sums s_l = x_1 + ... + x_l
  std::vector<MultiPoly> s(n + 1, MultiPoly(n));
  for (int l = 1; l <= n; ++l) s[l] = s[l - 1] + uvar(n, l - 1);
  std::vector<RatFunc> forward;
  for (int l = 1; l < n; ++l) forward.push_back(RatFunc(s[l], s[l + 1]));
  forward.push_back(RatFunc(s[n]));

  std::vector<RatFunc> inverse;
  for (int i = 1; i <= n; ++i) {
    MultiPoly tail = MultiPoly::constant(n, 1);
    for (int j = i; j <= n; ++j) tail = tail * uvar(n, j - 1);
    if (i > 1)
      tail = tail * (MultiPoly::constant(n, 1) - uvar(n, i - 2));
    inverse.push_back(RatFunc(tail));
  }
  return CoordMap(std::move(forward), std::move(inverse));
}

namespace {

bool depends_only_on(const RatFunc& f, int var) {
  for (int v = 0; v < f.nvars(); ++v) {
    if (v == var) continue;
    if (f.num().degree_in(v) > 0 || f.den().degree_in(v) > 0) return false;
  }
  return true;
}

RatFunc to_univariate(const RatFunc& f, int var) {
  std::vector<RatFunc> images(f.nvars(), RatFunc(MultiPoly(1)));
  images[var] = RatFunc(MultiPoly::variable(1, 0));
  return f.substitute(images);
}

RatFunc lift_univariate(const RatFunc& f, int n, int var) {
  return f.substitute({RatFunc(uvar(n, var))});
}

}  // namespace

SeparationChain derive_separation_ops(const SphereParams& p) {
  int n = p.n;
  CoordMap map = spherical_map(n);
  DiffOp in_u = change_coordinates(build_qes_sphere(p), map);

  std::vector<DiffOp> D;
  for (int l = 1; l <= n; ++l) {
    MultiPoly tail = MultiPoly::constant(n, 1);  // prod_{j>l} u_j
    for (int j = l + 1; j <= n; ++j) tail = tail * uvar(n, j - 1);
    DiffOp d(1);
    int max_order = l == n ? 0 : 1;  // include the zero-order term only at l=n
    for (int o = 2; o >= max_order; --o) {
      std::vector<int> alpha(n, 0);
      alpha[l - 1] = o;
      RatFunc c = in_u.coeff(alpha) * RatFunc(tail);
      if (c.is_zero()) continue;
      if (!depends_only_on(c, l - 1))
        throw std::logic_error("separation: coefficient not univariate");
      d += DiffOp::term(to_univariate(c, l - 1), {o});
    }
    D.push_back(d);
  }

  // exact telescoping check: h_u == sum_l tail_l^{-1} D_l
  DiffOp rebuilt(n);
  for (int l = 1; l <= n; ++l) {
    MultiPoly tail = MultiPoly::constant(n, 1);
    for (int j = l + 1; j <= n; ++j) tail = tail * uvar(n, j - 1);
    RatFunc inv_tail{MultiPoly::constant(n, 1)};
    inv_tail = inv_tail / RatFunc(tail);
    for (const auto& [alpha, c] : D[l - 1].terms()) {
      std::vector<int> full(n, 0);
      full[l - 1] = alpha[0];
      rebuilt += DiffOp::term(lift_univariate(c, n, l - 1) * inv_tail, full);
    }
  }
  if (rebuilt != in_u)
    throw std::logic_error("separation: operator fails to telescope");

  return SeparationChain{p, std::move(map), std::move(in_u), std::move(D)};
}

namespace {

// u^{-A} (D + c_prev/u) u^{A} on one variable.
DiffOp conjugated_level(const DiffOp& D, const Rational& c_prev,
                        const Rational& A) {
  DiffOp op = D + DiffOp::term(RatFunc(MultiPoly::constant(1, c_prev),
                                       MultiPoly::variable(1, 0)),
                               {0});
  if (A == 0) return op;
  GaugeFactor g(1);
  g.powers.push_back({MultiPoly::variable(1, 0), A});
  return gauge_conjugate(op, g, GaugeDir::similarity);
}

}  // namespace

Reduction reduce_hypergeometric(const SeparationChain& ch, int l,
                                const Rational& c_prev,
                                std::optional<Rational> A_expected) {
  const SphereParams& p = ch.params;
  if (l < 1 || l >= p.n)
    throw std::invalid_argument("reduce_hypergeometric: level out of range");
  Rational B = p.G_j(l) + rat(l, 2) - 1;
  Rational disc = B * B - 4 * c_prev;
  auto s = rat_sqrt(disc);
  if (!s)
    throw std::domain_error(
        "reduce_hypergeometric: exponent equation has no rational root");
  Rational r1 = (-B + *s) / 2, r2 = (-B - *s) / 2;
  Rational A;
  if (A_expected) {
    if (*A_expected != r1 && *A_expected != r2)
      throw std::domain_error(
          "reduce_hypergeometric: expected exponent is not a root");
    A = *A_expected;
  } else {
    // the admissible branch A = sum q_i is a nonnegative integer
    auto admissible = [](const Rational& r) {
      return r >= 0 && r.get_den() == 1;
    };
    if (admissible(r1) != admissible(r2))
      A = admissible(r1) ? r1 : r2;
    else
      A = r1 >= r2 ? r1 : r2;
  }
  Reduction red;
  red.A_selected = A;
  red.A_other = A == r1 ? r2 : r1;
  red.reduced = conjugated_level(ch.D[l - 1], c_prev, A);
  return red;
}

MultiPoly hypergeometric_factor(int l, int q_l, const SphereParams& p,
                                long A_sum) {
  if (q_l < 0) throw std::invalid_argument("hypergeometric_factor: q < 0");
  Rational S(2 * A_sum);
  Rational b = S + q_l + p.G_j(l + 1) + rat(l - 1, 2);
  Rational c = S + p.G_j(l) + rat(l, 2);
  MultiPoly out = MultiPoly::constant(1, 1);
  Rational coef = 1;
  for (int s = 0; s < q_l; ++s) {
    Rational den = c + s;
    if (den == 0)
      throw std::domain_error(
          "hypergeometric_factor: lower parameter hits a nonpositive integer");
    coef *= Rational(-q_l + s) * (b + s) / (den * (s + 1));
    out += MultiPoly::monomial(1, {s + 1}, coef);
  }
  return out;
}

HeunResult heun_spectrum(const SeparationChain& ch, const Rational& c_prev,
                         const Rational& A_n, int precision_bits) {
  const SphereParams& p = ch.params;
  Rational m_rat = Rational(p.k) - A_n;
  if (m_rat.get_den() != 1 || m_rat < 0)
    throw std::domain_error("heun_spectrum: k - A_n not a nonnegative integer");
  long m = m_rat.get_num().get_si();

  DiffOp radial = conjugated_level(ch.D[p.n - 1], c_prev, A_n);
  HeunResult out;
  out.m = m;
  int d = static_cast<int>(m) + 1;
  out.mat = QMatrix(d, d);
  for (int j = 0; j < d; ++j) {
    MultiPoly img = radial.apply_poly(MultiPoly::monomial(1, {j}, 1));
    if (img.total_degree() > m)
      throw std::logic_error("heun_spectrum: degree bound violated");
    for (const auto& [e, cc] : img.terms()) out.mat.at(e[0], j) = cc;
  }
  out.charpoly = out.mat.charpoly();
  out.roots = real_roots(out.charpoly, precision_bits);
  for (const auto& r : out.roots.roots) {
    if (!r.is_rational) continue;
    QMatrix sh = out.mat;
    for (int i = 0; i < d; ++i) sh.at(i, i) -= r.value;
    for (const auto& v : sh.kernel_basis()) out.polys.emplace_back(r.value, v);
  }
  return out;
}

namespace {

// Psi = u_2^{A_2}..u_n^{A_n} prod V_i re-expressed in the x chart.
MultiPoly assemble_poly(const SeparationChain& ch, const std::vector<int>& q,
                        const std::vector<MultiPoly>& factors) {
  int n = ch.params.n;
  MultiPoly psi_u = MultiPoly::constant(n, 1);
  long acc = 0;
  for (int l = 2; l <= n; ++l) {
    acc += q[l - 2];
    psi_u = psi_u * uvar(n, l - 1).pow(static_cast<int>(acc));
  }
  for (int l = 1; l <= n; ++l) {
    RatFunc lifted = lift_univariate(RatFunc(factors[l - 1]), n, l - 1);
    psi_u = psi_u * lifted.as_polynomial();
  }
  return RatFunc(psi_u).substitute(ch.map.forward()).as_polynomial();
}

std::vector<Rational> basis_coords(const Basis& b, const MultiPoly& f) {
  std::vector<Rational> v(b.size(), Rational(0));
  for (const auto& [e, c] : f.terms()) {
    int i = b.index_of(e);
    if (i < 0) throw std::domain_error("polynomial outside the subspace");
    v[i] = c;
  }
  return v;
}

}  // namespace

SeparatedEigenfunction assemble(const SeparationChain& ch,
                                const std::vector<int>& q,
                                const std::vector<MultiPoly>& factors,
                                const Rational& E) {
  const SphereParams& p = ch.params;
  if (static_cast<int>(q.size()) != p.n - 1 ||
      static_cast<int>(factors.size()) != p.n)
    throw std::invalid_argument("assemble: label/factor count");
  SeparatedEigenfunction out;
  out.q = q;
  out.E = E;
  long acc = 0;
  for (int l = 1; l <= p.n - 1; ++l) {
    out.c.push_back(chain_constant(p, l, Rational(acc + q[l - 1])));
    acc += q[l - 1];
    out.A.push_back(Rational(acc));
  }
  out.factors = factors;
  out.assembled = assemble_poly(ch, q, factors);
  if (out.assembled.total_degree() > p.k)
    throw std::logic_error("assemble: degree exceeds k");

  OperatorMatrix M = matrix_rep(build_qes_sphere(p), p.n, p.k);
  std::vector<Rational> v = basis_coords(M.basis, out.assembled);
  std::vector<Rational> img = M.mat.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (img[i] != E * v[i])
      throw std::logic_error("assemble: not an exact eigenvector");
  return out;
}

namespace {

// adj(tI - A) = sum_t lambda^t B_t via the Horner recurrence on the
// characteristic polynomial.
std::vector<QMatrix> adjugate_coeffs(const QMatrix& A, const UPoly& cp) {
  int d = A.rows();
  std::vector<QMatrix> B(d, QMatrix(d, d));
  B[d - 1] = QMatrix::identity(d);
  for (int t = d - 1; t >= 1; --t) {
    QMatrix next = A * B[t];
    Rational ct = cp.coeff(t);
    for (int i = 0; i < d; ++i) next.at(i, i) += ct;
    B[t - 1] = next;
  }
  return B;
}

UPoly poly_mod(const UPoly& f, const UPoly& g) {
  return UPoly::divmod(f, g).second;
}

// Verify, modulo the annihilating factor f, that some adjugate column of
// (E I - block) lifts to an ambient eigenvector of M.
bool verify_irrational_lines(const QMatrix& block, const UPoly& block_cp,
                             const UPoly& f, const QMatrix& M,
                             const std::vector<std::vector<Rational>>& w) {
  int d = block.rows();
  auto B = adjugate_coeffs(block, block_cp);
  for (int col = 0; col < d; ++col) {
    std::vector<UPoly> bv(d);  // block-level eigenvector candidate
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      std::vector<Rational> cf(d, Rational(0));
      for (int t = 0; t < d; ++t) cf[t] = B[t].at(i, col);
      bv[i] = poly_mod(UPoly(cf), f);
      if (!bv[i].is_zero()) nonzero = true;
    }
    if (!nonzero) continue;
    int N = M.rows();
    std::vector<UPoly> amb(N);
    for (int i = 0; i < N; ++i) {
      UPoly s;
      for (int j = 0; j < d; ++j) s = s + bv[j].scale(w[j][i]);
      amb[i] = poly_mod(s, f);
    }
    bool ok = true;
    for (int i = 0; i < N && ok; ++i) {
      UPoly res;
      for (int t = 0; t < N; ++t)
        res = res + amb[t] * UPoly::constant(M.at(i, t));
      res = res - amb[i] * UPoly::x();
      if (!poly_mod(res, f).is_zero()) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::vector<ChainSolution> separate(const SphereParams& p, int precision_bits) {
  SeparationChain ch = derive_separation_ops(p);
  int n = p.n;
  OperatorMatrix M = matrix_rep(build_qes_sphere(p), n, p.k);

  // enumerate q_1..q_{n-1} >= 0 with sum <= k
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(std::max(n - 1, 0), 0);
  auto rec = [&](auto&& self, int pos, long used) -> void {
    if (pos == n - 1) {
      tuples.push_back(cur);
      return;
    }
    for (long e = 0; used + e <= p.k; ++e) {
      cur[pos] = static_cast<int>(e);
      self(self, pos + 1, used + e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, 0);

  std::vector<ChainSolution> out;
  for (const auto& q : tuples) {
    ChainSolution sol;
    sol.q = q;
    sol.A.push_back(Rational(0));
    long acc = 0;
    for (int l = 1; l <= n - 1; ++l) {
      sol.c.push_back(chain_constant(p, l, Rational(acc + q[l - 1])));
      acc += q[l - 1];
      sol.A.push_back(Rational(acc));
    }
    sol.m = p.k - acc;
    Rational c_prev = n >= 2 ? sol.c.back() : Rational(0);
    HeunResult hr = heun_spectrum(ch, c_prev, Rational(acc), precision_bits);
    sol.radial_charpoly = hr.charpoly;
    sol.energies = hr.roots;

    std::vector<MultiPoly> angular;
    for (int l = 1; l <= n - 1; ++l) {
      long A_sum = 0;
      for (int i = 0; i < l - 1; ++i) A_sum += q[i];
      MultiPoly V = hypergeometric_factor(l, q[l - 1], p, A_sum);
      // exact eigen-check against the reduced level-l operator
      Rational cp_in = l == 1 ? Rational(0) : sol.c[l - 2];
      Reduction red =
          reduce_hypergeometric(ch, l, cp_in, Rational(A_sum));
      MultiPoly img = red.reduced.apply_poly(V);
      if (img != V.scale(sol.c[l - 1]))
        throw std::logic_error("separate: hypergeometric factor fails");
      angular.push_back(std::move(V));
    }

    // ambient vectors for the radial monomial factors
    std::vector<std::vector<Rational>> w;
    for (long j = 0; j <= sol.m; ++j) {
      std::vector<MultiPoly> factors = angular;
      factors.push_back(MultiPoly::monomial(1, {static_cast<int>(j)}, 1));
      MultiPoly psi = assemble_poly(ch, q, factors);
      std::vector<Rational> v(M.basis.size(), Rational(0));
      for (const auto& [e, cc] : psi.terms()) {
        int idx = M.basis.index_of(e);
        if (idx < 0) throw std::logic_error("separate: outside the subspace");
        v[idx] = cc;
      }
      w.push_back(std::move(v));
    }

    for (const auto& [E, vec] : hr.polys) {
      std::vector<MultiPoly> factors = angular;
      MultiPoly Vn(1);
      for (std::size_t j = 0; j < vec.size(); ++j)
        Vn += MultiPoly::monomial(1, {static_cast<int>(j)}, vec[j]);
      factors.push_back(Vn);
      sol.eigenfunctions.push_back(assemble(ch, q, factors, E));
    }

    // matrix-level verification of the non-rational lines
    UPoly rest = hr.charpoly;
    for (const auto& r : hr.roots.roots) {
      if (!r.is_rational) continue;
      for (int t = 0; t < r.multiplicity; ++t)
        rest = UPoly::divmod(rest, UPoly({-r.value, Rational(1)})).first;
    }
    if (rest.degree() >= 1) {
      UPoly f = UPoly::constant(1);  // radical of the remaining factor
      for (const auto& sq : UPoly::squarefree_decomposition(rest))
        if (sq.degree() >= 1) f = f * sq;
      if (verify_irrational_lines(hr.mat, hr.charpoly, f, M.mat, w))
        sol.irrational_verified = rest.degree();
    }
    out.push_back(std::move(sol));
  }
  return out;
}

}  // namespace qes
