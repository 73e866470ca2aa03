#include "qes/models.hpp"

#include <stdexcept>

namespace qes {

namespace {

MultiPoly var(int n, int i) { return MultiPoly::variable(n, i); }
MultiPoly one(int n) { return MultiPoly::constant(n, 1); }

MultiPoly sum_vars(int n) {
  MultiPoly s(n);
  for (int i = 0; i < n; ++i) s += var(n, i);
  return s;
}

DiffOp second_partial(int n, int a, int b, const RatFunc& c) {
  DiffOp::MultiIndex e(n, 0);
  e[a] += 1;
  e[b] += 1;
  return DiffOp::term(c, e);
}

DiffOp first_partial(int n, int a, const RatFunc& c) {
  DiffOp::MultiIndex e(n, 0);
  e[a] = 1;
  return DiffOp::term(c, e);
}

}  // namespace

SphereParams::SphereParams(int n_, std::vector<Rational> g, Rational a_, long k_)
    : n(n_), gamma(std::move(g)), a(std::move(a_)), k(k_) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (static_cast<int>(gamma.size()) != n + 1)
    throw std::invalid_argument("expected n+1 gamma parameters");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  partial_.assign(n + 2, Rational(0));
  for (int j = 1; j <= n + 1; ++j) partial_[j] = partial_[j - 1] + gamma[j - 1];
  G_full_ = partial_[n + 1];
}

Rational SphereParams::G_j(int j) const {
  if (j < 1 || j > n + 1) throw std::out_of_range("G_j index");
  return partial_[j];
}

Rational SphereParams::a_i(int i) const {
  if (i < 1 || i > n + 1) throw std::out_of_range("a_i index");
  return gamma[i - 1] * (gamma[i - 1] - 1);
}

EuclidParams::EuclidParams(int n_, std::vector<Rational> gp, Rational omega_,
                           Rational b_, long k_)
    : n(n_), gamma_p(std::move(gp)), omega(std::move(omega_)),
      b(std::move(b_)), k(k_) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (static_cast<int>(gamma_p.size()) != n)
    throw std::invalid_argument("expected n gamma' parameters");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  sum_ = 0;
  for (const auto& g : gamma_p) sum_ += g;
}

DiffOp build_es_sphere(const SphereParams& p) {
  int n = p.n;
  DiffOp h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      MultiPoly c = -(var(n, i) * var(n, j));
      if (i == j) c += var(n, i);
      if (!c.is_zero()) h += second_partial(n, i, j, RatFunc(c));
    }
  }
  Rational slope = p.G() + rat(n + 1, 2);
  for (int i = 0; i < n; ++i) {
    MultiPoly c = MultiPoly::constant(n, rat(1, 2) + p.gamma[i]) -
                  var(n, i).scale(slope);
    h += first_partial(n, i, RatFunc(c));
  }
  return h;
}

DiffOp build_es_from_generators(const SphereParams& p, bool printed_form) {
  int n = p.n;
  DiffOp h(n);
  std::vector<DiffOp> diag;  // J0_ii
  for (int i = 0; i < n; ++i) diag.push_back(gl_generator(GlKind::diag, n, i, i));
  for (int i = 0; i < n; ++i)
    h += DiffOp::compose(diag[i], gl_generator(GlKind::lower, n, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h -= DiffOp::compose(diag[i], diag[j]);
  // The expansion of -sum J0_ii J0_jj already produces -sum x_i d_i, so
  // matching the article's h^(ES) needs slope G+(n-1)/2; the article prints
  // G+(n+1)/2 here.
  Rational slope = p.G() + rat(printed_form ? n + 1 : n - 1, 2);
  for (int i = 0; i < n; ++i) {
    h += gl_generator(GlKind::lower, n, i).scale(rat(1, 2) + p.gamma[i]);
    h -= diag[i].scale(slope);
  }
  return h;
}

DiffOp build_qes_sphere(const SphereParams& p) {
  int n = p.n;
  DiffOp h = build_es_sphere(p);
  for (int i = 0; i < n; ++i)
    h += gl_generator(GlKind::raise, n, i, 0, p.k).scale(p.a);
  return h;
}

DiffOp build_qes_sphere_flipped_slope(const SphereParams& p) {
  int n = p.n;
  DiffOp h = build_qes_sphere(p);
  for (int i = 0; i < n; ++i)
    h += DiffOp::compose(DiffOp::mult_by(MultiPoly::variable(n, i)),
                         DiffOp::partial(n, i))
             .scale(Rational(n + 1));
  return h;
}

DiffOp build_integral(IntegralKind kind, int i, int j, const SphereParams& p,
                      bool printed_form) {
  int n = p.n;
  if (kind == IntegralKind::Iij) {
    if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("Iij indices");
    int a = i - 1, b = j - 1;
    DiffOp diff_ab = DiffOp::partial(n, a) - DiffOp::partial(n, b);
    DiffOp second = DiffOp::compose(
        DiffOp::mult_by(var(n, a) * var(n, b)),
        DiffOp::compose(diff_ab, diff_ab));
    MultiPoly c = var(n, b).scale(p.gamma[a]) - var(n, a).scale(p.gamma[b]) +
                  (var(n, b) - var(n, a)).scale(rat(1, 2));
    return second + DiffOp::compose(DiffOp::mult_by(c), diff_ab);
  }
  if (!(1 <= i && i <= n)) throw std::out_of_range("Ii index");
  int a = i - 1;
  MultiPoly omx = one(n) - sum_vars(n);  // 1 - x
  DiffOp second = second_partial(n, a, a, RatFunc(var(n, a) * omx));
  MultiPoly c = omx.scale(p.gamma[a]) - var(n, a).scale(p.gamma[n]);
  if (printed_form)
    c += (omx + var(n, a).scale(2 * n + 1)).scale(rat(1, 2));
  else
    c += (omx - var(n, a)).scale(rat(1, 2));
  return second + first_partial(n, a, RatFunc(c));
}

std::vector<DiffOp> build_L_chain(const SphereParams& p) {
  if (p.n < 2) throw std::invalid_argument("L chain needs n >= 2");
  std::vector<DiffOp> L;
  for (int m = 2; m <= p.n; ++m) {
    DiffOp acc(p.n);
    for (int i = 1; i < m; ++i)
      acc += build_integral(IntegralKind::Iij, i, m, p);
    L.push_back(std::move(acc));
  }
  return L;
}

MetricData assemble_metric(const RFMatrix& g_upper) {
  int n = static_cast<int>(g_upper.size());
  if (n == 0) throw std::invalid_argument("empty metric");
  int nv = g_upper[0][0].nvars();
  MetricData m;
  m.g_upper = g_upper;
  m.det_upper = rf_det(g_upper);
  if (m.det_upper.is_zero()) throw std::domain_error("degenerate metric");
  DiffOp lb(nv);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!g_upper[a][b].is_zero()) lb += second_partial(nv, a, b, g_upper[a][b]);
  // g^b = sum_a [ d_a g^{ab} - (1/2) g^{ab} (d_a D)/D ], D = det g^{ab}:
  // the formal g^{1/2} enters only through d log(g) = -d log(D).
  for (int b = 0; b < n; ++b) {
    RatFunc gb{MultiPoly(nv)};
    for (int a = 0; a < n; ++a) {
      gb += g_upper[a][b].diff(a);
      gb -= (g_upper[a][b] * m.det_upper.diff(a) / m.det_upper)
                .scale(rat(1, 2));
    }
    if (!gb.is_zero()) lb += first_partial(nv, b, gb);
  }
  m.laplace_beltrami = lb;
  return m;
}

MetricData sphere_metric(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  RFMatrix g(n, std::vector<RatFunc>(n, RatFunc(MultiPoly(n))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MultiPoly c = -(var(n, i) * var(n, j));
      if (i == j) c += var(n, i);
      g[i][j] = RatFunc(c);
    }
  return assemble_metric(g);
}

RatFunc scalar_curvature(const MetricData& m) {
  int n = static_cast<int>(m.g_upper.size());
  int nv = m.g_upper[0][0].nvars();
  RFMatrix low = rf_inverse(m.g_upper);
  auto zero = [&] { return RatFunc(MultiPoly(nv)); };
  // Christoffel symbols of the second kind.
  std::vector<std::vector<std::vector<RatFunc>>> chr(
      n, std::vector<std::vector<RatFunc>>(n, std::vector<RatFunc>(n, zero())));
  for (int kk = 0; kk < n; ++kk)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RatFunc s = zero();
        for (int l = 0; l < n; ++l) {
          if (m.g_upper[kk][l].is_zero()) continue;
          s += m.g_upper[kk][l] *
               (low[l][j].diff(i) + low[l][i].diff(j) - low[i][j].diff(l));
        }
        chr[kk][i][j] = s.scale(rat(1, 2));
      }
  // Ricci tensor and scalar contraction.
  RatFunc R = zero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatFunc ric = zero();
      for (int kk = 0; kk < n; ++kk) {
        ric += chr[kk][i][j].diff(kk);
        ric -= chr[kk][i][kk].diff(j);
        for (int l = 0; l < n; ++l) {
          ric += chr[kk][kk][l] * chr[l][i][j];
          ric -= chr[kk][j][l] * chr[l][i][kk];
        }
      }
      R += m.g_upper[i][j] * ric;
    }
  return R;
}

RatFunc potentials(const SphereParams& p, Chart chart, Which which) {
  int n = p.n;
  RatFunc V{MultiPoly(n)};
  MultiPoly x = sum_vars(n);
  for (int i = 1; i <= n; ++i) {
    Rational ai = p.a_i(i);
    if (ai != 0) V += RatFunc(MultiPoly::constant(n, ai), var(n, i - 1));
  }
  Rational atop = p.a_i(n + 1);
  if (atop != 0) V += RatFunc(MultiPoly::constant(n, atop), one(n) - x);
  if (which == Which::QES) {
    Rational lin = p.a * (p.a - 2 * p.G() - (n + 1) + 4 * Rational(p.k));
    V += RatFunc((x * x).scale(p.a * p.a) - x.scale(lin));
  }
  if (chart == Chart::cartesian) {
    std::vector<RatFunc> sq;
    for (int i = 0; i < n; ++i) sq.push_back(RatFunc(var(n, i) * var(n, i)));
    V = V.substitute(sq);
  }
  return V;
}

DiffOp build_euclid(const EuclidParams& p, EuclidStage stage) {
  int n = p.n;
  MultiPoly Y = sum_vars(n);
  auto h_hat_es = [&] {
    DiffOp h(n);
    for (int j = 0; j < n; ++j) {
      h += second_partial(n, j, j, RatFunc(var(n, j).scale(-4)));
      MultiPoly c = MultiPoly::constant(n, p.gamma_p[j] - 1) +
                    var(n, j).scale(p.omega);
      h += first_partial(n, j, RatFunc(c.scale(4)));
    }
    return h;
  };
  auto B_op = [&] {
    DiffOp euler(n);
    for (int j = 0; j < n; ++j)
      euler += DiffOp::compose(DiffOp::mult_by(var(n, j)), DiffOp::partial(n, j));
    euler += DiffOp::constant(n, Rational(-p.k));
    return DiffOp::compose(DiffOp::mult_by(Y), euler);
  };
  switch (stage) {
    case EuclidStage::h_hat_ES:
      return h_hat_es();
    case EuclidStage::B:
      return B_op();
    case EuclidStage::h_hat_QES:
      return h_hat_es() + B_op().scale(p.b);
    case EuclidStage::H_ES: {
      DiffOp h(n);
      for (int j = 0; j < n; ++j) {
        h += second_partial(n, j, j, RatFunc(var(n, j).scale(-4)));
        h += first_partial(n, j, RatFunc(MultiPoly::constant(n, -2)));
        Rational cj = p.gamma_p[j] * p.gamma_p[j] - rat(1, 4);
        if (cj != 0) h += DiffOp::mult_by(RatFunc(MultiPoly::constant(n, cj),
                                                  var(n, j)));
      }
      h += DiffOp::mult_by(RatFunc(Y.scale(p.omega * p.omega)));
      return h;
    }
    case EuclidStage::H_QES: {
      DiffOp h = build_euclid(p, EuclidStage::H_ES);
      MultiPoly cubic = (Y * Y * Y).scale(p.b * p.b / 16);
      Rational lin = p.sum_gamma_p() - n - 2 * Rational(p.k) - 1;
      MultiPoly rest = (Y.scale(lin) + (Y * Y).scale(p.omega)).scale(p.b / 2);
      return h + DiffOp::mult_by(RatFunc(cubic + rest));
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// x_l = r z_l (l < n), x_n = r (1 - sum z); new variables (z_1..z_{n-1}, r).
CoordMap radial_map(int n) {
  if (n < 2) throw std::invalid_argument("radial split needs n >= 2");
  MultiPoly xsum = sum_vars(n);
  std::vector<RatFunc> fwd;
  for (int l = 0; l < n - 1; ++l) fwd.push_back(RatFunc(var(n, l), xsum));
  fwd.push_back(RatFunc(xsum));
  std::vector<RatFunc> inv;
  MultiPoly r = var(n, n - 1);
  MultiPoly zsum(n);
  for (int l = 0; l < n - 1; ++l) zsum += var(n, l);
  for (int l = 0; l < n - 1; ++l) inv.push_back(RatFunc(r * var(n, l)));
  inv.push_back(RatFunc(r * (one(n) - zsum)));
  return CoordMap(std::move(fwd), std::move(inv));
}

}  // namespace

DiffOp radial_split_sphere(const SphereParams& p) {
  return change_coordinates(build_qes_sphere(p), radial_map(p.n));
}

DiffOp radial_split_euclid(const EuclidParams& p) {
  return change_coordinates(build_euclid(p, EuclidStage::h_hat_QES),
                            radial_map(p.n));
}

MultiPoly sym_reduce_pair(const MultiPoly& p) {
  if (p.nvars() != 2) throw std::invalid_argument("expected 2 variables");
  MultiPoly rem = p;
  MultiPoly out(2);
  MultiPoly e1 = var(2, 0) + var(2, 1);
  MultiPoly e2 = var(2, 0) * var(2, 1);
  while (!rem.is_zero()) {
    auto e = rem.leading_exponents();
    Rational c = rem.leading_coeff();
    int a = e[0], b = e[1];
    if (a < b) throw std::invalid_argument("polynomial is not symmetric");
    MultiPoly t = MultiPoly::constant(2, c) * e1.pow(a - b) * e2.pow(b);
    rem -= t;
    MultiPoly::Exponents oe = {a - b, b};
    out += MultiPoly::monomial(2, oe, c);
  }
  return out;
}

MetricData invariant_metric(int n) {
  if (n == 1) {
    // s-chart metric (1-s^2)/4 pushed through tau = s^2: entries stay even
    // in s, so halving exponents lands in the tau chart.
    MultiPoly s = var(1, 0);
    MultiPoly g_s = (one(1) - s * s).scale(rat(1, 4));
    MultiPoly pushed = (s.scale(2) * s.scale(2)) * g_s;  // (dtau/ds)^2 g^{ss}
    MultiPoly tau_poly(1);
    for (const auto& [e, c] : pushed.terms()) {
      if (e[0] % 2 != 0) throw std::logic_error("odd power survived");
      tau_poly += MultiPoly::monomial(1, {e[0] / 2}, c);
    }
    RFMatrix g(1, std::vector<RatFunc>(1, RatFunc(tau_poly)));
    return assemble_metric(g);
  }
  if (n == 2) {
    // tau_1 = s1^2 + s2^2, tau_2 = s1^2 s2^2; transform the s-chart metric
    // g^{ij} = (delta_ij - s_i s_j)/4 and reduce through x = s1^2, y = s2^2.
    MultiPoly s1 = var(2, 0), s2 = var(2, 1);
    std::vector<std::vector<MultiPoly>> gs(2, std::vector<MultiPoly>(2));
    gs[0][0] = (one(2) - s1 * s1).scale(rat(1, 4));
    gs[1][1] = (one(2) - s2 * s2).scale(rat(1, 4));
    gs[0][1] = gs[1][0] = (-(s1 * s2)).scale(rat(1, 4));
    std::vector<std::vector<MultiPoly>> T(2, std::vector<MultiPoly>(2));
    T[0][0] = s1.scale(2);
    T[0][1] = s2.scale(2);
    T[1][0] = s1.scale(2) * (s2 * s2);
    T[1][1] = s2.scale(2) * (s1 * s1);
    RFMatrix g(2, std::vector<RatFunc>(2, RatFunc(MultiPoly(2))));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        MultiPoly acc(2);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) acc += T[a][i] * T[b][j] * gs[i][j];
        // rewrite in x = s1^2, y = s2^2
        MultiPoly xy(2);
        for (const auto& [e, c] : acc.terms()) {
          if (e[0] % 2 != 0 || e[1] % 2 != 0)
            throw std::logic_error("odd power survived");
          MultiPoly::Exponents h = {e[0] / 2, e[1] / 2};
          xy += MultiPoly::monomial(2, h, c);
        }
        g[a][b] = RatFunc(sym_reduce_pair(xy));
      }
    return assemble_metric(g);
  }
  throw std::invalid_argument("invariant metric only for n <= 2");
}

GaugeFactor sphere_gauge_psi0(const SphereParams& p) {
  int n = p.n;
  GaugeFactor g(n);
  for (int i = 0; i < n; ++i)
    if (p.gamma[i] != 0)
      g.powers.push_back({var(n, i), p.gamma[i] / 2});
  if (p.gamma[n] != 0)
    g.powers.push_back({one(n) - sum_vars(n), p.gamma[n] / 2});
  return g;
}

GaugeFactor sphere_gauge_psi0_qes(const SphereParams& p) {
  GaugeFactor g = sphere_gauge_psi0(p);
  g.exp_arg = sum_vars(p.n).scale(-p.a / 2);
  return g;
}

GaugeFactor euclid_gauge_psi0(const EuclidParams& p) {
  int n = p.n;
  GaugeFactor g(n);
  for (int j = 0; j < n; ++j) {
    Rational e = rat(1, 4) - p.gamma_p[j] / 2;
    if (e != 0) g.powers.push_back({var(n, j), e});
  }
  g.exp_arg = sum_vars(n).scale(-p.omega / 2);
  return g;
}

GaugeFactor euclid_gauge_U(const EuclidParams& p) {
  int n = p.n;
  GaugeFactor g(n);
  MultiPoly Y = sum_vars(n);
  g.exp_arg = (Y * Y).scale(p.b / 16);
  return g;
}

}  // namespace qes
