#include "doctest.h"

#include "qes/models.hpp"

using namespace qes;

namespace {

SphereParams random_sphere(Rng& rng, int n, Rational a = 0, long k = 0) {
  std::vector<Rational> g;
  for (int i = 0; i <= n; ++i) g.push_back(rng.rational(9));
  return SphereParams(n, std::move(g), a, k);
}

MultiPoly xvar(int n, int i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST_CASE("h_ES explicit form at n=1") {
  SphereParams p(1, {rat(0), rat(0)});
  DiffOp h = build_es_sphere(p);
  MultiPoly x = xvar(1, 0);
  DiffOp expect = DiffOp::term(RatFunc(x - x * x), {2}) +
                  DiffOp::term(RatFunc(MultiPoly::constant(1, rat(1, 2)) - x), {1});
  CHECK(h == expect);
  CHECK(h.apply(MultiPoly::constant(1, 1)).is_zero());
}

TEST_CASE("h_ES image of x1 at n=2") {
  Rng rng(17);
  for (int t = 0; t < 3; ++t) {
    SphereParams p = random_sphere(rng, 2);
    DiffOp h = build_es_sphere(p);
    MultiPoly x1 = xvar(2, 0);
    MultiPoly expect = MultiPoly::constant(2, p.gamma[0] + rat(1, 2)) -
                       x1.scale(p.G() + rat(3, 2));
    CHECK(h.apply_poly(x1) == expect);
  }
}

TEST_CASE("generator form reproduces h_ES; printed coefficient differs by Euler term") {
  Rng rng(23);
  for (int n = 1; n <= 4; ++n) {
    SphereParams p = random_sphere(rng, n);
    DiffOp direct = build_es_sphere(p);
    CHECK(build_es_from_generators(p) == direct);
    DiffOp printed = build_es_from_generators(p, true);
    DiffOp euler(n);
    for (int i = 0; i < n; ++i)
      euler += DiffOp::compose(DiffOp::mult_by(xvar(n, i)), DiffOp::partial(n, i));
    CHECK(printed == direct - euler);
  }
}

TEST_CASE("h_QES basic behaviour") {
  Rng rng(31);
  SphereParams p0 = random_sphere(rng, 2, 0, 1);
  CHECK(build_qes_sphere(p0) == build_es_sphere(p0));

  SphereParams p(2, {rat(1, 2), rat(-1, 3), rat(2)}, rat(5, 7), 1);
  DiffOp h = build_qes_sphere(p);
  MultiPoly expect = -(xvar(2, 0) + xvar(2, 1)).scale(p.a);
  CHECK(h.apply_poly(MultiPoly::constant(2, 1)) == expect);

  // invariance of P_k and loss of invariance at degree k+1
  for (int k = 1; k <= 3; ++k) {
    SphereParams pk(1, {rat(1, 3), rat(2, 5)}, rat(1, 2), k);
    DiffOp hk = build_qes_sphere(pk);
    MultiPoly top = MultiPoly::monomial(1, {k}, 1);
    CHECK(hk.apply_poly(top).total_degree() <= k);
    MultiPoly over = MultiPoly::monomial(1, {k + 1}, 1);
    CHECK(hk.apply_poly(over).total_degree() == k + 2);
  }
}

TEST_CASE("integrals: fixture matrix, decomposition, commutation") {
  // n=2, gamma=0: I_12 on span{x1, x2} is [[-1/2, 1/2], [1/2, -1/2]]
  SphereParams p0(2, {rat(0), rat(0), rat(0)});
  DiffOp I12 = build_integral(IntegralKind::Iij, 1, 2, p0);
  CHECK(I12.apply(MultiPoly::constant(2, 1)).is_zero());
  MultiPoly x1 = xvar(2, 0), x2 = xvar(2, 1);
  CHECK(I12.apply_poly(x1) == x1.scale(rat(-1, 2)) + x2.scale(rat(1, 2)));
  CHECK(I12.apply_poly(x2) == x1.scale(rat(1, 2)) + x2.scale(rat(-1, 2)));

  Rng rng(41);
  for (int n = 1; n <= 4; ++n) {
    SphereParams p = random_sphere(rng, n);
    DiffOp h = build_es_sphere(p);
    DiffOp sum(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j)
        sum += build_integral(IntegralKind::Iij, i, j, p);
      sum += build_integral(IntegralKind::Ii, i, 0, p);
    }
    CHECK(sum == h);
    for (int i = 1; i <= n; ++i) {
      CHECK(DiffOp::commutator(h, build_integral(IntegralKind::Ii, i, 0, p))
                .is_zero());
      for (int j = i + 1; j <= n; ++j)
        CHECK(DiffOp::commutator(h, build_integral(IntegralKind::Iij, i, j, p))
                  .is_zero());
    }
  }
}

TEST_CASE("printed I_i first-order term fails the decomposition") {
  SphereParams p(1, {rat(1, 3), rat(2, 7)});
  DiffOp printed = build_integral(IntegralKind::Ii, 1, 0, p, true);
  CHECK(printed != build_es_sphere(p));
  CHECK(build_integral(IntegralKind::Ii, 1, 0, p) == build_es_sphere(p));
}

TEST_CASE("L chain commutes and commutes with h_QES") {
  Rng rng(53);
  SphereParams p = random_sphere(rng, 3, rat(2, 3), 2);
  auto L = build_L_chain(p);
  REQUIRE(L.size() == 2);
  CHECK(DiffOp::commutator(L[0], L[1]).is_zero());
  DiffOp h = build_qes_sphere(p);
  for (const auto& l : L) CHECK(DiffOp::commutator(h, l).is_zero());
  // I_i does not commute with h_QES for a != 0
  DiffOp I1 = build_integral(IntegralKind::Ii, 1, 0, p);
  CHECK(!DiffOp::commutator(h, I1).is_zero());
}

TEST_CASE("sphere metric: determinant and assembled operator") {
  for (int n = 1; n <= 4; ++n) {
    MetricData m = sphere_metric(n);
    MultiPoly prod = MultiPoly::constant(n, 1);
    MultiPoly x(n);
    for (int i = 0; i < n; ++i) {
      prod = prod * xvar(n, i);
      x += xvar(n, i);
    }
    CHECK(m.det_upper == RatFunc(prod * (MultiPoly::constant(n, 1) - x)));
  }
  // n=1: Delta_g = x(1-x) d^2 + (1/2 - x) d, the gamma=0 algebraic operator
  MetricData m1 = sphere_metric(1);
  CHECK(m1.laplace_beltrami == build_es_sphere(SphereParams(1, {rat(0), rat(0)})));
}

TEST_CASE("scalar curvature is constant") {
  for (int n = 2; n <= 3; ++n) {
    MetricData m = sphere_metric(n);
    RatFunc R = scalar_curvature(m);
    for (int i = 0; i < n; ++i) CHECK(R.diff(i).is_zero());
  }
  CHECK(scalar_curvature(sphere_metric(2)) ==
        RatFunc(MultiPoly::constant(2, rat(1, 2))));
  CHECK(scalar_curvature(sphere_metric(3)) ==
        RatFunc(MultiPoly::constant(3, rat(3, 2))));
}

TEST_CASE("potentials") {
  SphereParams trivial(2, {rat(0), rat(0), rat(0)});
  CHECK(potentials(trivial, Chart::simplex, Which::ES).is_zero());

  SphereParams p(1, {rat(2), rat(0)});
  RatFunc V = potentials(p, Chart::simplex, Which::ES);
  CHECK(V == RatFunc(MultiPoly::constant(1, 2), xvar(1, 0)));

  // QES - ES difference follows the printed quadratic-plus-linear form
  SphereParams q(2, {rat(1, 3), rat(0), rat(1, 5)}, rat(3), 1);
  RatFunc d = potentials(q, Chart::simplex, Which::QES) -
              potentials(q, Chart::simplex, Which::ES);
  MultiPoly x = xvar(2, 0) + xvar(2, 1);
  Rational lin = q.a * (q.a - 2 * q.G() - 3 + 4);
  CHECK(d == RatFunc((x * x).scale(q.a * q.a) - x.scale(lin)));

  // cartesian chart substitutes x_i = s_i^2
  RatFunc Vc = potentials(p, Chart::cartesian, Which::ES);
  CHECK(Vc == RatFunc(MultiPoly::constant(1, 2), xvar(1, 0) * xvar(1, 0)));
}

TEST_CASE("euclidean operators") {
  EuclidParams p(2, {rat(1, 3), rat(-2, 5)}, rat(1, 7), rat(3, 4), 2);
  DiffOp h = build_euclid(p, EuclidStage::h_hat_ES);
  CHECK(h.apply(MultiPoly::constant(2, 1)).is_zero());
  MultiPoly Y1 = xvar(2, 0);
  MultiPoly expect = MultiPoly::constant(2, (p.gamma_p[0] - 1) * 4) +
                     Y1.scale(p.omega * 4);
  CHECK(h.apply_poly(Y1) == expect);

  EuclidParams p0(2, {rat(1, 3), rat(-2, 5)}, rat(1, 7), rat(0), 2);
  CHECK(build_euclid(p0, EuclidStage::h_hat_QES) ==
        build_euclid(p0, EuclidStage::h_hat_ES));

  // B = sum of raising generators
  DiffOp B = build_euclid(p, EuclidStage::B);
  DiffOp raise_sum(2);
  for (int i = 0; i < 2; ++i)
    raise_sum += gl_generator(GlKind::raise, 2, i, 0, p.k);
  CHECK(B == raise_sum);

  // h_hat preserves P_k
  DiffOp hq = build_euclid(p, EuclidStage::h_hat_QES);
  MultiPoly top = MultiPoly::monomial(2, {2, 0}, 1);
  CHECK(hq.apply_poly(top).total_degree() <= 2);
}

TEST_CASE("radial splits") {
  SphereParams p(2, {rat(1, 3), rat(-2, 5), rat(1, 7)}, rat(3, 4), 2);
  DiffOp split = radial_split_sphere(p);
  int n = 2;
  MultiPoly r = xvar(n, 1);
  // d_r^2 coefficient is r(1-r) in the mechanical derivation
  CHECK(split.coeff({0, 2}) == RatFunc(r - r * r));
  // d_r coefficient: G_{n} + n/2 - (G+(n+1)/2) r + a r^2
  MultiPoly rc = MultiPoly::constant(n, p.G_j(2) + 1) -
                 r.scale(p.G() + rat(3, 2)) + (r * r).scale(p.a);
  CHECK(split.coeff({0, 1}) == RatFunc(rc));
  // zero-order term -a k r
  CHECK(split.coeff({0, 0}) == RatFunc(r.scale(-p.a * Rational(p.k))));
  // the z-block is (1/r) h^(ES) on S^1 with parameters (gamma_1, gamma_2)
  DiffOp h1 = build_es_sphere(SphereParams(1, {p.gamma[0], p.gamma[1]}));
  for (const auto& [a, c] : h1.terms()) {
    std::vector<int> full = {a[0], 0};
    CHECK(split.coeff(full) == c.extended(2) / RatFunc(r));
  }

  // Euclidean: d_R^2 coefficient -4R; block is -(4/R) h^(ES) with
  // gamma_j = 1/2 - gamma'_j
  EuclidParams e(2, {rat(1, 3), rat(-2, 5)}, rat(1, 7), rat(3, 4), 2);
  DiffOp esplit = radial_split_euclid(e);
  MultiPoly R = xvar(2, 1);
  CHECK(esplit.coeff({0, 2}) == RatFunc(R.scale(-4)));
  MultiPoly Rc = (R * R).scale(e.b) + R.scale(e.omega * 4) +
                 MultiPoly::constant(2, (e.sum_gamma_p() - 2) * 4);
  CHECK(esplit.coeff({0, 1}) == RatFunc(Rc));
  CHECK(esplit.coeff({0, 0}) == RatFunc(R.scale(-e.b * Rational(e.k))));
  DiffOp h1e = build_es_sphere(SphereParams(
      1, {rat(1, 2) - e.gamma_p[0], rat(1, 2) - e.gamma_p[1]}));
  for (const auto& [a, c] : h1e.terms()) {
    std::vector<int> full = {a[0], 0};
    CHECK(esplit.coeff(full) == c.extended(2).scale(-4) / RatFunc(R));
  }
}

TEST_CASE("invariant-coordinate metrics") {
  MetricData m1 = invariant_metric(1);
  MultiPoly t = xvar(1, 0);
  CHECK(m1.g_upper[0][0] == RatFunc(t - t * t));
  // first-order coefficient 1/2 - tau (the printed appendix says 1/2 + tau)
  CHECK(m1.laplace_beltrami.coeff({1}) ==
        RatFunc(MultiPoly::constant(1, rat(1, 2)) - t));

  MetricData m2 = invariant_metric(2);
  MultiPoly t1 = xvar(2, 0), t2 = xvar(2, 1);
  CHECK(m2.g_upper[0][0] == RatFunc(t1 - t1 * t1));
  CHECK(m2.g_upper[1][1] == RatFunc(t1 * t2 - (t2 * t2).scale(4)));
  CHECK(m2.g_upper[0][1] == RatFunc(t2.scale(2) - (t1 * t2).scale(2)));
  CHECK(m2.g_upper[0][1] == m2.g_upper[1][0]);
  // printed first-order terms match exactly for n=2
  CHECK(m2.laplace_beltrami.coeff({1, 0}) ==
        RatFunc(MultiPoly::constant(2, 1) - t1.scale(rat(3, 2))));
  CHECK(m2.laplace_beltrami.coeff({0, 1}) ==
        RatFunc(t1.scale(rat(1, 2)) - t2.scale(5)));
  // same geometry as the simplex chart: curvature 1/2
  CHECK(scalar_curvature(m2) == RatFunc(MultiPoly::constant(2, rat(1, 2))));
}

TEST_CASE("symmetric reduction") {
  MultiPoly x = xvar(2, 0), y = xvar(2, 1);
  CHECK(sym_reduce_pair(x * x + y * y) ==
        xvar(2, 0) * xvar(2, 0) - xvar(2, 1).scale(2));
  CHECK(sym_reduce_pair(x * y) == xvar(2, 1));
  CHECK_THROWS(sym_reduce_pair(x - y.scale(2)));
}

TEST_CASE("gauge factors expose the right log-derivatives") {
  SphereParams p(2, {rat(1, 3), rat(2, 5), rat(4)}, rat(1, 2), 1);
  GaugeFactor g = sphere_gauge_psi0(p);
  MultiPoly x1 = xvar(2, 0);
  MultiPoly omx = MultiPoly::constant(2, 1) - xvar(2, 0) - xvar(2, 1);
  RatFunc expect = RatFunc(MultiPoly::constant(2, rat(1, 6)), x1) +
                   RatFunc(MultiPoly::constant(2, -2), omx);
  CHECK(g.dlog(0) == expect);

  GaugeFactor gq = sphere_gauge_psi0_qes(p);
  CHECK(gq.dlog(0) == expect + RatFunc(MultiPoly::constant(2, -p.a / 2)));
}
