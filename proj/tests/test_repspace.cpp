#include "doctest.h"

#include <algorithm>

#include "qes/repspace.hpp"

using namespace qes;

namespace {

SphereParams random_sphere(Rng& rng, int n, Rational a = 0, long k = 0) {
  std::vector<Rational> g;
  for (int i = 0; i <= n; ++i) g.push_back(rng.rational(9));
  return SphereParams(n, std::move(g), a, k);
}

UPoly catalog_product(const std::vector<ClosedForm>& cat) {
  UPoly prod = UPoly::constant(1);
  for (const auto& cf : cat) prod = prod * cf.poly.monic().pow(cf.multiplicity);
  return prod;
}

}  // namespace

TEST_CASE("basis dimensions and ordering") {
  CHECK(Basis::build(3, 2).size() == 10);
  CHECK(Basis::build(2, 2).size() == 6);
  CHECK(Basis::build(1, 2).size() == 3);
  CHECK(Basis::build(3, 1).size() == 4);
  CHECK(Basis::build(1, 0).exps == std::vector<std::vector<int>>{{0}});

  Basis b = Basis::build(2, 3);
  CHECK(b.size() == 10);
  GradedLex lt;
  for (int i = 0; i + 1 < b.size(); ++i) CHECK(lt(b.exps[i], b.exps[i + 1]));
  for (int i = 0; i < b.size(); ++i) CHECK(b.index_of(b.exps[i]) == i);
  CHECK(b.index_of({4, 0}) == -1);

  // the printed dimension sum omits the j=0 term: 9 instead of 10
  CHECK(printed_dim_sum(3, 2) == 9);
  CHECK(printed_dim_sum(2, 2) == 5);
}

TEST_CASE("fixture matrix and spectrum at n=1") {
  SphereParams p(1, {rat(0), rat(0)}, rat(-5, 8), 1);
  OperatorMatrix M = matrix_rep(build_qes_sphere(p), 1, 1);
  REQUIRE(M.invariant);
  CHECK(M.mat.at(0, 0) == 0);
  CHECK(M.mat.at(0, 1) == rat(1, 2));
  CHECK(M.mat.at(1, 0) == rat(5, 8));
  CHECK(M.mat.at(1, 1) == -1);

  Spectrum s = spectrum(M);
  REQUIRE(s.lines.size() == 2);
  CHECK(s.lines[0].value.is_rational);
  CHECK(s.lines[0].value.value == rat(-5, 4));
  CHECK(s.lines[1].value.value == rat(1, 4));
  CHECK(s.complex_pairs == 0);

  // eigenvectors are phi_pm = x + (1+2*gamma_1)/(2 E_pm)
  for (const auto& ln : s.lines) {
    Rational E = ln.value.value;
    std::vector<Rational> phi = {1 / (2 * E), Rational(1)};
    std::vector<Rational> img = M.mat.apply(phi);
    CHECK(img[0] == E * phi[0]);
    CHECK(img[1] == E * phi[1]);
  }
}

TEST_CASE("n=1 charpoly equals the printed closed forms") {
  Rng rng(71);
  for (int t = 0; t < 6; ++t) {
    for (long k = 1; k <= 2; ++k) {
      SphereParams p = random_sphere(rng, 1, rng.rational(9), k);
      OperatorMatrix M = matrix_rep(build_qes_sphere(p), 1, k);
      UPoly cp = M.mat.charpoly();
      CHECK(cp == catalog_product(closed_form_catalog(p)));
    }
  }
}

TEST_CASE("invariance flags") {
  Rng rng(83);
  SphereParams p = random_sphere(rng, 2);
  DiffOp h = build_es_sphere(p);
  for (long k = 0; k <= 5; ++k) CHECK(matrix_rep(h, 2, k).invariant);

  SphereParams q = random_sphere(rng, 2, rat(1, 2), 2);
  DiffOp hq = build_qes_sphere(q);
  CHECK(matrix_rep(hq, 2, 2).invariant);
  OperatorMatrix over = matrix_rep(hq, 2, 3);
  CHECK(!over.invariant);
  CHECK(!over.overflow.empty());
  CHECK_THROWS_AS((void)spectrum(over), std::domain_error);
}

TEST_CASE("exactly solvable spectra") {
  Rng rng(97);
  for (int n = 1; n <= 3; ++n) {
    SphereParams p = random_sphere(rng, n);
    for (long k = 0; k <= 4; ++k) {
      Spectrum s = spectrum(matrix_rep(build_es_sphere(p), n, k));
      auto pred = es_closed_spectrum(n, k, p.G());
      std::sort(pred.begin(), pred.end());
      REQUIRE(s.lines.size() == pred.size());
      for (std::size_t i = 0; i < pred.size(); ++i) {
        CHECK(s.lines[i].value.is_rational);
        CHECK(s.lines[i].value.value == pred[i].first);
        CHECK(s.lines[i].multiplicity == pred[i].second);
      }
    }
    // a=0 degeneration of the QES operator
    SphereParams q(n, p.gamma, rat(0), 2);
    CHECK(matrix_rep(build_qes_sphere(q), n, 2).mat ==
          matrix_rep(build_es_sphere(p), n, 2).mat);
  }
}

TEST_CASE("fixture spectrum and joint eigenbasis at n=2") {
  SphereParams p(2, {rat(0), rat(0), rat(0)}, rat(1, 2), 1);
  Spectrum s = spectrum(matrix_rep(build_qes_sphere(p), 2, 1));
  REQUIRE(s.lines.size() == 3);
  CHECK(s.lines[0].value.value == rat(-3, 2));
  CHECK(s.lines[1].value.value == -1);
  CHECK(s.lines[2].value.value == rat(-1, 2));

  JointDecomposition jd = joint_eigenbasis(p);
  REQUIRE(jd.blocks.size() == 2);
  int total = 0;
  for (const auto& b : jd.blocks) total += b.h_block.rows();
  CHECK(total == 3);

  const Basis& bs = jd.basis;
  int i1 = bs.index_of({0, 0});
  int ix = bs.index_of({1, 0});
  int iy = bs.index_of({0, 1});
  for (const auto& b : jd.blocks) {
    REQUIRE(b.c.size() == 1);
    CHECK(!b.defective);
    if (b.c[0] == -1) {
      // (x1 - x2, c1 = -1, E = -3/2)
      REQUIRE(b.eigvecs.size() == 1);
      CHECK(b.eigvecs[0].first == rat(-3, 2));
      const auto& v = b.eigvecs[0].second.at(0);
      CHECK(v[i1] == 0);
      CHECK(v[ix] == -v[iy]);
    } else {
      CHECK(b.c[0] == 0);
      // (1 - (x1+x2)/2, c1 = 0, E = -1/2) and a third line at E = -1
      bool found = false;
      for (const auto& [E, vecs] : b.eigvecs) {
        if (E != rat(-1, 2)) {
          CHECK(E == -1);
          continue;
        }
        found = true;
        const auto& v = vecs.at(0);
        CHECK(v[ix] == v[iy]);
        CHECK(v[i1] == -2 * v[ix]);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("n=1 joint eigenbasis degenerates to the plain spectrum") {
  SphereParams p(1, {rat(0), rat(0)}, rat(-5, 8), 1);
  JointDecomposition jd = joint_eigenbasis(p);
  REQUIRE(jd.blocks.size() == 1);
  CHECK(jd.blocks[0].c.empty());
  CHECK(jd.blocks[0].charpoly ==
        matrix_rep(build_qes_sphere(p), 1, 1).mat.charpoly());
}

TEST_CASE("joint blocks partition the space and carry chain labels") {
  Rng rng(103);
  for (int n = 2; n <= 3; ++n) {
    SphereParams p = random_sphere(rng, n, rng.rational(9), 2);
    JointDecomposition jd = joint_eigenbasis(p);
    int total = 0;
    for (const auto& b : jd.blocks) {
      total += b.h_block.rows();
      REQUIRE(b.c.size() == static_cast<std::size_t>(n - 1));
    }
    CHECK(total == jd.basis.size());
  }
}

TEST_CASE("spectrum multiset is invariant under gamma permutations") {
  Rng rng(113);
  for (int t = 0; t < 3; ++t) {
    std::vector<Rational> g;
    for (int i = 0; i <= 3; ++i) g.push_back(rng.rational(9));
    Rational a = rng.rational(9);
    for (long k = 1; k <= 2; ++k) {
      SphereParams base(3, g, a, k);
      UPoly cp0 = matrix_rep(build_qes_sphere(base), 3, k).mat.charpoly();
      std::vector<int> perm = {0, 1, 2};
      while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<Rational> pg = {g[perm[0]], g[perm[1]], g[perm[2]], g[3]};
        SphereParams sp(3, pg, a, k);
        CHECK(matrix_rep(build_qes_sphere(sp), 3, k).mat.charpoly() == cp0);
      }
    }
  }
}

TEST_CASE("printed catalog matches the flipped-slope operator for n >= 2") {
  Rng rng(127);
  for (int t = 0; t < 3; ++t) {
    for (int n = 2; n <= 3; ++n) {
      for (long k = 1; k <= 2; ++k) {
        SphereParams p = random_sphere(rng, n, rng.rational(9), k);
        UPoly derived = matrix_rep(build_qes_sphere(p), n, k).mat.charpoly();
        UPoly flipped =
            matrix_rep(build_qes_sphere_flipped_slope(p), n, k).mat.charpoly();
        UPoly printed = catalog_product(closed_form_catalog(p));
        CHECK(flipped == printed);
        CHECK(derived != printed);
        // the printed sum of eigenvalues is the flipped trace, not the trace
        Rational printed_sum = -printed.coeff(printed.degree() - 1);
        CHECK(matrix_rep(build_qes_sphere_flipped_slope(p), n, k).mat.trace() ==
              printed_sum);
      }
    }
  }
}

TEST_CASE("q1=..=k chain energy is the ES top eigenvalue") {
  Rng rng(131);
  for (int n = 2; n <= 3; ++n) {
    for (long k = 1; k <= 2; ++k) {
      SphereParams p = random_sphere(rng, n, rng.rational(9), k);
      JointDecomposition jd = joint_eigenbasis(p);
      Rational eps_k = -Rational(k) * (Rational(k) + p.G() + rat(n - 1, 2));
      bool found = false;
      for (const auto& b : jd.blocks)
        if (b.h_block.rows() == 1 && b.h_block.at(0, 0) == eps_k) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("catalog coverage and errors") {
  SphereParams p(2, {rat(0), rat(0), rat(0)}, rat(0), 0);
  auto cat = closed_form_catalog(p);
  REQUIRE(cat.size() == 1);
  CHECK(cat[0].id == "S34-N2-K0-E0");
  CHECK(cat[0].poly == UPoly::x());
  SphereParams bad(2, {rat(0), rat(0), rat(0)}, rat(0), 3);
  CHECK_THROWS_AS((void)closed_form_catalog(bad), std::out_of_range);

  // n=1, k=2, a=0: printed cubic factors as the ES eigenvalues
  SphereParams es(1, {rat(1, 3), rat(2, 5)}, rat(0), 2);
  auto c2 = closed_form_catalog(es);
  REQUIRE(c2.size() == 1);
  auto roots = rational_roots(c2[0].poly);
  REQUIRE(roots.size() == 3);
  Rational G = es.G();
  CHECK(roots[0].first == -2 * (G + 2));
  CHECK(roots[1].first == -(G + 1));
  CHECK(roots[2].first == 0);
}
