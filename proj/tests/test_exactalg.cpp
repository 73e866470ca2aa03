#include "doctest.h"

#include "qes/multipoly.hpp"
#include "qes/qmatrix.hpp"
#include "qes/ratfunc.hpp"
#include "qes/roots.hpp"
#include "qes/upoly.hpp"

using namespace qes;

namespace {

MultiPoly random_poly(Rng& rng, int nvars, int max_deg, int terms) {
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    MultiPoly::Exponents e(nvars);
    for (int i = 0; i < nvars; ++i)
      e[i] = static_cast<int>(rng.integer(0, max_deg));
    p += MultiPoly::monomial(nvars, e, rng.rational(9));
  }
  return p;
}

}  // namespace

TEST_CASE("rational parse/print round trip") {
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  CHECK(to_string(rat(4, 2)) == "2");
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("multipoly ring axioms on random elements") {
  Rng rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 3;
    MultiPoly a = random_poly(rng, n, 3, 4);
    MultiPoly b = random_poly(rng, n, 3, 4);
    MultiPoly c = random_poly(rng, n, 3, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MultiPoly(n));
  }
}

TEST_CASE("multipoly substitute is a ring homomorphism") {
  Rng rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2;
    MultiPoly a = random_poly(rng, n, 3, 3);
    MultiPoly b = random_poly(rng, n, 3, 3);
    std::vector<MultiPoly> im = {random_poly(rng, 2, 2, 3),
                                 random_poly(rng, 2, 2, 3)};
    CHECK((a + b).substitute(im) == a.substitute(im) + b.substitute(im));
    CHECK((a * b).substitute(im) == a.substitute(im) * b.substitute(im));
  }
}

TEST_CASE("multipoly derivative rules") {
  Rng rng(31);
  MultiPoly a = random_poly(rng, 3, 4, 5);
  MultiPoly b = random_poly(rng, 3, 4, 5);
  for (int v = 0; v < 3; ++v)
    CHECK((a * b).diff(v) == a.diff(v) * b + a * b.diff(v));
  // mixed partials commute
  CHECK(a.diff(0).diff(1) == a.diff(1).diff(0));
}

TEST_CASE("exact division and gcd") {
  Rng rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 1 + trial % 3;
    MultiPoly a = random_poly(rng, n, 2, 3);
    MultiPoly b = random_poly(rng, n, 2, 3);
    MultiPoly g = random_poly(rng, n, 2, 2);
    if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
    MultiPoly p = a * g, q = b * g;
    auto quot = MultiPoly::divide_exact(p, g);
    REQUIRE(quot.has_value());
    CHECK(*quot == a);
    MultiPoly d = MultiPoly::gcd(p, q);
    // gcd divides both and is divisible by the planted common factor
    CHECK(MultiPoly::divide_exact(p, d).has_value());
    CHECK(MultiPoly::divide_exact(q, d).has_value());
    CHECK(MultiPoly::divide_exact(d, MultiPoly::gcd(g, d)).has_value());
    CHECK(MultiPoly::divide_exact(d, g * MultiPoly::gcd(a, b)).has_value());
  }
}

TEST_CASE("gcd known cases") {
  // gcd(x^2 - y^2, x^2 + 2xy + y^2) = x + y
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  MultiPoly g = MultiPoly::gcd((x - y) * (x + y), (x + y) * (x + y));
  CHECK(g == x + y);
  MultiPoly one = MultiPoly::constant(2, 1);
  CHECK(MultiPoly::gcd(x, y) == one);
}

TEST_CASE("ratfunc canonical form and arithmetic") {
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  RatFunc f((x * x - y * y), (x + y));  // reduces to x - y
  CHECK(f.is_polynomial());
  CHECK(f.as_polynomial() == x - y);

  RatFunc a(x, y), b(y, x);
  RatFunc s = a + b;
  CHECK(s.num() == x * x + y * y);
  CHECK(s.den() == x * y);
  CHECK(a * b == RatFunc(MultiPoly::constant(2, 1)));
  CHECK(a / a == RatFunc(MultiPoly::constant(2, 1)));
  CHECK((a - a).is_zero());

  // denominator sign convention: den has positive leading coefficient
  RatFunc neg(x, -y);
  CHECK(neg.den() == y);
  CHECK(neg.num() == -x);
}

TEST_CASE("ratfunc differentiation quotient rule") {
  MultiPoly x = MultiPoly::variable(1, 0);
  RatFunc f(MultiPoly::constant(1, 1), x);  // 1/x
  RatFunc df = f.diff(0);
  CHECK(df == RatFunc(-MultiPoly::constant(1, 1), x * x));
  Rng rng(5);
  MultiPoly p = random_poly(rng, 2, 3, 4), q = random_poly(rng, 2, 3, 4);
  if (!q.is_zero()) {
    RatFunc g(p, q), h(q, q * q + MultiPoly::constant(2, 1));
    CHECK((g * h).diff(0) == g.diff(0) * h + g * h.diff(0));
    CHECK((g + h).diff(1) == g.diff(1) + h.diff(1));
  }
}

TEST_CASE("ratfunc substitution chain") {
  MultiPoly x = MultiPoly::variable(1, 0);
  RatFunc f(MultiPoly::constant(1, 1), x + MultiPoly::constant(1, 1));  // 1/(x+1)
  // substitute x -> 1/x : gives x/(x+1)
  RatFunc inv(MultiPoly::constant(1, 1), x);
  RatFunc g = f.substitute({inv});
  CHECK(g == RatFunc(x, x + MultiPoly::constant(1, 1)));
  CHECK(g.eval({Rational(1)}) == Rational(1, 2));
}

TEST_CASE("upoly division, gcd, squarefree") {
  UPoly x = UPoly::x();
  UPoly p = (x - UPoly::constant(1)).pow(2) * (x + UPoly::constant(2));
  auto [q, r] = UPoly::divmod(p, x - UPoly::constant(1));
  CHECK(r.is_zero());
  CHECK(q == (x - UPoly::constant(1)) * (x + UPoly::constant(2)));
  CHECK(UPoly::gcd(p, p.derivative()) == (x - UPoly::constant(1)));
  auto sq = UPoly::squarefree_decomposition(p);
  REQUIRE(sq.size() == 3);
  CHECK(sq[1] == x + UPoly::constant(2));
  CHECK(sq[2] == x - UPoly::constant(1));
}

TEST_CASE("qmatrix determinant, inverse, kernel") {
  QMatrix m(2, 2);
  m.at(0, 0) = 0;
  m.at(0, 1) = rat(1, 2);
  m.at(1, 0) = rat(5, 8);
  m.at(1, 1) = -1;
  CHECK(m.det() == rat(-5, 16));
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv * m == QMatrix::identity(2));

  QMatrix s(2, 3);
  s.at(0, 0) = 1;
  s.at(0, 1) = 2;
  s.at(0, 2) = 3;
  s.at(1, 0) = 2;
  s.at(1, 1) = 4;
  s.at(1, 2) = 6;
  CHECK(s.rank() == 1);
  auto ker = s.kernel_basis();
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    auto img = s.apply(v);
    for (const auto& c : img) CHECK(c == 0);
  }
}

TEST_CASE("charpoly matches cofactor expansion on random matrices") {
  Rng rng(4242);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 2 + trial % 3;
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rng.rational(5);
    UPoly cp = m.charpoly();
    CHECK(cp.degree() == n);
    CHECK(cp.lead() == 1);
    // p(t) must vanish where det(tI - m) does: check at random t by direct det
    for (int s = 0; s < 3; ++s) {
      Rational t = rng.rational(7);
      QMatrix shifted = QMatrix::identity(n).scale(t) - m;
      CHECK(cp.eval(t) == shifted.det());
    }
    // Cayley-Hamilton
    QMatrix acc(n, n);
    QMatrix pw = QMatrix::identity(n);
    for (int d = 0; d <= n; ++d) {
      acc = acc + pw.scale(cp.coeff(d));
      pw = pw * m;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("charpoly of companion-like fixture") {
  // [[0,1/2],[5/8,-1]]: t^2 + t - 5/16
  QMatrix m(2, 2);
  m.at(0, 1) = rat(1, 2);
  m.at(1, 0) = rat(5, 8);
  m.at(1, 1) = -1;
  UPoly cp = m.charpoly();
  CHECK(cp == UPoly({rat(-5, 16), rat(1), rat(1)}));
  auto roots = rational_roots(cp);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == rat(-5, 4));
  CHECK(roots[1].first == rat(1, 4));
}

TEST_CASE("root isolation: rational, irrational, complex") {
  UPoly x = UPoly::x();
  // (x - 1/3)^2 (x^2 - 2) (x^2 + 1)
  UPoly p = (x - UPoly::constant(rat(1, 3))).pow(2) *
            (x * x - UPoly::constant(2)) * (x * x + UPoly::constant(1));
  RootSet rs = real_roots(p);
  REQUIRE(rs.roots.size() == 3);
  CHECK(rs.complex_pairs == 1);
  CHECK(rs.roots[0].is_rational == false);
  CHECK(to_double(rs.roots[0].value) == doctest::Approx(-1.41421356).epsilon(1e-9));
  CHECK(rs.roots[1].is_rational);
  CHECK(rs.roots[1].value == rat(1, 3));
  CHECK(rs.roots[1].multiplicity == 2);
  CHECK(rs.roots[2].is_rational == false);
  CHECK(rs.roots[2].value > rs.roots[2].lo);
  CHECK(rs.roots[2].hi - rs.roots[2].lo <= Rational(1, Integer(1) << 64));
}

TEST_CASE("simplest rational reconstruction") {
  CHECK(simplest_in(rat(3, 10), rat(2, 5)) == rat(1, 3));
  CHECK(simplest_in(rat(-1, 2), rat(1, 2)) == 0);
  CHECK(simplest_in(rat(7, 3), rat(5, 2)) == rat(5, 2));
  // a root of 16x^2 - 8x + 1 = (4x-1)^2 recovered exactly
  UPoly p({rat(1), rat(-8), rat(16)});
  auto rr = rational_roots(p);
  REQUIRE(rr.size() == 1);
  CHECK(rr[0].first == rat(1, 4));
  CHECK(rr[0].second == 2);
}

TEST_CASE("roots of large-denominator rationals are reconstructed") {
  // (x - 12345/67891)(x - 67890/97) expanded
  UPoly f = (UPoly::x() - UPoly::constant(rat(12345, 67891))) *
            (UPoly::x() - UPoly::constant(Rational(67890, 97)));
  auto rr = rational_roots(f);
  REQUIRE(rr.size() == 2);
  CHECK(rr[0].first == rat(12345, 67891));
  CHECK(rr[1].first == Rational(67890, 97));
}
