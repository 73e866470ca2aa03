#include "qes/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace qes {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::deviation: return "deviation";
    default: return "inconclusive";
  }
}

namespace {

using Json = nlohmann::ordered_json;

Rational pow_rat(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
  return e < 0 ? Rational(1) / r : r;
}

std::vector<std::string> names(const std::string& prefix, int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

// z_1..z_{m}, radial variable last.
std::vector<std::string> radial_names(const std::string& ang,
                                      const std::string& rad, int n) {
  std::vector<std::string> v = names(ang, n - 1);
  v.push_back(rad);
  return v;
}

std::string rvec(const std::vector<Rational>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string sphere_draw(const SphereParams& p) {
  return "gamma=" + rvec(p.gamma) + " a=" + to_string(p.a) +
         " k=" + std::to_string(p.k);
}

std::string euclid_draw(const EuclidParams& p) {
  return "gamma'=" + rvec(p.gamma_p) + " omega=" + to_string(p.omega) +
         " b=" + to_string(p.b) + " k=" + std::to_string(p.k);
}

ConformanceItem item(std::string id, std::string anchor, CheckStatus st,
                     std::string residual, std::string corrected,
                     std::string draws) {
  return ConformanceItem{std::move(id),       std::move(anchor),
                         st,                  std::move(residual),
                         std::move(corrected), std::move(draws)};
}

CheckStatus st_of(bool conclusive, bool matches_print) {
  if (!conclusive) return CheckStatus::inconclusive;
  return matches_print ? CheckStatus::pass : CheckStatus::deviation;
}

// Rank of a family of operators viewed as vectors of (multi-index, monomial)
// coefficients.
int operator_rank(const std::vector<DiffOp>& ops) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> keys;
  for (const auto& A : ops)
    for (const auto& [al, c] : A.terms())
      for (const auto& [mono, coef] : c.num().terms())
        keys.emplace(std::make_pair(al, mono), 0);
  int row = 0;
  for (auto& [kk, v] : keys) v = row++;
  QMatrix M(row, static_cast<int>(ops.size()));
  for (int j = 0; j < static_cast<int>(ops.size()); ++j)
    for (const auto& [al, c] : ops[j].terms())
      for (const auto& [mono, coef] : c.num().terms())
        M.at(keys[{al, mono}], j) = coef;
  return M.rank();
}

DiffOp anti(const DiffOp& A, const DiffOp& B) {
  return DiffOp::compose(A, B) + DiffOp::compose(B, A);
}

Rational max_abs(const QMatrix& A) {
  Rational m = 0;
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c)
      if (rat_abs(A.at(r, c)) > m) m = rat_abs(A.at(r, c));
  return m;
}

bool divides(const UPoly& f, const UPoly& c) {
  return UPoly::divmod(c, f).second.is_zero();
}

}  // namespace

std::vector<ConformanceItem> check_integrals(int n, Rng& rng, int draws) {
  if (n < 2) throw std::invalid_argument("check_integrals requires n >= 2");
  bool es_ij = true, es_i = true, qes_ij = true, qes_i_nonzero = true;
  bool decomp = true, printed_nonzero = true, indep = true, chain = true;
  int qes_i_order = -1, printed_order = -1;
  int count = n * (n + 1) / 2;
  std::string log;
  for (int d = 0; d < draws; ++d) {
    std::vector<Rational> g;
    for (int i = 0; i <= n; ++i) g.push_back(rng.rational(13));
    SphereParams p(n, g, rng.nonzero_rational(13), rng.integer(0, 3));
    log += (d ? "; " : "") + sphere_draw(p);
    DiffOp hes = build_es_sphere(p), hqes = build_qes_sphere(p);
    std::vector<DiffOp> ints;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        DiffOp I = build_integral(IntegralKind::Iij, i, j, p);
        es_ij &= DiffOp::commutator(hes, I).is_zero();
        qes_ij &= DiffOp::commutator(hqes, I).is_zero();
        ints.push_back(I);
      }
    DiffOp sum(n);
    for (const auto& I : ints) sum += I;
    for (int i = 1; i <= n; ++i) {
      DiffOp I = build_integral(IntegralKind::Ii, i, 0, p);
      es_i &= DiffOp::commutator(hes, I).is_zero();
      sum += I;
      ints.push_back(I);
    }
    decomp &= (sum == hes);
    DiffOp cq = DiffOp::commutator(
        hqes, build_integral(IntegralKind::Ii, 1, 0, p));
    qes_i_nonzero &= !cq.is_zero();
    qes_i_order = std::max(qes_i_order, cq.order());
    DiffOp cp = DiffOp::commutator(
        hes, build_integral(IntegralKind::Ii, 1, 0, p, true));
    printed_nonzero &= !cp.is_zero();
    printed_order = std::max(printed_order, cp.order());
    indep &= operator_rank(ints) == count;
    auto Ls = build_L_chain(p);
    for (size_t i = 0; i < Ls.size(); ++i) {
      chain &= DiffOp::commutator(hqes, Ls[i]).is_zero();
      for (size_t j = i + 1; j < Ls.size(); ++j)
        chain &= DiffOp::commutator(Ls[i], Ls[j]).is_zero();
    }
  }
  std::string dr = "n=" + std::to_string(n) + "; " + log;
  std::vector<ConformanceItem> out;
  out.push_back(item("INT-COMM-ES-IJ", "[h^(ES), I_ij] = 0 for all i < j",
                     st_of(es_ij, true), es_ij ? "0" : "nonzero", "", dr));
  out.push_back(item("INT-COMM-ES-I", "[h^(ES), I_i] = 0 for all i",
                     st_of(es_i, true), es_i ? "0" : "nonzero", "", dr));
  out.push_back(item("INT-COMM-QES-IJ", "[h^(QES), I_ij] = 0 for all i < j",
                     st_of(qes_ij, true), qes_ij ? "0" : "nonzero", "", dr));
  out.push_back(item(
      "INT-NONCOMM-QES-I",
      "the operators I_i do not commute with h^(QES) when a != 0",
      st_of(qes_i_nonzero, true),
      qes_i_nonzero
          ? "0 (commutator nonzero of order " + std::to_string(qes_i_order) +
                " at every draw, as asserted)"
          : "commutator vanished at some draw",
      "", dr));
  out.push_back(item("INT-DECOMP",
                     "sum_{i<j} I_ij + sum_i I_i = h^(ES) exactly",
                     st_of(decomp, true), decomp ? "0" : "nonzero", "", dr));
  out.push_back(item(
      "INT-I-PRINTED",
      "the displayed I_i with first-order term (1/2)((1-x) + (2n+1)x_i) "
      "commutes with h^(ES)",
      st_of(printed_nonzero, false),
      "[h^(ES), I_i^(printed)] is nonzero of order " +
          std::to_string(printed_order) + " at every draw",
      "the first-order term (1/2)((1-x) - x_i) restores commutation and the "
      "decomposition identity",
      dr));
  out.push_back(item("INT-INDEP",
                     "the n(n+1)/2 integrals are linearly independent",
                     st_of(indep, true),
                     indep ? "0 (full coefficient-vector rank " +
                                 std::to_string(count) + ")"
                           : "rank deficient",
                     "", dr));
  out.push_back(item(
      "INT-L-CHAIN",
      "L_1..L_{n-1} commute pairwise and with h^(QES)", st_of(chain, true),
      chain ? "0" : "nonzero", "", dr));
  return out;
}

std::vector<ConformanceItem> check_quadratic_algebra_n3(Rng& rng, int draws) {
  const int n = 3;
  bool r_pair = true, r_third_neg = true, r_nonzero = true;
  bool raw_fails = true, renorm_const = true, corrected_zero = true;
  bool cas_printed_nonzero = true, cas_corrected_zero = true;
  int raw_order = -1, r_order = -1, cas_order = -1;
  std::string log;
  for (int d = 0; d < draws; ++d) {
    std::vector<Rational> g;
    for (int i = 0; i <= n; ++i) g.push_back(rng.rational(13));
    SphereParams p(n, g, rat(1, 2), 1);
    log += (d ? "; " : "") + std::string("gamma=") + rvec(g);
    auto a = [&](int i) { return p.a_i(i); };
    DiffOp I12 = build_integral(IntegralKind::Iij, 1, 2, p);
    DiffOp I13 = build_integral(IntegralKind::Iij, 1, 3, p);
    DiffOp I23 = build_integral(IntegralKind::Iij, 2, 3, p);
    DiffOp Rr = DiffOp::commutator(I12, I13);
    r_nonzero &= !Rr.is_zero();
    r_order = std::max(r_order, Rr.order());
    r_pair &= (Rr == DiffOp::commutator(I13, I23));
    r_third_neg &= (Rr == DiffOp::commutator(I12, I23).scale(-1));

    // Printed structure equations taken verbatim with L_ij = I_ij.
    auto printed_rhs = [&](const DiffOp& Lij, const DiffOp& Lik,
                           const DiffOp& Ljk, int ai, int aj, int sgn,
                           const Rational& scalar) {
      return (anti(Lij, Lik - Ljk) + Lik.scale(2 * (1 + 2 * a(aj))) -
              Ljk.scale(2 * (1 + 2 * a(ai))) + DiffOp::constant(n, scalar))
          .scale(4 * sgn);
    };
    {
      DiffOp raw_res = DiffOp::commutator(I12, Rr) -
                       printed_rhs(I12, I13, I23, 1, 2, 1, 2 * (a(1) - a(2)));
      raw_fails &= !raw_res.is_zero();
      raw_order = std::max(raw_order, raw_res.order());
    }

    // Normalized generators: L_ij = -4 I_ij - 2 + g_i + g_j + 2 g_i g_j.
    auto dconst = [&](int i, int j) -> Rational {
      return Rational(-2) + g[i - 1] + g[j - 1] + 2 * g[i - 1] * g[j - 1];
    };
    DiffOp L12 = I12.scale(-4) + DiffOp::constant(n, dconst(1, 2));
    DiffOp L13 = I13.scale(-4) + DiffOp::constant(n, dconst(1, 3));
    DiffOp L23 = I23.scale(-4) + DiffOp::constant(n, dconst(2, 3));
    DiffOp R = DiffOp::commutator(L12, L13);
    struct Eq {
      const DiffOp *ij, *ik, *jk;
      int ai, aj, sgn;
    };
    Eq eqs[3] = {{&L12, &L13, &L23, 1, 2, +1},
                 {&L13, &L12, &L23, 1, 3, -1},
                 {&L23, &L12, &L13, 2, 3, +1}};
    for (const Eq& e : eqs) {
      Rational da = a(e.ai) - a(e.aj);
      DiffOp pres = DiffOp::commutator(*e.ij, R) -
                    printed_rhs(*e.ij, *e.ik, *e.jk, e.ai, e.aj, e.sgn,
                                2 * da);
      renorm_const &= (pres == DiffOp::constant(n, -48 * Rational(e.sgn) * da));
      DiffOp cres = DiffOp::commutator(*e.ij, R) -
                    printed_rhs(*e.ij, *e.ik, *e.jk, e.ai, e.aj, e.sgn,
                                -10 * da);
      corrected_zero &= cres.is_zero();
    }

    // Casimir: printed vs corrected coefficients over a shared basis.
    DiffOp sym = DiffOp::compose(L12, DiffOp::compose(L13, L23)) +
                 DiffOp::compose(L12, DiffOp::compose(L23, L13)) +
                 DiffOp::compose(L13, DiffOp::compose(L12, L23)) +
                 DiffOp::compose(L13, DiffOp::compose(L23, L12)) +
                 DiffOp::compose(L23, DiffOp::compose(L12, L13)) +
                 DiffOp::compose(L23, DiffOp::compose(L13, L12));
    DiffOp antisum = anti(L12, L13) + anti(L12, L23) + anti(L13, L23);
    DiffOp sq12 = DiffOp::compose(L12, L12), sq13 = DiffOp::compose(L13, L13),
           sq23 = DiffOp::compose(L23, L23);
    DiffOp R2 = DiffOp::compose(R, R);
    DiffOp printed_cas =
        sym.scale(rat(8, 3)) - sq12.scale(4 * (3 + 4 * a(3))) -
        sq23.scale(4 * (3 + 4 * a(1))) - sq13.scale(4 * (3 + 4 * a(2))) +
        antisum.scale(rat(52, 3)) + L12.scale(rat(16, 3) * (1 + 11 * a(3))) +
        L23.scale(rat(16, 3) * (1 + 11 * a(1))) +
        L13.scale(rat(16, 3) * (1 + 11 * a(2))) +
        DiffOp::constant(
            n, 64 * a(1) * a(2) * a(3) +
                   48 * (a(1) * a(2) + a(2) * a(3) + a(3) * a(1)) +
                   rat(32, 3) * (a(1) + a(2) + a(3)));
    DiffOp pc_res = R2 - printed_cas;
    cas_printed_nonzero &= !pc_res.is_zero();
    cas_order = std::max(cas_order, pc_res.order());
    DiffOp corrected_cas =
        sym.scale(rat(-8, 3)) + antisum.scale(rat(4, 3)) -
        sq12.scale(4 * (3 - 4 * a(3))) - sq23.scale(4 * (3 - 4 * a(1))) -
        sq13.scale(4 * (3 - 4 * a(2))) +
        L12.scale(rat(16, 3) * (4 + 23 * a(3))) +
        L23.scale(rat(16, 3) * (4 + 23 * a(1))) +
        L13.scale(rat(16, 3) * (4 + 23 * a(2))) +
        DiffOp::constant(
            n, -64 * a(1) * a(2) * a(3) +
                   48 * (a(1) * a(2) + a(2) * a(3) + a(3) * a(1)) +
                   rat(512, 3) * (a(1) + a(2) + a(3)) + 112);
    cas_corrected_zero &= (R2 - corrected_cas).is_zero();
  }
  std::string dr = "n=3; " + log;
  std::vector<ConformanceItem> out;
  out.push_back(item(
      "ALG-N3-R",
      "single commutator R = [L12,L13] = [L13,L23] = [L12,L23]",
      st_of(r_pair && r_third_neg && r_nonzero, false),
      "[L12,L23] - R = -2R, nonzero of order " + std::to_string(r_order),
      "R = [L12,L13] = [L13,L23] = -[L12,L23]", dr));
  out.push_back(item(
      "ALG-N3-STRUCT",
      "structure equations [L_ij,R] = 4 e_ijk ({L_ij,L_ik-L_jk} + "
      "2(1+2a_j)L_ik - 2(1+2a_i)L_jk + 2(a_i-a_j))",
      st_of(raw_fails && renorm_const && corrected_zero, false),
      "verbatim with L_ij = I_ij: residual of order " +
          std::to_string(raw_order) +
          "; with L_ij = -4 I_ij - 2 + g_i + g_j + 2 g_i g_j only the "
          "constant -48 e_ijk (a_i - a_j) survives",
      "with L_ij = -4 I_ij - 2 + gamma_i + gamma_j + 2 gamma_i gamma_j and "
      "the scalar term -10(a_i - a_j) in place of +2(a_i - a_j), all three "
      "equations hold exactly",
      dr));
  out.push_back(item(
      "ALG-N3-CASIMIR",
      "Casimir R^2 = (8/3){L12,L13,L23} - 4(3+4a_3)L12^2 - ... + "
      "(32/3)(a_1+a_2+a_3)",
      st_of(cas_printed_nonzero && cas_corrected_zero, false),
      "R^2 minus the printed right side is nonzero of order " +
          std::to_string(cas_order) + " in the normalized basis",
      "R^2 = -(8/3){L12,L13,L23} + (4/3)({L12,L13}+{L12,L23}+{L13,L23}) - "
      "4(3-4a_3)L12^2 - 4(3-4a_1)L23^2 - 4(3-4a_2)L13^2 + "
      "(16/3)(4+23a_3)L12 + (16/3)(4+23a_1)L23 + (16/3)(4+23a_2)L13 - "
      "64a_1a_2a_3 + 48(a_1a_2+a_1a_3+a_2a_3) + (512/3)(a_1+a_2+a_3) + 112",
      dr));
  return out;
}

namespace {

std::vector<ConformanceItem> gauge_sphere_es(int n, Rng& rng) {
  MetricData m = sphere_metric(n);
  bool constant_res = true, e0_matches = true, zero_at_trivial = true;
  std::string log;
  for (int d = 0; d < 11; ++d) {
    std::vector<Rational> g(n + 1, 0);
    if (d > 0)
      for (int i = 0; i <= n; ++i) g[i] = rng.rational(13);
    SphereParams p(n, g, 0, 0);
    log += (d ? "; " : "") + std::string("gamma=") + rvec(g);
    DiffOp H = -gauge_conjugate(build_es_sphere(p), sphere_gauge_psi0(p),
                                GaugeDir::inv_similarity);
    RatFunc V0 = potentials(p, Chart::simplex, Which::ES);
    DiffOp res =
        H - (-m.laplace_beltrami + DiffOp::mult_by(V0.scale(rat(1, 4))));
    if (res.order() > 0) { constant_res = false; continue; }
    RatFunc c = res.coeff(std::vector<int>(n, 0));
    if (!res.is_zero() &&
        !(c.is_polynomial() && c.as_polynomial().is_constant())) {
      constant_res = false;
      continue;
    }
    Rational e0 = -4 * c.num().constant_term();
    e0_matches &= (e0 == p.G() * p.G() + Rational(n - 1) * p.G());
    if (d == 0) zero_at_trivial = (e0 == 0);
  }
  std::string dr = "n=" + std::to_string(n) + "; " + log;
  std::vector<ConformanceItem> out;
  out.push_back(item(
      "GAUGE-SPHERE-ES",
      "-Psi0 h^(ES) Psi0^(-1) = -Delta_g + (1/4)(V_0 - E_0) with constant "
      "E_0",
      st_of(constant_res && e0_matches, true),
      constant_res && e0_matches
          ? "0 (residual is the pure constant -E_0/4 at every draw, E_0 = "
            "G^2 + (n-1)G)"
          : "residual not a constant",
      "", dr));
  out.push_back(item(
      "EQ-HAM-E",
      "ground energy E_0 = G^2 + (n-1)G + 1 and spectrum E_k = "
      "k(k+G+(n-1)/2) + E_0",
      st_of(constant_res && e0_matches && zero_at_trivial, false),
      "printed E_0 minus measured E_0 = 1 at every draw; at gamma = 0 the "
      "measured ground energy is 0 while the printed formula gives 1",
      "E_0 = G^2 + (n-1)G; hence E_k = k(k+G+(n-1)/2) + G^2 + (n-1)G", dr));
  return out;
}

std::vector<ConformanceItem> gauge_sphere_qes(int n, Rng& rng) {
  MetricData m = sphere_metric(n);
  bool printed_first_order = true, corrected_schro = true, extra_matches = true;
  std::string log, residual_str;
  std::vector<std::string> nm = names("x", n);
  for (int d = 0; d < 5; ++d) {
    std::vector<Rational> g;
    for (int i = 0; i <= n; ++i) g.push_back(rng.rational(13));
    SphereParams p(n, g, rng.nonzero_rational(13), rng.integer(0, 3));
    log += (d ? "; " : "") + sphere_draw(p);
    DiffOp hq = build_qes_sphere(p);
    RatFunc V0 = potentials(p, Chart::simplex, Which::ES);
    DiffOp schro = -m.laplace_beltrami + DiffOp::mult_by(V0.scale(rat(1, 4)));
    // Stage 1: the displayed gauge Psi0 exp(-(a/2)x).
    DiffOp H1 = -gauge_conjugate(hq, sphere_gauge_psi0_qes(p),
                                 GaugeDir::inv_similarity);
    printed_first_order &= ((H1 - schro).order() == 1);
    // Stage 2: completed gauge Psi0 exp(-(a/2)x) (1-x)^(-a/2).
    MultiPoly x(n);
    for (int i = 0; i < n; ++i) x += MultiPoly::variable(n, i);
    MultiPoly onemx = MultiPoly::constant(n, 1) - x;
    GaugeFactor f = sphere_gauge_psi0_qes(p);
    f.powers.push_back({onemx, -p.a / 2});
    DiffOp H2 = -gauge_conjugate(hq, f, GaugeDir::inv_similarity);
    DiffOp res = H2 - schro;
    if (res.order() > 0) { corrected_schro = false; continue; }
    RatFunc c = res.coeff(std::vector<int>(n, 0));
    Rational e0 = p.G() * p.G() + Rational(n - 1) * p.G();
    RatFunc extra = c + RatFunc::constant(n, e0 / 4);
    Rational G = p.G(), a = p.a;
    RatFunc measured =
        RatFunc((-(x * x)).scale(a * a) +
                x.scale(a * (2 * G + Rational(n + 1) + 4 * Rational(p.k) - a)))
            .scale(rat(1, 4)) +
        RatFunc(x.scale(a * (a + 1 - 2 * g[n])), onemx).scale(rat(1, 4));
    extra_matches &= (extra == measured);
    if (d == 0) {
      MultiPoly printed =
          (x * x).scale(a * a) -
          x.scale(a * (a - 2 * G - Rational(n + 1) + 4 * Rational(p.k)));
      residual_str = (extra.scale(4) - RatFunc(printed)).str(nm);
    }
  }
  std::string dr = "n=" + std::to_string(n) + "; " + log;
  std::vector<ConformanceItem> out;
  out.push_back(item(
      "GAUGE-SPHERE-QES-FACTOR",
      "the gauge factor Psi0 exp(-(a/2)x) rotates h^(QES) to a Schrodinger "
      "operator",
      st_of(printed_first_order && corrected_schro, false),
      "first-order terms survive the displayed gauge at every draw",
      "the completing factor is (1-x)^(-a/2): with Psi0 exp(-(a/2)x) "
      "(1-x)^(-a/2) the conjugate is a Schrodinger operator",
      dr));
  out.push_back(item(
      "GAUGE-SPHERE-QES",
      "additional QES potential a^2 x^2 - a(a - 2G - n - 1 + 4k) x",
      st_of(corrected_schro && extra_matches, false),
      "4*(measured extra) - printed = " + residual_str,
      "V - V_0 = -a^2 x^2 + a(2G + n + 1 + 4k - a) x + "
      "a(a + 1 - 2 gamma_{n+1}) x/(1-x), carried with the overall 1/4 of "
      "H = -Delta_g + (1/4)(V - E_0)",
      dr));
  return out;
}

std::vector<ConformanceItem> gauge_euclid(int n, Rng& rng) {
  bool exact_after_shift = true, es_sign = true, first_order_bfree = true,
       sextic = true;
  std::string log, e0log;
  for (int d = 0; d < 5; ++d) {
    std::vector<Rational> gp;
    for (int i = 0; i < n; ++i) gp.push_back(rng.rational(13));
    EuclidParams ep(n, gp, rng.nonzero_rational(13), rng.nonzero_rational(13),
                    rng.integer(0, 3));
    log += (d ? "; " : "") + euclid_draw(ep);
    e0log += (d ? "," : "") + to_string(ep.E0());
    // The ES-level relation fixes the sign: psi0^(-1)(H^(ES)+E0)psi0 =
    // hhat^(ES) with the printed E0 = 2 omega (sum gamma'_j - n).
    es_sign &=
        (gauge_conjugate(build_euclid(ep, EuclidStage::H_ES) +
                             DiffOp::constant(n, ep.E0()),
                         euclid_gauge_psi0(ep), GaugeDir::similarity) ==
         build_euclid(ep, EuclidStage::h_hat_ES));
    DiffOp X = gauge_conjugate(
        gauge_conjugate(build_euclid(ep, EuclidStage::h_hat_QES),
                        euclid_gauge_psi0(ep), GaugeDir::inv_similarity),
        euclid_gauge_U(ep), GaugeDir::similarity);
    DiffOp HQ = build_euclid(ep, EuclidStage::H_QES);
    exact_after_shift &= (X == HQ + DiffOp::constant(n, ep.E0()));
    // b-proportional first-derivative terms are gone: the first-order part
    // coincides with that of H^(ES), which carries no b.
    DiffOp HES = build_euclid(ep, EuclidStage::H_ES);
    for (const auto& [al, c] : X.terms()) {
      int tot = 0;
      for (int e : al) tot += e;
      if (tot == 1) first_order_bfree &= (c == HES.coeff(al));
    }
    if (n == 1) {
      RatFunc z = X.coeff({0});
      RatFunc zy = z * RatFunc(MultiPoly::variable(1, 0));
      sextic &= zy.is_polynomial() &&
                zy.as_polynomial().coeff({4}) == ep.b * ep.b / 16;
    }
  }
  std::string dr = "n=" + std::to_string(n) + "; " + log;
  std::vector<ConformanceItem> out;
  out.push_back(item(
      "GAUGE-EUCLID",
      "ground energy E_0 = 2 omega (sum gamma'_j - n) is subtracted, and "
      "H^(QES) = U^(-1) psi0 hhat^(QES) psi0^(-1) U",
      st_of(exact_after_shift && es_sign, false),
      "U^(-1) psi0 hhat^(QES) psi0^(-1) U - H^(QES) = +E_0 exactly "
      "(printed E_0 values " + e0log + "); likewise psi0^(-1)(H^(ES) + "
      "E_0) psi0 = hhat^(ES), so the printed E_0 carries the wrong sign",
      "the ground energy is 2 omega (n - sum gamma'_j); with E_0 so defined "
      "both hhat^(ES) = psi0^(-1)(H^(ES) - E_0) psi0 and U^(-1) psi0 "
      "hhat^(QES) psi0^(-1) U = H^(QES) - E_0 hold exactly",
      dr));
  out.push_back(item(
      "GAUGE-EUCLID-FIRSTORDER",
      "conjugation by U = exp((b/16)(sum Y_j)^2) removes all b-proportional "
      "first-derivative terms",
      st_of(first_order_bfree, true), first_order_bfree ? "0" : "nonzero", "",
      dr));
  if (n == 1)
    out.push_back(item(
        "GAUGE-EUCLID-SEXTIC",
        "for n=1 the resulting potential carries the sextic term "
        "(b^2/16) y^6",
        st_of(sextic, true),
        sextic ? "0 (coefficient of Y^3 = y^6 equals b^2/16)" : "mismatch",
        "", dr));
  return out;
}

}  // namespace

std::vector<ConformanceItem> check_gauge(GaugeSpace space, int n, Rng& rng,
                                         long) {
  switch (space) {
    case GaugeSpace::sphere_ES: return gauge_sphere_es(n, rng);
    case GaugeSpace::sphere_QES: return gauge_sphere_qes(n, rng);
    default: return gauge_euclid(n, rng);
  }
}

std::vector<ConformanceItem> check_radial_splits(int n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("check_radial_splits requires n >= 2");
  bool sphere_block = true, sphere_dev = true, euclid_exact = true;
  std::string log, elog, sphere_residual;
  std::vector<std::string> snm = radial_names("z", "r", n);
  for (int d = 0; d < 2; ++d) {
    std::vector<Rational> g;
    for (int i = 0; i <= n; ++i) g.push_back(rng.rational(13));
    SphereParams p(n, g, rng.nonzero_rational(13), rng.integer(0, 3));
    log += (d ? "; " : "") + sphere_draw(p);
    DiffOp mech = radial_split_sphere(p);
    MultiPoly r = MultiPoly::variable(n, n - 1);
    std::vector<int> err(n, 0), er(n, 0);
    err[n - 1] = 2;
    er[n - 1] = 1;
    // (1/r) h^(ES)_{n-1} block shared by both forms.
    DiffOp hblk = build_es_sphere(
        SphereParams(n - 1, std::vector<Rational>(g.begin(), g.end() - 1)));
    DiffOp block(n);
    for (const auto& [al, c] : hblk.terms()) {
      std::vector<int> full = al;
      full.push_back(0);
      block += DiffOp::term(c.extended(n) / RatFunc(r), full);
    }
    Rational Gn = p.G_j(n);
    DiffOp mech_radial =
        DiffOp::term(RatFunc(r - r * r), err) +
        DiffOp::term(RatFunc(MultiPoly::constant(n, Gn + rat(n, 2)) -
                             r.scale(p.G() + rat(n + 1, 2)) +
                             (r * r).scale(p.a)),
                     er) +
        DiffOp::mult_by(r.scale(-p.a * Rational(p.k)));
    sphere_block &= (mech == mech_radial + block);
    DiffOp printed_radial =
        DiffOp::term(RatFunc(r * r - r), err) +
        DiffOp::term(RatFunc(-(MultiPoly::constant(n, Gn + rat(n, 2)) +
                               r.scale(rat(n + 1, 2) - p.G()) +
                               (r * r).scale(p.a))),
                     er) +
        DiffOp::mult_by(r.scale(p.a * Rational(p.k)));
    DiffOp diff = printed_radial - mech_radial;
    sphere_dev &= !diff.is_zero();
    if (d == 0) sphere_residual = diff.str(snm);

    // Euclidean side: the printed radial part is exact; only the sign of the
    // embedded block's identification deviates.
    std::vector<Rational> gpv;
    for (int i = 0; i < n; ++i) gpv.push_back(rng.rational(13));
    EuclidParams ep(n, gpv, rng.rational(13), rng.nonzero_rational(13),
                    rng.integer(0, 3));
    elog += (d ? "; " : "") + euclid_draw(ep);
    DiffOp esplit = radial_split_euclid(ep);
    MultiPoly R = MultiPoly::variable(n, n - 1);
    std::vector<Rational> gmap;
    for (int i = 0; i < n; ++i) gmap.push_back(rat(1, 2) - ep.gamma_p[i]);
    DiffOp hblk_e = build_es_sphere(SphereParams(n - 1, gmap));
    DiffOp block_e(n);
    for (const auto& [al, c] : hblk_e.terms()) {
      std::vector<int> full = al;
      full.push_back(0);
      block_e += DiffOp::term(c.extended(n).scale(-4) / RatFunc(R), full);
    }
    DiffOp e_radial =
        DiffOp::term(RatFunc(R.scale(-4)), err) +
        DiffOp::term(
            RatFunc((R * R).scale(ep.b) + R.scale(4 * ep.omega) +
                    MultiPoly::constant(n, 4 * (ep.sum_gamma_p() -
                                                Rational(n)))),
            er) +
        DiffOp::mult_by(R.scale(-ep.b * Rational(ep.k)));
    euclid_exact &= (esplit == e_radial + block_e);
  }
  std::vector<ConformanceItem> out;
  out.push_back(item(
      "RADIAL-SPHERE",
      "h^(QES) = r(r-1) d_rr - (G_n + n/2 + r((n+1)/2 - G) + a r^2) d_r + "
      "a k r + (1/r) h^(ES)_{n-1}",
      st_of(sphere_block && sphere_dev, false),
      "printed minus mechanical radial part = " + sphere_residual,
      "mechanical split: r(1-r) d_rr + (G_n + n/2 - (G + (n+1)/2) r + "
      "a r^2) d_r - a k r + (1/r) h^(ES)_{n-1}",
      "n=" + std::to_string(n) + "; " + log));
  out.push_back(item(
      "RADIAL-SPHERE-BLOCK",
      "the (1/r) block is h^(ES) on S^(n-1) in the z coordinates",
      st_of(sphere_block, true), sphere_block ? "0" : "nonzero",
      "", "n=" + std::to_string(n) + "; " + log));
  out.push_back(item(
      "RADIAL-EUCLID",
      "hhat^(QES)(R) = -4R d_RR + (bR^2 + 4 omega R + 4 sum gamma'_j - 4n) "
      "d_R - b k R + (4/R) hhat^(ES)_{S^(n-1)}",
      st_of(euclid_exact, true),
      euclid_exact ? "0 (with the 4/R block read as -(4/R) h^(ES)_{n-1})"
                   : "nonzero",
      "", "n=" + std::to_string(n) + "; " + elog));
  out.push_back(item(
      "RADIAL-EUCLID-BLOCK",
      "with gamma'_j = -gamma_j + 1/2 the block is identical to the exactly "
      "solvable sphere Hamiltonian",
      st_of(euclid_exact, false),
      "(printed - mechanical) block = (8/R) h^(ES)_{S^(n-1)}(gamma = 1/2 - "
      "gamma'); the identification holds only up to overall sign",
      "the 4/R block equals -(4/R) h^(ES)_{S^(n-1)} with gamma_j = 1/2 - "
      "gamma'_j",
      "n=" + std::to_string(n) + "; " + elog));
  return out;
}

namespace {

int basis_degree(const std::vector<int>& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

// 4 eta * matrix of the sphere QES operator under x = eta Y (eta = eps^2),
// with gamma_j = 1/2 - gamma'_j, gamma_{n+1} = omega/eta and
// a = -b/eta^2 (printed) or a = -b/(4 eta^2) (corrected).
QMatrix contracted_matrix(const EuclidParams& ep, const Rational& eta,
                          bool printed_a) {
  int n = ep.n;
  std::vector<Rational> g;
  for (int j = 0; j < n; ++j) g.push_back(rat(1, 2) - ep.gamma_p[j]);
  g.push_back(ep.omega / eta);
  Rational a = -ep.b / (eta * eta);
  if (!printed_a) a /= 4;
  SphereParams sp(n, g, a, ep.k);
  OperatorMatrix M = matrix_rep(build_qes_sphere(sp), n, ep.k);
  QMatrix out = M.mat;
  for (int c = 0; c < out.cols(); ++c)
    for (int r = 0; r < out.rows(); ++r)
      out.at(r, c) =
          out.at(r, c) * Rational(4) * eta *
          pow_rat(eta, basis_degree(M.basis.exps[r]) -
                           basis_degree(M.basis.exps[c]));
  return out;
}

}  // namespace

std::vector<ContractionProbe> contraction_probes(
    const EuclidParams& p, const std::vector<Rational>& eps_list) {
  QMatrix ME =
      matrix_rep(build_euclid(p, EuclidStage::h_hat_QES), p.n, p.k).mat;
  std::vector<ContractionProbe> out;
  for (const Rational& eps : eps_list) {
    if (eps <= 0) throw std::domain_error("epsilon must be positive");
    Rational eta = eps * eps;
    out.push_back({eps, max_abs(contracted_matrix(p, eta, true) - ME),
                   max_abs(contracted_matrix(p, eta, false) + ME)});
  }
  return out;
}

std::vector<ConformanceItem> check_contraction(int n, long k, Rng& rng,
                                               std::vector<Rational> eps_list) {
  if (eps_list.empty())
    eps_list = {rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 16)};
  std::vector<Rational> gp;
  for (int i = 0; i < n; ++i) gp.push_back(rng.rational(13));
  EuclidParams ep(n, gp, rng.nonzero_rational(13), rng.nonzero_rational(13),
                  k);
  QMatrix ME =
      matrix_rep(build_euclid(ep, EuclidStage::h_hat_QES), n, k).mat;
  std::vector<ContractionProbe> probes;
  bool printed_never_shrinks = true;
  std::vector<std::set<std::pair<int, int>>> equal_sets;
  for (const Rational& eps : eps_list) {
    if (eps <= 0) throw std::domain_error("epsilon must be positive");
    Rational eta = eps * eps;
    QMatrix MSp = contracted_matrix(ep, eta, true);
    QMatrix MSc = contracted_matrix(ep, eta, false);
    probes.push_back({eps, max_abs(MSp - ME), max_abs(MSc + ME)});
    std::set<std::pair<int, int>> eq;
    for (int r = 0; r < ME.rows(); ++r)
      for (int c = 0; c < ME.cols(); ++c)
        if (MSc.at(r, c) == -ME.at(r, c)) eq.emplace(r, c);
    equal_sets.push_back(eq);
  }
  for (size_t i = 0; i + 1 < probes.size(); ++i)
    if (probes[i + 1].diff_printed < probes[i].diff_printed)
      printed_never_shrinks = false;
  // Order test (for halving lists): norm ratio per halving must sit in the
  // window [2^1.7, 2^2.3].
  bool order_ok = true, equal_stable = true;
  std::string order_log;
  for (size_t i = 0; i + 1 < probes.size(); ++i) {
    equal_stable &= (equal_sets[i] == equal_sets[i + 1]);
    if (probes[i].eps != 2 * probes[i + 1].eps) continue;
    if (probes[i + 1].diff_corrected == 0) continue;
    Rational ratio = probes[i].diff_corrected / probes[i + 1].diff_corrected;
    order_ok &= (ratio >= rat(3249, 1000) && ratio <= rat(4925, 1000));
    order_log += (order_log.empty() ? "" : ",") + to_string(ratio);
  }
  // Exact Laurent expansion in eta = eps^2: the entries of
  // F(eta) = 4 eta M~(eta) are Laurent polynomials with exponents in
  // [-(k+1), k+1]; interpolate exactly and check the order-0 term.
  int m = 2 * static_cast<int>(k) + 3;
  QMatrix V(m, m);
  std::vector<Rational> etas;
  for (int t = 0; t < m; ++t) {
    etas.push_back(rat(1, t + 2));
    for (int d = 0; d < m; ++d) V.at(t, d) = pow_rat(etas[t], d);
  }
  int dim = ME.rows();
  QMatrix B(m, dim * dim);
  for (int t = 0; t < m; ++t) {
    QMatrix F = contracted_matrix(ep, etas[t], false);
    Rational sh = pow_rat(etas[t], static_cast<int>(k) + 1);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) B.at(t, r * dim + c) = F.at(r, c) * sh;
  }
  auto C = V.solve(B);
  bool laurent_ok = C.has_value();
  if (laurent_ok)
    for (int r = 0; r < dim && laurent_ok; ++r)
      for (int c = 0; c < dim && laurent_ok; ++c) {
        for (int d = 0; d < static_cast<int>(k) + 1; ++d)
          laurent_ok &= (C->at(d, r * dim + c) == 0);  // no negative powers
        laurent_ok &=
            (C->at(static_cast<int>(k) + 1, r * dim + c) == -ME.at(r, c));
      }
  std::string norms;
  for (const auto& pr : probes)
    norms += (norms.empty() ? "" : "; ") + std::string("eps=") +
             to_string(pr.eps) + ": printed-map |4e^2 M_S - M_E|=" +
             to_string(pr.diff_printed) + ", corrected-map |4e^2 M_S + M_E|=" +
             to_string(pr.diff_corrected);
  std::string dr = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   "; " + euclid_draw(ep) + "; " + norms;
  std::vector<ConformanceItem> out;
  out.push_back(item(
      "CONTRACT-MAP",
      "contraction map gamma'_j = -gamma_j + 1/2, gamma'_{n+1} = "
      "omega/eps^2, a = -b/eps^4 with hhat^(QES) = lim 4 eps^2 h^(QES)",
      st_of(printed_never_shrinks, false),
      "under a = -b/eps^4 the entrywise differences do not shrink as eps is "
      "halved (see draw log)",
      "a = -b/(4 eps^4); then lim_{eps->0} 4 eps^2 h^(QES)_{S^n} = "
      "-hhat^(QES)_{E^n} entrywise on P_k, at order eps^2",
      dr));
  out.push_back(item(
      "CONTRACT-ORDER",
      "corrected-map convergence: order 2 per halving, stable exact entries, "
      "and the order-0 term of the exact eta-expansion equals the limit "
      "matrix",
      st_of(order_ok && equal_stable && laurent_ok, true),
      order_ok && equal_stable && laurent_ok
          ? "0 (norm ratios per halving: " + order_log +
                "; negative Laurent coefficients vanish; order-0 term = "
                "-M_E exactly)"
          : "convergence checks failed",
      "", dr));
  return out;
}

std::vector<ConformanceItem> check_closed_forms(int n, long k, Rng& rng,
                                                int precision_bits) {
  struct FormState {
    bool true_ok = true, flip_ok = true;
    int seen = 0;
  };
  std::map<std::string, FormState> forms;
  std::vector<std::string> order;  // first-seen catalog order
  bool es_limit_ok = true;
  std::string log;
  SphereParams p0(n, std::vector<Rational>(n + 1, 0), 0, k);
  const int draws = 3;
  for (int d = 0; d < draws; ++d) {
    std::vector<Rational> g;
    for (int i = 0; i <= n; ++i) g.push_back(rng.rational(9));
    SphereParams p(n, g, rng.nonzero_rational(9), k);
    if (d == 0) p0 = p;
    log += (d ? "; " : "") + sphere_draw(p);
    UPoly ct = matrix_rep(build_qes_sphere(p), n, k).mat.charpoly();
    UPoly cf =
        matrix_rep(build_qes_sphere_flipped_slope(p), n, k).mat.charpoly();
    for (const ClosedForm& f : closed_form_catalog(p)) {
      auto [it, fresh] = forms.emplace(f.id, FormState{});
      if (fresh) order.push_back(f.id);
      UPoly pw = f.poly.monic().pow(f.multiplicity);
      it->second.true_ok &= divides(pw, ct);
      it->second.flip_ok &= divides(pw, cf);
      ++it->second.seen;
    }
    // ES limit: at a=0 the charpoly factors over the closed ES spectrum.
    SphereParams pz(n, g, 0, k);
    UPoly cz = matrix_rep(build_qes_sphere(pz), n, k).mat.charpoly();
    UPoly prod = UPoly::constant(1);
    for (const auto& [eps, mult] : es_closed_spectrum(n, k, pz.G()))
      prod = prod * (UPoly::x() - UPoly::constant(eps)).pow(mult);
    es_limit_ok &= (cz == prod);
  }
  // Corrected factors for deviating forms, read off the separation chains of
  // the unflipped operator at the first draw.
  std::map<std::string, std::string> corrected;
  bool any_dev = false;
  for (const auto& [id, fs] : forms)
    any_dev |= (!fs.true_ok && fs.flip_ok);
  if (any_dev && n >= 2) {
    JointDecomposition jt = joint_eigenbasis(p0, precision_bits);
    Basis basis = Basis::build(n, k);
    std::vector<QMatrix> Lm;
    for (const DiffOp& L : build_L_chain(p0))
      Lm.push_back(matrix_rep(L, n, k).mat);
    QMatrix hf = matrix_rep(build_qes_sphere_flipped_slope(p0), n, k).mat;
    JointDecomposition jf = joint_eigenbasis(Lm, hf, basis, precision_bits);
    for (const ClosedForm& f : closed_form_catalog(p0)) {
      const FormState& fs = forms[f.id];
      if (fs.true_ok || !fs.flip_ok) continue;
      UPoly pm = f.poly.monic();
      std::string s;
      for (const JointBlock& bf : jf.blocks) {
        if (bf.charpoly.monic() != pm) continue;
        for (const JointBlock& bt : jt.blocks)
          if (bt.c == bf.c)
            s += (s.empty() ? "" : "; ") + std::string("chain c=") +
                 rvec(bt.c) + ": " + bt.charpoly.monic().str("E");
      }
      corrected[f.id] =
          "matches the slope-flipped operator h^(QES) + (n+1) sum_i x_i d_i "
          "exactly; the unflipped operator's factors are " +
          (s.empty() ? std::string("(no chain match found)") : s);
    }
  }
  std::string dr = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   "; " + log;
  std::vector<ConformanceItem> out;
  for (const std::string& id : order) {
    const FormState& fs = forms[id];
    bool conclusive = fs.true_ok || fs.flip_ok;
    CheckStatus st = st_of(conclusive, fs.true_ok);
    std::string residual =
        fs.true_ok ? "0"
                   : "the printed factor does not divide the exact "
                     "characteristic polynomial of h^(QES) on P_k";
    std::string corr;
    if (!fs.true_ok && fs.flip_ok) {
      auto it = corrected.find(id);
      corr = it != corrected.end()
                 ? it->second
                 : "matches the slope-flipped operator h^(QES) + (n+1) "
                   "sum_i x_i d_i exactly";
    }
    out.push_back(item(id,
                       "closed-form energy family " + id +
                           " with multiplicity, as displayed",
                       st, residual, corr, dr));
  }
  out.push_back(item(
      "S34-ES-LIMIT",
      "at a=0 the P_k spectrum reduces to eps_j = -j(j+G+(n-1)/2) with "
      "multiplicity C(j+n-1, n-1)",
      st_of(es_limit_ok, true), es_limit_ok ? "0" : "mismatch", "", dr));
  {
    Integer printed = printed_dim_sum(n, k);
    Rational full = binomial(n + k, n);
    bool off_by_one = (Rational(printed) + 1 == full);
    out.push_back(item(
        "EQ-DIMPK",
        "dim P_k^(n) = sum_{j=1}^k (n)_j / j!",
        st_of(off_by_one, false),
        "C(n+k,n) - printed sum = 1 (the j=0 term is missing); printed sum "
        "= " + printed.get_str() + ", C(n+k,n) = " + to_string(full),
        "dim P_k^(n) = sum_{j=0}^k (n)_j / j! = C(n+k, n)",
        "n=" + std::to_string(n) + " k=" + std::to_string(k)));
  }
  return out;
}

std::vector<ConformanceItem> check_geometry(int n) {
  std::vector<ConformanceItem> out;
  {
    MetricData m = sphere_metric(n);
    MultiPoly prod = MultiPoly::constant(n, 1), x(n);
    for (int i = 0; i < n; ++i) {
      prod = prod * MultiPoly::variable(n, i);
      x += MultiPoly::variable(n, i);
    }
    prod = prod * (MultiPoly::constant(n, 1) - x);
    bool ok = (m.det_upper == RatFunc(prod));
    out.push_back(item("GEO-DET",
                       "det g^(ij) = x_1 x_2 ... x_n (1 - x)",
                       st_of(ok, true), ok ? "0" : "nonzero", "",
                       "n=" + std::to_string(n)));
  }
  for (int nc = 2; nc <= 3; ++nc) {
    RatFunc s = scalar_curvature(sphere_metric(nc));
    bool constant = true;
    for (int v = 0; v < nc; ++v) constant &= s.diff(v).is_zero();
    std::string val =
        constant && s.is_polynomial() && s.as_polynomial().is_constant()
            ? to_string(s.as_polynomial().constant_term())
            : std::string("?");
    out.push_back(item(
        "GEO-CURV-N" + std::to_string(nc),
        "the scalar curvature of the metric g^(ij) is constant",
        st_of(constant, true),
        constant ? "0 (gradient identically zero; value " + val + ")"
                 : "nonconstant",
        "", "n=" + std::to_string(nc)));
  }
  {
    MetricData m2 = invariant_metric(2);
    MultiPoly t1 = MultiPoly::variable(2, 0), t2 = MultiPoly::variable(2, 1);
    bool ok = m2.g_upper[0][0] == RatFunc(t1 - t1 * t1) &&
              m2.g_upper[1][1] == RatFunc(t1 * t2 - (t2 * t2).scale(4)) &&
              m2.g_upper[0][1] == RatFunc(t2.scale(2) - (t1 * t2).scale(2)) &&
              m2.g_upper[0][1] == m2.g_upper[1][0] &&
              m2.laplace_beltrami.coeff({1, 0}) ==
                  RatFunc(MultiPoly::constant(2, 1) - t1.scale(rat(3, 2))) &&
              m2.laplace_beltrami.coeff({0, 1}) ==
                  RatFunc(t1.scale(rat(1, 2)) - t2.scale(5)) &&
              scalar_curvature(m2) ==
                  RatFunc(MultiPoly::constant(2, rat(1, 2)));
    out.push_back(item(
        "APP-N2-METRIC",
        "invariant-coordinate metric and first-order terms for n=2 as "
        "displayed in the appendix",
        st_of(ok, true), ok ? "0" : "mismatch", "", "n=2"));
  }
  {
    MetricData m1 = invariant_metric(1);
    MultiPoly t = MultiPoly::variable(1, 0);
    bool g_ok = m1.g_upper[0][0] == RatFunc(t - t * t);
    RatFunc fo = m1.laplace_beltrami.coeff({1});
    bool mech = fo == RatFunc(MultiPoly::constant(1, rat(1, 2)) - t);
    bool printed = fo == RatFunc(MultiPoly::constant(1, rat(1, 2)) + t);
    out.push_back(item(
        "APP-N1-FIRSTORDER",
        "appendix n=1 operator: first-order coefficient (1/2 + tau)",
        st_of(g_ok && (mech || printed), printed),
        mech ? "mechanical minus printed first-order coefficient = -2 tau"
             : (printed ? "0" : "unexpected coefficient"),
        mech ? "the Laplace-Beltrami first-order term is (1/2 - tau) d_tau"
             : "",
        "n=1"));
  }
  return out;
}

bool VerifyReport::inconclusive() const {
  for (const auto& it : items)
    if (it.status == CheckStatus::inconclusive) return true;
  return false;
}

VerifyReport run_suite(const std::string& selector, int n, long k,
                       std::uint64_t seed, int precision_bits) {
  VerifyReport rep;
  rep.seed = seed;
  rep.suite = selector;
  Rng rng(seed);
  auto add = [&rep](std::vector<ConformanceItem> v) {
    for (auto& it : v) rep.items.push_back(std::move(it));
  };
  bool in_catalog = (n >= 1 && n <= 3 && k >= 0 && k <= 2);
  if (selector == "integrals") {
    add(check_integrals(n, rng));
  } else if (selector == "algebra") {
    add(check_quadratic_algebra_n3(rng));
  } else if (selector == "gauge") {
    add(check_gauge(GaugeSpace::sphere_ES, n, rng, k));
    add(check_gauge(GaugeSpace::sphere_QES, n, rng, k));
    add(check_gauge(GaugeSpace::euclid, n, rng, k));
  } else if (selector == "radial") {
    add(check_radial_splits(n, rng));
  } else if (selector == "contraction") {
    add(check_contraction(n, k, rng));
  } else if (selector == "closedforms") {
    add(check_closed_forms(n, k, rng, precision_bits));
  } else if (selector == "geometry") {
    add(check_geometry(n));
  } else if (selector == "all") {
    add(check_geometry(n));
    if (n >= 2) add(check_integrals(n, rng));
    add(check_quadratic_algebra_n3(rng));
    add(check_gauge(GaugeSpace::sphere_ES, n, rng, k));
    add(check_gauge(GaugeSpace::sphere_QES, n, rng, k));
    add(check_gauge(GaugeSpace::euclid, n, rng, k));
    if (n >= 2) add(check_radial_splits(n, rng));
    add(check_contraction(n, k, rng));
    if (in_catalog) add(check_closed_forms(n, k, rng, precision_bits));
  } else {
    throw std::invalid_argument("unknown verify suite: " + selector);
  }
  return rep;
}

std::string report_json(const VerifyReport& r) {
  Json out;
  out["seed"] = r.seed;
  out["suite"] = r.suite;
  Json arr = Json::array();
  for (const auto& it : r.items) {
    Json j;
    j["id"] = it.id;
    j["anchor"] = it.anchor;
    j["status"] = to_string(it.status);
    j["residual"] = it.residual;
    j["corrected"] = it.corrected;
    j["draws"] = it.draws;
    arr.push_back(j);
  }
  out["items"] = arr;
  return out.dump(2) + "\n";
}

}  // namespace qes
