#include "qes/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace qes {

std::vector<UPoly> sturm_sequence(const UPoly& f) {
  std::vector<UPoly> seq;
  seq.push_back(f);
  seq.push_back(f.derivative());
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    UPoly r = UPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

namespace {

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int variations_at(const std::vector<UPoly>& seq, const Rational& x) {
  int v = 0, prev = 0;
  for (const auto& p : seq) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int sturm_count(const std::vector<UPoly>& seq, const Rational& a,
                const Rational& b) {
  return variations_at(seq, a) - variations_at(seq, b);
}

Rational simplest_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_in(hi, lo);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_in(-hi, -lo);
  // 0 < lo <= hi; truncation is floor for positive rationals
  Integer fl = lo.get_num() / lo.get_den();
  Integer cl = fl;
  if (Rational(cl) < lo) cl += 1;  // ceil(lo)
  if (Rational(cl) <= hi) return Rational(cl);
  Rational frac_lo = lo - Rational(fl);
  Rational frac_hi = hi - Rational(fl);
  return Rational(fl) + Rational(1) / simplest_in(Rational(1) / frac_hi,
                                                  Rational(1) / frac_lo);
}

namespace {

Rational cauchy_bound(const UPoly& f) {
  Rational m = 0;
  const auto& c = f.coeffs();
  Rational lead = rat_abs(f.lead());
  for (int i = 0; i < f.degree(); ++i) {
    Rational v = rat_abs(c[i]) / lead;
    if (v > m) m = v;
  }
  return m + 1;
}

struct SqfreeRoots {
  std::vector<RealRoot> roots;
  int real_count = 0;
};

// All real roots of a squarefree polynomial.
SqfreeRoots squarefree_roots(UPoly f, int precision_bits) {
  SqfreeRoots out;
  // Exact roots found at probe points are divided out immediately.
  std::vector<Rational> exact;
  bool restart = true;
  std::vector<std::pair<Rational, Rational>> isolated;
  while (restart) {
    restart = false;
    isolated.clear();
    if (f.degree() <= 0) break;
    if (f.degree() == 1) {
      exact.push_back(-f.coeff(0) / f.coeff(1));
      f = UPoly::constant(f.lead());
      break;
    }
    auto seq = sturm_sequence(f);
    Rational B = cauchy_bound(f);
    std::vector<std::tuple<Rational, Rational, int>> stack;
    int total = sturm_count(seq, -B, B);
    stack.emplace_back(-B, B, total);
    while (!stack.empty()) {
      auto [a, b, cnt] = stack.back();
      stack.pop_back();
      if (cnt == 0) continue;
      if (cnt == 1) {
        isolated.emplace_back(a, b);
        continue;
      }
      Rational mid = (a + b) / 2;
      if (f.eval(mid) == 0) {
        exact.push_back(mid);
        f = UPoly::divmod(f, UPoly({-mid, Rational(1)})).first;
        restart = true;
        break;
      }
      int cl = sturm_count(seq, a, mid);
      stack.emplace_back(a, mid, cl);
      stack.emplace_back(mid, b, cnt - cl);
    }
  }

  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), precision_bits);
  Rational eps(Integer(1), den);
  for (auto& [a, b] : isolated) {
    // Root lies in (a, b]; check the closed endpoint first.
    if (f.eval(b) == 0) {
      exact.push_back(b);
      continue;
    }
    int sa = sign_of(f.eval(a));
    bool found_exact = false;
    while (b - a > eps) {
      Rational mid = (a + b) / 2;
      int sm = sign_of(f.eval(mid));
      if (sm == 0) {
        exact.push_back(mid);
        found_exact = true;
        break;
      }
      if (sm == sa)
        a = mid;
      else
        b = mid;
    }
    if (found_exact) continue;
    Rational cand = simplest_in(a, b);
    if (f.eval(cand) == 0) {
      exact.push_back(cand);
      continue;
    }
    RealRoot r;
    r.is_rational = false;
    r.lo = a;
    r.hi = b;
    r.value = (a + b) / 2;
    out.roots.push_back(std::move(r));
  }
  for (const auto& v : exact) {
    RealRoot r;
    r.is_rational = true;
    r.value = r.lo = r.hi = v;
    out.roots.push_back(std::move(r));
  }
  out.real_count = static_cast<int>(out.roots.size());
  return out;
}

}  // namespace

RootSet real_roots(const UPoly& p, int precision_bits) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  RootSet out;
  auto factors = UPoly::squarefree_decomposition(p);
  for (std::size_t m = 1; m < factors.size(); ++m) {
    const UPoly& f = factors[m];
    if (f.degree() <= 0) continue;
    SqfreeRoots fr = squarefree_roots(f, precision_bits);
    out.complex_pairs += static_cast<int>(m) * (f.degree() - fr.real_count) / 2;
    for (auto& r : fr.roots) {
      r.multiplicity = static_cast<int>(m);
      out.roots.push_back(std::move(r));
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p) {
  RootSet rs = real_roots(p);
  std::vector<std::pair<Rational, int>> out;
  for (const auto& r : rs.roots) {
    if (!r.is_rational)
      throw std::domain_error("irrational real root encountered");
    out.emplace_back(r.value, r.multiplicity);
  }
  return out;
}

}  // namespace qes
