#include "qes/multipoly.hpp"

#include <sstream>

namespace qes {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::out_of_range("variable index");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[var] = 1;
  p.terms_[e] = 1;
  return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("exponent vector length");
  MultiPoly p(nvars);
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         terms_.begin()->first == Exponents(nvars_, 0);
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.rbegin()->first;
  int d = 0;
  for (int x : e) d += x;
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return terms_.empty() ? -1 : d;
}

void MultiPoly::set_coeff(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent vector length");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("variable-count mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        Rational c = ca * cb;
        if (c != 0) r.terms_.emplace(std::move(e), std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MultiPoly MultiPoly::scale(const Rational& c) const {
  MultiPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p.scale(c); }

MultiPoly MultiPoly::diff(int var) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("variable index");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.terms_[d] = c * e[var];
  }
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  MultiPoly r = constant(nvars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("variable-count mismatch in substitute");
  int out_n = images.empty() ? nvars_ : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != out_n)
      throw std::invalid_argument("inconsistent image variable counts");
  MultiPoly r(out_n);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(out_n, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    r += term;
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("point dimension");
  Rational r = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int j = 0; j < e[i]; ++j) t *= point[i];
    r += t;
  }
  return r;
}

const MultiPoly::Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& num,
                                                 const MultiPoly& den) {
  num.check_compatible(den);
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  int n = num.nvars_;
  MultiPoly rem = num, quot(n);
  const Exponents& dl = den.leading_exponents();
  const Rational& dc = den.leading_coeff();
  while (!rem.is_zero()) {
    const Exponents& rl = rem.leading_exponents();
    Exponents q(n);
    for (int i = 0; i < n; ++i) {
      q[i] = rl[i] - dl[i];
      if (q[i] < 0) return std::nullopt;
    }
    Rational qc = rem.leading_coeff() / dc;
    MultiPoly qm = monomial(n, q, qc);
    quot += qm;
    rem -= qm * den;
  }
  return quot;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer gnum = 0, lden = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational g(gnum, lden);
  g.canonicalize();
  if (leading_coeff() < 0) g = -g;
  return g;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  return scale(Rational(1) / content());
}

MultiPoly MultiPoly::extended(int new_nvars) const {
  if (new_nvars < nvars_) throw std::invalid_argument("extended shrinks ring");
  MultiPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne.resize(new_nvars, 0);
    r.terms_[ne] = c;
  }
  return r;
}

MultiPoly MultiPoly::restricted(int new_nvars) const {
  MultiPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    for (int i = new_nvars; i < nvars_; ++i)
      if (e[i] != 0)
        throw std::invalid_argument("restricted: variable in use");
    Exponents ne(e.begin(), e.begin() + new_nvars);
    r.terms_[ne] = c;
  }
  return r;
}

namespace {

// Univariate gcd over Q (monic result), on dense coefficient vectors.
std::vector<Rational> dense_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size()) {
      Rational f = a.back() / b.back();
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      trim(a);
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
    trim(b);
  }
  trim(a);
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// View an n-variable polynomial as univariate in its last variable with
// (n-1)-variable coefficients.
std::vector<MultiPoly> coeffs_in_last(const MultiPoly& p) {
  int n = p.nvars();
  int d = p.degree_in(n - 1);
  std::vector<MultiPoly> out(std::max(d + 1, 0), MultiPoly(n - 1));
  for (const auto& [e, c] : p.terms()) {
    MultiPoly::Exponents low(e.begin(), e.end() - 1);
    MultiPoly m = MultiPoly::monomial(n - 1, low, c);
    out[e.back()] += m;
  }
  return out;
}

MultiPoly from_coeffs_in_last(int n, const std::vector<MultiPoly>& cs) {
  MultiPoly r(n);
  for (std::size_t d = 0; d < cs.size(); ++d) {
    for (const auto& [e, c] : cs[d].terms()) {
      MultiPoly::Exponents full = e;
      full.push_back(static_cast<int>(d));
      r.set_coeff(full, c);
    }
  }
  return r;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

// gcd of a list of coefficients (content w.r.t. the last variable).
MultiPoly list_gcd(const std::vector<MultiPoly>& cs) {
  MultiPoly g(cs.empty() ? 0 : cs[0].nvars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  int n = a.nvars();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant())
    return MultiPoly::constant(n, 1);
  if (n == 1) {
    int da = a.degree_in(0), db = b.degree_in(0);
    std::vector<Rational> ca(da + 1, Rational(0)), cb(db + 1, Rational(0));
    for (const auto& [e, c] : a.terms()) ca[e[0]] = c;
    for (const auto& [e, c] : b.terms()) cb[e[0]] = c;
    auto g = dense_gcd(ca, cb);
    MultiPoly r(1);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0) r.set_coeff({static_cast<int>(i)}, g[i]);
    return r;
  }
  // Primitive Euclidean algorithm in the last variable.
  auto ca = coeffs_in_last(a), cb = coeffs_in_last(b);
  MultiPoly cont_a = list_gcd(ca), cont_b = list_gcd(cb);
  MultiPoly cont_g = gcd_impl(cont_a, cont_b);

  auto divide_out = [&](std::vector<MultiPoly>& cs, const MultiPoly& d) {
    for (auto& c : cs) {
      if (c.is_zero()) continue;
      auto q = MultiPoly::divide_exact(c, d);
      c = *q;  // content divides by construction
    }
  };
  divide_out(ca, cont_a);
  divide_out(cb, cont_b);

  auto deg = [](const std::vector<MultiPoly>& cs) {
    return static_cast<int>(cs.size()) - 1;
  };
  auto trim = [](std::vector<MultiPoly>& cs) {
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
  };
  auto make_primitive = [&](std::vector<MultiPoly>& cs) {
    trim(cs);
    if (cs.empty()) return;
    MultiPoly g = list_gcd(cs);
    if (!g.is_constant()) divide_out(cs, g);
    // also strip the rational content for compactness
    MultiPoly whole = from_coeffs_in_last(n, cs);
    Rational rc = whole.content();
    if (rc != 1)
      for (auto& c : cs) c = c.scale(Rational(1) / rc);
  };

  std::vector<MultiPoly> A = ca, B = cb;
  trim(A);
  trim(B);
  if (deg(A) < deg(B)) std::swap(A, B);
  while (!B.empty()) {
    // pseudo-remainder of A by B in the last variable
    int dA = deg(A), dB = deg(B);
    std::vector<MultiPoly> R = A;
    const MultiPoly& lcB = B[dB];
    for (int d = dA; d >= dB; --d) {
      trim(R);
      if (deg(R) < d) continue;
      MultiPoly lead = R[d];
      // R := lcB * R - lead * x^(d-dB) * B
      for (auto& c : R) c = c * lcB;
      for (int i = 0; i <= dB; ++i) R[d - dB + i] -= lead * B[i];
    }
    trim(R);
    make_primitive(R);
    A = std::move(B);
    B = std::move(R);
  }
  MultiPoly pp = from_coeffs_in_last(n, A);
  return cont_g.extended(0 + n) * pp;
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly g = gcd_impl(a, b);
  if (g.is_zero()) return g;
  Rational c = g.content();
  return g.scale(Rational(1) / c);
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << " * ";
      if (static_cast<int>(names.size()) > i)
        os << names[i];
      else
        os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace qes
