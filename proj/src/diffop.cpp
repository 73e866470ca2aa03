#include "qes/diffop.hpp"

#include <sstream>
#include <stdexcept>

namespace qes {

namespace {

// Componentwise binomial prod C(alpha_i, mu_i).
Rational multi_binomial(const std::vector<int>& alpha,
                        const std::vector<int>& mu) {
  Rational c = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) c *= binomial(alpha[i], mu[i]);
  return c;
}

RatFunc diff_multi(RatFunc f, const std::vector<int>& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int j = 0; j < e[i]; ++j) f = f.diff(static_cast<int>(i));
  return f;
}

MultiPoly diff_multi(MultiPoly p, const std::vector<int>& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int j = 0; j < e[i]; ++j) p = p.diff(static_cast<int>(i));
  return p;
}

}  // namespace

DiffOp DiffOp::term(const RatFunc& c, const MultiIndex& alpha) {
  DiffOp op(c.nvars());
  if (static_cast<int>(alpha.size()) != c.nvars())
    throw std::invalid_argument("multi-index length");
  if (!c.is_zero()) op.terms_[alpha] = c;
  return op;
}

DiffOp DiffOp::mult_by(const RatFunc& f) {
  return term(f, MultiIndex(f.nvars(), 0));
}

DiffOp DiffOp::mult_by(const MultiPoly& p) { return mult_by(RatFunc(p)); }

DiffOp DiffOp::partial(int nvars, int var) {
  MultiIndex a(nvars, 0);
  a[var] = 1;
  return term(RatFunc(MultiPoly::constant(nvars, 1)), a);
}

DiffOp DiffOp::constant(int nvars, const Rational& c) {
  return mult_by(RatFunc(MultiPoly::constant(nvars, c)));
}

int DiffOp::order() const {
  int o = -1;
  for (const auto& [a, c] : terms_) {
    int s = 0;
    for (int e : a) s += e;
    o = std::max(o, s);
  }
  return o;
}

RatFunc DiffOp::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? RatFunc(MultiPoly(nvars_)) : it->second;
}

void DiffOp::set_coeff(const MultiIndex& alpha, const RatFunc& c) {
  if (static_cast<int>(alpha.size()) != nvars_)
    throw std::invalid_argument("multi-index length");
  if (c.is_zero())
    terms_.erase(alpha);
  else
    terms_[alpha] = c;
}

bool DiffOp::has_polynomial_coeffs() const {
  for (const auto& [a, c] : terms_)
    if (!c.is_polynomial()) return false;
  return true;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  DiffOp r = *this;
  r += o;
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
  for (const auto& [a, c] : o.terms_) {
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      terms_.emplace(a, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
  DiffOp r = *this;
  r -= o;
  return r;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
  for (const auto& [a, c] : o.terms_) {
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      terms_.emplace(a, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp r(nvars_);
  for (const auto& [a, c] : terms_) r.terms_[a] = -c;
  return r;
}

DiffOp DiffOp::scale(const Rational& c) const {
  DiffOp r(nvars_);
  if (c == 0) return r;
  for (const auto& [a, v] : terms_) r.terms_[a] = v.scale(c);
  return r;
}

DiffOp DiffOp::scale(const RatFunc& c) const {
  DiffOp r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [a, v] : terms_) r.terms_[a] = v * c;
  return r;
}

DiffOp DiffOp::compose(const DiffOp& A, const DiffOp& B) {
  if (A.nvars_ != B.nvars_)
    throw std::invalid_argument("variable-count mismatch");
  int n = A.nvars_;
  DiffOp r(n);
  for (const auto& [alpha, a] : A.terms_) {
    for (const auto& [beta, b] : B.terms_) {
      // d^alpha (b d^beta) = sum_{mu<=alpha} C(alpha,mu) (d^{alpha-mu} b) d^{mu+beta}
      MultiIndex mu(n, 0);
      for (;;) {
        MultiIndex amu(n), out(n);
        for (int i = 0; i < n; ++i) {
          amu[i] = alpha[i] - mu[i];
          out[i] = mu[i] + beta[i];
        }
        RatFunc db = diff_multi(b, amu);
        if (!db.is_zero()) {
          RatFunc c = a * db;
          Rational bin = multi_binomial(alpha, mu);
          if (bin != 1) c = c.scale(bin);
          auto it = r.terms_.find(out);
          if (it == r.terms_.end()) {
            if (!c.is_zero()) r.terms_.emplace(std::move(out), std::move(c));
          } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
          }
        }
        // odometer over mu <= alpha
        int i = 0;
        while (i < n) {
          if (mu[i] < alpha[i]) {
            ++mu[i];
            break;
          }
          mu[i] = 0;
          ++i;
        }
        if (i == n) break;
      }
    }
  }
  return r;
}

DiffOp DiffOp::commutator(const DiffOp& A, const DiffOp& B) {
  return compose(A, B) - compose(B, A);
}

RatFunc DiffOp::apply(const MultiPoly& p) const {
  if (p.nvars() != nvars_) throw std::invalid_argument("variable-count mismatch");
  RatFunc r{MultiPoly(nvars_)};
  for (const auto& [a, c] : terms_) {
    MultiPoly dp = diff_multi(p, a);
    if (dp.is_zero()) continue;
    r += c * RatFunc(dp);
  }
  return r;
}

MultiPoly DiffOp::apply_poly(const MultiPoly& p) const {
  RatFunc r = apply(p);
  return r.as_polynomial();
}

std::string DiffOp::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << "  +  ";
    first = false;
    os << "(" << c.str(names) << ")";
    for (int i = 0; i < nvars_; ++i) {
      if (a[i] == 0) continue;
      os << " D" << (i + 1);
      if (a[i] > 1) os << "^" << a[i];
    }
  }
  return os.str();
}

DiffOp gl_generator(GlKind kind, int n, int i, int j, long k) {
  auto x = [&](int v) { return MultiPoly::variable(n, v); };
  switch (kind) {
    case GlKind::lower:
      if (i < 0 || i >= n) throw std::out_of_range("generator index");
      return DiffOp::partial(n, i);
    case GlKind::diag: {
      if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::out_of_range("generator index");
      return DiffOp::compose(DiffOp::mult_by(x(i)), DiffOp::partial(n, j));
    }
    case GlKind::euler: {
      DiffOp e(n);
      for (int v = 0; v < n; ++v)
        e += DiffOp::compose(DiffOp::mult_by(x(v)), DiffOp::partial(n, v));
      e += DiffOp::constant(n, Rational(-k));
      return e;
    }
    case GlKind::raise: {
      if (i < 0 || i >= n) throw std::out_of_range("generator index");
      return DiffOp::compose(DiffOp::mult_by(x(i)),
                             gl_generator(GlKind::euler, n, 0, 0, k));
    }
  }
  throw std::logic_error("unreachable");
}

GaugeFactor GaugeFactor::inverse() const {
  GaugeFactor g(nvars());
  g.powers = powers;
  for (auto& p : g.powers) p.exponent = -p.exponent;
  g.exp_arg = -exp_arg;
  return g;
}

RatFunc GaugeFactor::dlog(int var) const {
  int n = nvars();
  RatFunc r{MultiPoly(n)};
  for (const auto& p : powers) {
    if (p.base.is_zero()) throw std::domain_error("zero gauge base");
    MultiPoly db = p.base.diff(var);
    if (db.is_zero()) continue;
    r += RatFunc(db, p.base).scale(p.exponent);
  }
  r += RatFunc(exp_arg.diff(var));
  return r;
}

DiffOp gauge_conjugate(const DiffOp& A, const GaugeFactor& g, GaugeDir dir) {
  int n = A.nvars();
  if (g.nvars() != n) throw std::invalid_argument("variable-count mismatch");
  Rational s = dir == GaugeDir::similarity ? 1 : -1;
  // Conjugated derivations D_i = d_i + s * dlog_i; they commute pairwise
  // because mixed partials of log(g) agree.
  std::vector<DiffOp> D;
  D.reserve(n);
  for (int i = 0; i < n; ++i) {
    DiffOp d = DiffOp::partial(n, i);
    d += DiffOp::mult_by(g.dlog(i).scale(s));
    D.push_back(std::move(d));
  }
  DiffOp out(n);
  for (const auto& [alpha, c] : A.terms()) {
    DiffOp t = DiffOp::mult_by(c);
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < alpha[i]; ++e) t = DiffOp::compose(t, D[i]);
    out += t;
  }
  return out;
}

CoordMap::CoordMap(std::vector<RatFunc> forward, std::vector<RatFunc> inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse)) {
  int n_old = static_cast<int>(forward_.size());
  int n_new = static_cast<int>(inverse_.size());
  if (n_old == 0 || n_new == 0) throw std::invalid_argument("empty map");
  for (const auto& f : forward_)
    if (f.nvars() != n_old) throw std::invalid_argument("forward arity");
  for (const auto& f : inverse_)
    if (f.nvars() != n_new) throw std::invalid_argument("inverse arity");
  // Symbolic round-trip check: forward(inverse(u)) == u identically.
  for (int j = 0; j < n_new; ++j) {
    RatFunc rt = forward_[j].substitute(inverse_);
    if (rt != RatFunc(MultiPoly::variable(n_new, j)))
      throw std::invalid_argument("map round trip failed at coordinate " +
                                  std::to_string(j + 1));
  }
  if (n_old != n_new)
    throw std::invalid_argument("non-square coordinate map");
  // M[i][j] = d old_i / d new_j; its inverse gives d new_j / d old_i in
  // the new chart.
  RFMatrix M(n_old, std::vector<RatFunc>(n_new, RatFunc(MultiPoly(n_new))));
  for (int i = 0; i < n_old; ++i)
    for (int j = 0; j < n_new; ++j) M[i][j] = inverse_[i].diff(j);
  jac_ = rf_inverse(M);
}

DiffOp change_coordinates(const DiffOp& A, const CoordMap& m) {
  int n = m.new_nvars();
  if (A.nvars() != m.old_nvars())
    throw std::invalid_argument("operator/map variable mismatch");
  const RFMatrix& J = m.jacobian_in_new();
  // Pushforward of d/dx_i as an operator in the new chart.
  std::vector<DiffOp> D;
  D.reserve(m.old_nvars());
  for (int i = 0; i < m.old_nvars(); ++i) {
    DiffOp d(n);
    for (int j = 0; j < n; ++j)
      d += DiffOp::partial(n, j).scale(J[j][i]);
    D.push_back(std::move(d));
  }
  DiffOp out(n);
  for (const auto& [alpha, c] : A.terms()) {
    DiffOp t = DiffOp::mult_by(c.substitute(m.inverse()));
    for (int i = 0; i < m.old_nvars(); ++i)
      for (int e = 0; e < alpha[i]; ++e) t = DiffOp::compose(t, D[i]);
    out += t;
  }
  return out;
}

}  // namespace qes
