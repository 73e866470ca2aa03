#include "qes/upoly.hpp"

#include <sstream>

namespace qes {

UPoly UPoly::constant(const Rational& r) {
  return UPoly(std::vector<Rational>{r});
}

UPoly UPoly::x() { return UPoly({Rational(0), Rational(1)}); }

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& v : r) v = -v;
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::scale(const Rational& s) const {
  if (s == 0) return UPoly();
  std::vector<Rational> r(c_);
  for (auto& v : r) v *= s;
  return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

Rational UPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return scale(Rational(1) / c_.back());
}

UPoly UPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  UPoly r = constant(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  std::vector<Rational> quot(
      a.degree() >= db ? a.degree() - db + 1 : 0, Rational(0));
  while (static_cast<int>(rem.size()) - 1 >= db) {
    int dr = static_cast<int>(rem.size()) - 1;
    Rational f = rem.back() / b.c_.back();
    quot[dr - db] = f;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c_[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

std::vector<UPoly> UPoly::squarefree_decomposition(const UPoly& p) {
  std::vector<UPoly> out;
  out.push_back(UPoly());  // index 0 unused
  if (p.degree() <= 0) return out;
  UPoly f = p.monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(fp, a).first;
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    out.push_back(g.monic());
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

MultiPoly UPoly::to_multipoly() const {
  MultiPoly p(1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) p.set_coeff({static_cast<int>(i)}, c_[i]);
  return p;
}

UPoly UPoly::from_multipoly(const MultiPoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("expected univariate poly");
  std::vector<Rational> c(p.total_degree() + 1, Rational(0));
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return UPoly(std::move(c));
}

std::string UPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(c_[i]);
    if (i > 0) os << "*" << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace qes
