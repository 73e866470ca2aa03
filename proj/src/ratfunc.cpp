#include "qes/ratfunc.hpp"

#include <sstream>

namespace qes {

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.nvars(), 1);
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = MultiPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *MultiPoly::divide_exact(num_, g);
      den_ = *MultiPoly::divide_exact(den_, g);
    }
  }
  Rational c = den_.content();
  if (c != 1) {
    Rational inv = Rational(1) / c;
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }
}

MultiPoly RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw std::logic_error("not a polynomial: " + str());
  Rational d = den_.constant_term();
  return num_.scale(Rational(1) / d);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::scale(const Rational& c) const {
  if (c == 0) return RatFunc(MultiPoly(nvars()));
  RatFunc r = *this;
  r.num_ = r.num_.scale(c);
  return r;
}

RatFunc operator*(const Rational& c, const RatFunc& f) { return f.scale(c); }

RatFunc RatFunc::diff(int var) const {
  // (n/d)' = (n'd - nd')/d^2
  return RatFunc(num_.diff(var) * den_ - num_ * den_.diff(var), den_ * den_);
}

RatFunc RatFunc::substitute(const std::vector<RatFunc>& images) const {
  if (static_cast<int>(images.size()) != nvars())
    throw std::invalid_argument("variable-count mismatch in substitute");
  int out_n = images.empty() ? 0 : images[0].nvars();
  auto eval_poly = [&](const MultiPoly& p) {
    RatFunc acc{MultiPoly(out_n)};
    for (const auto& [e, c] : p.terms()) {
      RatFunc term = RatFunc::constant(out_n, c);
      for (int i = 0; i < p.nvars(); ++i)
        for (int j = 0; j < e[i]; ++j) term = term * images[i];
      acc += term;
    }
    return acc;
  };
  return eval_poly(num_) / eval_poly(den_);
}

Rational RatFunc::eval(const std::vector<Rational>& point) const {
  Rational d = den_.eval(point);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_.eval(point) / d;
}

RatFunc RatFunc::extended(int new_nvars) const {
  return RatFunc(num_.extended(new_nvars), den_.extended(new_nvars));
}

std::string RatFunc::str(const std::vector<std::string>& names) const {
  if (is_polynomial()) return as_polynomial().str(names);
  std::ostringstream os;
  os << "(" << num_.str(names) << ") / (" << den_.str(names) << ")";
  return os.str();
}

}  // namespace qes
