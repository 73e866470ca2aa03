#include "qes/qmatrix.hpp"

#include <stdexcept>

namespace qes {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::scale(const Rational& c) const {
  QMatrix r = *this;
  for (auto& v : r.a_) v *= c;
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rational QMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector dimension");
  std::vector<Rational> r(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Rational QMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  QMatrix m = *this;
  Rational d = 1;
  for (int col = 0; col < cols_; ++col) {
    int piv = -1;
    for (int i = col; i < rows_; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rational inv = Rational(1) / m.at(col, col);
    for (int i = col + 1; i < rows_; ++i) {
      Rational f = m.at(i, col) * inv;
      if (f == 0) continue;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

QMatrix QMatrix::rref() const {
  QMatrix m = *this;
  int lead = 0;
  for (int row = 0; row < rows_ && lead < cols_; ++row) {
    int piv = -1;
    while (lead < cols_) {
      for (int i = row; i < rows_; ++i)
        if (m.at(i, lead) != 0) {
          piv = i;
          break;
        }
      if (piv >= 0) break;
      ++lead;
    }
    if (piv < 0) break;
    if (piv != row)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Rational inv = Rational(1) / m.at(row, lead);
    for (int j = lead; j < cols_; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      Rational f = m.at(i, lead);
      if (f == 0) continue;
      for (int j = lead; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++lead;
  }
  return m;
}

int QMatrix::rank() const {
  QMatrix r = rref();
  int rk = 0;
  for (int i = 0; i < rows_; ++i) {
    bool nonzero = false;
    for (int j = 0; j < cols_; ++j)
      if (r.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++rk;
  }
  return rk;
}

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
  QMatrix r = rref();
  std::vector<int> pivot_of_col(cols_, -1);
  std::vector<bool> is_pivot(cols_, false);
  int row = 0;
  for (int j = 0; j < cols_ && row < rows_; ++j) {
    if (r.at(row, j) != 0) {
      pivot_of_col[j] = row;
      is_pivot[j] = true;
      ++row;
    }
  }
  std::vector<std::vector<Rational>> basis;
  for (int j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[j] = 1;
    for (int jj = 0; jj < cols_; ++jj)
      if (is_pivot[jj]) v[jj] = -r.at(pivot_of_col[jj], j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> QMatrix::solve(
    const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw std::invalid_argument("rhs dimension");
  QMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  QMatrix r = aug.rref();
  std::vector<Rational> x(cols_, Rational(0));
  std::vector<bool> determined(cols_, false);
  for (int i = 0; i < rows_; ++i) {
    int lead = -1;
    for (int j = 0; j <= cols_; ++j)
      if (r.at(i, j) != 0) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    if (lead == cols_) return std::nullopt;  // inconsistent
    for (int j = lead + 1; j < cols_; ++j)
      if (r.at(i, j) != 0) return std::nullopt;  // free variable involved
    x[lead] = r.at(i, cols_);
    determined[lead] = true;
  }
  for (bool d : determined)
    if (!d) return std::nullopt;  // underdetermined
  return x;
}

std::optional<QMatrix> QMatrix::solve(const QMatrix& B) const {
  if (B.rows_ != rows_) throw std::invalid_argument("rhs shape");
  QMatrix X(cols_, B.cols_);
  for (int j = 0; j < B.cols_; ++j) {
    std::vector<Rational> b(rows_);
    for (int i = 0; i < rows_; ++i) b[i] = B.at(i, j);
    auto x = solve(b);
    if (!x) return std::nullopt;
    for (int i = 0; i < cols_; ++i) X.at(i, j) = (*x)[i];
  }
  return X;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  return solve(identity(rows_));
}

UPoly QMatrix::charpoly() const {
  if (rows_ != cols_) throw std::invalid_argument("charpoly of non-square matrix");
  int n = rows_;
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr A;
  // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix M = *this;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      QMatrix shifted = M;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
      M = *this * shifted;
    }
    c[n - k] = -M.trace() / k;
  }
  return UPoly(std::move(c));
}

}  // namespace qes
