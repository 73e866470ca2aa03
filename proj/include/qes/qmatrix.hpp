#pragma once

#include <optional>
#include <vector>

#include "qes/common.hpp"
#include "qes/upoly.hpp"

namespace qes {

// Dense matrix over Q.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[i * cols_ + j]; }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix scale(const Rational& c) const;
  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  QMatrix transpose() const;
  Rational trace() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  Rational det() const;                 // square only
  int rank() const;
  QMatrix rref() const;                 // reduced row echelon form
  // Basis of the right null space, columns as vectors.
  std::vector<std::vector<Rational>> kernel_basis() const;
  // Unique solution of A x = b; nullopt if inconsistent or underdetermined.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
  // Solve A X = B column by column; nullopt if any column fails.
  std::optional<QMatrix> solve(const QMatrix& B) const;
  std::optional<QMatrix> inverse() const;

  // Monic characteristic polynomial det(tI - A) (Faddeev-LeVerrier).
  UPoly charpoly() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

}  // namespace qes
