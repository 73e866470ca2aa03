#include "qes/rfmatrix.hpp"

#include <stdexcept>

namespace qes {

RFMatrix rf_identity(int n, int nvars) {
  RFMatrix m(n, std::vector<RatFunc>(n, RatFunc(MultiPoly(nvars))));
  for (int i = 0; i < n; ++i)
    m[i][i] = RatFunc(MultiPoly::constant(nvars, 1));
  return m;
}

RatFunc rf_det(const RFMatrix& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("empty matrix");
  int nv = m[0][0].nvars();
  RFMatrix a = m;
  RatFunc d = RatFunc(MultiPoly::constant(nv, 1));
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return RatFunc(MultiPoly(nv));
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = d.scale(-1);
    }
    d = d * a[col][col];
    RatFunc inv = RatFunc(MultiPoly::constant(nv, 1)) / a[col][col];
    for (int i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      RatFunc f = a[i][col] * inv;
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return d;
}

RFMatrix rf_inverse(const RFMatrix& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("empty matrix");
  int nv = m[0][0].nvars();
  RFMatrix a = m;
  RFMatrix inv = rf_identity(n, nv);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix over Q(x)");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
    }
    RatFunc f = RatFunc(MultiPoly::constant(nv, 1)) / a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] = a[col][j] * f;
      inv[col][j] = inv[col][j] * f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      RatFunc g = a[i][col];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= g * a[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace qes
