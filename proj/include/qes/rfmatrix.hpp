#pragma once

#include <vector>

#include "qes/ratfunc.hpp"

namespace qes {

// Small dense matrices over the rational-function field; enough for
// Jacobian inversion and metric manipulation.
using RFMatrix = std::vector<std::vector<RatFunc>>;

RFMatrix rf_identity(int n, int nvars);
RatFunc rf_det(const RFMatrix& m);
// Gaussian elimination over the field of rational functions; throws on a
// singular (identically degenerate) matrix.
RFMatrix rf_inverse(const RFMatrix& m);

}  // namespace qes
