#pragma once

#include "sentiline/matrix.hpp"

namespace sentiline {

// Thin SVD, A (m x n) = U diag(sigma) V^T with U m x k, V n x k,
// k = min(m, n). Singular values are non-negative and sorted descending;
// U and V have orthonormal columns.
struct SvdResult {
    Mat u;
    Vec sigma;
    Mat v;
};

// One-sided Jacobi. Deterministic sweep order, single-threaded. Adequate for
// the d <= 300 matrices this project decomposes. Non-finite input is fatal.
SvdResult svd(const Mat& a);

} // namespace sentiline
