#pragma once

#include <cstddef>
#include <vector>

namespace sentiline {

using Vec = std::vector<double>;

// Dense row-major matrix. Small and dumb on purpose: the kernels in this
// project are hand-written loops over contiguous rows.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c, double fill = 0.0)
        : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {}

    double* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
    const double* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    std::size_t size() const { return a.size(); }
};

// Four independent accumulators per row: breaks the FP add dependency chain
// without reassociating under -ffast-math. The summation order is fixed, so
// results stay run-to-run deterministic.
inline double row_dot(const double* r, const double* x, int n) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    int j = 0;
    for (; j + 4 <= n; j += 4) {
        a0 += r[j] * x[j];
        a1 += r[j + 1] * x[j + 1];
        a2 += r[j + 2] * x[j + 2];
        a3 += r[j + 3] * x[j + 3];
    }
    for (; j < n; ++j) a0 += r[j] * x[j];
    return (a0 + a1) + (a2 + a3);
}

// y = M x
inline void matvec(const Mat& m, const double* x, double* y) {
    for (int i = 0; i < m.rows; ++i) y[i] = row_dot(m.row(i), x, m.cols);
}

// y += M x
inline void matvec_add(const Mat& m, const double* x, double* y) {
    for (int i = 0; i < m.rows; ++i) y[i] += row_dot(m.row(i), x, m.cols);
}

// y += M^T x  (x has m.rows entries, y has m.cols)
inline void matvec_transposed_add(const Mat& m, const double* x, double* y) {
    for (int i = 0; i < m.rows; ++i) {
        const double* r = m.row(i);
        const double xi = x[i];
        for (int j = 0; j < m.cols; ++j) y[j] += xi * r[j];
    }
}

// M += alpha * u v^T
inline void rank1_update(Mat& m, double alpha, const double* u, const double* v) {
    for (int i = 0; i < m.rows; ++i) {
        double* r = m.row(i);
        const double ui = alpha * u[i];
        for (int j = 0; j < m.cols; ++j) r[j] += ui * v[j];
    }
}

inline double dot(const double* x, const double* y, int n) { return row_dot(x, y, n); }

} // namespace sentiline
