#include "sentiline/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sentiline/error.hpp"

namespace sentiline {

namespace {

Mat transpose(const Mat& a) {
    Mat t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

double col_dot(const Mat& m, int p, int q) {
    double acc = 0.0;
    for (int i = 0; i < m.rows; ++i) acc += m.at(i, p) * m.at(i, q);
    return acc;
}

void rotate_cols(Mat& m, int p, int q, double c, double s) {
    for (int i = 0; i < m.rows; ++i) {
        const double xp = m.at(i, p);
        const double xq = m.at(i, q);
        m.at(i, p) = c * xp - s * xq;
        m.at(i, q) = s * xp + c * xq;
    }
}

// Fills U column j with a unit vector orthogonal to columns [0, j); used when
// a singular value is (numerically) zero and the quotient direction is lost.
void complete_column(Mat& u, int j) {
    const int m = u.rows;
    Vec cand(m);
    double best_norm = -1.0;
    Vec best(m, 0.0);
    for (int e = 0; e < m; ++e) {
        std::fill(cand.begin(), cand.end(), 0.0);
        cand[e] = 1.0;
        for (int k = 0; k < j; ++k) {
            double proj = 0.0;
            for (int i = 0; i < m; ++i) proj += cand[i] * u.at(i, k);
            for (int i = 0; i < m; ++i) cand[i] -= proj * u.at(i, k);
        }
        double nrm = 0.0;
        for (int i = 0; i < m; ++i) nrm += cand[i] * cand[i];
        if (nrm > best_norm) {
            best_norm = nrm;
            best = cand;
        }
    }
    const double nrm = std::sqrt(best_norm);
    for (int i = 0; i < m; ++i) u.at(i, j) = best[i] / nrm;
}

// Requires m >= n.
SvdResult svd_tall(const Mat& a) {
    const int m = a.rows, n = a.cols;
    Mat b = a;
    Mat v(n, n);
    for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

    const double tol = 1e-15;
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double alpha = col_dot(b, p, p);
                const double beta = col_dot(b, q, q);
                const double gamma = col_dot(b, p, q);
                if (std::abs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                rotate_cols(b, p, q, c, s);
                rotate_cols(v, p, q, c, s);
            }
        }
        if (!rotated) break;
    }

    SvdResult r;
    r.sigma.assign(n, 0.0);
    r.u = Mat(m, n);
    for (int j = 0; j < n; ++j) {
        double nrm2 = col_dot(b, j, j);
        r.sigma[j] = std::sqrt(nrm2);
    }

    // Sort descending, permuting V and the columns of B alongside.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return r.sigma[x] > r.sigma[y]; });
    Mat b_sorted(m, n), v_sorted(n, n);
    Vec sig_sorted(n);
    for (int j = 0; j < n; ++j) {
        sig_sorted[j] = r.sigma[order[j]];
        for (int i = 0; i < m; ++i) b_sorted.at(i, j) = b.at(i, order[j]);
        for (int i = 0; i < n; ++i) v_sorted.at(i, j) = v.at(i, order[j]);
    }
    r.sigma = std::move(sig_sorted);
    r.v = std::move(v_sorted);

    const double sig_max = r.sigma.empty() ? 0.0 : r.sigma[0];
    const double tiny = sig_max * 1e-14;
    for (int j = 0; j < n; ++j) {
        if (r.sigma[j] > tiny && r.sigma[j] > 0.0) {
            for (int i = 0; i < m; ++i) r.u.at(i, j) = b_sorted.at(i, j) / r.sigma[j];
        } else {
            complete_column(r.u, j);
        }
    }
    return r;
}

} // namespace

SvdResult svd(const Mat& a) {
    for (double x : a.a) {
        if (!std::isfinite(x)) throw Error::numeric("svd: non-finite input entry");
    }
    if (a.rows == 0 || a.cols == 0) throw Error::input("svd: empty matrix");
    if (a.rows >= a.cols) return svd_tall(a);
    // A = U S V^T  <=>  A^T = V S U^T
    SvdResult t = svd_tall(transpose(a));
    SvdResult r;
    r.u = std::move(t.v);
    r.v = std::move(t.u);
    r.sigma = std::move(t.sigma);
    return r;
}

} // namespace sentiline
