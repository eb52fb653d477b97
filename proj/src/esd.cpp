#include "sentiline/esd.hpp"

#include <algorithm>
#include <cmath>

#include "sentiline/error.hpp"
#include "sentiline/stats.hpp"

namespace sentiline {

std::size_t esd_default_r(std::size_t n) {
    const std::size_t r = static_cast<std::size_t>(std::ceil(0.05 * static_cast<double>(n)));
    return r < 1 ? 1 : r;
}

EsdResult esd_test(const std::vector<double>& series, const EsdConfig& cfg) {
    const std::size_t n = series.size();
    const std::size_t r = cfg.max_outliers == 0 ? esd_default_r(n) : cfg.max_outliers;
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw Error::input("esd: alpha must be in (0, 1)");
    if (r < 1) throw Error::input("esd: r must be >= 1");
    if (n < r + 2) {
        throw Error::input("esd: need at least r + 2 observations (n = " + std::to_string(n) +
                           ", r = " + std::to_string(r) + ")");
    }

    // Working copy with original indices; erasing preserves ascending index
    // order, so a strict max scan breaks ties toward the lowest original index.
    std::vector<double> values(series);
    std::vector<std::size_t> index(n);
    for (std::size_t i = 0; i < n; ++i) index[i] = i;

    EsdResult res;
    res.r_stats.reserve(r);
    res.lambdas.reserve(r);
    res.removed_order.reserve(r);

    for (std::size_t i = 1; i <= r; ++i) {
        const std::size_t m = values.size();
        double mean = 0.0;
        double lo = values[0], hi = values[0];
        for (double v : values) {
            mean += v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        mean /= static_cast<double>(m);
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        const double sd = std::sqrt(ss / static_cast<double>(m - 1));
        // hi == lo catches a strictly constant stage even when the mean
        // carries accumulation roundoff.
        if (sd == 0.0 || hi == lo) {
            throw Error::numeric("esd: zero variance at stage " + std::to_string(i));
        }

        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double dev = std::abs(values[j] - mean);
            if (dev > best) {
                best = dev;
                arg = j;
            }
        }
        res.r_stats.push_back(best / sd);
        res.removed_order.push_back(index[arg]);
        values.erase(values.begin() + static_cast<std::ptrdiff_t>(arg));
        index.erase(index.begin() + static_cast<std::ptrdiff_t>(arg));

        // lambda_i with nu = n - i - 1 and p = 1 - alpha / (2 (n - i + 1)).
        const double ni = static_cast<double>(n - i);
        const double nu = static_cast<double>(n - i - 1);
        const double p = 1.0 - cfg.alpha / (2.0 * static_cast<double>(n - i + 1));
        const double t = t_quantile(p, nu);
        res.lambdas.push_back(ni * t / std::sqrt((nu + t * t) * static_cast<double>(n - i + 1)));
    }

    res.num_outliers = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (res.r_stats[i] > res.lambdas[i]) res.num_outliers = i + 1;
    }
    res.outlier_indices.assign(res.removed_order.begin(),
                               res.removed_order.begin() +
                                   static_cast<std::ptrdiff_t>(res.num_outliers));
    return res;
}

} // namespace sentiline
