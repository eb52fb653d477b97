#include "sentiline/stats.hpp"

#include <cmath>

#include "sentiline/error.hpp"

namespace sentiline {

namespace {

// Continued fraction for the incomplete beta (modified Lentz). Converges
// quickly for x < (a+1)/(a+b+2); callers route through the symmetry first.
double beta_cf(double a, double b, double x) {
    const int max_iter = 20000;
    const double eps = 1e-15;
    const double fpmin = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) return h;
    }
    throw Error::numeric("incomplete beta: continued fraction did not converge");
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw Error::input("incomplete beta: a, b must be > 0");
    if (!(x >= 0.0 && x <= 1.0)) throw Error::input("incomplete beta: x must be in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0 - std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          b * std::log1p(-x) + a * std::log(x)) *
                     beta_cf(b, a, 1.0 - x) / b;
}

double t_cdf(double t, double nu) {
    if (!(nu >= 1.0)) throw Error::input("t distribution: nu must be >= 1");
    if (t == 0.0) return 0.5;
    const double x = nu / (nu + t * t);
    const double tail = 0.5 * regularized_incomplete_beta(0.5 * nu, 0.5, x);
    return t > 0.0 ? 1.0 - tail : tail;
}

double t_quantile(double p, double nu) {
    if (!(nu >= 1.0)) throw Error::input("t distribution: nu must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw Error::input("t quantile: p must be inside (0, 1)");
    if (p == 0.5) return 0.0;
    if (p < 0.5) return -t_quantile(1.0 - p, nu);

    // Bracket the quantile, then bisect. The CDF is strictly increasing.
    double lo = 0.0;
    double hi = 1.0;
    while (t_cdf(hi, nu) < p) {
        hi *= 2.0;
        if (hi > 1e300) throw Error::numeric("t quantile: bracket overflow");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (t_cdf(mid, nu) < p) lo = mid;
        else hi = mid;
        if (hi - lo < 1e-12 * (1.0 + lo)) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace sentiline
