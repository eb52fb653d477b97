#pragma once

namespace sentiline {

// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1]. Continued
// fraction (modified Lentz), switching through the symmetry
// I_x(a,b) = 1 - I_{1-x}(b,a) for convergence. Absolute error <= 1e-10.
double regularized_incomplete_beta(double a, double b, double x);

// CDF of Student's t with nu degrees of freedom.
double t_cdf(double t, double nu);

// Inverse CDF, nu >= 1, p in (0, 1) exclusive (p = 0 or 1 is fatal).
// Bisection on the monotone CDF; absolute error <= 1e-8.
double t_quantile(double p, double nu);

} // namespace sentiline
