#pragma once

#include <cstddef>
#include <vector>

namespace sentiline {

struct EsdConfig {
    double alpha = 0.05;
    // Upper bound on the number of outliers; 0 means ceil(0.05 * n).
    std::size_t max_outliers = 0;
};

struct EsdResult {
    std::vector<double> r_stats;              // R_1 .. R_r
    std::vector<double> lambdas;              // lambda_1 .. lambda_r
    std::vector<std::size_t> removed_order;   // original indices, removal order
    std::size_t num_outliers = 0;             // largest i with R_i > lambda_i
    std::vector<std::size_t> outlier_indices; // first num_outliers of removed_order
};

// Generalized extreme Studentized deviate test (two-sided). At each stage the
// observation with the largest |x - mean| is removed (ties to the lowest
// original index) and the statistic recomputed; critical values use exact
// Student-t quantiles. Sample standard deviation uses the n-1 denominator.
// Requires n >= r + 2; a zero-variance stage is fatal.
EsdResult esd_test(const std::vector<double>& series, const EsdConfig& cfg);

std::size_t esd_default_r(std::size_t n);

} // namespace sentiline
