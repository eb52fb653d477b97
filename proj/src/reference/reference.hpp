#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sentiline/corpus.hpp"
#include "sentiline/embeddings.hpp"
#include "sentiline/lstm.hpp"

// Serial, deliberately naive re-implementations of the hot kernels. They are
// written independently of the main code paths and exist for two reasons:
// tests check the optimized implementations against them, and the benchmark
// binary compares their runtimes. Nothing in the pipeline itself calls them.
namespace sentiline::ref {

// Step-by-step bidirectional LSTM forward, one scalar at a time.
double forward_score(const SentimentModel& model, const Mat& sequence);

// Plain serial loop over records.
std::vector<double> score_corpus_serial(const SentimentModel& model,
                                        const EmbeddingTable& table, const Corpus& corpus,
                                        std::size_t& unscored);

// O(n * w) windowed mean.
std::vector<double> moving_average(const std::vector<double>& x, std::size_t window);

// Serial CSLS ranking with penalties recomputed from scratch per row.
std::vector<std::pair<std::string, double>> csls_rank(const std::vector<double>& query,
                                                      const EmbeddingTable& table, int k);

// Student-t quantile for integer degrees of freedom via the closed-form
// finite-sum CDF (arctan/algebraic series) and bisection. Shares nothing
// with the incomplete-beta route.
double t_quantile_closed_form(double p, int nu);

struct EsdOutcome {
    std::vector<double> r_stats;
    std::vector<double> lambdas;
    std::size_t num_outliers = 0;
    std::vector<std::size_t> outlier_indices;
};

// Brute-force generalized ESD using t_quantile_closed_form.
EsdOutcome esd_bruteforce(const std::vector<double>& series, double alpha, std::size_t r);

} // namespace sentiline::ref
