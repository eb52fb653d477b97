#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentiline/embeddings.hpp"
#include "sentiline/lstm.hpp"

namespace sentiline {

struct TrainConfig {
    int epochs = 4;
    double learning_rate = 0.1;
    int batch_size = 16;
    double clip_norm = 5.0;
    std::uint64_t seed = 0;
    double train_frac = 0.8;
    double valid_frac = 0.1; // test gets the remainder

    void validate() const;
};

struct LabeledExample {
    std::vector<std::string> tokens;
    int label = 0; // 0 negative, 1 positive
};

struct EpochMetrics {
    double train_loss = 0.0;
    double train_accuracy = 0.0;
    double valid_loss = 0.0;
    double valid_accuracy = 0.0;
};

struct TrainResult {
    std::vector<EpochMetrics> epochs;
    double test_loss = 0.0;
    double test_accuracy = 0.0;
    std::size_t train_count = 0, valid_count = 0, test_count = 0;
    std::size_t skipped_oov = 0; // examples with no in-vocabulary token
};

// Seeded init: every trainable tensor uniform(-1/sqrt(H), 1/sqrt(H)) in a
// fixed tensor order, then +1 on the forget-gate bias block.
void init_model(SentimentModel& model, std::uint64_t seed);

// Plain SGD with global-norm gradient clipping on the 80/10/10 split.
// Deterministic given seed, data and config. Requires both labels present.
TrainResult train(SentimentModel& model, const EmbeddingTable& table,
                  const std::vector<LabeledExample>& data, const TrainConfig& cfg);

// Mean-embedding + logistic baseline. Weights: w (embed_dim) and bias.
struct BaselineModel {
    Vec w;
    double b = 0.0;
};

double baseline_score(const std::vector<std::string>& tokens, const EmbeddingTable& table,
                      const BaselineModel& model);

TrainResult train_baseline(BaselineModel& model, const EmbeddingTable& table,
                           const std::vector<LabeledExample>& data, const TrainConfig& cfg);

// Embeds tokens row-per-token, skipping OOV; empty result means unscorable.
Mat embed_tokens(const EmbeddingTable& table, const std::vector<std::string>& tokens);

} // namespace sentiline
