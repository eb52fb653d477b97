#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sentiline/corpus.hpp"
#include "sentiline/embeddings.hpp"
#include "sentiline/lstm.hpp"
#include "sentiline/train.hpp"

namespace sentiline {

struct ScorePoint {
    std::string id;
    std::int64_t timestamp = 0;
    double score = 0.5;
    std::size_t record_index = 0; // into the corpus it was scored from
};

struct ScoreOutcome {
    std::vector<ScorePoint> points; // corpus order (time order)
    std::size_t unscored = 0;       // all-OOV records, excluded from the series
};

// Scores every scorable record. Records are independent, so the loop is
// OpenMP-parallel over records with each result written to its own slot;
// output is identical for any thread count.
ScoreOutcome score_corpus(const SentimentModel& model, const EmbeddingTable& table,
                          const Corpus& corpus);

ScoreOutcome score_corpus_baseline(const BaselineModel& model, const EmbeddingTable& table,
                                   const Corpus& corpus);

} // namespace sentiline
