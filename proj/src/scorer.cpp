#include "sentiline/scorer.hpp"

#include <cmath>

namespace sentiline {

namespace {

template <typename ScoreFn>
ScoreOutcome score_all(const Corpus& corpus, ScoreFn&& fn) {
    const int n = static_cast<int>(corpus.records.size());
    std::vector<std::optional<double>> scores(n);

#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
        scores[i] = fn(corpus.records[i]);
    }

    ScoreOutcome out;
    out.points.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (!scores[i]) {
            ++out.unscored;
            continue;
        }
        out.points.push_back({corpus.records[i].id, corpus.records[i].timestamp, *scores[i],
                              static_cast<std::size_t>(i)});
    }
    return out;
}

} // namespace

ScoreOutcome score_corpus(const SentimentModel& model, const EmbeddingTable& table,
                          const Corpus& corpus) {
    return score_all(corpus, [&](const TweetRecord& r) -> std::optional<double> {
        Mat seq = embed_tokens(table, r.tokens);
        if (seq.rows == 0) return std::nullopt;
        return forward(model, seq);
    });
}

ScoreOutcome score_corpus_baseline(const BaselineModel& model, const EmbeddingTable& table,
                                   const Corpus& corpus) {
    return score_all(corpus, [&](const TweetRecord& r) -> std::optional<double> {
        Mat seq = embed_tokens(table, r.tokens);
        if (seq.rows == 0) return std::nullopt;
        Vec mean(table.dim, 0.0);
        for (int t = 0; t < seq.rows; ++t) {
            const double* row = seq.row(t);
            for (int j = 0; j < table.dim; ++j) mean[j] += row[j];
        }
        for (int j = 0; j < table.dim; ++j) mean[j] /= seq.rows;
        const double z = model.b + dot(model.w.data(), mean.data(), table.dim);
        return 1.0 / (1.0 + std::exp(-z));
    });
}

} // namespace sentiline
