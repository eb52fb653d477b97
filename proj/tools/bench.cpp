// Compares the OpenMP-parallel kernels against the serial reference
// implementations on synthetic data. Usage: sentiline_bench [records] [hidden].
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sentiline/corpus.hpp"
#include "sentiline/embeddings.hpp"
#include "sentiline/rng.hpp"
#include "sentiline/scorer.hpp"
#include "sentiline/timeline.hpp"
#include "sentiline/train.hpp"

#include "reference.hpp"

using namespace sentiline;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

EmbeddingTable make_table(int vocab, int dim, Rng& rng) {
    EmbeddingTable t;
    t.dim = dim;
    t.matrix = Mat(vocab, dim);
    for (int i = 0; i < vocab; ++i) {
        t.tokens.push_back("w" + std::to_string(i));
        t.vocab.emplace(t.tokens.back(), i);
        double* r = t.matrix.row(i);
        double nrm = 0.0;
        for (int j = 0; j < dim; ++j) {
            r[j] = rng.gaussian();
            nrm += r[j] * r[j];
        }
        nrm = std::sqrt(nrm);
        for (int j = 0; j < dim; ++j) r[j] /= nrm;
    }
    return t;
}

Corpus make_corpus(int records, int vocab, Rng& rng) {
    Corpus c;
    for (int i = 0; i < records; ++i) {
        TweetRecord r;
        r.id = std::to_string(i);
        r.timestamp = 1549500000 + i * 60;
        const int len = 6 + static_cast<int>(rng.below(10));
        for (int t = 0; t < len; ++t) {
            r.tokens.push_back("w" + std::to_string(rng.below(vocab)));
        }
        c.records.push_back(std::move(r));
    }
    return c;
}

} // namespace

int main(int argc, char** argv) {
    const int records = argc > 1 ? std::atoi(argv[1]) : 2000;
    const int hidden = argc > 2 ? std::atoi(argv[2]) : 300;
    const int dim = 300;
    const int vocab = 2000;

    Rng rng(7);
    EmbeddingTable table = make_table(vocab, dim, rng);
    Corpus corpus = make_corpus(records, vocab, rng);

    ModelConfig mc;
    mc.embed_dim = dim;
    mc.hidden_dim = hidden;
    mc.layers = 2;
    mc.bidirectional = true;
    SentimentModel model = SentimentModel::zeros(mc);
    init_model(model, 42);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif
    std::printf("scoring %d records, bilstm hidden=%d\n\n", records, hidden);

    auto t0 = std::chrono::steady_clock::now();
    std::size_t unscored_ref = 0;
    auto ref_scores = ref::score_corpus_serial(model, table, corpus, unscored_ref);
    const double t_ref = ms_since(t0);
    std::printf("serial reference scorer : %9.1f ms\n", t_ref);

    t0 = std::chrono::steady_clock::now();
    auto outcome = score_corpus(model, table, corpus);
    const double t_omp = ms_since(t0);
    std::printf("openmp scorer           : %9.1f ms  (speedup %.2fx)\n", t_omp, t_ref / t_omp);

    double worst = 0.0;
    for (std::size_t i = 0; i < ref_scores.size(); ++i) {
        worst = std::max(worst, std::abs(ref_scores[i] - outcome.points[i].score));
    }
    std::printf("max |serial - parallel| : %9.2e\n\n", worst);

    // CSLS penalties: serial brute force vs the parallel path.
    std::vector<double> query(table.row(0), table.row(0) + dim);
    t0 = std::chrono::steady_clock::now();
    auto ref_rank = ref::csls_rank(query, table, 10);
    const double t_csls_ref = ms_since(t0);
    std::printf("serial CSLS ranking     : %9.1f ms\n", t_csls_ref);

    t0 = std::chrono::steady_clock::now();
    auto rank = csls_neighbors(query.data(), table, 10);
    const double t_csls = ms_since(t0);
    std::printf("openmp CSLS ranking     : %9.1f ms  (speedup %.2fx)\n", t_csls,
                t_csls_ref / t_csls);
    std::printf("top-1 agreement         : %s\n\n",
                ref_rank[0].first == rank[0].token ? "yes" : "NO");

    std::vector<double> series(ref_scores);
    t0 = std::chrono::steady_clock::now();
    auto ma_ref = ref::moving_average(series, 25);
    const double t_ma_ref = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto ma = moving_average(series, 25);
    const double t_ma = ms_since(t0);
    double ma_diff = 0.0;
    for (std::size_t i = 0; i < ma.size(); ++i) ma_diff = std::max(ma_diff, std::abs(ma[i] - ma_ref[i]));
    std::printf("moving average          : ref %6.2f ms, main %6.2f ms, max diff %.2e\n",
                t_ma_ref, t_ma, ma_diff);
    return 0;
}
