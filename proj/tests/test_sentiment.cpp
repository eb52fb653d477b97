#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "reference.hpp"
#include "sentiline/error.hpp"
#include "sentiline/lstm.hpp"
#include "sentiline/rng.hpp"
#include "sentiline/train.hpp"
#include "sentiline/weights_io.hpp"

using namespace sentiline;

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

EmbeddingTable table_from(const std::vector<std::string>& tokens,
                          const std::vector<Vec>& rows) {
    EmbeddingTable t;
    t.dim = static_cast<int>(rows[0].size());
    t.matrix = Mat(static_cast<int>(rows.size()), t.dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        t.tokens.push_back(tokens[i]);
        t.vocab.emplace(tokens[i], static_cast<int>(i));
        std::copy(rows[i].begin(), rows[i].end(), t.matrix.row(static_cast<int>(i)));
    }
    return t;
}

SentimentModel random_model(const ModelConfig& cfg, std::uint64_t seed) {
    SentimentModel m = SentimentModel::zeros(cfg);
    init_model(m, seed);
    return m;
}

Mat random_sequence(int steps, int dim, Rng& rng) {
    Mat seq(steps, dim);
    for (double& x : seq.a) x = rng.uniform(-1.0, 1.0);
    return seq;
}

// Enumerates every trainable tensor as a (pointer, length) span, in the same
// order for the model and its gradients.
std::vector<std::pair<double*, std::size_t>> param_spans(SentimentModel& m) {
    std::vector<std::pair<double*, std::size_t>> spans;
    for (auto& layer : m.layers) {
        spans.emplace_back(layer.fwd.w_ih.a.data(), layer.fwd.w_ih.a.size());
        spans.emplace_back(layer.fwd.w_hh.a.data(), layer.fwd.w_hh.a.size());
        spans.emplace_back(layer.fwd.b.data(), layer.fwd.b.size());
        if (m.cfg.bidirectional) {
            spans.emplace_back(layer.bwd.w_ih.a.data(), layer.bwd.w_ih.a.size());
            spans.emplace_back(layer.bwd.w_hh.a.data(), layer.bwd.w_hh.a.size());
            spans.emplace_back(layer.bwd.b.data(), layer.bwd.b.size());
        }
    }
    spans.emplace_back(m.head_w.data(), m.head_w.size());
    spans.emplace_back(&m.head_b, 1);
    return spans;
}

std::vector<std::pair<const double*, std::size_t>> grad_spans(const ModelGrads& g,
                                                              bool bidirectional) {
    std::vector<std::pair<const double*, std::size_t>> spans;
    for (const auto& layer : g.layers) {
        spans.emplace_back(layer.fwd.w_ih.a.data(), layer.fwd.w_ih.a.size());
        spans.emplace_back(layer.fwd.w_hh.a.data(), layer.fwd.w_hh.a.size());
        spans.emplace_back(layer.fwd.b.data(), layer.fwd.b.size());
        if (bidirectional) {
            spans.emplace_back(layer.bwd.w_ih.a.data(), layer.bwd.w_ih.a.size());
            spans.emplace_back(layer.bwd.w_hh.a.data(), layer.bwd.w_hh.a.size());
            spans.emplace_back(layer.bwd.b.data(), layer.bwd.b.size());
        }
    }
    spans.emplace_back(g.head_w.data(), g.head_w.size());
    spans.emplace_back(&g.head_b, 1);
    return spans;
}

double batch_loss(const SentimentModel& model, const std::vector<Mat>& seqs,
                  const std::vector<int>& labels) {
    double acc = 0.0;
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        acc += bce_loss(forward(model, seqs[i]), labels[i]);
    }
    return acc / static_cast<double>(seqs.size());
}

} // namespace

TEST_CASE("lstm cell with all-zero weights and zero cell state") {
    const int h = 3, in = 2;
    LstmDirWeights w;
    w.w_ih = Mat(4 * h, in);
    w.w_hh = Mat(4 * h, h);
    w.b.assign(4 * h, 0.0);
    Vec x(in, 1.0), hprev(h, 0.0), c(h, 0.0), hout(h), cout_(h);
    lstm_cell_forward(w, x.data(), hprev.data(), c.data(), hout.data(), cout_.data());
    for (int k = 0; k < h; ++k) {
        CHECK(hout[k] == 0.0);
        CHECK(cout_[k] == 0.0);
    }
}

TEST_CASE("lstm cell with zero weights and unit cell state halves c") {
    const int h = 2, in = 2;
    LstmDirWeights w;
    w.w_ih = Mat(4 * h, in);
    w.w_hh = Mat(4 * h, h);
    w.b.assign(4 * h, 0.0);
    Vec x(in, 0.3), hprev(h, 0.0), c = {1.0, 2.0}, hout(h), cout_(h);
    lstm_cell_forward(w, x.data(), hprev.data(), c.data(), hout.data(), cout_.data());
    for (int k = 0; k < h; ++k) {
        CHECK(cout_[k] == doctest::Approx(0.5 * c[k]).epsilon(1e-15));
        CHECK(hout[k] == doctest::Approx(0.5 * std::tanh(0.5 * c[k])).epsilon(1e-15));
    }
}

TEST_CASE("lstm cell H=1 handcrafted scalar oracle") {
    // One hidden unit, one input; every weight pinned so the whole step is
    // checkable by scalar arithmetic.
    LstmDirWeights w;
    w.w_ih = Mat(4, 1);
    w.w_hh = Mat(4, 1);
    w.b.assign(4, 0.0);
    w.w_ih.at(0, 0) = 0.5;  // i
    w.w_ih.at(1, 0) = -0.25; // f
    w.w_ih.at(2, 0) = 1.0;  // g
    w.w_ih.at(3, 0) = 0.75; // o
    w.w_hh.at(0, 0) = 0.1;
    w.w_hh.at(1, 0) = 0.2;
    w.w_hh.at(2, 0) = -0.3;
    w.w_hh.at(3, 0) = 0.4;
    w.b = {0.05, 1.0, -0.1, 0.2};

    const double x = 1.0, hprev = 0.5, cprev = -0.4;
    const double zi = 0.5 * x + 0.1 * hprev + 0.05;
    const double zf = -0.25 * x + 0.2 * hprev + 1.0;
    const double zg = 1.0 * x - 0.3 * hprev - 0.1;
    const double zo = 0.75 * x + 0.4 * hprev + 0.2;
    const double want_c = sigmoid(zf) * cprev + sigmoid(zi) * std::tanh(zg);
    const double want_h = sigmoid(zo) * std::tanh(want_c);

    Vec hout(1), cout_(1);
    lstm_cell_forward(w, &x, &hprev, &cprev, hout.data(), cout_.data());
    CHECK(cout_[0] == doctest::Approx(want_c).epsilon(1e-15));
    CHECK(hout[0] == doctest::Approx(want_h).epsilon(1e-15));
}

TEST_CASE("forward with all-zero weights scores 0.5") {
    ModelConfig cfg;
    cfg.embed_dim = 4;
    cfg.hidden_dim = 3;
    SentimentModel m = SentimentModel::zeros(cfg);
    Rng rng(5);
    Mat seq = random_sequence(6, 4, rng);
    CHECK(forward(m, seq) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("forward on T=1: pooling equals the single step") {
    ModelConfig cfg;
    cfg.embed_dim = 3;
    cfg.hidden_dim = 2;
    SentimentModel m = random_model(cfg, 99);
    Rng rng(1);
    Mat seq = random_sequence(1, 3, rng);
    ForwardCache cache;
    forward(m, seq, &cache);
    // pooled must equal the top layer's only per-step output
    const int dirs = cfg.directions();
    const auto& top_fwd = cache.dir_caches[static_cast<std::size_t>(cfg.layers - 1) * dirs];
    const auto& top_bwd = cache.dir_caches[static_cast<std::size_t>(cfg.layers - 1) * dirs + 1];
    for (int k = 0; k < cfg.hidden_dim; ++k) {
        CHECK(cache.pooled[k] == doctest::Approx(top_fwd.h[0][k]).epsilon(1e-15));
        CHECK(cache.pooled[cfg.hidden_dim + k] == doctest::Approx(top_bwd.h[0][k]).epsilon(1e-15));
    }
}

TEST_CASE("forward empty sequence is an error") {
    ModelConfig cfg;
    cfg.embed_dim = 3;
    cfg.hidden_dim = 2;
    SentimentModel m = SentimentModel::zeros(cfg);
    Mat empty(0, 3);
    CHECK_THROWS_WITH_AS(forward(m, empty), doctest::Contains("unscorable"), Error);
}

TEST_CASE("forward matches the step-by-step reference implementation") {
    Rng rng(2718);
    for (int trial = 0; trial < 10; ++trial) {
        ModelConfig cfg;
        cfg.embed_dim = 2 + static_cast<int>(rng.below(4));
        cfg.hidden_dim = 1 + static_cast<int>(rng.below(4));
        cfg.layers = 2;
        SentimentModel m = random_model(cfg, 1000 + trial);
        Mat seq = random_sequence(1 + static_cast<int>(rng.below(5)), cfg.embed_dim, rng);
        const double mine = forward(m, seq);
        const double oracle = ref::forward_score(m, seq);
        CHECK(mine == doctest::Approx(oracle).epsilon(1e-12));
        CHECK(mine > 0.0);
        CHECK(mine < 1.0);
        // cached and cache-free paths agree
        ForwardCache cache;
        CHECK(forward(m, seq, &cache) == doctest::Approx(mine).epsilon(1e-15));
    }
}

TEST_CASE("token order matters, single token is reversal-invariant") {
    ModelConfig cfg;
    cfg.embed_dim = 3;
    cfg.hidden_dim = 4;
    SentimentModel m = random_model(cfg, 7);
    Rng rng(8);
    Mat seq = random_sequence(5, 3, rng);
    Mat rev(5, 3);
    for (int t = 0; t < 5; ++t) {
        std::copy(seq.row(4 - t), seq.row(4 - t) + 3, rev.row(t));
    }
    CHECK(std::abs(forward(m, seq) - forward(m, rev)) > 1e-12);

    Mat one = random_sequence(1, 3, rng);
    CHECK(forward(m, one) == forward(m, one));
}

TEST_CASE("bidirectional model with zeroed backward weights reduces to unidirectional") {
    ModelConfig bi_cfg;
    bi_cfg.embed_dim = 3;
    bi_cfg.hidden_dim = 2;
    bi_cfg.layers = 2;
    bi_cfg.bidirectional = true;
    SentimentModel bi = random_model(bi_cfg, 11);
    // Zero every backward tensor; a zero LSTM direction emits exactly 0.
    for (auto& layer : bi.layers) {
        std::fill(layer.bwd.w_ih.a.begin(), layer.bwd.w_ih.a.end(), 0.0);
        std::fill(layer.bwd.w_hh.a.begin(), layer.bwd.w_hh.a.end(), 0.0);
        std::fill(layer.bwd.b.begin(), layer.bwd.b.end(), 0.0);
    }

    ModelConfig uni_cfg = bi_cfg;
    uni_cfg.bidirectional = false;
    SentimentModel uni = SentimentModel::zeros(uni_cfg);
    const int h = bi_cfg.hidden_dim;
    uni.layers[0].fwd = bi.layers[0].fwd;
    // Layer 2 of the uni model sees only the forward half of the bi input.
    uni.layers[1].fwd.w_hh = bi.layers[1].fwd.w_hh;
    uni.layers[1].fwd.b = bi.layers[1].fwd.b;
    for (int r = 0; r < 4 * h; ++r) {
        for (int j = 0; j < h; ++j) {
            uni.layers[1].fwd.w_ih.at(r, j) = bi.layers[1].fwd.w_ih.at(r, j);
        }
    }
    uni.head_w.assign(bi.head_w.begin(), bi.head_w.begin() + h);
    uni.head_b = bi.head_b;

    Rng rng(12);
    for (int trial = 0; trial < 5; ++trial) {
        Mat seq = random_sequence(1 + static_cast<int>(rng.below(6)), 3, rng);
        CHECK(forward(bi, seq) == doctest::Approx(forward(uni, seq)).epsilon(1e-12));
    }
}

TEST_CASE("bce loss analytic values") {
    CHECK(bce_loss(0.5, 0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(bce_loss(0.5, 1) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(bce_loss(1.0 - 1e-7, 1) == doctest::Approx(1e-7).epsilon(1e-3));
    CHECK(bce_loss(0.8, 0) == doctest::Approx(-std::log(0.2)).epsilon(1e-12));
    CHECK(bce_loss(0.8, 0) == doctest::Approx(1.609438).epsilon(1e-6));
}

TEST_CASE("head bias gradient equals score minus label") {
    ModelConfig cfg;
    cfg.embed_dim = 3;
    cfg.hidden_dim = 2;
    SentimentModel m = random_model(cfg, 31);
    Rng rng(32);
    Mat seq = random_sequence(4, 3, rng);
    ForwardCache cache;
    const double score = forward(m, seq, &cache);

    ModelGrads grads = ModelGrads::zeros(cfg);
    backward(m, seq, cache, 1, 1.0, grads);
    CHECK(grads.head_b == doctest::Approx(score - 1.0).epsilon(1e-12));

    ModelGrads grads0 = ModelGrads::zeros(cfg);
    backward(m, seq, cache, 0, 1.0, grads0);
    CHECK(grads0.head_b == doctest::Approx(score).epsilon(1e-12));
}

TEST_CASE("balanced batch on all-zero weights has zero head-bias gradient") {
    ModelConfig cfg;
    cfg.embed_dim = 3;
    cfg.hidden_dim = 2;
    SentimentModel m = SentimentModel::zeros(cfg);
    Rng rng(33);
    Mat seq = random_sequence(3, 3, rng);
    ModelGrads grads = ModelGrads::zeros(cfg);
    for (int label : {0, 1}) {
        ForwardCache cache;
        forward(m, seq, &cache);
        backward(m, seq, cache, label, 0.5, grads);
    }
    CHECK(grads.head_b == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("gradients match central finite differences") {
    Rng meta(424242);
    for (int trial = 0; trial < 4; ++trial) {
        ModelConfig cfg;
        cfg.embed_dim = 2 + static_cast<int>(meta.below(2));
        cfg.hidden_dim = 2 + static_cast<int>(meta.below(3));
        cfg.layers = 2;
        SentimentModel m = random_model(cfg, 5000 + trial);

        Rng rng(6000 + trial);
        std::vector<Mat> seqs;
        std::vector<int> labels;
        for (int b = 0; b < 3; ++b) {
            seqs.push_back(random_sequence(1 + static_cast<int>(rng.below(4)), cfg.embed_dim, rng));
            labels.push_back(static_cast<int>(rng.below(2)));
        }

        ModelGrads grads = ModelGrads::zeros(cfg);
        const double inv = 1.0 / static_cast<double>(seqs.size());
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            ForwardCache cache;
            forward(m, seqs[i], &cache);
            backward(m, seqs[i], cache, labels[i], inv, grads);
        }

        auto params = param_spans(m);
        auto analytic = grad_spans(grads, cfg.bidirectional);
        REQUIRE(params.size() == analytic.size());
        const double eps = 1e-4;
        for (std::size_t s = 0; s < params.size(); ++s) {
            for (std::size_t k = 0; k < params[s].second; ++k) {
                double& p = params[s].first[k];
                const double saved = p;
                p = saved + eps;
                const double up = batch_loss(m, seqs, labels);
                p = saved - eps;
                const double down = batch_loss(m, seqs, labels);
                p = saved;
                const double numeric = (up - down) / (2.0 * eps);
                const double a = analytic[s].first[k];
                const double denom = std::max({std::abs(numeric), std::abs(a), 1e-6});
                CHECK(std::abs(numeric - a) / denom < 1e-3);
            }
        }
    }
}

TEST_CASE("train: lr = 0 leaves weights unchanged and losses constant") {
    auto table = table_from({"good", "bad", "meh"},
                            {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}});
    std::vector<LabeledExample> data;
    for (int i = 0; i < 20; ++i) {
        data.push_back({{i % 2 ? "good" : "bad", "meh"}, i % 2});
    }
    TrainConfig cfg;
    cfg.epochs = 3;
    cfg.learning_rate = 0.0;
    cfg.seed = 5;
    ModelConfig mc;
    mc.embed_dim = 2;
    mc.hidden_dim = 2;
    SentimentModel model = SentimentModel::zeros(mc);
    auto result = train(model, table, data, cfg);
    REQUIRE(result.epochs.size() == 3);
    CHECK(result.epochs[0].train_loss == doctest::Approx(result.epochs[1].train_loss).epsilon(1e-12));
    CHECK(result.epochs[1].train_loss == doctest::Approx(result.epochs[2].train_loss).epsilon(1e-12));

    // The trained tensors equal the seeded initialization exactly.
    Rng replay(cfg.seed);
    SentimentModel init = SentimentModel::zeros(mc);
    init_model(init, replay.next_u64());
    std::ostringstream trained_bytes, init_bytes;
    save_weights(model, trained_bytes);
    save_weights(init, init_bytes);
    CHECK(trained_bytes.str() == init_bytes.str());
}

TEST_CASE("train: single-class dataset is fatal") {
    auto table = table_from({"good"}, {{1.0, 0.0}});
    std::vector<LabeledExample> data = {{{"good"}, 1}, {{"good"}, 1}};
    TrainConfig cfg;
    ModelConfig mc;
    mc.embed_dim = 2;
    mc.hidden_dim = 2;
    SentimentModel model = SentimentModel::zeros(mc);
    CHECK_THROWS_WITH_AS(train(model, table, data, cfg), doctest::Contains("degenerate"), Error);
}

TEST_CASE("train: separable toy corpus reaches high test accuracy in 4 epochs") {
    // Three "languages" share one aligned space: positive tokens cluster
    // around +u, negative around -u, with per-token jitter.
    Rng rng(98);
    const int dim = 8;
    std::vector<std::string> names;
    std::vector<Vec> rows;
    for (const char* prefix : {"en", "de", "es"}) {
        for (int i = 0; i < 10; ++i) {
            for (int polarity = 0; polarity < 2; ++polarity) {
                Vec v(dim, 0.0);
                v[0] = polarity == 1 ? 1.0 : -1.0;
                for (int j = 1; j < dim; ++j) v[j] = 0.15 * rng.gaussian();
                names.push_back(std::string(prefix) + (polarity ? "pos" : "neg") +
                                std::to_string(i));
                rows.push_back(v);
            }
        }
    }
    auto table = table_from(names, rows);

    std::vector<LabeledExample> data;
    for (int i = 0; i < 1000; ++i) {
        const int label = static_cast<int>(rng.below(2));
        const char* langs[3] = {"en", "de", "es"};
        const std::string prefix = std::string(langs[rng.below(3)]) + (label ? "pos" : "neg");
        LabeledExample ex;
        ex.label = label;
        const int len = 3 + static_cast<int>(rng.below(4));
        for (int t = 0; t < len; ++t) {
            ex.tokens.push_back(prefix + std::to_string(rng.below(10)));
        }
        data.push_back(std::move(ex));
    }

    TrainConfig cfg;
    cfg.epochs = 4;
    cfg.seed = 7;
    ModelConfig mc;
    mc.embed_dim = dim;
    mc.hidden_dim = 8;
    SentimentModel model = SentimentModel::zeros(mc);
    auto result = train(model, table, data, cfg);
    CHECK(result.test_count >= 90);
    CHECK(result.test_accuracy >= 0.95);
}

TEST_CASE("train determinism: identical seed gives bit-identical weights") {
    auto table = table_from({"a", "b", "c", "d"},
                            {{1.0, 0.2}, {-1.0, 0.1}, {0.3, 0.9}, {-0.2, -0.8}});
    std::vector<LabeledExample> data;
    Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        LabeledExample ex;
        ex.label = static_cast<int>(rng.below(2));
        const char* toks[4] = {"a", "b", "c", "d"};
        for (std::size_t t = 0; t < 1 + rng.below(4); ++t) {
            ex.tokens.push_back(toks[rng.below(4)]);
        }
        data.push_back(ex);
    }
    TrainConfig cfg;
    cfg.epochs = 2;
    cfg.seed = 123456789;
    ModelConfig mc;
    mc.embed_dim = 2;
    mc.hidden_dim = 3;

    SentimentModel m1 = SentimentModel::zeros(mc);
    SentimentModel m2 = SentimentModel::zeros(mc);
    train(m1, table, data, cfg);
    train(m2, table, data, cfg);

    std::ostringstream s1, s2;
    save_weights(m1, s1);
    save_weights(m2, s2);
    CHECK(s1.str() == s2.str());

    cfg.seed = 987654321;
    SentimentModel m3 = SentimentModel::zeros(mc);
    train(m3, table, data, cfg);
    std::ostringstream s3;
    save_weights(m3, s3);
    CHECK(s1.str() != s3.str());
}

TEST_CASE("weights save -> load -> save is byte identical") {
    ModelConfig cfg;
    cfg.embed_dim = 5;
    cfg.hidden_dim = 3;
    SentimentModel m = random_model(cfg, 555);
    std::ostringstream first;
    save_weights(m, first);
    std::istringstream in(first.str());
    SentimentModel loaded = load_weights(in);
    CHECK(loaded.cfg.embed_dim == 5);
    CHECK(loaded.cfg.hidden_dim == 3);
    CHECK(loaded.cfg.layers == 2);
    CHECK(loaded.cfg.bidirectional);
    std::ostringstream second;
    save_weights(loaded, second);
    CHECK(first.str() == second.str());
}

TEST_CASE("weights: truncated file reports end of tensor data") {
    ModelConfig cfg;
    cfg.embed_dim = 4;
    cfg.hidden_dim = 2;
    SentimentModel m = random_model(cfg, 1);
    std::ostringstream out;
    save_weights(m, out);
    std::string bytes = out.str();
    bytes.resize(bytes.size() / 2);
    std::istringstream in(bytes);
    CHECK_THROWS_WITH_AS(load_weights(in), doctest::Contains("unexpected end"), Error);
}

TEST_CASE("weights: renamed tensor reports the missing name") {
    ModelConfig cfg;
    cfg.embed_dim = 4;
    cfg.hidden_dim = 2;
    SentimentModel m = random_model(cfg, 2);
    std::ostringstream out;
    save_weights(m, out);
    std::string bytes = out.str();
    const auto pos = bytes.find("head.W");
    REQUIRE(pos != std::string::npos);
    bytes.replace(pos, 6, "head.X");
    std::istringstream in(bytes);
    CHECK_THROWS_WITH_AS(load_weights(in), doctest::Contains("head.W"), Error);
}

TEST_CASE("weights: bad magic is fatal") {
    std::istringstream in("XLSWgarbage");
    CHECK_THROWS_WITH_AS(load_weights(in), doctest::Contains("magic"), Error);
}

TEST_CASE("baseline score analytic cases") {
    auto table = table_from({"tok", "two"}, {{0.6, 0.8}, {1.0, 0.0}});
    BaselineModel zero;
    zero.w.assign(2, 0.0);
    zero.b = 0.0;
    CHECK(baseline_score({"tok"}, table, zero) == doctest::Approx(0.5).epsilon(1e-15));

    // w aligned with the single token's embedding
    BaselineModel aligned;
    aligned.w = {0.6, 0.8};
    aligned.b = 0.0;
    CHECK(baseline_score({"tok"}, table, aligned) ==
          doctest::Approx(sigmoid(1.0)).epsilon(1e-12)); // unit norms, cos = 1

    // two-token mean vs direct average
    BaselineModel w2;
    w2.w = {0.25, -0.5};
    w2.b = 0.1;
    const double mean0 = (0.6 + 1.0) / 2.0, mean1 = (0.8 + 0.0) / 2.0;
    const double direct = sigmoid(0.1 + 0.25 * mean0 - 0.5 * mean1);
    CHECK(baseline_score({"tok", "two"}, table, w2) == doctest::Approx(direct).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(baseline_score({"zzz"}, table, zero), doctest::Contains("unscorable"),
                         Error);
}

TEST_CASE("baseline weight round-trip") {
    BaselineModel m;
    m.w = {0.25, -1.5, 3.0};
    m.b = 0.125;
    std::ostringstream out;
    save_baseline_weights(m, out);
    std::istringstream in(out.str());
    CHECK(weights_file_is_baseline(in));
    BaselineModel loaded = load_baseline_weights(in);
    CHECK(loaded.w == m.w);
    CHECK(loaded.b == m.b);
}

TEST_CASE("train_baseline learns a separable problem") {
    auto table = table_from({"pos", "neg"}, {{1.0, 0.0}, {-1.0, 0.0}});
    std::vector<LabeledExample> data;
    Rng rng(6);
    for (int i = 0; i < 60; ++i) {
        const int label = static_cast<int>(rng.below(2));
        data.push_back({{label ? "pos" : "neg"}, label});
    }
    BaselineModel model;
    TrainConfig cfg;
    cfg.seed = 4;
    auto result = train_baseline(model, table, data, cfg);
    CHECK(result.test_accuracy >= 0.95);
}
