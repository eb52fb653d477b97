#include "sentiline/train.hpp"

#include <algorithm>
#include <cmath>

#include "sentiline/error.hpp"
#include "sentiline/rng.hpp"

namespace sentiline {

void TrainConfig::validate() const {
    if (epochs < 1) throw Error::input("train config: epochs must be >= 1");
    if (!(learning_rate >= 0.0)) throw Error::input("train config: learning rate must be >= 0");
    if (batch_size < 1) throw Error::input("train config: batch size must be >= 1");
    if (!(train_frac > 0.0) || !(valid_frac >= 0.0) || train_frac + valid_frac >= 1.0 + 1e-12) {
        throw Error::input("train config: split fractions must leave room for a test set");
    }
}

Mat embed_tokens(const EmbeddingTable& table, const std::vector<std::string>& tokens) {
    std::vector<const double*> rows;
    rows.reserve(tokens.size());
    for (const auto& tok : tokens) {
        if (const double* r = table.lookup(tok)) rows.push_back(r);
    }
    Mat seq(static_cast<int>(rows.size()), table.dim);
    for (std::size_t t = 0; t < rows.size(); ++t) {
        std::copy(rows[t], rows[t] + table.dim, seq.row(static_cast<int>(t)));
    }
    return seq;
}

namespace {

void init_dir(LstmDirWeights& w, double bound, int hidden, Rng& rng) {
    for (double& x : w.w_ih.a) x = rng.uniform(-bound, bound);
    for (double& x : w.w_hh.a) x = rng.uniform(-bound, bound);
    for (double& x : w.b) x = rng.uniform(-bound, bound);
    // Forget-gate bias stabilizer.
    for (int k = hidden; k < 2 * hidden; ++k) w.b[k] += 1.0;
}

struct SplitIndices {
    std::vector<std::size_t> train, valid, test;
};

SplitIndices split_dataset(std::size_t n, const TrainConfig& cfg, Rng& rng) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    const std::size_t n_train = static_cast<std::size_t>(std::floor(cfg.train_frac * n));
    const std::size_t n_valid = static_cast<std::size_t>(std::floor(cfg.valid_frac * n));
    SplitIndices s;
    s.train.assign(order.begin(), order.begin() + n_train);
    s.valid.assign(order.begin() + n_train, order.begin() + n_train + n_valid);
    s.test.assign(order.begin() + n_train + n_valid, order.end());
    return s;
}

void require_both_labels(const std::vector<LabeledExample>& data) {
    bool has0 = false, has1 = false;
    for (const auto& ex : data) {
        if (ex.label == 0) has0 = true;
        else if (ex.label == 1) has1 = true;
        else throw Error::input("train: labels must be 0 or 1");
    }
    if (!has0 || !has1) throw Error::input("train: degenerate labels (single class)");
}

} // namespace

void init_model(SentimentModel& model, std::uint64_t seed) {
    Rng rng(seed);
    const double bound = 1.0 / std::sqrt(static_cast<double>(model.cfg.hidden_dim));
    for (auto& layer : model.layers) {
        init_dir(layer.fwd, bound, model.cfg.hidden_dim, rng);
        if (model.cfg.bidirectional) init_dir(layer.bwd, bound, model.cfg.hidden_dim, rng);
    }
    for (double& x : model.head_w) x = rng.uniform(-bound, bound);
    model.head_b = rng.uniform(-bound, bound);
}

TrainResult train(SentimentModel& model, const EmbeddingTable& table,
                  const std::vector<LabeledExample>& data, const TrainConfig& cfg) {
    cfg.validate();
    if (data.empty()) throw Error::input("train: empty dataset");
    require_both_labels(data);

    // Embed once up front; all-OOV examples are unusable and dropped with a
    // count before the split.
    TrainResult res;
    std::vector<Mat> seqs;
    std::vector<int> labels;
    seqs.reserve(data.size());
    for (const auto& ex : data) {
        Mat seq = embed_tokens(table, ex.tokens);
        if (seq.rows == 0) {
            ++res.skipped_oov;
            continue;
        }
        seqs.push_back(std::move(seq));
        labels.push_back(ex.label);
    }
    if (seqs.empty()) throw Error::empty("train: no scorable examples (all tokens OOV)");

    Rng rng(cfg.seed);
    init_model(model, rng.next_u64());
    SplitIndices split = split_dataset(seqs.size(), cfg, rng);
    if (split.train.empty()) throw Error::input("train: training split is empty");
    res.train_count = split.train.size();
    res.valid_count = split.valid.size();
    res.test_count = split.test.size();

    auto evaluate = [&](const std::vector<std::size_t>& idx, double& loss, double& acc) {
        if (idx.empty()) {
            loss = 0.0;
            acc = 0.0;
            return;
        }
        double l = 0.0;
        std::size_t correct = 0;
        for (std::size_t i : idx) {
            const double s = forward(model, seqs[i]);
            l += bce_loss(s, labels[i]);
            if ((s >= 0.5 ? 1 : 0) == labels[i]) ++correct;
        }
        loss = l / static_cast<double>(idx.size());
        acc = static_cast<double>(correct) / static_cast<double>(idx.size());
    };

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        std::vector<std::size_t> order = split.train;
        rng.shuffle(order);

        double epoch_loss = 0.0;
        std::size_t epoch_correct = 0;
        for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
            const std::size_t end = std::min(order.size(), start + cfg.batch_size);
            const double inv = 1.0 / static_cast<double>(end - start);
            ModelGrads grads = ModelGrads::zeros(model.cfg);
            for (std::size_t bi = start; bi < end; ++bi) {
                const std::size_t i = order[bi];
                ForwardCache cache;
                const double s = forward(model, seqs[i], &cache);
                epoch_loss += bce_loss(s, labels[i]);
                if ((s >= 0.5 ? 1 : 0) == labels[i]) ++epoch_correct;
                backward(model, seqs[i], cache, labels[i], inv, grads);
            }
            if (cfg.clip_norm > 0.0) {
                const double norm = std::sqrt(grads.squared_norm());
                if (norm > cfg.clip_norm) grads.scale(cfg.clip_norm / norm);
            }
            grads.axpy_into(model, -cfg.learning_rate);
        }

        EpochMetrics m;
        m.train_loss = epoch_loss / static_cast<double>(order.size());
        m.train_accuracy = static_cast<double>(epoch_correct) / static_cast<double>(order.size());
        evaluate(split.valid, m.valid_loss, m.valid_accuracy);
        res.epochs.push_back(m);
    }

    evaluate(split.test, res.test_loss, res.test_accuracy);
    return res;
}

double baseline_score(const std::vector<std::string>& tokens, const EmbeddingTable& table,
                      const BaselineModel& model) {
    Mat seq = embed_tokens(table, tokens);
    if (seq.rows == 0) throw Error::empty("unscorable: no in-vocabulary tokens");
    Vec mean(table.dim, 0.0);
    for (int t = 0; t < seq.rows; ++t) {
        const double* r = seq.row(t);
        for (int j = 0; j < table.dim; ++j) mean[j] += r[j];
    }
    for (int j = 0; j < table.dim; ++j) mean[j] /= seq.rows;
    const double z = model.b + dot(model.w.data(), mean.data(), table.dim);
    return 1.0 / (1.0 + std::exp(-z));
}

TrainResult train_baseline(BaselineModel& model, const EmbeddingTable& table,
                           const std::vector<LabeledExample>& data, const TrainConfig& cfg) {
    cfg.validate();
    if (data.empty()) throw Error::input("train: empty dataset");
    require_both_labels(data);

    TrainResult res;
    std::vector<Vec> means;
    std::vector<int> labels;
    for (const auto& ex : data) {
        Mat seq = embed_tokens(table, ex.tokens);
        if (seq.rows == 0) {
            ++res.skipped_oov;
            continue;
        }
        Vec mean(table.dim, 0.0);
        for (int t = 0; t < seq.rows; ++t) {
            const double* r = seq.row(t);
            for (int j = 0; j < table.dim; ++j) mean[j] += r[j];
        }
        for (int j = 0; j < table.dim; ++j) mean[j] /= seq.rows;
        means.push_back(std::move(mean));
        labels.push_back(ex.label);
    }
    if (means.empty()) throw Error::empty("train: no scorable examples (all tokens OOV)");

    Rng rng(cfg.seed);
    const double bound = 1.0 / std::sqrt(static_cast<double>(table.dim));
    model.w.assign(table.dim, 0.0);
    for (double& x : model.w) x = rng.uniform(-bound, bound);
    model.b = rng.uniform(-bound, bound);

    SplitIndices split = split_dataset(means.size(), cfg, rng);
    if (split.train.empty()) throw Error::input("train: training split is empty");
    res.train_count = split.train.size();
    res.valid_count = split.valid.size();
    res.test_count = split.test.size();

    auto score_of = [&](std::size_t i) {
        const double z = model.b + dot(model.w.data(), means[i].data(), table.dim);
        return 1.0 / (1.0 + std::exp(-z));
    };
    auto evaluate = [&](const std::vector<std::size_t>& idx, double& loss, double& acc) {
        if (idx.empty()) {
            loss = 0.0;
            acc = 0.0;
            return;
        }
        double l = 0.0;
        std::size_t correct = 0;
        for (std::size_t i : idx) {
            const double s = score_of(i);
            l += bce_loss(s, labels[i]);
            if ((s >= 0.5 ? 1 : 0) == labels[i]) ++correct;
        }
        loss = l / static_cast<double>(idx.size());
        acc = static_cast<double>(correct) / static_cast<double>(idx.size());
    };

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        std::vector<std::size_t> order = split.train;
        rng.shuffle(order);
        double epoch_loss = 0.0;
        std::size_t epoch_correct = 0;
        for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
            const std::size_t end = std::min(order.size(), start + cfg.batch_size);
            const double inv = 1.0 / static_cast<double>(end - start);
            Vec gw(table.dim, 0.0);
            double gb = 0.0;
            for (std::size_t bi = start; bi < end; ++bi) {
                const std::size_t i = order[bi];
                const double s = score_of(i);
                epoch_loss += bce_loss(s, labels[i]);
                if ((s >= 0.5 ? 1 : 0) == labels[i]) ++epoch_correct;
                const double d = inv * (s - labels[i]);
                for (int j = 0; j < table.dim; ++j) gw[j] += d * means[i][j];
                gb += d;
            }
            if (cfg.clip_norm > 0.0) {
                double norm = gb * gb;
                for (double x : gw) norm += x * x;
                norm = std::sqrt(norm);
                if (norm > cfg.clip_norm) {
                    const double s = cfg.clip_norm / norm;
                    for (double& x : gw) x *= s;
                    gb *= s;
                }
            }
            for (int j = 0; j < table.dim; ++j) model.w[j] -= cfg.learning_rate * gw[j];
            model.b -= cfg.learning_rate * gb;
        }
        EpochMetrics m;
        m.train_loss = epoch_loss / static_cast<double>(order.size());
        m.train_accuracy = static_cast<double>(epoch_correct) / static_cast<double>(order.size());
        evaluate(split.valid, m.valid_loss, m.valid_accuracy);
        res.epochs.push_back(m);
    }
    evaluate(split.test, res.test_loss, res.test_accuracy);
    return res;
}

} // namespace sentiline
