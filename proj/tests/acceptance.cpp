// Acceptance gates for the pipeline. Each criterion prints one PASS/FAIL
// line; the process exits with the number of failed gates.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_helpers.hpp"
#include "reference.hpp"
#include "sentiline/embeddings.hpp"
#include "sentiline/esd.hpp"
#include "sentiline/lstm.hpp"
#include "sentiline/rng.hpp"
#include "sentiline/stats.hpp"
#include "sentiline/svd.hpp"
#include "sentiline/timeline.hpp"
#include "sentiline/timeparse.hpp"
#include "sentiline/train.hpp"
#include "sentiline/weights_io.hpp"

using namespace sentiline;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void gate(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%2d] %-58s %s  (%.1f s)%s%s\n", number, name.c_str(), ok ? "PASS" : "FAIL",
                secs, detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++failures;
}

// ---- shared fixtures -------------------------------------------------------

EmbeddingTable table_from(const std::vector<std::string>& tokens, const std::vector<Vec>& rows) {
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

Mat random_orthogonal(int d, Rng& rng) {
    Mat q(d, d);
    for (int col = 0; col < d; ++col) {
        Vec v(d);
        for (double& x : v) x = rng.gaussian();
        for (int prev = 0; prev < col; ++prev) {
            double proj = 0.0;
            for (int i = 0; i < d; ++i) proj += v[i] * q.at(i, prev);
            for (int i = 0; i < d; ++i) v[i] -= proj * q.at(i, prev);
        }
        double nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        for (int i = 0; i < d; ++i) q.at(i, col) = v[i] / nrm;
    }
    return q;
}

std::string polarity_embeddings(int per_class, int dim, std::uint64_t seed) {
    Rng rng(seed);
    std::ostringstream out;
    out << (2 * per_class + dim - 1) << " " << dim << "\n";
    char buf[32];
    auto emit = [&](const std::string& tok, const Vec& v) {
        out << tok;
        for (double x : v) {
            std::snprintf(buf, sizeof(buf), " %.9g", x);
            out << buf;
        }
        out << "\n";
    };
    for (int i = 0; i < per_class; ++i) {
        Vec v(dim, 0.0);
        v[0] = 1.0;
        for (int j = 1; j < dim; ++j) v[j] = 0.1 * rng.gaussian();
        emit("u" + std::to_string(i), v);
    }
    for (int i = 0; i < per_class; ++i) {
        Vec v(dim, 0.0);
        v[0] = -1.0;
        for (int j = 1; j < dim; ++j) v[j] = 0.1 * rng.gaussian();
        emit("d" + std::to_string(i), v);
    }
    for (int j = 1; j < dim; ++j) {
        Vec v(dim, 0.0);
        v[j] = 1.0;
        emit("f" + std::to_string(j), v);
    }
    return out.str();
}

std::string labeled_corpus(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::ostringstream out;
    for (int i = 0; i < n; ++i) {
        const int label = static_cast<int>(rng.below(2));
        std::string text;
        const int len = 3 + static_cast<int>(rng.below(3));
        for (int t = 0; t < len; ++t) {
            text += (label ? "u" : "d") + std::to_string(rng.below(12)) + " ";
        }
        text += "x" + std::to_string(i);
        out << R"({"id":"t)" << i << R"(","text":")" << text << R"(","created_at":")"
            << format_iso8601_utc(1549500000 + i * 60) << R"(","label":)" << label << "}\n";
    }
    return out.str();
}

struct Burst {
    int start, len;
    bool positive;
};

std::string burst_corpus(int n, const std::vector<Burst>& bursts, std::uint64_t seed) {
    Rng rng(seed);
    std::ostringstream out;
    for (int i = 0; i < n; ++i) {
        const Burst* in_burst = nullptr;
        for (const auto& b : bursts) {
            if (i >= b.start && i < b.start + b.len) in_burst = &b;
        }
        std::string text;
        if (in_burst) {
            const char* c = in_burst->positive ? "u" : "d";
            for (int t = 0; t < 6; ++t) text += c + std::to_string(rng.below(12)) + " ";
        } else {
            // background: polarity-balanced mixture (equal u and d counts)
            // plus fillers, shuffled; net sentiment signal is only jitter
            std::vector<std::string> toks;
            const int pairs = 1 + static_cast<int>(rng.below(2));
            for (int t = 0; t < pairs; ++t) {
                toks.push_back("u" + std::to_string(rng.below(12)));
                toks.push_back("d" + std::to_string(rng.below(12)));
            }
            const int fills = 1 + static_cast<int>(rng.below(3));
            for (int t = 0; t < fills; ++t) {
                toks.push_back("f" + std::to_string(1 + rng.below(6)));
            }
            rng.shuffle(toks);
            for (const auto& t : toks) text += t + " ";
        }
        text += "x" + std::to_string(i);
        out << R"({"id":"b)" << i << R"(","text":")" << text << R"(","created_at":")"
            << format_iso8601_utc(1549500000 + static_cast<std::int64_t>(i) * 120) << R"("})"
            << "\n";
    }
    return out.str();
}

// ---- criteria --------------------------------------------------------------

bool criterion_esd_oracle(std::string& detail) {
    Rng rng(20190207);
    const auto t0 = std::chrono::steady_clock::now();
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 25 + rng.below(476);
        std::vector<double> series(n);
        for (double& x : series) x = rng.gaussian();
        if (trial % 2 == 0) {
            const std::size_t spikes = 1 + rng.below(4);
            for (std::size_t s = 0; s < spikes; ++s) {
                const double sign = rng.below(2) ? 1.0 : -1.0;
                series[rng.below(n)] += sign * (4.0 + 8.0 * rng.next_double());
            }
        }
        EsdConfig cfg;
        cfg.alpha = 0.05;
        const std::size_t r = esd_default_r(n);
        auto mine = esd_test(series, cfg);
        auto oracle = ref::esd_bruteforce(series, 0.05, r);
        if (mine.num_outliers != oracle.num_outliers) {
            detail = "num_outliers mismatch at trial " + std::to_string(trial);
            return false;
        }
        if (mine.outlier_indices != oracle.outlier_indices) {
            detail = "outlier index mismatch at trial " + std::to_string(trial);
            return false;
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (std::abs(mine.r_stats[i] - oracle.r_stats[i]) > 1e-8 ||
                std::abs(mine.lambdas[i] - oracle.lambdas[i]) > 1e-8) {
                detail = "R/lambda disagreement at trial " + std::to_string(trial);
                return false;
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 10.0) {
        detail = "runtime " + std::to_string(secs) + " s exceeds 10 s";
        return false;
    }
    return true;
}

bool criterion_rosner(std::string& detail) {
    const std::vector<double> data = {
        -0.25, 0.68, 0.94, 1.15, 1.20, 1.26, 1.26, 1.34, 1.38, 1.43, 1.49, 1.49, 1.55, 1.56,
        1.58,  1.65, 1.69, 1.70, 1.76, 1.77, 1.81, 1.91, 1.94, 1.96, 1.99, 2.06, 2.09, 2.10,
        2.14,  2.15, 2.23, 2.24, 2.26, 2.35, 2.37, 2.40, 2.47, 2.54, 2.62, 2.64, 2.90, 2.92,
        2.92,  2.93, 3.21, 3.26, 3.30, 3.59, 3.68, 4.30, 4.64, 5.34, 5.42, 6.01};
    EsdConfig cfg;
    cfg.alpha = 0.05;
    cfg.max_outliers = 10;
    auto result = esd_test(data, cfg);
    if (result.num_outliers != 3) {
        detail = "expected 3 outliers, got " + std::to_string(result.num_outliers);
        return false;
    }
    const std::set<std::size_t> got(result.outlier_indices.begin(),
                                    result.outlier_indices.end());
    if (got != std::set<std::size_t>{51, 52, 53}) {
        detail = "outlier indices differ from the published example";
        return false;
    }
    return true;
}

bool criterion_t_quantile(std::string& detail) {
    for (double p = 0.55; p < 0.995; p += 0.005) {
        const double closed = std::tan(3.14159265358979323846 * (p - 0.5));
        if (std::abs(t_quantile(p, 1.0) - closed) > 1e-8 * std::max(1.0, std::abs(closed))) {
            detail = "nu=1 closed form missed at p=" + std::to_string(p);
            return false;
        }
    }
    if (std::abs(t_quantile(0.975, 1e6) - 1.95996) >= 1e-3) {
        detail = "large-nu quantile off";
        return false;
    }
    for (double nu : {1.0, 3.0, 12.0, 200.0}) {
        double prev = -1e308;
        for (double p = 0.01; p < 0.999; p += 0.01) {
            const double q = t_quantile(p, nu);
            if (q <= prev) {
                detail = "monotonicity violated at nu=" + std::to_string(nu);
                return false;
            }
            prev = q;
        }
    }
    return true;
}

bool criterion_procrustes(std::string& detail) {
    Rng rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 10, k = 50;
        Mat planted = random_orthogonal(d, rng);
        Mat x(k, d);
        for (double& v : x.a) v = rng.gaussian();
        Mat y(k, d);
        for (int i = 0; i < k; ++i) matvec(planted, x.row(i), y.row(i));
        auto map = procrustes_align(x, y);
        if (map.orthogonality_residual() >= 1e-8) {
            detail = "orthogonality residual too large at trial " + std::to_string(trial);
            return false;
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < map.w.a.size(); ++i) {
            worst = std::max(worst, std::abs(map.w.a[i] - planted.a[i]));
        }
        if (worst >= 1e-6) {
            detail = "recovery error " + std::to_string(worst) + " at trial " +
                     std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool criterion_gradcheck(std::string& detail) {
    for (int seed = 0; seed < 10; ++seed) {
        Rng rng(9000 + seed);
        ModelConfig cfg;
        cfg.embed_dim = 2 + static_cast<int>(rng.below(3));
        cfg.hidden_dim = 1 + static_cast<int>(rng.below(4)); // H <= 4
        cfg.layers = 2;
        SentimentModel m = SentimentModel::zeros(cfg);
        init_model(m, 777 + seed);

        std::vector<Mat> seqs;
        std::vector<int> labels;
        for (int b = 0; b < 2; ++b) {
            const int steps = 1 + static_cast<int>(rng.below(4)); // T <= 4
            Mat seq(steps, cfg.embed_dim);
            for (double& v : seq.a) v = rng.uniform(-1.0, 1.0);
            seqs.push_back(std::move(seq));
            labels.push_back(static_cast<int>(rng.below(2)));
        }

        ModelGrads grads = ModelGrads::zeros(cfg);
        const double inv = 1.0 / static_cast<double>(seqs.size());
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            ForwardCache cache;
            forward(m, seqs[i], &cache);
            backward(m, seqs[i], cache, labels[i], inv, grads);
        }

        auto batch_loss = [&]() {
            double acc = 0.0;
            for (std::size_t i = 0; i < seqs.size(); ++i) {
                acc += bce_loss(forward(m, seqs[i]), labels[i]);
            }
            return acc / static_cast<double>(seqs.size());
        };

        std::vector<std::pair<double*, std::size_t>> params;
        std::vector<std::pair<const double*, std::size_t>> analytic;
        for (int l = 0; l < cfg.layers; ++l) {
            params.emplace_back(m.layers[l].fwd.w_ih.a.data(), m.layers[l].fwd.w_ih.a.size());
            params.emplace_back(m.layers[l].fwd.w_hh.a.data(), m.layers[l].fwd.w_hh.a.size());
            params.emplace_back(m.layers[l].fwd.b.data(), m.layers[l].fwd.b.size());
            params.emplace_back(m.layers[l].bwd.w_ih.a.data(), m.layers[l].bwd.w_ih.a.size());
            params.emplace_back(m.layers[l].bwd.w_hh.a.data(), m.layers[l].bwd.w_hh.a.size());
            params.emplace_back(m.layers[l].bwd.b.data(), m.layers[l].bwd.b.size());
            analytic.emplace_back(grads.layers[l].fwd.w_ih.a.data(), grads.layers[l].fwd.w_ih.a.size());
            analytic.emplace_back(grads.layers[l].fwd.w_hh.a.data(), grads.layers[l].fwd.w_hh.a.size());
            analytic.emplace_back(grads.layers[l].fwd.b.data(), grads.layers[l].fwd.b.size());
            analytic.emplace_back(grads.layers[l].bwd.w_ih.a.data(), grads.layers[l].bwd.w_ih.a.size());
            analytic.emplace_back(grads.layers[l].bwd.w_hh.a.data(), grads.layers[l].bwd.w_hh.a.size());
            analytic.emplace_back(grads.layers[l].bwd.b.data(), grads.layers[l].bwd.b.size());
        }
        params.emplace_back(m.head_w.data(), m.head_w.size());
        params.emplace_back(&m.head_b, 1);
        analytic.emplace_back(grads.head_w.data(), grads.head_w.size());
        analytic.emplace_back(&grads.head_b, 1);

        const double eps = 1e-4;
        for (std::size_t s = 0; s < params.size(); ++s) {
            for (std::size_t k = 0; k < params[s].second; ++k) {
                double& p = params[s].first[k];
                const double saved = p;
                p = saved + eps;
                const double up = batch_loss();
                p = saved - eps;
                const double down = batch_loss();
                p = saved;
                const double numeric = (up - down) / (2.0 * eps);
                const double a = analytic[s].first[k];
                const double denom = std::max({std::abs(numeric), std::abs(a), 1e-6});
                if (std::abs(numeric - a) / denom >= 1e-3) {
                    detail = "gradient mismatch, seed " + std::to_string(seed);
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_training(std::string& detail) {
    Rng rng(321);
    const int dim = 10;
    std::vector<std::string> names;
    std::vector<Vec> rows;
    for (const char* prefix : {"en", "de", "es"}) { // three languages, one space
        for (int i = 0; i < 12; ++i) {
            for (int polarity = 0; polarity < 2; ++polarity) {
                Vec v(dim, 0.0);
                v[0] = polarity ? 1.0 : -1.0;
                for (int j = 1; j < dim; ++j) v[j] = 0.15 * rng.gaussian();
                names.push_back(std::string(prefix) + (polarity ? "pos" : "neg") +
                                std::to_string(i));
                rows.push_back(v);
            }
        }
    }
    auto table = table_from(names, rows);

    std::vector<LabeledExample> data;
    const char* langs[3] = {"en", "de", "es"};
    for (int i = 0; i < 1000; ++i) {
        const int label = static_cast<int>(rng.below(2));
        LabeledExample ex;
        ex.label = label;
        const std::string prefix = std::string(langs[rng.below(3)]) + (label ? "pos" : "neg");
        const int len = 3 + static_cast<int>(rng.below(4));
        for (int t = 0; t < len; ++t) ex.tokens.push_back(prefix + std::to_string(rng.below(12)));
        data.push_back(std::move(ex));
    }

    TrainConfig cfg;
    cfg.epochs = 4; // per the training procedure under test
    cfg.seed = 20190217;
    ModelConfig mc;
    mc.embed_dim = dim;
    mc.hidden_dim = 8;
    SentimentModel model = SentimentModel::zeros(mc);
    auto result = train(model, table, data, cfg);

    if (result.epochs.size() != 4) {
        detail = "expected 4 epochs";
        return false;
    }
    if (result.test_accuracy < 0.95) {
        detail = "test accuracy " + std::to_string(result.test_accuracy);
        return false;
    }
    for (std::size_t e = 1; e < result.epochs.size(); ++e) {
        if (result.epochs[e].train_loss > result.epochs[e - 1].train_loss + 1e-3) {
            detail = "train loss increased at epoch " + std::to_string(e + 1);
            return false;
        }
    }
    return true;
}

bool criterion_moving_average(std::string& detail) {
    Rng rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x(100 + rng.below(900));
        for (double& v : x) v = rng.next_double();
        auto mine = moving_average(x); // default window = 25
        auto dflt = moving_average(x, 25);
        auto brute = ref::moving_average(x, 25);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (mine[i] != dflt[i]) {
                detail = "default window is not 25";
                return false;
            }
            if (std::abs(mine[i] - brute[i]) > 1e-12) {
                detail = "brute-force deviation at index " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

bool criterion_injection(std::string& detail) {
    auto dir = cli::fresh_dir("acceptance_e2e");
    const int n = 3200;
    const Burst pos{1200, 80, true};
    const Burst neg{2200, 60, false};
    cli::write_file(dir / "emb.vec", polarity_embeddings(12, 300, 77));
    cli::write_file(dir / "train.jsonl", labeled_corpus(120, 78));
    cli::write_file(dir / "corpus.jsonl", burst_corpus(n, {pos, neg}, 79));

    auto trained = cli::run("train --corpus " + (dir / "train.jsonl").string() +
                                " --embeddings " + (dir / "emb.vec").string() +
                                " --hidden_dim 300 --epochs 2 --learning_rate 0.5" +
                                " --batch_size 8 --seed 41 --out-dir " + dir.string(),
                            dir);
    if (trained.exit_code != 0) {
        detail = "training failed: " + trained.stderr_text;
        return false;
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto analyzed = cli::run("analyze --corpus " + (dir / "corpus.jsonl").string() +
                                 " --embeddings " + (dir / "emb.vec").string() + " --weights " +
                                 (dir / "weights.mlsw").string() +
                                 " --fixed_clock true --out-dir " + (dir / "out").string(),
                             dir);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (analyzed.exit_code != 0) {
        detail = "analyze failed: " + analyzed.stderr_text;
        return false;
    }

    auto report = nlohmann::json::parse(cli::read_file(dir / "out" / "report.json"));
    auto covered = [&](int index, bool positive) {
        const std::int64_t ts = 1549500000 + static_cast<std::int64_t>(index) * 120;
        for (const auto& region : report["regions"]) {
            const bool region_pos = region["polarity"] == "positive";
            if (region_pos != positive) continue;
            if (region["start_ts"].get<std::int64_t>() <= ts &&
                ts <= region["end_ts"].get<std::int64_t>()) {
                return true;
            }
        }
        return false;
    };
    int total = 0, hit = 0;
    for (const Burst& b : {pos, neg}) {
        for (int i = b.start; i < b.start + b.len; ++i) {
            ++total;
            if (covered(i, b.positive)) ++hit;
        }
    }
    const double coverage = static_cast<double>(hit) / total;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "coverage %.1f%%, analyze %.1f s", 100.0 * coverage, secs);
    detail = buf;
    if (coverage < 0.90) return false;
    if (secs >= 60.0) return false;
    return true;
}

fs::path g_det_dir;

bool criterion_determinism(std::string& detail) {
    auto dir = cli::fresh_dir("acceptance_det");
    g_det_dir = dir;
    cli::write_file(dir / "emb.vec", polarity_embeddings(10, 16, 91));
    cli::write_file(dir / "train.jsonl", labeled_corpus(100, 92));
    cli::write_file(dir / "corpus.jsonl",
                    burst_corpus(500, {{200, 30, true}, {380, 20, false}}, 93));

    // Identical invocations write to the same out dir; the first run's
    // artifacts are stashed aside for the byte comparison.
    const std::string train_cmd = "train --corpus " + (dir / "train.jsonl").string() +
                                  " --embeddings " + (dir / "emb.vec").string() +
                                  " --hidden_dim 16 --epochs 4 --learning_rate 1.0" +
                                  " --batch_size 4 --seed 4242 --out-dir " +
                                  (dir / "t").string();
    if (cli::run(train_cmd, dir).exit_code != 0) {
        detail = "training failed";
        return false;
    }
    const std::string weights1 = cli::read_file(dir / "t" / "weights.mlsw");
    const std::string metrics1 = cli::read_file(dir / "t" / "metrics.json");
    if (cli::run(train_cmd, dir).exit_code != 0) {
        detail = "training rerun failed";
        return false;
    }
    if (weights1 != cli::read_file(dir / "t" / "weights.mlsw")) {
        detail = "weight files differ between identical seeded runs";
        return false;
    }
    if (metrics1 != cli::read_file(dir / "t" / "metrics.json")) {
        detail = "metrics differ between identical seeded runs";
        return false;
    }

    const std::string analyze_cmd =
        "analyze --corpus " + (dir / "corpus.jsonl").string() + " --embeddings " +
        (dir / "emb.vec").string() + " --weights " + (dir / "t" / "weights.mlsw").string() +
        " --fixed_clock true --seed 7 --out-dir " + (dir / "a1").string();
    if (cli::run(analyze_cmd, dir).exit_code != 0) {
        detail = "analyze failed";
        return false;
    }
    std::map<std::string, std::string> first;
    for (const char* artifact : {"report.json", "scores.csv", "timeline.svg"}) {
        first[artifact] = cli::read_file(dir / "a1" / artifact);
    }
    if (cli::run(analyze_cmd, dir).exit_code != 0) {
        detail = "analyze rerun failed";
        return false;
    }
    for (const char* artifact : {"report.json", "scores.csv", "timeline.svg"}) {
        if (first[artifact] != cli::read_file(dir / "a1" / artifact)) {
            detail = std::string(artifact) + " differs between identical runs";
            return false;
        }
    }
    return true;
}

bool criterion_round_trips(std::string& detail) {
    // Weight container: load(save) == original, byte for byte.
    ModelConfig cfg;
    cfg.embed_dim = 12;
    cfg.hidden_dim = 6;
    SentimentModel m = SentimentModel::zeros(cfg);
    init_model(m, 31337);
    std::ostringstream first;
    save_weights(m, first);
    std::istringstream back(first.str());
    SentimentModel loaded = load_weights(back);
    std::ostringstream second;
    save_weights(loaded, second);
    if (first.str() != second.str()) {
        detail = "weight file round-trip not byte-identical";
        return false;
    }

    // Report JSON: parse and re-dump reproduces the file.
    if (g_det_dir.empty()) {
        detail = "determinism fixture missing";
        return false;
    }
    const std::string report_text = cli::read_file(g_det_dir / "a1" / "report.json");
    auto parsed = nlohmann::ordered_json::parse(report_text);
    if (parsed.dump(2) + "\n" != report_text) {
        detail = "report JSON round-trip changed bytes";
        return false;
    }

    // SVG: well-formed XML with exactly one scatter mark per scored point.
    const std::string svg = cli::read_file(g_det_dir / "a1" / "timeline.svg");
    if (!cli::xml_well_formed(svg)) {
        detail = "timeline SVG is not well-formed";
        return false;
    }
    const std::size_t scored = parsed["corpus"]["scored"].get<std::size_t>();
    const std::size_t circles = cli::count_occurrences(svg, "<circle");
    if (circles != scored) {
        detail = "expected " + std::to_string(scored) + " scatter marks, found " +
                 std::to_string(circles);
        return false;
    }
    return true;
}

} // namespace

int main() {
    std::printf("acceptance suite\n================\n");
    gate(1, "ESD oracle equivalence on 200 seeded series", criterion_esd_oracle);
    gate(2, "published 54-point generalized ESD example", criterion_rosner);
    gate(3, "t-quantile closed form, normal limit, monotonicity", criterion_t_quantile);
    gate(4, "Procrustes recovery of 20 planted rotations", criterion_procrustes);
    gate(5, "LSTM gradients vs central finite differences (10 seeds)", criterion_gradcheck);
    gate(6, "training sanity on separable multilingual toy corpus", criterion_training);
    gate(7, "moving average vs brute force, window 25 default", criterion_moving_average);
    gate(8, "end-to-end injected bursts at 3200-record scale", criterion_injection);
    gate(9, "bit-identical rerun of train and analyze", criterion_determinism);
    gate(10, "weight, report JSON and SVG format round-trips", criterion_round_trips);

    if (failures == 0) std::printf("\nacceptance: all 10 criteria passed\n");
    else std::printf("\nacceptance: %d criterion(s) FAILED\n", failures);
    return failures;
}
