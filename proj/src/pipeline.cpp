#include "sentiline/pipeline.hpp"

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "sentiline/csv.hpp"
#include "sentiline/embeddings.hpp"
#include "sentiline/error.hpp"
#include "sentiline/esd.hpp"
#include "sentiline/report.hpp"
#include "sentiline/scorer.hpp"
#include "sentiline/timeparse.hpp"
#include "sentiline/train.hpp"
#include "sentiline/weights_io.hpp"

namespace sentiline {

namespace {

std::ifstream open_input(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error::input(std::string("cannot open ") + what + ": " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error::input("cannot write: " + path);
    return out;
}

CorpusFormat resolve_format(const PipelineConfig& cfg) {
    if (cfg.format == "jsonl") return CorpusFormat::jsonl;
    if (cfg.format == "csv") return CorpusFormat::csv;
    if (cfg.format == "auto") {
        if (cfg.corpus.size() >= 4 && cfg.corpus.substr(cfg.corpus.size() - 4) == ".csv") {
            return CorpusFormat::csv;
        }
        return CorpusFormat::jsonl;
    }
    throw Error::input("unknown corpus format: " + cfg.format);
}

Corpus load_corpus(const PipelineConfig& cfg) {
    if (cfg.corpus.empty()) throw Error::input("no corpus path configured");
    auto in = open_input(cfg.corpus, "corpus");
    IngestOptions opt;
    opt.dedup = cfg.dedup;
    ParseResult pr = parse_tweets(in, resolve_format(cfg), opt);
    for (const auto& e : pr.errors) {
        std::fprintf(stderr, "corpus row %zu: %s\n", e.line, e.message.c_str());
    }
    return std::move(pr.corpus);
}

EmbeddingTable load_table(const std::string& path) {
    auto in = open_input(path, "embeddings");
    EmbeddingTable t = load_embeddings(in);
    normalize_rows(t);
    return t;
}

std::vector<LabeledExample> labeled_examples(const Corpus& corpus) {
    std::vector<LabeledExample> out;
    for (const auto& r : corpus.records) {
        if (r.label) out.push_back({r.tokens, *r.label});
    }
    return out;
}

StopwordSets load_stopwords(const PipelineConfig& cfg) {
    if (cfg.stopwords_dir.empty()) return StopwordSets::builtin();
    return StopwordSets::from_dir(cfg.stopwords_dir);
}

void ensure_out_dir(const PipelineConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw Error::input("cannot create output directory: " + cfg.out_dir);
}

std::string now_iso(const PipelineConfig& cfg) {
    if (cfg.fixed_clock) return "1970-01-01T00:00:00Z";
    return format_iso8601_utc(static_cast<std::int64_t>(std::time(nullptr)));
}

// Shared tail of analyze/report: ESD over (optionally detrended) scores,
// segmentation, term ranking, emission.
void detect_and_emit(const PipelineConfig& cfg, const Corpus& corpus, ScoreSeries& series,
                     std::size_t unscored, const std::string& model_info,
                     bool write_csv) {
    if (series.points.empty()) throw Error::empty("nothing to analyze: zero scorable records");

    std::vector<double> raw(series.points.size());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = series.points[i].score;
    series.smoothed = moving_average(raw, cfg.window);

    std::vector<double> test_series = raw;
    if (cfg.detrend) {
        for (std::size_t i = 0; i < raw.size(); ++i) test_series[i] = raw[i] - series.smoothed[i];
    }

    EsdConfig ecfg;
    ecfg.alpha = cfg.alpha;
    ecfg.max_outliers = cfg.max_outliers;
    EsdResult esd = esd_test(test_series, ecfg);

    series.outlier_flags.assign(series.points.size(), false);
    for (std::size_t idx : esd.outlier_indices) series.outlier_flags[idx] = true;

    OutlierReport rep;
    rep.corpus.total = corpus.records.size();
    rep.corpus.scored = series.points.size();
    rep.corpus.unscored = unscored;
    rep.corpus.dedup_dropped = corpus.dedup_dropped;
    for (const auto& r : corpus.records) {
        rep.corpus.lang_counts[static_cast<std::size_t>(r.lang)] += 1;
    }
    rep.alpha = cfg.alpha;
    rep.r = ecfg.max_outliers == 0 ? esd_default_r(test_series.size()) : ecfg.max_outliers;
    rep.esd = esd;
    for (std::size_t idx : esd.outlier_indices) {
        rep.outlier_ids.push_back(series.points[idx].id);
    }

    rep.regions = segment_regions(series, cfg.gap);
    const StopwordSets stops = load_stopwords(cfg);
    for (auto& region : rep.regions) {
        std::vector<const TweetRecord*> members;
        for (std::size_t pi : region.member_points) {
            members.push_back(&corpus.records[series.points[pi].record_index]);
        }
        region.top_terms = term_frequencies(members, stops, cfg.top_terms);
    }

    rep.days = day_profile(series.points);
    rep.model_info = model_info;
    rep.generated_at = now_iso(cfg);
    rep.config = cfg;
    rep.series = series;

    ensure_out_dir(cfg);
    open_output(cfg.out_dir + "/report.json") << report_to_json(rep);
    if (write_csv) {
        auto csv = open_output(cfg.out_dir + "/scores.csv");
        write_scores_csv(series, csv);
    }
    open_output(cfg.out_dir + "/timeline.svg") << render_timeline_svg(series);
}

std::string describe_model(const SentimentModel& m) {
    std::ostringstream os;
    os << "bilstm(layers=" << m.cfg.layers << ",hidden=" << m.cfg.hidden_dim
       << ",embed=" << m.cfg.embed_dim << ")";
    return os.str();
}

ScoreSeries score_series(const PipelineConfig& cfg, const Corpus& corpus,
                         const EmbeddingTable& table, std::size_t& unscored,
                         std::string& model_info) {
    ScoreOutcome outcome;
    if (cfg.scorer_kind() == ScorerKind::lstm) {
        auto win = open_input(cfg.weights, "weights");
        SentimentModel model = load_weights(win);
        if (model.cfg.embed_dim != table.dim) {
            throw Error::input("weights embed_dim does not match embedding table dimension");
        }
        model_info = describe_model(model);
        outcome = score_corpus(model, table, corpus);
    } else {
        auto win = open_input(cfg.weights, "weights");
        BaselineModel model = load_baseline_weights(win);
        if (static_cast<int>(model.w.size()) != table.dim) {
            throw Error::input("baseline weights do not match embedding table dimension");
        }
        model_info = "baseline(mean-embedding logistic)";
        outcome = score_corpus_baseline(model, table, corpus);
    }
    ScoreSeries series;
    series.points = std::move(outcome.points);
    unscored = outcome.unscored;
    series.outlier_flags.assign(series.points.size(), false);
    return series;
}

} // namespace

double run_align(const PipelineConfig& cfg, const std::string& out_path) {
    if (cfg.src_embeddings.empty() || cfg.tgt_embeddings.empty() || cfg.dictionary.empty()) {
        throw Error::input("align needs src_embeddings, tgt_embeddings and dictionary");
    }
    auto src_in = open_input(cfg.src_embeddings, "source embeddings");
    EmbeddingTable src = load_embeddings(src_in);
    auto tgt_in = open_input(cfg.tgt_embeddings, "target embeddings");
    EmbeddingTable tgt = load_embeddings(tgt_in);
    if (src.dim != tgt.dim) throw Error::input("embedding dimensions differ");
    auto dict_in = open_input(cfg.dictionary, "dictionary");
    BilingualDictionary dict = load_dictionary(dict_in);

    // Keep only pairs present in both vocabularies.
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [s, t] : dict.pairs) {
        auto si = src.vocab.find(s);
        auto ti = tgt.vocab.find(t);
        if (si != src.vocab.end() && ti != tgt.vocab.end()) {
            pairs.emplace_back(si->second, ti->second);
        }
    }
    if (pairs.empty()) throw Error::input("dictionary shares no tokens with the tables");

    Mat x(static_cast<int>(pairs.size()), src.dim);
    Mat y(static_cast<int>(pairs.size()), src.dim);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        std::copy(src.row(pairs[i].first), src.row(pairs[i].first) + src.dim,
                  x.row(static_cast<int>(i)));
        std::copy(tgt.row(pairs[i].second), tgt.row(pairs[i].second) + tgt.dim,
                  y.row(static_cast<int>(i)));
    }

    OrthogonalMap map = procrustes_align(x, y);
    apply_map(map, src);
    auto out = open_output(out_path);
    save_embeddings(src, out);
    return map.orthogonality_residual();
}

void run_train(const PipelineConfig& cfg) {
    Corpus corpus = load_corpus(cfg);
    auto examples = labeled_examples(corpus);
    if (examples.empty()) throw Error::input("train: corpus has no labeled rows");
    EmbeddingTable table = load_table(cfg.embeddings);

    TrainConfig tc;
    tc.epochs = cfg.epochs;
    tc.learning_rate = cfg.learning_rate;
    tc.batch_size = cfg.batch_size;
    tc.clip_norm = cfg.clip_norm;
    tc.seed = cfg.seed;

    ensure_out_dir(cfg);
    nlohmann::ordered_json metrics;
    TrainResult result;
    if (cfg.scorer_kind() == ScorerKind::lstm) {
        ModelConfig mc;
        mc.embed_dim = table.dim;
        mc.hidden_dim = cfg.hidden_dim;
        mc.layers = cfg.layers;
        mc.bidirectional = true;
        SentimentModel model = SentimentModel::zeros(mc);
        result = train(model, table, examples, tc);
        auto wout = open_output(cfg.out_dir + "/weights.mlsw");
        save_weights(model, wout);
        metrics["model"] = describe_model(model);
    } else {
        BaselineModel model;
        result = train_baseline(model, table, examples, tc);
        auto wout = open_output(cfg.out_dir + "/weights.mlsw");
        save_baseline_weights(model, wout);
        metrics["model"] = "baseline(mean-embedding logistic)";
    }

    metrics["seed"] = cfg.seed;
    metrics["split"] = {{"train", result.train_count},
                        {"valid", result.valid_count},
                        {"test", result.test_count}};
    metrics["skipped_oov"] = result.skipped_oov;
    metrics["epochs"] = nlohmann::ordered_json::array();
    for (const auto& e : result.epochs) {
        metrics["epochs"].push_back({{"train_loss", e.train_loss},
                                     {"train_accuracy", e.train_accuracy},
                                     {"valid_loss", e.valid_loss},
                                     {"valid_accuracy", e.valid_accuracy}});
    }
    metrics["test_loss"] = result.test_loss;
    metrics["test_accuracy"] = result.test_accuracy;
    open_output(cfg.out_dir + "/metrics.json") << metrics.dump(2) << "\n";
}

void run_score(const PipelineConfig& cfg) {
    Corpus corpus = load_corpus(cfg);
    EmbeddingTable table = load_table(cfg.embeddings);
    std::size_t unscored = 0;
    std::string model_info;
    ScoreSeries series = score_series(cfg, corpus, table, unscored, model_info);
    if (series.points.empty()) throw Error::empty("nothing to analyze: zero scorable records");
    std::vector<double> raw(series.points.size());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = series.points[i].score;
    series.smoothed = moving_average(raw, cfg.window);
    ensure_out_dir(cfg);
    auto csv = open_output(cfg.out_dir + "/scores.csv");
    write_scores_csv(series, csv);
}

void run_analyze(const PipelineConfig& cfg) {
    Corpus corpus = load_corpus(cfg);
    EmbeddingTable table = load_table(cfg.embeddings);
    std::size_t unscored = 0;
    std::string model_info;
    ScoreSeries series = score_series(cfg, corpus, table, unscored, model_info);
    detect_and_emit(cfg, corpus, series, unscored, model_info, /*write_csv=*/true);
}

void run_report(const PipelineConfig& cfg) {
    Corpus corpus = load_corpus(cfg);
    if (cfg.scores.empty()) throw Error::input("report needs a scores csv path");
    auto sin = open_input(cfg.scores, "scores csv");
    const auto rows = read_scores_csv(sin);
    if (rows.empty()) throw Error::empty("nothing to analyze: empty scores csv");

    std::unordered_map<std::string, std::size_t> by_id;
    for (std::size_t i = 0; i < corpus.records.size(); ++i) {
        by_id.emplace(corpus.records[i].id, i);
    }
    ScoreSeries series;
    for (const auto& row : rows) {
        auto it = by_id.find(row.id);
        if (it == by_id.end()) {
            throw Error::input("scores csv references unknown record id: " + row.id);
        }
        series.points.push_back({row.id, row.timestamp, row.score, it->second});
    }
    series.outlier_flags.assign(series.points.size(), false);
    const std::size_t unscored = corpus.records.size() > series.points.size()
                                     ? corpus.records.size() - series.points.size()
                                     : 0;
    detect_and_emit(cfg, corpus, series, unscored, "scores.csv (prescored)",
                    /*write_csv=*/false);
}

} // namespace sentiline
