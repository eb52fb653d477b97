#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "sentiline/config.hpp"
#include "sentiline/error.hpp"
#include "sentiline/pipeline.hpp"

namespace {

using sentiline::PipelineConfig;

// Tracks which flags were actually passed so the precedence is
// defaults < config file < CLI flags.
struct FlagSink {
    std::vector<std::pair<std::string, std::string>> assignments;
};

void add_option(CLI::App* cmd, FlagSink& sink, const std::string& key,
                const std::string& help) {
    cmd->add_option_function<std::string>(
           "--" + key, [&sink, key](const std::string& v) { sink.assignments.emplace_back(key, v); },
           help)
        ->expected(1);
}

void add_common_flags(CLI::App* cmd, FlagSink& sink) {
    add_option(cmd, sink, "corpus", "corpus file (jsonl or csv)");
    add_option(cmd, sink, "format", "corpus format: jsonl|csv|auto");
    add_option(cmd, sink, "embeddings", "shared aligned embedding file");
    add_option(cmd, sink, "src_embeddings", "source-language embedding file (align)");
    add_option(cmd, sink, "tgt_embeddings", "target-language embedding file (align)");
    add_option(cmd, sink, "dictionary", "bilingual dictionary file (align)");
    add_option(cmd, sink, "weights", "model weight file");
    add_option(cmd, sink, "scores", "scores csv produced by score/analyze (report)");
    add_option(cmd, sink, "stopwords_dir", "directory with stopwords.{en,de,es}.txt");
    add_option(cmd, sink, "alpha", "ESD significance level");
    add_option(cmd, sink, "max_outliers", "ESD outlier upper bound r (0 = ceil(0.05 n))");
    add_option(cmd, sink, "window", "moving average window");
    add_option(cmd, sink, "gap", "max index gap when merging outlier regions");
    add_option(cmd, sink, "dedup", "drop exact duplicate texts (true/false)");
    add_option(cmd, sink, "detrend", "run ESD on score minus moving average");
    add_option(cmd, sink, "scorer", "scorer: lstm|baseline");
    add_option(cmd, sink, "top_terms", "terms per region in the report");
    add_option(cmd, sink, "csls_k", "CSLS neighborhood size");
    add_option(cmd, sink, "epochs", "training epochs");
    add_option(cmd, sink, "learning_rate", "SGD learning rate");
    add_option(cmd, sink, "batch_size", "training batch size");
    add_option(cmd, sink, "clip_norm", "gradient clipping L2 norm");
    add_option(cmd, sink, "hidden_dim", "LSTM hidden units per direction");
    add_option(cmd, sink, "layers", "LSTM layer count");
    add_option(cmd, sink, "fixed_clock", "pin report timestamps (for reproducible output)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multilingual sentiment timeline analyzer"};
    app.require_subcommand(1);

    std::string config_path;
    std::string seed_str;
    std::string out_dir;
    app.add_option("--config", config_path, "key=value config file")->expected(1);
    app.add_option("--seed", seed_str, "PRNG seed")->expected(1);
    app.add_option("--out-dir", out_dir, "output directory")->expected(1);

    FlagSink sink;
    CLI::App* align = app.add_subcommand("align", "Procrustes-align embeddings via a dictionary");
    std::string align_out = "aligned.vec";
    align->add_option("--output", align_out, "output embedding file");
    CLI::App* train = app.add_subcommand("train", "train the sentiment scorer");
    CLI::App* score = app.add_subcommand("score", "score a corpus to scores.csv");
    CLI::App* analyze = app.add_subcommand("analyze", "score + ESD + regions + report");
    CLI::App* report = app.add_subcommand("report", "re-run detection from a scores.csv");
    for (CLI::App* cmd : {align, train, score, analyze, report}) {
        add_common_flags(cmd, sink);
        // the global flags also work after the subcommand name
        cmd->add_option("--config", config_path, "key=value config file")->expected(1);
        cmd->add_option("--seed", seed_str, "PRNG seed")->expected(1);
        cmd->add_option("--out-dir", out_dir, "output directory")->expected(1);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        PipelineConfig cfg;
        if (!config_path.empty()) cfg.apply_file(config_path);
        for (const auto& [key, value] : sink.assignments) cfg.apply_key(key, value);
        if (!seed_str.empty()) cfg.apply_key("seed", seed_str);
        if (!out_dir.empty()) cfg.apply_key("out_dir", out_dir);

        if (align->parsed()) {
            const double residual = sentiline::run_align(cfg, align_out);
            std::printf("aligned -> %s (orthogonality residual %.3e)\n", align_out.c_str(),
                        residual);
        } else if (train->parsed()) {
            sentiline::run_train(cfg);
            std::printf("trained -> %s/weights.mlsw, %s/metrics.json\n", cfg.out_dir.c_str(),
                        cfg.out_dir.c_str());
        } else if (score->parsed()) {
            sentiline::run_score(cfg);
            std::printf("scored -> %s/scores.csv\n", cfg.out_dir.c_str());
        } else if (analyze->parsed()) {
            sentiline::run_analyze(cfg);
            std::printf("analyzed -> %s/report.json, scores.csv, timeline.svg\n",
                        cfg.out_dir.c_str());
        } else if (report->parsed()) {
            sentiline::run_report(cfg);
            std::printf("reported -> %s/report.json, timeline.svg\n", cfg.out_dir.c_str());
        }
    } catch (const sentiline::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.kind()) {
            case sentiline::ErrorKind::input: return 2;
            case sentiline::ErrorKind::empty: return 3;
            case sentiline::ErrorKind::numeric: return 4;
        }
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
