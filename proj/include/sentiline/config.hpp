#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace sentiline {

enum class ScorerKind { lstm, baseline };

// Flat key=value configuration shared by all subcommands. Every key can be
// overridden by the CLI flag of the same name.
struct PipelineConfig {
    std::string corpus;
    std::string format = "auto"; // jsonl | csv | auto (by extension)
    std::string embeddings;
    std::string src_embeddings;
    std::string tgt_embeddings;
    std::string dictionary;
    std::string weights;
    std::string scores; // input CSV for the report subcommand
    std::string stopwords_dir;
    std::string out_dir = ".";

    double alpha = 0.05;
    std::size_t max_outliers = 0; // 0 = ceil(0.05 n)
    std::size_t window = 25;
    std::size_t gap = 5;
    bool dedup = true;
    bool detrend = false;
    std::uint64_t seed = 0;
    std::string scorer = "lstm";
    std::size_t top_terms = 50;
    int csls_k = 10;

    int epochs = 4;
    double learning_rate = 0.1;
    int batch_size = 16;
    double clip_norm = 5.0;
    int hidden_dim = 300;
    int layers = 2;

    bool fixed_clock = false;

    ScorerKind scorer_kind() const;

    // Parses a key=value file ('#' comments, blank lines ok); unknown keys
    // are fatal. Later assignments win.
    void apply_file(const std::string& path);
    void apply_key(const std::string& key, const std::string& value);

    // Everything, stringified, for the report's config echo.
    std::map<std::string, std::string> echo() const;
};

} // namespace sentiline
