#include "sentiline/config.hpp"

#include <cstdio>
#include <fstream>

#include "sentiline/error.hpp"

namespace sentiline {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return s.substr(b, e - b);
}

bool parse_bool(const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw Error::input("config: not a boolean: " + v);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

ScorerKind PipelineConfig::scorer_kind() const {
    if (scorer == "lstm") return ScorerKind::lstm;
    if (scorer == "baseline") return ScorerKind::baseline;
    throw Error::input("config: scorer must be lstm or baseline, got " + scorer);
}

void PipelineConfig::apply_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error::input("cannot open config file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw Error::input("config: expected key=value at line " + std::to_string(lineno));
        }
        apply_key(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

void PipelineConfig::apply_key(const std::string& key, const std::string& value) {
    auto as_size = [&]() -> std::size_t {
        return static_cast<std::size_t>(std::stoull(value));
    };
    if (key == "corpus") corpus = value;
    else if (key == "format") format = value;
    else if (key == "embeddings") embeddings = value;
    else if (key == "src_embeddings") src_embeddings = value;
    else if (key == "tgt_embeddings") tgt_embeddings = value;
    else if (key == "dictionary") dictionary = value;
    else if (key == "weights") weights = value;
    else if (key == "scores") scores = value;
    else if (key == "stopwords_dir") stopwords_dir = value;
    else if (key == "out_dir") out_dir = value;
    else if (key == "alpha") alpha = std::stod(value);
    else if (key == "max_outliers") max_outliers = as_size();
    else if (key == "window") window = as_size();
    else if (key == "gap") gap = as_size();
    else if (key == "dedup") dedup = parse_bool(value);
    else if (key == "detrend") detrend = parse_bool(value);
    else if (key == "seed") seed = std::stoull(value);
    else if (key == "scorer") scorer = value;
    else if (key == "top_terms") top_terms = as_size();
    else if (key == "csls_k") csls_k = std::stoi(value);
    else if (key == "epochs") epochs = std::stoi(value);
    else if (key == "learning_rate") learning_rate = std::stod(value);
    else if (key == "batch_size") batch_size = std::stoi(value);
    else if (key == "clip_norm") clip_norm = std::stod(value);
    else if (key == "hidden_dim") hidden_dim = std::stoi(value);
    else if (key == "layers") layers = std::stoi(value);
    else if (key == "fixed_clock") fixed_clock = parse_bool(value);
    else throw Error::input("config: unknown key: " + key);
}

std::map<std::string, std::string> PipelineConfig::echo() const {
    std::map<std::string, std::string> m;
    m["corpus"] = corpus;
    m["format"] = format;
    m["embeddings"] = embeddings;
    m["src_embeddings"] = src_embeddings;
    m["tgt_embeddings"] = tgt_embeddings;
    m["dictionary"] = dictionary;
    m["weights"] = weights;
    m["scores"] = scores;
    m["stopwords_dir"] = stopwords_dir;
    m["out_dir"] = out_dir;
    m["alpha"] = fmt_double(alpha);
    m["max_outliers"] = std::to_string(max_outliers);
    m["window"] = std::to_string(window);
    m["gap"] = std::to_string(gap);
    m["dedup"] = dedup ? "true" : "false";
    m["detrend"] = detrend ? "true" : "false";
    m["seed"] = std::to_string(seed);
    m["scorer"] = scorer;
    m["top_terms"] = std::to_string(top_terms);
    m["csls_k"] = std::to_string(csls_k);
    m["epochs"] = std::to_string(epochs);
    m["learning_rate"] = fmt_double(learning_rate);
    m["batch_size"] = std::to_string(batch_size);
    m["clip_norm"] = fmt_double(clip_norm);
    m["hidden_dim"] = std::to_string(hidden_dim);
    m["layers"] = std::to_string(layers);
    m["fixed_clock"] = fixed_clock ? "true" : "false";
    return m;
}

} // namespace sentiline
