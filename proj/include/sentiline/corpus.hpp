#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sentiline/lang.hpp"

namespace sentiline {

struct TweetRecord {
    std::string id;
    std::string text;
    std::string created_at;     // original ISO-8601 string, retained
    std::int64_t timestamp = 0; // UTC seconds since epoch
    Lang lang = Lang::unknown;
    double lang_confidence = 0.0;
    std::vector<std::string> tokens;
    std::optional<int> label;   // 0/1 when the row carries a training label

    bool operator==(const TweetRecord& o) const {
        return id == o.id && text == o.text && created_at == o.created_at &&
               timestamp == o.timestamp && lang == o.lang && tokens == o.tokens &&
               label == o.label;
    }
};

struct Corpus {
    std::vector<TweetRecord> records; // sorted by (timestamp, id)
    std::size_t dedup_dropped = 0;
};

struct RowError {
    std::size_t line; // 1-based input line (jsonl) or row (csv, incl. header)
    std::string message;
};

struct ParseResult {
    Corpus corpus;
    std::vector<RowError> errors;
};

enum class CorpusFormat { jsonl, csv };

struct IngestOptions {
    bool dedup = true;
};

// Parses a whole stream. Malformed UTF-8 is fatal; rows missing text or a
// parseable timestamp land in `errors`, never silently dropped. Records get
// tokenized and language-tagged on the way in, then sorted and (optionally)
// deduplicated on exact normalized text.
ParseResult parse_tweets(std::istream& in, CorpusFormat format,
                         const IngestOptions& opt = {});

// Canonical JSONL serialization; parse_tweets(serialize(c)) == c.records.
void serialize_corpus(const Corpus& corpus, std::ostream& out);

// Stopword-hit voting over the built-in per-language lists. Tie-break
// priority en > de > es; zero hits means unknown with confidence 0.
std::pair<Lang, double> detect_language(const std::vector<std::string>& tokens);

} // namespace sentiline
