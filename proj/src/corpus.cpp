#include "sentiline/corpus.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "sentiline/csv.hpp"
#include "sentiline/error.hpp"
#include "sentiline/stopwords.hpp"
#include "sentiline/text.hpp"
#include "sentiline/timeparse.hpp"

namespace sentiline {

namespace {

std::string trim_copy(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    return s.substr(b, e - b);
}

// Builds one record from raw field values; returns an error message instead
// on schema violations.
std::optional<std::string> fill_record(TweetRecord& r, const std::string& id,
                                       const std::string& text,
                                       const std::string& created_at,
                                       const std::string& lang_tag,
                                       const std::optional<int>& label) {
    if (text.empty()) return "missing text";
    if (created_at.empty()) return "missing timestamp";
    auto ts = parse_iso8601_utc(created_at);
    if (!ts) return "unparseable timestamp: " + created_at;
    r.id = id;
    r.text = text;
    r.created_at = created_at;
    r.timestamp = *ts;
    r.tokens = tokenize(text);
    if (!lang_tag.empty()) {
        r.lang = lang_from_string(lang_tag);
        r.lang_confidence = 1.0;
    } else {
        auto [lang, conf] = detect_language(r.tokens);
        r.lang = lang;
        r.lang_confidence = conf;
    }
    if (label && *label != 0 && *label != 1) return "label must be 0 or 1";
    r.label = label;
    return std::nullopt;
}

void parse_jsonl(std::istream& in, ParseResult& out) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim_copy(line);
        if (t.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(t, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            out.errors.push_back({lineno, "invalid JSON object"});
            continue;
        }
        auto str_field = [&](const char* k) -> std::string {
            if (!j.contains(k)) return "";
            const auto& v = j.at(k);
            if (v.is_string()) return v.get<std::string>();
            if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
            return "";
        };
        std::optional<int> label;
        if (j.contains("label") && !j.at("label").is_null()) {
            const auto& v = j.at("label");
            if (v.is_number_integer()) label = v.get<int>();
            else if (v.is_boolean()) label = v.get<bool>() ? 1 : 0;
            else {
                out.errors.push_back({lineno, "label must be an integer"});
                continue;
            }
        }
        TweetRecord r;
        auto err = fill_record(r, str_field("id"), str_field("text"),
                               str_field("created_at"), str_field("lang"), label);
        if (err) {
            out.errors.push_back({lineno, *err});
            continue;
        }
        out.corpus.records.push_back(std::move(r));
    }
}

void parse_csv_corpus(std::istream& in, ParseResult& out) {
    const auto rows = parse_csv(in);
    if (rows.empty()) return;
    const auto& header = rows[0];
    int id_col = -1, text_col = -1, ts_col = -1, lang_col = -1, label_col = -1;
    for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string h = trim_copy(header[c]);
        if (h == "id") id_col = static_cast<int>(c);
        else if (h == "text") text_col = static_cast<int>(c);
        else if (h == "created_at") ts_col = static_cast<int>(c);
        else if (h == "lang") lang_col = static_cast<int>(c);
        else if (h == "label") label_col = static_cast<int>(c);
    }
    if (text_col < 0 || ts_col < 0) {
        throw Error::input("csv header must name text and created_at columns");
    }
    for (std::size_t ri = 1; ri < rows.size(); ++ri) {
        const auto& row = rows[ri];
        auto cell = [&](int c) -> std::string {
            return (c >= 0 && c < static_cast<int>(row.size())) ? row[c] : "";
        };
        std::optional<int> label;
        const std::string lab = trim_copy(cell(label_col));
        if (!lab.empty()) {
            if (lab == "0") label = 0;
            else if (lab == "1") label = 1;
            else {
                out.errors.push_back({ri + 1, "label must be 0 or 1"});
                continue;
            }
        }
        TweetRecord r;
        auto err = fill_record(r, cell(id_col), cell(text_col), cell(ts_col),
                               trim_copy(cell(lang_col)), label);
        if (err) {
            out.errors.push_back({ri + 1, *err});
            continue;
        }
        out.corpus.records.push_back(std::move(r));
    }
}

} // namespace

ParseResult parse_tweets(std::istream& in, CorpusFormat format, const IngestOptions& opt) {
    std::string all(std::istreambuf_iterator<char>(in), {});
    const long long bad = utf8_find_invalid(all);
    if (bad >= 0) {
        throw Error::input("malformed UTF-8 at byte offset " + std::to_string(bad));
    }

    ParseResult out;
    std::istringstream buf(all);
    if (format == CorpusFormat::jsonl) parse_jsonl(buf, out);
    else parse_csv_corpus(buf, out);

    auto& recs = out.corpus.records;
    std::stable_sort(recs.begin(), recs.end(), [](const TweetRecord& a, const TweetRecord& b) {
        if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
        return a.id < b.id;
    });

    if (opt.dedup) {
        std::unordered_set<std::string> seen;
        std::vector<TweetRecord> kept;
        kept.reserve(recs.size());
        for (auto& r : recs) {
            if (seen.insert(trim_copy(r.text)).second) kept.push_back(std::move(r));
            else ++out.corpus.dedup_dropped;
        }
        recs = std::move(kept);
    }
    return out;
}

void serialize_corpus(const Corpus& corpus, std::ostream& out) {
    for (const auto& r : corpus.records) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["text"] = r.text;
        j["created_at"] = r.created_at;
        j["lang"] = lang_name(r.lang);
        if (r.label) j["label"] = *r.label;
        out << j.dump() << "\n";
    }
}

std::pair<Lang, double> detect_language(const std::vector<std::string>& tokens) {
    if (tokens.empty()) return {Lang::unknown, 0.0};
    static const StopwordSets sets = StopwordSets::builtin();
    std::size_t hits[3] = {0, 0, 0};
    for (const auto& t : tokens) {
        if (sets.en.count(t)) ++hits[0];
        if (sets.de.count(t)) ++hits[1];
        if (sets.es.count(t)) ++hits[2];
    }
    // argmax with priority en > de > es on ties
    std::size_t best = 0;
    for (std::size_t k = 1; k < 3; ++k) {
        if (hits[k] > hits[best]) best = k;
    }
    if (hits[best] == 0) return {Lang::unknown, 0.0};
    const Lang langs[3] = {Lang::en, Lang::de, Lang::es};
    return {langs[best], static_cast<double>(hits[best]) / static_cast<double>(tokens.size())};
}

} // namespace sentiline
