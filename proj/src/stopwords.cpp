#include "sentiline/stopwords.hpp"

#include <fstream>

#include "sentiline/error.hpp"

namespace sentiline {

namespace {

const std::vector<std::string> kEnglish = {
    "the", "and", "a",   "an",  "of",  "to",   "in",   "is",  "are", "was",
    "were", "be", "it",  "that", "this", "with", "for", "on",  "at",  "by",
    "from", "as", "but", "or",  "not", "have", "has",  "they", "you", "we",
    "he",   "she", "his", "her", "its",
};

const std::vector<std::string> kGerman = {
    "der", "die", "das", "und", "ist", "sind", "war", "ein", "eine", "nicht",
    "mit", "für", "auf", "von", "zu",  "im",   "den", "dem", "des",  "ich",
    "du",  "er",  "sie", "es",  "wir", "als",  "auch", "aber", "oder", "bei",
    "nach", "aus", "wie", "ihr", "zum",
};

const std::vector<std::string> kSpanish = {
    "el",  "la",  "los", "las", "de",   "del",  "y",     "es",   "son",  "un",
    "una", "no",  "con", "para", "por", "en",   "que",   "se",   "su",   "al",
    "lo",  "como", "más", "pero", "sus", "le",  "ya",    "o",    "este", "sí",
    "porque", "esta", "entre", "cuando", "muy",
};

const std::vector<std::string> kNone;

std::unordered_set<std::string> to_set(const std::vector<std::string>& v) {
    return {v.begin(), v.end()};
}

std::unordered_set<std::string> load_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error::input("cannot open stopword list: " + path);
    std::unordered_set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                                 line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (!line.empty()) out.insert(line);
    }
    return out;
}

} // namespace

const std::vector<std::string>& builtin_stopwords(Lang lang) {
    switch (lang) {
        case Lang::en: return kEnglish;
        case Lang::de: return kGerman;
        case Lang::es: return kSpanish;
        default: return kNone;
    }
}

StopwordSets StopwordSets::builtin() {
    StopwordSets s;
    s.en = to_set(kEnglish);
    s.de = to_set(kGerman);
    s.es = to_set(kSpanish);
    return s;
}

StopwordSets StopwordSets::from_dir(const std::string& dir) {
    StopwordSets s;
    s.en = load_list(dir + "/stopwords.en.txt");
    s.de = load_list(dir + "/stopwords.de.txt");
    s.es = load_list(dir + "/stopwords.es.txt");
    return s;
}

const std::unordered_set<std::string>& StopwordSets::for_lang(Lang lang) const {
    static const std::unordered_set<std::string> none;
    switch (lang) {
        case Lang::en: return en;
        case Lang::de: return de;
        case Lang::es: return es;
        default: return none;
    }
}

} // namespace sentiline
