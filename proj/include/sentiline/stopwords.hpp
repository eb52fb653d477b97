#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "sentiline/lang.hpp"

namespace sentiline {

// Built-in function-word lists for the three pipeline languages. The same
// lists ship as data/stopwords.{en,de,es}.txt; a unit test keeps file and
// table in sync.
const std::vector<std::string>& builtin_stopwords(Lang lang);

struct StopwordSets {
    std::unordered_set<std::string> en, de, es;

    static StopwordSets builtin();
    // Loads stopwords.{en,de,es}.txt from a directory (one token per line).
    static StopwordSets from_dir(const std::string& dir);

    const std::unordered_set<std::string>& for_lang(Lang lang) const;
};

} // namespace sentiline
