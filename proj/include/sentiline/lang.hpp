#pragma once

#include <string>

namespace sentiline {

enum class Lang { en, de, es, unknown };

inline std::string lang_name(Lang l) {
    switch (l) {
        case Lang::en: return "en";
        case Lang::de: return "de";
        case Lang::es: return "es";
        default: return "unknown";
    }
}

inline Lang lang_from_string(const std::string& s) {
    if (s == "en") return Lang::en;
    if (s == "de") return Lang::de;
    if (s == "es") return Lang::es;
    return Lang::unknown;
}

} // namespace sentiline
