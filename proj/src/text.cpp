#include "sentiline/text.hpp"

namespace sentiline {

long long utf8_find_invalid(const std::string& bytes) {
    const std::size_t n = bytes.size();
    std::size_t i = 0;
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t len;
        std::uint32_t cp;
        if (c < 0x80) {
            i += 1;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return static_cast<long long>(i);
        }
        if (i + len > n) return static_cast<long long>(i);
        for (std::size_t k = 1; k < len; ++k) {
            const unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xC0) != 0x80) return static_cast<long long>(i);
            cp = (cp << 6) | (cc & 0x3F);
        }
        // Reject overlong forms, surrogates and out-of-range values.
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
            (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
            (cp >= 0xD800 && cp <= 0xDFFF)) {
            return static_cast<long long>(i);
        }
        i += len;
    }
    return -1;
}

std::uint32_t utf8_decode(const std::string& bytes, std::size_t& i) {
    const unsigned char c = static_cast<unsigned char>(bytes[i]);
    if (c < 0x80) {
        i += 1;
        return c;
    }
    std::size_t len;
    std::uint32_t cp;
    if ((c & 0xE0) == 0xC0) {
        len = 2;
        cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
        len = 3;
        cp = c & 0x0F;
    } else {
        len = 4;
        cp = c & 0x07;
    }
    for (std::size_t k = 1; k < len; ++k) {
        cp = (cp << 6) | (static_cast<unsigned char>(bytes[i + k]) & 0x3F);
    }
    i += len;
    return cp;
}

void utf8_encode(std::uint32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::uint32_t fold_codepoint(std::uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp < 0x80) return cp;
    // Latin-1 supplement: À-Þ except the multiplication sign.
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    // Latin Extended-A comes in upper/lower pairs with a few stragglers.
    if (cp == 0x0130) return 0x0069; // dotted capital I -> i
    if (cp >= 0x0100 && cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x0139 && cp <= 0x0148) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x014A && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x0178) return 0x00FF; // Ÿ -> ÿ
    if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp == 0x017F) return 0x0073; // long s -> s
    // Greek.
    if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;
    if (cp == 0x03C2) return 0x03C3; // final sigma
    // Cyrillic.
    if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
    if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
    // Fullwidth Latin.
    if (cp >= 0xFF21 && cp <= 0xFF3A) return cp + 0x20;
    return cp;
}

bool is_letter(std::uint32_t cp) {
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
    if (cp < 0x80) return false;
    if (cp >= 0x00C0 && cp <= 0x00FF) return cp != 0x00D7 && cp != 0x00F7;
    if (cp >= 0x0100 && cp <= 0x024F) return true; // Latin Extended-A/B
    if (cp >= 0x0386 && cp <= 0x03FF) return cp != 0x0387; // Greek
    if (cp >= 0x0400 && cp <= 0x04FF) return true; // Cyrillic
    if (cp >= 0x05D0 && cp <= 0x05EA) return true; // Hebrew
    if (cp >= 0x0621 && cp <= 0x064A) return true; // Arabic
    if (cp >= 0x3040 && cp <= 0x30FF) return cp != 0x3099 && cp != 0x309A &&
                                             cp != 0x30FB; // kana
    if (cp >= 0x4E00 && cp <= 0x9FFF) return true; // CJK unified
    if (cp >= 0xAC00 && cp <= 0xD7A3) return true; // Hangul
    if (cp >= 0xFF21 && cp <= 0xFF3A) return true;
    if (cp >= 0xFF41 && cp <= 0xFF5A) return true;
    return false;
}

bool is_digit(std::uint32_t cp) { return cp >= '0' && cp <= '9'; }

std::string fold_utf8(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        utf8_encode(fold_codepoint(utf8_decode(s, i)), out);
    }
    return out;
}

namespace {

bool is_ws_byte(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_mention_byte(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
}

// True when text[i..] starts with "http://" or "https://", ignoring case.
bool starts_url(const std::string& t, std::size_t i) {
    auto low = [&](std::size_t k) -> char {
        char c = t[k];
        return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
    };
    if (i + 7 > t.size()) return false;
    if (low(i) != 'h' || low(i + 1) != 't' || low(i + 2) != 't' || low(i + 3) != 'p')
        return false;
    std::size_t j = i + 4;
    if (j < t.size() && low(j) == 's') ++j;
    return j + 3 <= t.size() && t[j] == ':' && t[j + 1] == '/' && t[j + 2] == '/';
}

// Strip URLs and @-mentions; everything else passes through untouched.
std::string strip_urls_and_mentions(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (starts_url(text, i)) {
            while (i < text.size() && !is_ws_byte(text[i])) ++i;
            continue;
        }
        if (text[i] == '@') {
            std::size_t j = i + 1;
            while (j < text.size() && is_mention_byte(text[j])) ++j;
            i = j;
            continue;
        }
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

bool is_apostrophe(std::uint32_t cp) { return cp == 0x27 || cp == 0x2019; }

} // namespace

std::vector<std::string> tokenize(const std::string& text) {
    const std::string clean = strip_urls_and_mentions(text);

    // Decode and fold up front so the apostrophe rule can look one code
    // point ahead.
    std::vector<std::uint32_t> cps;
    cps.reserve(clean.size());
    std::size_t i = 0;
    while (i < clean.size()) cps.push_back(fold_codepoint(utf8_decode(clean, i)));

    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    };
    for (std::size_t k = 0; k < cps.size(); ++k) {
        const std::uint32_t cp = cps[k];
        if (is_letter(cp) || is_digit(cp)) {
            utf8_encode(cp, cur);
            continue;
        }
        if (is_apostrophe(cp) && !cur.empty() && k + 1 < cps.size() &&
            (is_letter(cps[k + 1]) || is_digit(cps[k + 1]))) {
            utf8_encode(cp, cur);
            continue;
        }
        flush();
    }
    flush();
    return tokens;
}

} // namespace sentiline
