#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sentiline {

// UTF-8 validation over a whole buffer. Returns the byte offset of the first
// invalid sequence, or -1 when the buffer is valid.
long long utf8_find_invalid(const std::string& bytes);

// Decodes one code point starting at byte i; advances i. Input must be valid
// UTF-8 (validate first).
std::uint32_t utf8_decode(const std::string& bytes, std::size_t& i);

void utf8_encode(std::uint32_t cp, std::string& out);

// Simple (one-to-one) case folding for the scripts this pipeline meets in
// practice: ASCII, Latin-1, Latin Extended-A, Greek, Cyrillic, fullwidth
// Latin. Everything else folds to itself.
std::uint32_t fold_codepoint(std::uint32_t cp);

bool is_letter(std::uint32_t cp);
bool is_digit(std::uint32_t cp);

// Lowercase a UTF-8 string with fold_codepoint. Total, never throws on valid
// UTF-8 input.
std::string fold_utf8(const std::string& s);

// Tokenizer contract:
//   * URL substrings (http:// or https:// through the next whitespace) are
//     removed before anything else, case-insensitively.
//   * @-mentions (@ plus a run of [A-Za-z0-9_]) are removed entirely.
//   * The rest is case folded and split on anything that is not a letter,
//     a digit, or an apostrophe with letters/digits on both sides.
//   * Hashtags survive as their bare word: '#' is just a separator.
// Empty tokens are dropped, order is preserved. Total function.
std::vector<std::string> tokenize(const std::string& text);

} // namespace sentiline
