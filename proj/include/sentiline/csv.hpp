#pragma once

#include <istream>
#include <string>
#include <vector>

namespace sentiline {

// RFC 4180 reader: quoted fields, doubled-quote escapes, embedded newlines,
// CRLF or LF row endings. Returns all rows; blank trailing line ignored.
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

// Quotes a field only when it needs it.
std::string csv_escape(const std::string& field);

} // namespace sentiline
