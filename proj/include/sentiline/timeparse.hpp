#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace sentiline {

// Parses ISO-8601 instants of the form
//   YYYY-MM-DD[T ]hh:mm:ss[.frac](Z|±hh[:?mm])
// into UTC seconds since the epoch. An explicit offset or Z is required;
// fractional seconds are truncated. Returns nullopt on anything malformed.
std::optional<std::int64_t> parse_iso8601_utc(const std::string& s);

// Formats epoch seconds as "YYYY-MM-DDThh:mm:ssZ".
std::string format_iso8601_utc(std::int64_t epoch_seconds);

// 0 = Monday ... 6 = Sunday, UTC.
int utc_weekday(std::int64_t epoch_seconds);

} // namespace sentiline
