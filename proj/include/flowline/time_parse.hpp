#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace flowline {

// Parses a timestamp into milliseconds since epoch. An empty format string
// selects ISO-8601 auto-detection: YYYY-MM-DD[{T| }HH:MM[:SS[.frac]]][Z|±HH[:MM]].
// A non-empty format is matched literally except for the tokens
// %Y %m %d %H %M %S %f (fractional seconds) %z (numeric offset) %%.
// Timestamps without an explicit offset are shifted by naive_offset_min
// (minutes east of UTC); zero treats naive times as UTC.
std::optional<std::int64_t> parse_timestamp_ms(std::string_view text,
                                               const std::string& format = {},
                                               int naive_offset_min = 0);

// Canonical rendering: 2024-03-01T10:15:30.123Z (always UTC, always millis).
std::string format_timestamp_ms(std::int64_t ms);

}  // namespace flowline
