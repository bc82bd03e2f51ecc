#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace hurstkit {

using Instant = std::chrono::sys_seconds;
using Duration = std::chrono::seconds;

inline constexpr Duration kTwoHours{7200};

// Accepts epoch seconds ("1573689600"), a calendar date ("2020-03-03",
// interpreted as 00:00 UTC) or "YYYY-MM-DDTHH:MM:SSZ".
Instant parse_instant(std::string_view text);

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_iso(Instant t);

inline std::int64_t epoch_seconds(Instant t) { return t.time_since_epoch().count(); }
inline Instant from_epoch(std::int64_t s) { return Instant{Duration{s}}; }

}  // namespace hurstkit
