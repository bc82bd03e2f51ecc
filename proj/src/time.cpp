#include "hurstkit/time.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "hurstkit/errors.hpp"

namespace hurstkit {

namespace {

int read_fixed(std::string_view text, std::size_t pos, std::size_t len) {
    if (pos + len > text.size()) {
        throw DataError("truncated timestamp '" + std::string(text) + "'");
    }
    int value = 0;
    auto first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + len, value);
    if (ec != std::errc{} || ptr != first + len) {
        throw DataError("bad timestamp '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Instant parse_instant(std::string_view text) {
    if (text.empty()) {
        throw DataError("empty timestamp");
    }
    if (text.find('-', 1) == std::string_view::npos) {
        std::int64_t seconds = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seconds);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw DataError("bad timestamp '" + std::string(text) + "'");
        }
        return from_epoch(seconds);
    }

    using namespace std::chrono;
    const int y = read_fixed(text, 0, 4);
    const int m = read_fixed(text, 5, 2);
    const int d = read_fixed(text, 8, 2);
    if (text[4] != '-' || text[7] != '-') {
        throw DataError("bad date '" + std::string(text) + "'");
    }
    const year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) {
        throw DataError("invalid calendar date '" + std::string(text) + "'");
    }
    Instant t = sys_days{ymd};
    if (text.size() == 10) {
        return t;
    }
    if (text.size() != 20 || text[10] != 'T' || text[13] != ':' || text[16] != ':' || text[19] != 'Z') {
        throw DataError("bad timestamp '" + std::string(text) + "' (expected YYYY-MM-DDTHH:MM:SSZ)");
    }
    const int hh = read_fixed(text, 11, 2);
    const int mm = read_fixed(text, 14, 2);
    const int ss = read_fixed(text, 17, 2);
    if (hh > 23 || mm > 59 || ss > 59) {
        throw DataError("bad time of day in '" + std::string(text) + "'");
    }
    return t + hours{hh} + minutes{mm} + seconds{ss};
}

std::string format_iso(Instant t) {
    using namespace std::chrono;
    const auto day_start = floor<days>(t);
    const year_month_day ymd{day_start};
    const hh_mm_ss tod{t - day_start};
    char buf[64];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ldZ", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  static_cast<long>(tod.hours().count()), static_cast<long>(tod.minutes().count()),
                  static_cast<long>(tod.seconds().count()));
    return buf;
}

}  // namespace hurstkit
