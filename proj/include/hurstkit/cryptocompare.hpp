#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurstkit/series.hpp"

namespace hurstkit::api {

using Query = std::vector<std::pair<std::string, std::string>>;

// GET against the configured endpoint; returns the response body.
// Implementations throw DataError on transport or HTTP failure.
class Transport {
public:
    virtual ~Transport() = default;
    virtual std::string get(const Query& query) = 0;
};

// Live HTTP(S) transport. `endpoint` is the full histohour URL, e.g.
// https://min-api.cryptocompare.com/data/v2/histohour
class HttpTransport : public Transport {
public:
    explicit HttpTransport(std::string endpoint, std::optional<std::string> api_key = std::nullopt);
    std::string get(const Query& query) override;

private:
    std::string host_;
    std::string path_;
    std::optional<std::string> api_key_;
};

// Replays recorded responses from `dir`, one file per request named
// <fsym>_<tsym>_<toTs>.json.
class FixtureTransport : public Transport {
public:
    explicit FixtureTransport(std::filesystem::path dir);
    std::string get(const Query& query) override;

    static std::string file_name(const std::string& fsym, const std::string& tsym, std::int64_t to_ts);

private:
    std::filesystem::path dir_;
};

std::string encode_query(const Query& query);

// Environment variable holding an optional API key, sent as "authorization: Apikey <key>".
inline constexpr const char* kApiKeyEnv = "CRYPTOCOMPARE_API_KEY";

// The eleven coins of the study.
const std::vector<std::string>& default_symbols();

struct FetchRequest {
    std::string fsym;
    std::string tsym = "USD";
    Instant from;
    Instant to;
    Duration step = kTwoHours;
    std::size_t page_limit = 2000;
};

// Pages backwards from `to` (limit <= page_limit per request, each page ending
// at toTs inclusive), stitches pages, drops bars outside [from, to] and
// deduplicates the overlap. Throws DataError on an empty response, an API
// error payload, or a seam whose overlapping bars disagree or leave a hole.
std::vector<PriceBar> fetch_bars(Transport& transport, const FetchRequest& request);

}  // namespace hurstkit::api
