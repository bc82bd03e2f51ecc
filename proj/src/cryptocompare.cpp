#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "hurstkit/cryptocompare.hpp"

#include <algorithm>
#include <map>

#include <httplib.h>
#include <json.hpp>

#include "hurstkit/errors.hpp"
#include "hurstkit/io.hpp"

namespace hurstkit::api {

namespace {

std::string query_value(const Query& query, const std::string& key) {
    for (const auto& [k, v] : query) {
        if (k == key) return v;
    }
    throw DataError("request lacks query parameter '" + key + "'");
}

void check_api_error(std::string_view body) {
    const auto doc = nlohmann::json::parse(body, nullptr, false);
    if (doc.is_object() && doc.value("Response", std::string{}) == "Error") {
        throw DataError("API error: " + doc.value("Message", std::string{"(no message)"}));
    }
}

}  // namespace

std::string encode_query(const Query& query) {
    std::string out;
    for (const auto& [k, v] : query) {
        out += out.empty() ? '?' : '&';
        out += httplib::detail::encode_query_param(k);
        out += '=';
        out += httplib::detail::encode_query_param(v);
    }
    return out;
}

HttpTransport::HttpTransport(std::string endpoint, std::optional<std::string> api_key)
    : api_key_(std::move(api_key)) {
    const auto scheme_end = endpoint.find("://");
    const auto path_start = endpoint.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    if (scheme_end == std::string::npos || path_start == std::string::npos) {
        throw std::invalid_argument("endpoint must look like scheme://host/path, got '" + endpoint + "'");
    }
    host_ = endpoint.substr(0, path_start);
    path_ = endpoint.substr(path_start);
}

std::string HttpTransport::get(const Query& query) {
    httplib::Client client(host_);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    httplib::Headers headers;
    if (api_key_) {
        headers.emplace("authorization", "Apikey " + *api_key_);
    }
    auto res = client.Get(path_ + encode_query(query), headers);
    if (!res) {
        throw DataError("HTTP request to " + host_ + " failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw DataError("HTTP " + std::to_string(res->status) + " from " + host_ + path_);
    }
    return res->body;
}

FixtureTransport::FixtureTransport(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string FixtureTransport::file_name(const std::string& fsym, const std::string& tsym, std::int64_t to_ts) {
    return fsym + "_" + tsym + "_" + std::to_string(to_ts) + ".json";
}

std::string FixtureTransport::get(const Query& query) {
    const auto name = file_name(query_value(query, "fsym"), query_value(query, "tsym"),
                                std::stoll(query_value(query, "toTs")));
    return io::read_file(dir_ / name);
}

const std::vector<std::string>& default_symbols() {
    static const std::vector<std::string> symbols{"ADA", "BCH", "BTC", "DASH", "EOS", "ETC",
                                                  "ETH", "IOTA", "LTC", "XMR", "XRP"};
    return symbols;
}

std::vector<PriceBar> fetch_bars(Transport& transport, const FetchRequest& request) {
    if (!(request.from <= request.to)) {
        throw std::invalid_argument("fetch range needs from <= to");
    }
    if (request.page_limit == 0 || request.step <= Duration::zero()) {
        throw std::invalid_argument("fetch needs a positive page limit and step");
    }
    const auto aggregate = request.step / std::chrono::hours{1};
    std::map<Instant, PriceBar> merged;
    Instant to_ts = request.to;
    std::optional<Instant> previous_earliest;

    while (true) {
        const auto span_bars = static_cast<std::size_t>((to_ts - request.from) / request.step);
        const std::size_t limit = std::clamp<std::size_t>(span_bars, 1, request.page_limit);
        Query query{{"fsym", request.fsym},
                    {"tsym", request.tsym},
                    {"limit", std::to_string(limit)},
                    {"toTs", std::to_string(epoch_seconds(to_ts))}};
        if (aggregate > 1) {
            query.emplace_back("aggregate", std::to_string(aggregate));
        }
        const auto body = transport.get(query);
        check_api_error(body);
        const auto page = parse_bars(body, BarFormat::Json);
        if (page.empty()) {
            throw DataError(request.fsym + ": empty response for toTs=" + std::to_string(epoch_seconds(to_ts)));
        }
        if (previous_earliest && page.back().timestamp() + request.step < *previous_earliest) {
            throw DataError(request.fsym + ": pagination seam leaves a hole before " + format_iso(*previous_earliest));
        }
        for (const auto& bar : page) {
            if (bar.timestamp() < request.from || bar.timestamp() > request.to) {
                continue;
            }
            const auto [it, inserted] = merged.emplace(bar.timestamp(), bar);
            if (!inserted && !(it->second == bar)) {
                throw DataError(request.fsym + ": pagination seam mismatch at " + format_iso(bar.timestamp()));
            }
        }
        const Instant earliest = page.front().timestamp();
        if (earliest <= request.from) {
            break;
        }
        if (previous_earliest && earliest >= *previous_earliest) {
            throw DataError(request.fsym + ": pagination made no progress at " + format_iso(earliest));
        }
        previous_earliest = earliest;
        to_ts = earliest;
    }
    if (merged.empty()) {
        throw DataError(request.fsym + ": no bars inside the requested range");
    }
    std::vector<PriceBar> out;
    out.reserve(merged.size());
    for (auto& [t, bar] : merged) out.push_back(bar);
    return out;
}

}  // namespace hurstkit::api
