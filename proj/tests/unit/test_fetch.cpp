#include <gtest/gtest.h>

#include <map>

#include <json.hpp>

#include "hurstkit/cryptocompare.hpp"
#include "hurstkit/errors.hpp"
#include "hurstkit/io.hpp"

using namespace hurstkit;
using namespace hurstkit::api;

namespace {

constexpr std::int64_t kT0 = 1573689600;
constexpr std::int64_t kStep = 7200;

std::string page_json(std::int64_t first, int count, double price = 10.0) {
    nlohmann::json data = nlohmann::json::array();
    for (int i = 0; i < count; ++i) {
        data.push_back({{"time", first + i * kStep},
                        {"open", price},
                        {"high", price + 1},
                        {"low", price - 1},
                        {"close", price + 0.5},
                        {"volumefrom", 3.0},
                        {"volumeto", 30.0}});
    }
    return nlohmann::json{{"Response", "Success"}, {"Data", {{"Data", data}}}}.dump();
}

// Serves pages keyed by toTs and records the queries it sees.
class MapTransport : public Transport {
public:
    std::map<std::int64_t, std::string> pages;
    std::vector<Query> seen;

    std::string get(const Query& q) override {
        seen.push_back(q);
        for (const auto& [k, v] : q) {
            if (k == "toTs") {
                const auto it = pages.find(std::stoll(v));
                if (it == pages.end()) throw DataError("no page for toTs " + v);
                return it->second;
            }
        }
        throw DataError("no toTs");
    }
};

FetchRequest request(std::int64_t from, std::int64_t to, std::size_t limit) {
    FetchRequest r;
    r.fsym = "BTC";
    r.from = from_epoch(from);
    r.to = from_epoch(to);
    r.page_limit = limit;
    return r;
}

}  // namespace

TEST(Fetch, TwoPagesOverlappingByOneGiveNineBars) {
    MapTransport t;
    t.pages[kT0 + 8 * kStep] = page_json(kT0 + 4 * kStep, 5);
    t.pages[kT0 + 4 * kStep] = page_json(kT0, 5);
    const auto bars = fetch_bars(t, request(kT0, kT0 + 8 * kStep, 4));
    ASSERT_EQ(bars.size(), 9u);
    for (std::size_t i = 0; i < bars.size(); ++i) EXPECT_EQ(epoch_seconds(bars[i].timestamp()), kT0 + kStep * i);
    ASSERT_EQ(t.seen.size(), 2u);
    const Query expected{{"fsym", "BTC"}, {"tsym", "USD"}, {"limit", "4"},
                         {"toTs", std::to_string(kT0 + 8 * kStep)}, {"aggregate", "2"}};
    EXPECT_EQ(t.seen[0], expected);
}

TEST(Fetch, EmptyResponseIsAnError) {
    MapTransport t;
    t.pages[kT0 + 8 * kStep] = page_json(kT0, 0);
    EXPECT_THROW(fetch_bars(t, request(kT0, kT0 + 8 * kStep, 4)), DataError);
}

TEST(Fetch, ApiErrorPayload) {
    MapTransport t;
    t.pages[kT0 + 8 * kStep] = R"({"Response":"Error","Message":"rate limit","Data":{}})";
    try {
        fetch_bars(t, request(kT0, kT0 + 8 * kStep, 4));
        FAIL();
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("rate limit"), std::string::npos);
    }
}

TEST(Fetch, SeamMismatchAndHole) {
    MapTransport t;
    t.pages[kT0 + 8 * kStep] = page_json(kT0 + 4 * kStep, 5);
    t.pages[kT0 + 4 * kStep] = page_json(kT0, 5, 11.0);  // overlapping bar disagrees
    EXPECT_THROW(fetch_bars(t, request(kT0, kT0 + 8 * kStep, 4)), DataError);
    MapTransport h;
    h.pages[kT0 + 8 * kStep] = page_json(kT0 + 4 * kStep, 5);
    h.pages[kT0 + 4 * kStep] = page_json(kT0, 2);  // ends two bars early
    EXPECT_THROW(fetch_bars(h, request(kT0, kT0 + 8 * kStep, 4)), DataError);
}

TEST(Fetch, RecordedFixtureReproducesBundledCsv) {
    FixtureTransport t(HURSTKIT_TEST_DATA "/api");
    const auto bars = fetch_bars(t, request(kT0, parse_instant("2020-06-08T22:00:00Z").time_since_epoch().count(), 2000));
    EXPECT_EQ(bars.size(), 2496u);
    EXPECT_EQ(write_bars_csv(bars), io::read_file(HURSTKIT_TEST_DATA "/btc_fixture.csv"));
}

TEST(Fetch, Helpers) {
    EXPECT_EQ(default_symbols().size(), 11u);
    EXPECT_EQ(encode_query({{"fsym", "BTC"}, {"x", "a b"}}), "?fsym=BTC&x=a%20b");
    EXPECT_EQ(FixtureTransport::file_name("BTC", "USD", 5), "BTC_USD_5.json");
    EXPECT_THROW(HttpTransport("not a url"), std::invalid_argument);
    MapTransport t;
    EXPECT_THROW(fetch_bars(t, request(kT0 + 10, kT0, 4)), std::invalid_argument);
}
