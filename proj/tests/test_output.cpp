#include "arcsinc/output.hpp"

#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using namespace arcsinc;

namespace {

std::vector<OutputRecord> sample_records() {
    OutputRecord a;
    a.k = 2;
    a.x = 0.1;
    a.y = 6.0982253579021308;
    a.method = "integral";
    a.err_estimate = 3.25e-12;
    a.work = 57;
    OutputRecord b;
    b.k = -1;
    b.x = -0.2172336282112216;
    b.y = -4.49340945790906;
    b.method = "series_anger";
    b.err_estimate = 0.0;
    b.work = 0;
    return {a, b};
}

}  // namespace

TEST_CASE("double formatting round-trips exactly") {
    const std::vector<double> values = {0.0,  -0.0, std::numbers::pi, 0.1, -2.5e17,
                                        1e-300, 6.0982253579021308, -1.0 / 3.0};
    for (double v : values) {
        const std::string s = format_double(v);
        const double back = std::strtod(s.c_str(), nullptr);
        CHECK(back == v);
    }
}

TEST_CASE("CSV layout") {
    const std::string csv = to_csv(sample_records());
    CHECK(csv.rfind("k,x,y,method,err,work\n", 0) == 0);

    // One header plus one line per record, each with five commas.
    int lines = 0, commas = 0;
    for (char c : csv) {
        if (c == '\n') ++lines;
        if (c == ',') ++commas;
    }
    CHECK(lines == 3);
    CHECK(commas == 3 * 5);
    CHECK(csv.find("integral") != std::string::npos);
    CHECK(csv.find("series_anger") != std::string::npos);
}

TEST_CASE("JSON parses back to identical values") {
    const std::vector<OutputRecord> recs = sample_records();
    const nlohmann::json j = nlohmann::json::parse(to_json(recs));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(j[i]["k"].get<int>() == recs[i].k);
        CHECK(j[i]["x"].get<double>() == recs[i].x);
        CHECK(j[i]["y"].get<double>() == recs[i].y);
        CHECK(j[i]["method"].get<std::string>() == recs[i].method);
        CHECK(j[i]["err"].get<double>() == recs[i].err_estimate);
        CHECK(j[i]["work"].get<long>() == recs[i].work);
    }
}

TEST_CASE("CSV and JSON carry the same numbers") {
    const std::vector<OutputRecord> recs = sample_records();
    const nlohmann::json j = nlohmann::json::parse(to_json(recs));
    const std::string csv = to_csv(recs);

    // Parse the y field (third column) of the first CSV data row.
    std::size_t pos = csv.find('\n') + 1;
    for (int c = 0; c < 2; ++c) pos = csv.find(',', pos) + 1;
    const double y_csv = std::strtod(csv.c_str() + pos, nullptr);
    CHECK(y_csv == j[0]["y"].get<double>());
}
