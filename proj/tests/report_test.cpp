#include <doctest.h>

#include "terai/json_report.hpp"
#include "terai/solver.hpp"

using namespace terai;
using terai::cli::Json;

TEST_CASE("reports serialize integers as decimal strings") {
    Json j = cli::instance_json(make_instance(5, 2));
    CHECK(j["m"] == "5");
    CHECK(j["a"] == "20");
    CHECK(j["b"] == "21");
    CHECK(j["c"] == "29");
    CHECK(j["p"] == "7");
    CHECK(j["q"] == "3");
    for (const auto& [key, value] : j.items()) CHECK(value.is_string());
}

TEST_CASE("verification payload carries the schema keys in order") {
    auto report = verify_instance(make_instance(5, 2));
    Json j = cli::verification_json(report);
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    const std::vector<std::string> expected = {"instance",  "hypotheses",     "parity",
                                               "case_scan", "solutions",      "trace_verdicts",
                                               "oracles",   "verdict",        "elapsed_ms"};
    CHECK(keys == expected);
    CHECK(j["solutions"] == Json::array({Json::array({"20", "2", "2"})}));
    CHECK(j["verdict"] == "theorem-consistent");
    CHECK(j["parity"]["symbols"]["(b/c)"] == "-1");
}

TEST_CASE("serialized reports round-trip byte-identically") {
    auto report = verify_instance(make_instance(9, 2));
    std::string first = cli::dump_report(cli::verification_json(report));
    Json parsed = Json::parse(first);
    std::string second = cli::dump_report(parsed);
    CHECK(first == second);

    // the trace payload too
    std::string t1 = cli::dump_report(cli::trace_json(descent_trace(make_instance(6, 1), 12, 2, 2)));
    CHECK(t1 == cli::dump_report(Json::parse(t1)));
}
