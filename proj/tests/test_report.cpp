#include <doctest.h>

#include <sstream>

#include "hlag/report.hpp"

TEST_CASE("report writing") {
    hlag::RunReport report;
    report.command = "lambda";
    report.config = {{"seed", 42}};

    SUBCASE("empty result set gives a header-only document") {
        std::ostringstream os;
        report.write(os);
        std::string text = os.str();
        CHECK(std::count(text.begin(), text.end(), '\n') == 1);
        CHECK(text.find("\"tool\":\"hlag\"") != std::string::npos);
        CHECK(text.find("\"command\":\"lambda\"") != std::string::npos);
        CHECK(text.find("\"timestamp\"") != std::string::npos);
    }

    SUBCASE("items append one line each with their key") {
        report.items.push_back({"a", {{"value", 1}}, 0.5});
        report.items.push_back({"b", {{"value", 2}}, 0.25});
        std::ostringstream os;
        report.write(os);
        std::string text = os.str();
        CHECK(std::count(text.begin(), text.end(), '\n') == 3);
        CHECK(text.find("\"item\":\"a\"") != std::string::npos);
        CHECK(text.find("\"item\":\"b\"") != std::string::npos);
        CHECK(text.find("\"wall_ms\"") != std::string::npos);
    }

    SUBCASE("write_file refuses unwritable paths") {
        CHECK_THROWS_AS(report.write_file("/nonexistent-dir/report.jsonl"), std::runtime_error);
    }
}
