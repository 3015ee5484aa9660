#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "alphabwm/cli.hpp"
#include "alphabwm/fpcs.hpp"
#include "fixtures.hpp"

using namespace alphabwm;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "alphabwm");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("alphabwm_cli_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

double worked_quotient(double x) {
    if (x < -1.0 || x > 3.0) return 0.0;
    if (x <= 0.0) return (x + 1.0) / (2.0 - 2.0 * x);
    if (x <= 1.0 / 3.0) return (5.0 * x + 1.0) / (2.0 * x + 2.0);
    return (3.0 - x) / (2.0 * x + 2.0);
}

}  // namespace

TEST_CASE("solve prints a table") {
    const Run r = cli({"solve", fixtures::data_path("example1.json"), "--m", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("1.3944") != std::string::npos);
    CHECK(r.out.find("[0.3863, 0.4780]") != std::string::npos);
    CHECK(r.out.find("0.3120") != std::string::npos);
}

TEST_CASE("solve json output") {
    const Run r = cli({"solve", fixtures::data_path("example2.json"), "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "fpcs");
    CHECK(j["grid"]["m"] == 17);
    CHECK(j["epsilon_star"].get<double>() == doctest::Approx(1.536).epsilon(1e-3));
    CHECK(j["weights"].size() == 5);
    CHECK(j["cr"]["reported"].get<double>() == doctest::Approx(0.512).epsilon(1e-3));
}

TEST_CASE("explicit grid") {
    const Run r = cli({"solve", fixtures::data_path("example1.json"), "--grid", "0,0.25,1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["grid"]["doa"].get<double>() == 0.75);
    CHECK(j["grid"]["levels"].size() == 3);
}

TEST_CASE("output is reproducible byte for byte") {
    const std::vector<std::string> args{"solve", fixtures::data_path("supply-chain.json"), "--m", "5", "--seed", "3",
                                        "--format", "json"};
    CHECK(cli(args).out == cli(args).out);
}

TEST_CASE("serialised documents solve identically") {
    const Fpcs f = parse_fpcs(fixtures::load_json("example1.json"));
    const std::string copy = temp_file("roundtrip.json", to_json(f).dump());
    const Run a = cli({"solve", fixtures::data_path("example1.json"), "--m", "3", "--format", "json"});
    const Run b = cli({"solve", copy, "--m", "3", "--format", "json"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("bad input exits with code 2") {
    CHECK(cli({"solve", temp_file("broken.json", "{\"criteria\": [")}).code == kExitInput);
    CHECK(cli({"solve", "/nonexistent/file.json"}).code == kExitInput);
    const Run bad_label = cli({"solve", temp_file("label.json", R"({"criteria":["a","b"],"best":"a","worst":"b",
        "best_to_others":["1","10"],"others_to_worst":["2","1"]})")});
    CHECK(bad_label.code == kExitInput);
    CHECK(bad_label.err.find("best_to_others[1]") != std::string::npos);
    CHECK(cli({"solve", fixtures::data_path("example1.json"), "--m", "1"}).code == kExitInput);
    CHECK(cli({"solve", fixtures::data_path("example1.json"), "--m", "3", "--grid", "0,1"}).code == kExitInput);
    CHECK(cli({"solve", fixtures::data_path("example1.json"), "--grid", "0,0.7,0.5,1"}).code == kExitInput);
    CHECK(cli({"solve", fixtures::data_path("example1.json"), "--format", "xml"}).code == kExitInput);
    CHECK(cli({}).code == kExitInput);
}

TEST_CASE("consistency report") {
    const Run clean = cli({"consistency", fixtures::data_path("all-ones.json")});
    REQUIRE(clean.code == 0);
    CHECK(clean.out.find("no necessary-condition violation detected") != std::string::npos);

    const Run nine = cli({"consistency", fixtures::data_path("nine-violation.json"), "--format", "json"});
    REQUIRE(nine.code == 0);
    const auto j = nlohmann::json::parse(nine.out);
    CHECK(j["status"] == "necessary-condition violations detected");
    CHECK(j["max_cv"].get<double>() == doctest::Approx(5.2279).epsilon(1e-4));
    CHECK(j["threshold"].get<double>() == 0.1);

    const Run custom = cli({"consistency", fixtures::data_path("example1.json"), "--threshold", "0.5", "--format", "json"});
    CHECK(nlohmann::json::parse(custom.out)["acceptable"] == true);
}

TEST_CASE("ci table") {
    const Run r = cli({"ci-table"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("3.7251") != std::string::npos);
    const auto j = nlohmann::json::parse(cli({"ci-table", "--format", "json"}).out);
    REQUIRE(j.size() == 8);
    CHECK(j[0]["term"] == "2");
}

TEST_CASE("divide emits the exact and approximate memberships") {
    const Run r = cli({"divide", "-1,1,3", "1,3,5", "--samples", "401"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,exact,approx");
    int rows = 0;
    double gap = 0.0;
    while (std::getline(in, line)) {
        double x, exact, approx;
        char c1, c2;
        std::istringstream row(line);
        row >> x >> c1 >> exact >> c2 >> approx;
        CHECK(std::abs(exact - worked_quotient(x)) < 1e-12);
        gap = std::max(gap, std::abs(exact - approx));
        ++rows;
    }
    CHECK(rows == 401);
    CHECK(gap > 0.1);

    CHECK(cli({"divide", "1,2,3", "-1,1,2"}).code == kExitInput);
    CHECK(cli({"divide", "1,2", "1,2,3"}).code == kExitInput);
    CHECK(cli({"divide", "3,2,1", "1,2,3"}).code == kExitInput);
}
