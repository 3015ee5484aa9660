#include <doctest.h>

#include <sstream>
#include <thread>

#include <httplib.h>

#include "alphabwm/cli.hpp"
#include "alphabwm/service.hpp"
#include "fixtures.hpp"

using namespace alphabwm;

namespace {

std::string solve_body(const std::string& fixture, int m) {
    nlohmann::json body;
    body["fpcs"] = fixtures::load_json(fixture);
    body["m"] = m;
    return body.dump();
}

}  // namespace

TEST_CASE("solve returns the same numbers as the command line") {
    const ApiResponse api = api_solve(solve_body("example1.json", 5), {});
    REQUIRE(api.status == 200);
    CHECK(api.body["ok"] == true);

    std::ostringstream out, err;
    REQUIRE(run_cli({"alphabwm", "solve", fixtures::data_path("example1.json"), "--m", "5", "--format", "json"}, out, err) == 0);
    CHECK(api.body["result"] == Json::parse(out.str()));
}

TEST_CASE("hierarchy requests") {
    nlohmann::json body;
    body["hierarchy"] = fixtures::load_json("supply-chain.json");
    body["m"] = 2;
    const ApiResponse api = api_solve(body.dump(), {});
    REQUIRE(api.status == 200);
    CHECK(api.body["result"]["kind"] == "hierarchy");
    CHECK(api.body["result"]["global"][0]["name"] == "c21");
}

TEST_CASE("solve with consistency") {
    nlohmann::json body = Json::parse(solve_body("example1.json", 3));
    body["consistency"] = true;
    body["threshold"] = 0.4;
    const ApiResponse api = api_solve(body.dump(), {});
    REQUIRE(api.status == 200);
    CHECK(api.body["result"]["consistency"]["acceptable"] == true);
}

TEST_CASE("validation failures are 400 with a field path") {
    nlohmann::json body;
    body["fpcs"] = fixtures::load_json("example1.json");
    body["fpcs"]["best_to_others"][2] = "12";
    ApiResponse api = api_solve(body.dump(), {});
    CHECK(api.status == 400);
    CHECK(api.body["ok"] == false);
    CHECK(api.body["error"]["field_path"] == "fpcs.best_to_others[2]");

    CHECK(api_solve("not json", {}).status == 400);
    CHECK(api_solve("[1, 2]", {}).status == 400);
    CHECK(api_solve("{}", {}).status == 400);

    body["fpcs"] = fixtures::load_json("example1.json");
    body["m"] = 1;
    api = api_solve(body.dump(), {});
    CHECK(api.status == 400);
    CHECK(api.body["error"]["field_path"] == "m");

    body["m"] = 3;
    body["grid"] = Json::array({0.0, 1.0});
    CHECK(api_solve(body.dump(), {}).status == 400);

    CHECK(api_consistency(R"({"fpcs": {}})", {}).status == 400);
    CHECK(api_consistency(R"({"nothing": 1})", {}).status == 400);
}

TEST_CASE("undefined consistency index is 422") {
    nlohmann::json body;
    body["fpcs"] = fixtures::load_json("all-ones.json");
    CHECK(api_consistency(body.dump(), {}).status == 422);
    body["consistency"] = true;
    CHECK(api_solve(body.dump(), {}).status == 422);
    body["consistency"] = false;
    CHECK(api_solve(body.dump(), {}).status == 200);
}

TEST_CASE("consistency endpoint") {
    nlohmann::json body;
    body["fpcs"] = fixtures::load_json("nine-violation.json");
    body["grid_points"] = 5;
    const ApiResponse api = api_consistency(body.dump(), {});
    REQUIRE(api.status == 200);
    CHECK(api.body["result"]["max_cv"].get<double>() == doctest::Approx(5.2279).epsilon(1e-4));
}

TEST_CASE("reference endpoints") {
    const ApiResponse scale = api_scale();
    REQUIRE(scale.body["result"].size() == 9);
    CHECK(scale.body["result"][1]["tfn"] == Json::array({1, 2, 3}));
    CHECK(api_ci_table().body["result"].size() == 8);
    CHECK(api_health().body == Json{{"ok", true}});
}

TEST_CASE("slow solves time out") {
    ServiceConfig config;
    config.solve_timeout = std::chrono::milliseconds(1);
    const ApiResponse api = api_solve(solve_body("example1.json", 2001), config);
    CHECK(api.status == 504);
    CHECK(api.body["error"]["code"] == "timeout");
}

TEST_CASE("http round trip") {
    httplib::Server server;
    install_routes(server, {});
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&]() { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto health = client.Get("/healthz");
    REQUIRE(health);
    CHECK(health->status == 200);
    CHECK(Json::parse(health->body)["ok"] == true);

    auto solved = client.Post("/api/solve", solve_body("example2.json", 2), "application/json");
    REQUIRE(solved);
    CHECK(solved->status == 200);
    CHECK(Json::parse(solved->body)["result"]["epsilon_star"].get<double>() == doctest::Approx(1.536).epsilon(1e-3));

    auto bad = client.Post("/api/solve", "{", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);

    auto scale = client.Get("/api/scale");
    REQUIRE(scale);
    CHECK(scale->status == 200);

    server.stop();
    worker.join();
}
