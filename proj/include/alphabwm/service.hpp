#pragma once

#include <chrono>
#include <string>

#include "alphabwm/report.hpp"

namespace httplib {
class Server;
}

namespace alphabwm {

struct ServiceConfig {
    double threshold = kDefaultThreshold;
    std::chrono::milliseconds solve_timeout{30000};
    // Optional directory of static UI assets mounted at "/".
    std::string static_dir;
};

struct ApiResponse {
    int status = 200;
    Json body;  // {"ok": true, "result": ...} or {"ok": false, "error": {...}}
};

ApiResponse api_solve(const std::string& body, const ServiceConfig& config);
ApiResponse api_consistency(const std::string& body, const ServiceConfig& config);
ApiResponse api_scale();
ApiResponse api_ci_table();
ApiResponse api_health();

void install_routes(httplib::Server& server, const ServiceConfig& config);

// Blocks until the server stops. Returns nonzero when the port cannot be bound.
int serve(const std::string& host, int port, const ServiceConfig& config);

}  // namespace alphabwm
