#include "alphabwm/service.hpp"

#include <future>
#include <memory>
#include <thread>

#include <httplib.h>

#include "alphabwm/errors.hpp"

namespace alphabwm {

namespace {

ApiResponse success(Json result) {
    Json body;
    body["ok"] = true;
    body["result"] = std::move(result);
    return {200, std::move(body)};
}

ApiResponse failure(int status, const std::string& code, const std::string& message, const std::string& field_path = "") {
    Json error;
    error["code"] = code;
    error["message"] = message;
    error["field_path"] = field_path;
    Json body;
    body["ok"] = false;
    body["error"] = std::move(error);
    return {status, std::move(body)};
}

// Maps the library's exception types onto HTTP statuses.
template <class F>
ApiResponse guarded(F&& f) {
    try {
        return f();
    } catch (const ValidationError& e) {
        return failure(400, "validation_error", e.what(), e.field_path());
    } catch (const UndefinedIndexError& e) {
        return failure(422, "undefined_consistency_index", e.what());
    } catch (const DomainError& e) {
        return failure(400, "domain_error", e.what());
    } catch (const SolverError& e) {
        return failure(500, "solver_error", e.what());
    } catch (const std::exception& e) {
        return failure(500, "internal_error", e.what());
    }
}

// Runs f on a worker thread and gives up after `limit`. The worker is
// detached, so an abandoned computation finishes in the background.
template <class F>
ApiResponse with_timeout(F f, std::chrono::milliseconds limit) {
    auto task = std::make_shared<std::packaged_task<ApiResponse()>>([f = std::move(f)]() { return guarded(f); });
    auto result = task->get_future();
    std::thread([task]() { (*task)(); }).detach();
    if (result.wait_for(limit) != std::future_status::ready) {
        return failure(504, "timeout", "computation exceeded the request time limit");
    }
    return result.get();
}

nlohmann::json parse_body(const std::string& body) {
    nlohmann::json doc = parse_json_text(body);
    if (!doc.is_object()) throw ValidationError("", "request body must be a JSON object");
    return doc;
}

void reply(httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body.dump(), "application/json");
}

}  // namespace

ApiResponse api_solve(const std::string& body, const ServiceConfig& config) {
    std::optional<SolveRun> run;
    bool with_consistency = false;
    double threshold = config.threshold;
    ApiResponse parsed = guarded([&]() -> ApiResponse {
        const nlohmann::json doc = parse_body(body);
        const bool has_fpcs = doc.contains("fpcs");
        const bool has_tree = doc.contains("hierarchy");
        if (has_fpcs == has_tree) throw ValidationError("fpcs", "provide exactly one of 'fpcs' or 'hierarchy'");
        Document document = has_fpcs ? Document(parse_fpcs(doc.at("fpcs"), "fpcs"))
                                     : Document(parse_hierarchy(doc.at("hierarchy"), "hierarchy"));
        run = SolveRun{std::move(document), parse_grid_spec(doc), parse_solver_options(doc)};
        if (auto it = doc.find("consistency"); it != doc.end()) {
            if (!it->is_boolean()) throw ValidationError("consistency", "expected a boolean");
            with_consistency = it->get<bool>();
        }
        if (auto it = doc.find("threshold"); it != doc.end()) {
            if (!it->is_number() || !(it->get<double>() >= 0.0)) {
                throw ValidationError("threshold", "threshold must be a nonnegative number");
            }
            threshold = it->get<double>();
        }
        if (with_consistency) {
            const Fpcs* fpcs = std::get_if<Fpcs>(&run->document);
            if (!fpcs) throw ValidationError("consistency", "consistency output is available for single systems only");
            if (run->grid.levels) throw ValidationError("consistency", "consistency output needs a uniform grid (m)");
            if (fpcs->degenerate()) {
                throw UndefinedIndexError("consistency index is undefined when best and worst are judged equal");
            }
        }
        return success(nullptr);
    });
    if (parsed.status != 200) return parsed;

    return with_timeout(
        [run = std::move(*run), with_consistency, threshold]() {
            Json result = run_solve(run).json;
            if (with_consistency) {
                const Fpcs& fpcs = std::get<Fpcs>(run.document);
                const int points = static_cast<int>(run.grid.build().size());
                result["consistency"] = run_consistency({fpcs, points, threshold, run.options}).json;
            }
            return success(std::move(result));
        },
        config.solve_timeout);
}

ApiResponse api_consistency(const std::string& body, const ServiceConfig& config) {
    std::optional<ConsistencyRun> run;
    ApiResponse parsed = guarded([&]() -> ApiResponse {
        const nlohmann::json doc = parse_body(body);
        auto it = doc.find("fpcs");
        if (it == doc.end()) throw ValidationError("fpcs", "missing field 'fpcs'");
        ConsistencyRun r{parse_fpcs(*it, "fpcs"), kDefaultGridPoints, config.threshold, parse_solver_options(doc)};
        if (auto g = doc.find("grid_points"); g != doc.end()) {
            if (!g->is_number_integer() || g->get<long long>() < 2 || g->get<long long>() > 100000) {
                throw ValidationError("grid_points", "grid_points must be an integer between 2 and 100000");
            }
            r.grid_points = g->get<int>();
        }
        if (auto t = doc.find("threshold"); t != doc.end()) {
            if (!t->is_number() || !(t->get<double>() >= 0.0)) {
                throw ValidationError("threshold", "threshold must be a nonnegative number");
            }
            r.threshold = t->get<double>();
        }
        if (r.fpcs.degenerate()) {
            throw UndefinedIndexError("consistency index is undefined when best and worst are judged equal");
        }
        run = std::move(r);
        return success(nullptr);
    });
    if (parsed.status != 200) return parsed;
    return with_timeout([r = std::move(*run)]() { return success(run_consistency(r).json); }, config.solve_timeout);
}

ApiResponse api_scale() { return success(scale_json()); }

ApiResponse api_ci_table() { return success(render_ci_table().json); }

ApiResponse api_health() { return {200, Json{{"ok", true}}}; }

void install_routes(httplib::Server& server, const ServiceConfig& config) {
    server.Post("/api/solve", [config](const httplib::Request& req, httplib::Response& res) {
        reply(res, api_solve(req.body, config));
    });
    server.Post("/api/consistency", [config](const httplib::Request& req, httplib::Response& res) {
        reply(res, api_consistency(req.body, config));
    });
    server.Get("/api/scale", [](const httplib::Request&, httplib::Response& res) { reply(res, api_scale()); });
    server.Get("/api/ci-table", [](const httplib::Request&, httplib::Response& res) { reply(res, api_ci_table()); });
    server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) { reply(res, api_health()); });
    if (!config.static_dir.empty()) server.set_mount_point("/", config.static_dir);
}

int serve(const std::string& host, int port, const ServiceConfig& config) {
    httplib::Server server;
    install_routes(server, config);
    if (!server.bind_to_port(host, port)) return 1;
    server.listen_after_bind();
    return 0;
}

}  // namespace alphabwm
