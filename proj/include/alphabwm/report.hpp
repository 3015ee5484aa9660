#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "alphabwm/consistency.hpp"
#include "alphabwm/fpcs.hpp"
#include "alphabwm/solver.hpp"

namespace alphabwm {

using Json = nlohmann::ordered_json;
using Document = std::variant<Fpcs, Hierarchy>;

inline constexpr int kDefaultGridPoints = 17;
inline constexpr double kDefaultThreshold = 0.1;

// Hierarchical documents are recognised by their "root" key.
Document parse_document(const nlohmann::json& doc, const std::string& path = "");

// Either a uniform grid size or explicit levels; neither means m = 17.
struct GridSpec {
    std::optional<int> m;
    std::optional<std::vector<double>> levels;

    // Throws ValidationError with field path "m" or "grid".
    AlphaGrid build() const;
};

struct SolveRun {
    Document document;
    GridSpec grid;
    SolverOptions options;
};

struct ConsistencyRun {
    Fpcs fpcs;
    int grid_points = kDefaultGridPoints;
    double threshold = kDefaultThreshold;
    SolverOptions options;
};

// Same numbers rendered two ways: a JSON document (full precision) and a
// fixed-width table rounded to four decimals.
struct Rendered {
    Json json;
    std::string table;
};

Rendered run_solve(const SolveRun& run);
Rendered run_consistency(const ConsistencyRun& run);
Rendered render_ci_table();
Json scale_json();

// Throws ValidationError when a field is present with the wrong type or value.
SolverOptions parse_solver_options(const nlohmann::json& body);
GridSpec parse_grid_spec(const nlohmann::json& body);

}  // namespace alphabwm
