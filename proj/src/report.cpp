#include "alphabwm/report.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "alphabwm/errors.hpp"

namespace alphabwm {

namespace {

constexpr const char* kClean = "no necessary-condition violation detected";
constexpr const char* kViolated = "necessary-condition violations detected";
constexpr const char* kThresholdNote = "acceptability threshold is a user convention, not part of the method";

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string shortest(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

Json grid_json(const GridSpec& spec, const AlphaGrid& grid) {
    Json levels = Json::array();
    for (double a : grid.levels()) levels.push_back(a);
    Json out;
    out["m"] = spec.levels ? Json(nullptr) : Json(static_cast<int>(grid.size()));
    out["levels"] = levels;
    out["doa"] = grid.mesh();
    return out;
}

Json options_json(const SolverOptions& o) {
    Json out;
    out["seed"] = o.seed;
    out["optimality_tol"] = o.optimality_tol;
    out["max_starts"] = o.max_starts;
    out["dense_eta_grid"] = o.dense_eta_grid;
    return out;
}

Json cr_json(const std::optional<CrBound>& cr) {
    if (!cr) return nullptr;
    Json out;
    out["ci_lower"] = cr->ci_lower;
    out["reported"] = cr->reported;
    out["conservative"] = cr->conservative;
    return out;
}

Json fpcs_result(const Fpcs& fpcs, const SolveReport& r) {
    Json weights = Json::array();
    for (std::size_t i = 0; i < fpcs.size(); ++i) {
        const Tfn& t = r.weights.weights[i];
        Json w;
        w["criterion"] = fpcs.criteria()[i];
        w["tfn"] = Json::array({t.lower(), t.modal(), t.upper()});
        w["interval"] = Json::array({r.interval_weights[i].lo, r.interval_weights[i].hi});
        w["average"] = r.midpoint_weights[i];
        w["effectively_zero"] = static_cast<bool>(r.effectively_zero[i]);
        weights.push_back(w);
    }
    Json out;
    out["criteria"] = fpcs.criteria();
    out["best"] = fpcs.criteria()[fpcs.best()];
    out["worst"] = fpcs.criteria()[fpcs.worst()];
    out["best_to_worst"] = fpcs.best_to_worst().label();
    out["epsilon_star"] = r.epsilon_star;
    out["epsilon_lower"] = r.epsilon_lower;
    out["doa"] = r.doa;
    out["eta_dense"] = r.eta_dense;
    out["weights"] = weights;
    out["cr"] = cr_json(r.cr);
    out["warnings"] = fpcs.warnings();
    return out;
}

void table_for(std::ostringstream& os, const Fpcs& fpcs, const SolveReport& r) {
    os << pad("Criterion", 14) << pad("Interval-weight", 22) << "Average\n";
    for (std::size_t i = 0; i < fpcs.size(); ++i) {
        const Interval& iv = r.interval_weights[i];
        os << pad(fpcs.criteria()[i], 14) << pad("[" + fixed4(iv.lo) + ", " + fixed4(iv.hi) + "]", 22)
           << fixed4(r.midpoint_weights[i]) << "\n";
    }
    os << pad("eps*_F", 14) << fixed4(r.epsilon_star) << "\n";
    if (r.cr) {
        os << pad("CR <=", 14) << fixed4(r.cr->reported) << "  (with DoA " << fixed4(r.cr->conservative)
           << ", CI >= " << fixed4(r.cr->ci_lower) << ")\n";
    } else {
        os << pad("CR <=", 14) << "undefined (best and worst judged equal)\n";
    }
    os << pad("DoA", 14) << shortest(r.doa) << "\n";
    for (const std::string& w : fpcs.warnings()) os << "warning: " << w << "\n";
}

Rendered render_fpcs(const Fpcs& fpcs, const SolveReport& r, const GridSpec& spec, const AlphaGrid& grid,
                     const SolverOptions& opts) {
    Rendered out;
    out.json["kind"] = "fpcs";
    out.json["grid"] = grid_json(spec, grid);
    out.json["options"] = options_json(opts);
    const Json result = fpcs_result(fpcs, r);
    for (const auto& [k, v] : result.items()) out.json[k] = v;
    std::ostringstream os;
    os << "m = " << grid.size() << "\n";
    table_for(os, fpcs, r);
    out.table = os.str();
    return out;
}

Rendered render_hierarchy(const Hierarchy& h, const HierarchyReport& r, const GridSpec& spec, const AlphaGrid& grid,
                          const SolverOptions& opts) {
    Rendered out;
    out.json["kind"] = "hierarchy";
    out.json["grid"] = grid_json(spec, grid);
    out.json["options"] = options_json(opts);
    out.json["root"] = fpcs_result(h.root, r.root);
    Json children;
    std::map<std::string, std::pair<std::string, double>> parent_of;
    for (std::size_t p = 0; p < h.children.size(); ++p) {
        const std::string& parent = h.root.criteria()[p];
        children[parent] = fpcs_result(h.children[p], r.children[p]);
        for (std::size_t c = 0; c < h.children[p].size(); ++c) {
            parent_of[h.children[p].criteria()[c]] = {parent, r.children[p].midpoint_weights[c]};
        }
    }
    out.json["children"] = children;
    Json global = Json::array();
    for (const RankedWeight& g : r.global) {
        Json e;
        e["name"] = g.name;
        e["parent"] = parent_of[g.name].first;
        e["local"] = parent_of[g.name].second;
        e["weight"] = g.weight;
        e["rank"] = g.rank;
        e["tied"] = g.tied;
        global.push_back(e);
    }
    out.json["global"] = global;

    std::ostringstream os;
    os << "m = " << grid.size() << "\n\nMain criteria\n";
    table_for(os, h.root, r.root);
    for (std::size_t p = 0; p < h.children.size(); ++p) {
        os << "\nSub-criteria of " << h.root.criteria()[p] << "\n";
        table_for(os, h.children[p], r.children[p]);
    }
    std::map<std::string, const RankedWeight*> by_name;
    for (const RankedWeight& g : r.global) by_name[g.name] = &g;
    os << "\nGlobal weights\n"
       << pad("Main", 10) << pad("Weight", 10) << pad("Sub", 10) << pad("Local", 10) << pad("Global", 10)
       << "Rank\n";
    for (std::size_t p = 0; p < h.children.size(); ++p) {
        for (std::size_t c = 0; c < h.children[p].size(); ++c) {
            const std::string& name = h.children[p].criteria()[c];
            const RankedWeight& g = *by_name[name];
            os << pad(c == 0 ? h.root.criteria()[p] : "", 10)
               << pad(c == 0 ? fixed4(r.root.midpoint_weights[p]) : "", 10) << pad(name, 10)
               << pad(fixed4(r.children[p].midpoint_weights[c]), 10) << pad(fixed4(g.weight), 10) << g.rank
               << (g.tied ? " (tie)" : "") << "\n";
        }
    }
    out.table = os.str();
    return out;
}

std::string criteria_list(const Fpcs& fpcs, const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += fpcs.criteria()[idx[k]];
    }
    return s;
}

}  // namespace

Document parse_document(const nlohmann::json& doc, const std::string& path) {
    if (is_hierarchy_document(doc)) return parse_hierarchy(doc, path);
    return parse_fpcs(doc, path);
}

AlphaGrid GridSpec::build() const {
    if (m && levels) throw ValidationError("grid", "give either m or grid, not both");
    if (levels) {
        try {
            return AlphaGrid(*levels);
        } catch (const DomainError& e) {
            throw ValidationError("grid", e.what());
        }
    }
    const int points = m.value_or(kDefaultGridPoints);
    if (points < 2) throw ValidationError("m", "m must be at least 2");
    if (points > 100000) throw ValidationError("m", "m is unreasonably large");
    return AlphaGrid::uniform(points);
}

SolverOptions parse_solver_options(const nlohmann::json& body) {
    SolverOptions o;
    if (auto it = body.find("seed"); it != body.end()) {
        if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0)) {
            throw ValidationError("seed", "seed must be a nonnegative integer");
        }
        o.seed = it->get<std::uint64_t>();
    }
    if (auto it = body.find("tol"); it != body.end()) {
        if (!it->is_number() || !(it->get<double>() > 0.0)) throw ValidationError("tol", "tol must be a positive number");
        o.optimality_tol = it->get<double>();
    }
    if (auto it = body.find("max_starts"); it != body.end()) {
        if (!it->is_number_integer() || it->get<long long>() < 1) {
            throw ValidationError("max_starts", "max_starts must be a positive integer");
        }
        o.max_starts = it->get<int>();
    }
    if (auto it = body.find("dense_eta_grid"); it != body.end()) {
        if (!it->is_number_integer() || it->get<long long>() < 2 || it->get<long long>() > 1000001) {
            throw ValidationError("dense_eta_grid", "dense_eta_grid must be an integer >= 2");
        }
        o.dense_eta_grid = it->get<int>();
    }
    return o;
}

GridSpec parse_grid_spec(const nlohmann::json& body) {
    GridSpec spec;
    if (auto it = body.find("m"); it != body.end() && !it->is_null()) {
        if (!it->is_number_integer()) throw ValidationError("m", "m must be an integer");
        const long long m = it->get<long long>();
        if (m < 2 || m > 100000) throw ValidationError("m", "m must be between 2 and 100000");
        spec.m = static_cast<int>(m);
    }
    if (auto it = body.find("grid"); it != body.end() && !it->is_null()) {
        if (!it->is_array()) throw ValidationError("grid", "grid must be an array of levels");
        std::vector<double> levels;
        for (std::size_t k = 0; k < it->size(); ++k) {
            if (!(*it)[k].is_number()) throw ValidationError("grid[" + std::to_string(k) + "]", "expected a number");
            levels.push_back((*it)[k].get<double>());
        }
        spec.levels = std::move(levels);
    }
    spec.build();
    return spec;
}

Rendered run_solve(const SolveRun& run) {
    const AlphaGrid grid = run.grid.build();
    if (const auto* fpcs = std::get_if<Fpcs>(&run.document)) {
        return render_fpcs(*fpcs, solve(*fpcs, grid, run.options), run.grid, grid, run.options);
    }
    const auto& h = std::get<Hierarchy>(run.document);
    return render_hierarchy(h, solve(h, grid, run.options), run.grid, grid, run.options);
}

Rendered run_consistency(const ConsistencyRun& run) {
    if (run.grid_points < 2) throw ValidationError("grid_points", "grid_points must be at least 2");
    const Fpcs& fpcs = run.fpcs;
    const AlphaGrid grid = AlphaGrid::uniform(run.grid_points);
    const ConsistencyReport rep = check_conditions(fpcs, grid);
    const SolveReport sol = solve_weights(fpcs, grid, run.options);
    SolveReport full = sol;
    full.eta_dense = max_residual(sol.weights, fpcs, AlphaGrid::uniform(std::max(2, run.options.dense_eta_grid)));
    std::optional<CrBound> cr;
    if (!fpcs.degenerate()) cr = cr_upper(sol.epsilon_star, sol.doa, fpcs.best_to_worst());

    Rendered out;
    Json& j = out.json;
    j["criteria"] = fpcs.criteria();
    j["best"] = fpcs.criteria()[fpcs.best()];
    j["worst"] = fpcs.criteria()[fpcs.worst()];
    j["best_to_worst"] = fpcs.best_to_worst().label();
    j["grid"] = grid_json(GridSpec{run.grid_points, std::nullopt}, grid);
    j["consistent"] = rep.consistent();
    j["status"] = rep.consistent() ? kClean : kViolated;
    Json violations = Json::array();
    for (const Violation& v : rep.violations) {
        Json e;
        e["case"] = v.case_id;
        Json names = Json::array();
        for (std::size_t i : v.criteria) names.push_back(fpcs.criteria()[i]);
        e["criteria"] = names;
        e["alpha"] = v.alphas;
        e["cv"] = v.cv;
        violations.push_back(e);
    }
    j["violations"] = violations;
    auto profile = [](const std::vector<ProductProfile>& p) {
        Json arr = Json::array();
        for (const ProductProfile& e : p) arr.push_back(Json{{"alpha", e.alpha}, {"value", e.value}});
        return arr;
    };
    j["k1_profile"] = profile(rep.k1_profile);
    j["k2_profile"] = profile(rep.k2_profile);
    j["max_cv"] = rep.max_cv;
    j["ci_lower"] = rep.ci_lower ? Json(*rep.ci_lower) : Json(nullptr);
    j["epsilon_star"] = sol.epsilon_star;
    j["doa"] = sol.doa;
    j["eta_dense"] = full.eta_dense;
    j["cr"] = cr_json(cr);
    j["threshold"] = run.threshold;
    j["threshold_note"] = kThresholdNote;
    j["acceptable"] = cr ? Json(cr->reported <= run.threshold) : Json(nullptr);
    j["warnings"] = fpcs.warnings();

    std::ostringstream os;
    os << "m = " << grid.size() << "\n" << (rep.consistent() ? kClean : kViolated) << "\n";
    if (!rep.consistent()) {
        os << pad("case", 6) << pad("criteria", 16) << pad("alpha", 18) << "cv\n";
        for (const Violation& v : rep.violations) {
            std::string alphas;
            for (std::size_t k = 0; k < v.alphas.size(); ++k) alphas += (k ? "," : "") + fixed4(v.alphas[k]);
            os << pad(std::to_string(v.case_id), 6) << pad(criteria_list(fpcs, v.criteria), 16) << pad(alphas, 18)
               << fixed4(v.cv) << "\n";
        }
    }
    os << pad("max CV", 22) << fixed4(rep.max_cv) << "\n";
    if (cr) {
        os << pad("CI lower bound", 22) << fixed4(cr->ci_lower) << "\n";
        os << pad("eps*_F", 22) << fixed4(sol.epsilon_star) << "\n";
        os << pad("CR <= (reported)", 22) << fixed4(cr->reported) << "\n";
        os << pad("CR <= (with DoA)", 22) << fixed4(cr->conservative) << "\n";
        os << pad("threshold", 22) << fixed4(run.threshold) << " ("
           << (cr->reported <= run.threshold ? "within" : "above") << "; " << kThresholdNote << ")\n";
    } else {
        os << pad("CI lower bound", 22) << "undefined (best and worst judged equal)\n";
        os << pad("eps*_F", 22) << fixed4(sol.epsilon_star) << "\n";
    }
    for (const std::string& w : fpcs.warnings()) os << "warning: " << w << "\n";
    out.table = os.str();
    return out;
}

Rendered render_ci_table() {
    Rendered out;
    out.json = Json::array();
    std::ostringstream os;
    os << pad("a_bw", 6) << pad("case 1-2", 11) << pad("case 3/4-6", 13) << pad("case 3 under", 14)
       << pad("case 7-9", 11) << "CI lower\n";
    for (const CiRow& row : ci_table()) {
        Json e;
        e["term"] = row.term.label();
        e["pair"] = row.pair;
        e["over"] = row.over;
        e["under"] = row.under;
        e["monotonicity_bound"] = row.monotonicity_bound;
        e["lower_bound"] = row.lower_bound;
        out.json.push_back(e);
        os << pad(row.term.label(), 6) << pad(fixed4(row.pair), 11) << pad(fixed4(row.over), 13)
           << pad(fixed4(row.under), 14) << pad("<= " + fixed4(row.monotonicity_bound), 11)
           << fixed4(row.lower_bound) << "\n";
    }
    out.table = os.str();
    return out;
}

Json scale_json() {
    Json out = Json::array();
    for (LinguisticTerm t : scale_terms()) {
        const Tfn f = t.tfn();
        Json e;
        e["label"] = t.label();
        e["tfn"] = Json::array({static_cast<int>(f.lower()), static_cast<int>(f.modal()), static_cast<int>(f.upper())});
        e["description"] = std::string(t.description());
        out.push_back(e);
    }
    return out;
}

}  // namespace alphabwm
