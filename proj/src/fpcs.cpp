#include "alphabwm/fpcs.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "alphabwm/errors.hpp"

namespace alphabwm {

namespace {

constexpr std::array<std::string_view, 9> kDescriptions{
    "Equally preference",   "Weakly preference",       "Moderately preference",
    "Moderately plus preference", "Strongly preference", "Strongly plus preference",
    "Very strongly preference", "Very very strongly preference", "Absolutely preference"};

std::string join_path(const std::string& prefix, const std::string& field) {
    if (prefix.empty()) return field;
    if (field.empty()) return prefix;
    if (field.front() == '[') return prefix + field;
    return prefix + "." + field;
}

std::string indexed(const std::string& field, std::size_t i) {
    return field + "[" + std::to_string(i) + "]";
}

const nlohmann::json& require(const nlohmann::json& doc, const std::string& key, const std::string& path) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ValidationError(join_path(path, key), "missing field '" + key + "'");
    return *it;
}

std::string require_string(const nlohmann::json& value, const std::string& path) {
    if (!value.is_string()) throw ValidationError(path, "expected a string");
    return value.get<std::string>();
}

LinguisticTerm parse_term(const nlohmann::json& value, const std::string& path) {
    try {
        if (value.is_string()) return LinguisticTerm::from_label(value.get<std::string>());
        if (value.is_number_integer()) return LinguisticTerm::from_value(value.get<int>());
    } catch (const ValidationError& e) {
        throw ValidationError(path, e.what());
    }
    throw ValidationError(path, "expected a linguistic term label \"1\"..\"9\"");
}

std::vector<LinguisticTerm> parse_terms(const nlohmann::json& doc, const std::string& key, const std::string& path) {
    const auto& arr = require(doc, key, path);
    const std::string field = join_path(path, key);
    if (!arr.is_array()) throw ValidationError(field, "expected an array of labels");
    std::vector<LinguisticTerm> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(parse_term(arr[i], indexed(field, i)));
    return out;
}

}  // namespace

LinguisticTerm LinguisticTerm::from_label(std::string_view label) {
    if (label.size() != 1 || label[0] < '1' || label[0] > '9') {
        throw ValidationError("", "unknown linguistic term '" + std::string(label) + "'");
    }
    return LinguisticTerm(label[0] - '0');
}

LinguisticTerm LinguisticTerm::from_value(int value) {
    if (value < 1 || value > 9) {
        throw ValidationError("", "unknown linguistic term " + std::to_string(value));
    }
    return LinguisticTerm(value);
}

std::string_view LinguisticTerm::description() const { return kDescriptions[value_ - 1]; }

Tfn LinguisticTerm::tfn() const {
    const double v = value_;
    if (value_ == 1 || value_ == 9) return Tfn(v, v, v);
    return Tfn(v - 1.0, v, v + 1.0);
}

Tfn scale_lookup(LinguisticTerm term) { return term.tfn(); }

std::array<LinguisticTerm, 9> scale_terms() {
    std::array<LinguisticTerm, 9> out;
    for (int v = 1; v <= 9; ++v) out[v - 1] = LinguisticTerm::from_value(v);
    return out;
}

AlphaGrid::AlphaGrid(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 2) throw DomainError("alpha grid needs at least the levels 0 and 1");
    if (levels_.front() != 0.0 || levels_.back() != 1.0) {
        throw DomainError("alpha grid must start at 0 and end at 1");
    }
    mesh_ = 0.0;
    for (std::size_t j = 1; j < levels_.size(); ++j) {
        const double gap = levels_[j] - levels_[j - 1];
        if (!std::isfinite(levels_[j]) || !(gap > 0.0)) {
            throw DomainError("alpha grid levels must be strictly increasing");
        }
        mesh_ = std::max(mesh_, gap);
    }
}

AlphaGrid AlphaGrid::uniform(int m) {
    if (m < 2) throw DomainError("uniform grid needs m >= 2, got " + std::to_string(m));
    std::vector<double> levels(static_cast<std::size_t>(m));
    const double steps = m - 1;
    for (int j = 0; j < m; ++j) levels[j] = j / steps;
    levels.back() = 1.0;
    return AlphaGrid(std::move(levels));
}

bool AlphaGrid::is_subset_of(const AlphaGrid& other, double tol) const {
    return std::all_of(levels_.begin(), levels_.end(), [&](double a) {
        auto it = std::lower_bound(other.levels_.begin(), other.levels_.end(), a - tol);
        return it != other.levels_.end() && std::abs(*it - a) <= tol;
    });
}

AlphaGrid uniform_grid(int m) { return AlphaGrid::uniform(m); }

Fpcs::Fpcs(std::vector<std::string> criteria, std::size_t best, std::size_t worst,
           std::vector<LinguisticTerm> best_to_others, std::vector<LinguisticTerm> others_to_worst)
    : criteria_(std::move(criteria)),
      best_(best),
      worst_(worst),
      best_to_others_(std::move(best_to_others)),
      others_to_worst_(std::move(others_to_worst)) {
    const std::size_t n = criteria_.size();
    if (n < 2) throw ValidationError("criteria", "at least two criteria are required");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
        if (criteria_[i].empty()) throw ValidationError(indexed("criteria", i), "empty criterion name");
        if (!seen.insert(criteria_[i]).second) {
            throw ValidationError(indexed("criteria", i), "duplicate criterion '" + criteria_[i] + "'");
        }
    }
    if (best_ >= n) throw ValidationError("best", "best index out of range");
    if (worst_ >= n) throw ValidationError("worst", "worst index out of range");
    if (best_ == worst_) throw ValidationError("worst", "best and worst criteria must differ");
    if (best_to_others_.size() != n) {
        throw ValidationError("best_to_others", "expected " + std::to_string(n) + " judgments, got " +
                                                    std::to_string(best_to_others_.size()));
    }
    if (others_to_worst_.size() != n) {
        throw ValidationError("others_to_worst", "expected " + std::to_string(n) + " judgments, got " +
                                                     std::to_string(others_to_worst_.size()));
    }
    if (best_to_others_[best_].value() != 1) {
        throw ValidationError(indexed("best_to_others", best_), "the best criterion compared with itself must be \"1\"");
    }
    if (others_to_worst_[worst_].value() != 1) {
        throw ValidationError(indexed("others_to_worst", worst_), "the worst criterion compared with itself must be \"1\"");
    }
    if (best_to_others_[worst_] != others_to_worst_[best_]) {
        throw ValidationError(indexed("others_to_worst", best_),
                              "best-to-worst judgment differs between the two vectors (" +
                                  best_to_others_[worst_].label() + " vs " + others_to_worst_[best_].label() + ")");
    }
}

std::optional<std::size_t> Fpcs::index_of(std::string_view name) const {
    auto it = std::find(criteria_.begin(), criteria_.end(), name);
    if (it == criteria_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - criteria_.begin());
}

LinguisticTerm Fpcs::comparison(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) throw LookupError("criterion index out of range");
    if (i == best_) return best_to_others_[j];
    if (j == worst_) return others_to_worst_[i];
    throw LookupError("comparison (" + criteria_[i] + ", " + criteria_[j] + ") is not stored");
}

Interval Fpcs::judgment_cut(std::size_t i, std::size_t j, double alpha) const {
    return comparison(i, j).tfn().alpha_cut(alpha);
}

Interval judgment_cut(const Fpcs& fpcs, std::size_t i, std::size_t j, double alpha) {
    return fpcs.judgment_cut(i, j, alpha);
}

std::vector<std::string> Fpcs::warnings() const {
    std::vector<std::string> out;
    const LinguisticTerm abw = best_to_worst();
    if (degenerate()) {
        out.push_back("best and worst criteria are judged equal; the consistency index is undefined");
        return out;
    }
    for (std::size_t i = 0; i < size(); ++i) {
        if (best_to_others_[i] > abw) {
            out.push_back("best_to_others[" + std::to_string(i) + "] is stronger than the best-to-worst judgment");
        }
        if (others_to_worst_[i] > abw) {
            out.push_back("others_to_worst[" + std::to_string(i) + "] is stronger than the best-to-worst judgment");
        }
    }
    return out;
}

Fpcs parse_fpcs(const nlohmann::json& doc, const std::string& path) {
    if (!doc.is_object()) throw ValidationError(path, "expected an object");
    const auto& crit = require(doc, "criteria", path);
    const std::string crit_path = join_path(path, "criteria");
    if (!crit.is_array()) throw ValidationError(crit_path, "expected an array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < crit.size(); ++i) names.push_back(require_string(crit[i], indexed(crit_path, i)));

    auto locate = [&](const std::string& key) {
        const std::string field = join_path(path, key);
        const std::string name = require_string(require(doc, key, path), field);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw ValidationError(field, "unknown criterion '" + name + "'");
        return static_cast<std::size_t>(it - names.begin());
    };
    const std::size_t best = locate("best");
    const std::size_t worst = locate("worst");
    auto bo = parse_terms(doc, "best_to_others", path);
    auto ow = parse_terms(doc, "others_to_worst", path);
    try {
        return Fpcs(std::move(names), best, worst, std::move(bo), std::move(ow));
    } catch (const ValidationError& e) {
        throw ValidationError(join_path(path, e.field_path()), e.what());
    }
}

bool is_hierarchy_document(const nlohmann::json& doc) { return doc.is_object() && doc.contains("root"); }

Hierarchy parse_hierarchy(const nlohmann::json& doc, const std::string& path) {
    if (!doc.is_object()) throw ValidationError(path, "expected an object");
    Fpcs root = parse_fpcs(require(doc, "root", path), join_path(path, "root"));
    const auto& kids = require(doc, "children", path);
    const std::string kids_path = join_path(path, "children");
    if (!kids.is_object()) throw ValidationError(kids_path, "expected an object keyed by parent criterion");

    for (const auto& [key, _] : kids.items()) {
        if (!root.index_of(key)) throw ValidationError(join_path(kids_path, key), "'" + key + "' is not a root criterion");
    }
    std::vector<Fpcs> children;
    std::set<std::string> leaf_names;
    for (const std::string& parent : root.criteria()) {
        const std::string child_path = join_path(kids_path, parent);
        auto it = kids.find(parent);
        if (it == kids.end()) throw ValidationError(child_path, "missing child block for '" + parent + "'");
        Fpcs child = parse_fpcs(*it, child_path);
        for (std::size_t i = 0; i < child.size(); ++i) {
            if (!leaf_names.insert(child.criteria()[i]).second) {
                throw ValidationError(indexed(join_path(child_path, "criteria"), i),
                                      "sub-criterion name '" + child.criteria()[i] + "' is used twice in the hierarchy");
            }
        }
        children.push_back(std::move(child));
    }
    return Hierarchy{std::move(root), std::move(children)};
}

nlohmann::json parse_json_text(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("", std::string("malformed JSON: ") + e.what());
    }
}

nlohmann::json to_json(const Fpcs& fpcs) {
    nlohmann::json bo = nlohmann::json::array();
    nlohmann::json ow = nlohmann::json::array();
    for (auto t : fpcs.best_to_others()) bo.push_back(t.label());
    for (auto t : fpcs.others_to_worst()) ow.push_back(t.label());
    return {{"criteria", fpcs.criteria()},
            {"best", fpcs.criteria()[fpcs.best()]},
            {"worst", fpcs.criteria()[fpcs.worst()]},
            {"best_to_others", bo},
            {"others_to_worst", ow}};
}

nlohmann::json to_json(const Hierarchy& hierarchy) {
    nlohmann::json children = nlohmann::json::object();
    for (std::size_t i = 0; i < hierarchy.children.size(); ++i) {
        children[hierarchy.root.criteria()[i]] = to_json(hierarchy.children[i]);
    }
    return {{"root", to_json(hierarchy.root)}, {"children", children}};
}

}  // namespace alphabwm
