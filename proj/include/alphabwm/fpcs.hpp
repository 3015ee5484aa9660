#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "alphabwm/fuzzy.hpp"

namespace alphabwm {

// One of the nine labels "1".."9" of the linguistic scale.
class LinguisticTerm {
public:
    LinguisticTerm() = default;

    // Throws ValidationError (empty field path) for anything but "1".."9".
    static LinguisticTerm from_label(std::string_view label);
    // Throws ValidationError unless 1 <= value <= 9.
    static LinguisticTerm from_value(int value);

    int value() const { return value_; }
    std::string label() const { return std::to_string(value_); }
    std::string_view description() const;
    Tfn tfn() const;

    friend bool operator==(LinguisticTerm, LinguisticTerm) = default;
    friend auto operator<=>(LinguisticTerm, LinguisticTerm) = default;

private:
    explicit LinguisticTerm(int value) : value_(value) {}
    int value_ = 1;
};

Tfn scale_lookup(LinguisticTerm term);

// All nine terms in label order.
std::array<LinguisticTerm, 9> scale_terms();

class AlphaGrid {
public:
    // Levels must be finite, strictly increasing, start at 0 and end at 1.
    explicit AlphaGrid(std::vector<double> levels);

    static AlphaGrid uniform(int m);

    std::span<const double> levels() const { return levels_; }
    std::size_t size() const { return levels_.size(); }
    double mesh() const { return mesh_; }
    bool is_subset_of(const AlphaGrid& other, double tol = 1e-12) const;

private:
    std::vector<double> levels_;
    double mesh_ = 1.0;
};

// {0, 1/(m-1), ..., 1}. Throws DomainError for m < 2.
AlphaGrid uniform_grid(int m);

class Fpcs {
public:
    // Enforces every invariant; throws ValidationError with the field path of
    // the first violation.
    Fpcs(std::vector<std::string> criteria, std::size_t best, std::size_t worst,
         std::vector<LinguisticTerm> best_to_others, std::vector<LinguisticTerm> others_to_worst);

    std::size_t size() const { return criteria_.size(); }
    const std::vector<std::string>& criteria() const { return criteria_; }
    std::size_t best() const { return best_; }
    std::size_t worst() const { return worst_; }
    const std::vector<LinguisticTerm>& best_to_others() const { return best_to_others_; }
    const std::vector<LinguisticTerm>& others_to_worst() const { return others_to_worst_; }

    LinguisticTerm best_to_worst() const { return best_to_others_[worst_]; }
    bool degenerate() const { return best_to_worst().value() == 1; }

    std::optional<std::size_t> index_of(std::string_view name) const;

    // Stored judgment of i over j. Only row `best` and column `worst` are
    // stored; anything else throws LookupError.
    LinguisticTerm comparison(std::size_t i, std::size_t j) const;
    Interval judgment_cut(std::size_t i, std::size_t j, double alpha) const;

    // Non-fatal remarks: degenerate best-to-worst judgment, judgments stronger
    // than best-to-worst.
    std::vector<std::string> warnings() const;

private:
    std::vector<std::string> criteria_;
    std::size_t best_;
    std::size_t worst_;
    std::vector<LinguisticTerm> best_to_others_;
    std::vector<LinguisticTerm> others_to_worst_;
};

Interval judgment_cut(const Fpcs& fpcs, std::size_t i, std::size_t j, double alpha);

// One child system per parent criterion; child criteria names are local to
// the child but must be unique across the whole hierarchy.
struct Hierarchy {
    Fpcs root;
    std::vector<Fpcs> children;  // aligned with root.criteria()
};

// `path` prefixes every reported field path.
Fpcs parse_fpcs(const nlohmann::json& doc, const std::string& path = "");
Hierarchy parse_hierarchy(const nlohmann::json& doc, const std::string& path = "");
bool is_hierarchy_document(const nlohmann::json& doc);

// Throws ValidationError with field path "" when text is not JSON.
nlohmann::json parse_json_text(std::string_view text);

nlohmann::json to_json(const Fpcs& fpcs);
nlohmann::json to_json(const Hierarchy& hierarchy);

}  // namespace alphabwm
