#include <doctest.h>

#include "alphabwm/errors.hpp"
#include "alphabwm/fpcs.hpp"
#include "fixtures.hpp"

using namespace alphabwm;

namespace {

nlohmann::json example1_doc() { return fixtures::load_json("example1.json"); }

std::string failing_path(const nlohmann::json& doc) {
    try {
        parse_fpcs(doc);
    } catch (const ValidationError& e) {
        return e.field_path();
    }
    return "<accepted>";
}

}  // namespace

TEST_CASE("linguistic scale") {
    CHECK(scale_lookup(LinguisticTerm::from_label("1")) == Tfn(1, 1, 1));
    CHECK(scale_lookup(LinguisticTerm::from_label("3")) == Tfn(2, 3, 4));
    CHECK(scale_lookup(LinguisticTerm::from_label("9")) == Tfn(9, 9, 9));
    for (int v = 2; v <= 8; ++v) CHECK(scale_lookup(LinguisticTerm::from_value(v)) == Tfn(v - 1, v, v + 1));
    CHECK_THROWS_AS(LinguisticTerm::from_label("10"), ValidationError);
    CHECK_THROWS_AS(LinguisticTerm::from_label("0"), ValidationError);
    CHECK_THROWS_AS(LinguisticTerm::from_label(""), ValidationError);
    CHECK(scale_terms().size() == 9);
    CHECK(scale_terms()[4].label() == "5");
}

TEST_CASE("uniform grids") {
    const AlphaGrid g2 = uniform_grid(2);
    CHECK(std::vector<double>(g2.levels().begin(), g2.levels().end()) == std::vector<double>{0, 1});
    CHECK(g2.mesh() == 1.0);
    const AlphaGrid g5 = uniform_grid(5);
    CHECK(std::vector<double>(g5.levels().begin(), g5.levels().end()) == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
    CHECK(uniform_grid(17).mesh() == 0.0625);
    CHECK(uniform_grid(129).mesh() == 0.0078125);
    CHECK_THROWS_AS(uniform_grid(1), DomainError);
    CHECK(uniform_grid(2).is_subset_of(uniform_grid(17)));
    CHECK(uniform_grid(17).is_subset_of(uniform_grid(129)));
    CHECK_FALSE(uniform_grid(4).is_subset_of(uniform_grid(17)));
}

TEST_CASE("custom grids must contain both ends and increase") {
    CHECK_NOTHROW(AlphaGrid({0.0, 0.3, 1.0}));
    CHECK(AlphaGrid({0.0, 0.3, 1.0}).mesh() == doctest::Approx(0.7));
    CHECK_THROWS_AS(AlphaGrid({0.0, 0.5}), DomainError);
    CHECK_THROWS_AS(AlphaGrid({0.1, 1.0}), DomainError);
    CHECK_THROWS_AS(AlphaGrid({0.0, 0.5, 0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(AlphaGrid({0.0, 0.6, 0.4, 1.0}), DomainError);
}

TEST_CASE("judgment cuts") {
    const Fpcs f = fixtures::example1();
    CHECK(f.judgment_cut(1, 4, 0.0) == Interval{7, 9});
    CHECK(judgment_cut(f, 1, 4, 1.0) == Interval{8, 8});
    const Fpcs nine = fixtures::pair_system(9);
    CHECK(nine.judgment_cut(0, 1, 0.5) == Interval{9, 9});
    CHECK(f.judgment_cut(1, 0, 0.5) == Interval{1.5, 2.5});
    CHECK(f.judgment_cut(2, 4, 0.0) == Interval{4, 6});
    CHECK_THROWS_AS(f.judgment_cut(0, 2, 0.5), LookupError);
}

TEST_CASE("example document parses") {
    const Fpcs f = parse_fpcs(example1_doc());
    CHECK(f.size() == 5);
    CHECK(f.best() == 1);
    CHECK(f.worst() == 4);
    CHECK(f.best_to_worst().label() == "8");
    CHECK_FALSE(f.degenerate());
    CHECK(f.warnings().empty());
}

TEST_CASE("smallest legal system") {
    nlohmann::json doc = {{"criteria", {"x", "y"}}, {"best", "x"}, {"worst", "y"},
                          {"best_to_others", {"1", "4"}}, {"others_to_worst", {"4", "1"}}};
    const Fpcs f = parse_fpcs(doc);
    CHECK(f.size() == 2);
    CHECK(f.best_to_worst().value() == 4);
}

TEST_CASE("each invariant violation names its field") {
    auto doc = example1_doc();
    doc["others_to_worst"][1] = "7";
    CHECK(failing_path(doc) == "others_to_worst[1]");

    doc = example1_doc();
    doc.erase("worst");
    CHECK(failing_path(doc) == "worst");

    doc = example1_doc();
    doc["best"] = "c9";
    CHECK(failing_path(doc) == "best");

    doc = example1_doc();
    doc["best_to_others"].erase(0);
    CHECK(failing_path(doc) == "best_to_others");

    doc = example1_doc();
    doc["best_to_others"][1] = "2";
    CHECK(failing_path(doc) == "best_to_others[1]");

    doc = example1_doc();
    doc["others_to_worst"][4] = "3";
    CHECK(failing_path(doc) == "others_to_worst[4]");

    doc = example1_doc();
    doc["best_to_others"][2] = "11";
    CHECK(failing_path(doc) == "best_to_others[2]");

    doc = example1_doc();
    doc["worst"] = "c2";
    CHECK(failing_path(doc) == "worst");

    doc = example1_doc();
    doc["criteria"][3] = "c1";
    CHECK(failing_path(doc) == "criteria[3]");

    CHECK_THROWS_AS(parse_json_text("{not json"), ValidationError);
}

TEST_CASE("round trip") {
    const Fpcs f = parse_fpcs(example1_doc());
    const nlohmann::json out = to_json(f);
    CHECK(out == example1_doc());
    const Fpcs g = parse_fpcs(out);
    CHECK(g.criteria() == f.criteria());
    CHECK(g.best_to_others() == f.best_to_others());
    CHECK(g.others_to_worst() == f.others_to_worst());
}

TEST_CASE("integer labels are accepted and serialized as strings") {
    nlohmann::json doc = {{"criteria", {"x", "y"}}, {"best", "x"}, {"worst", "y"},
                          {"best_to_others", {1, 3}}, {"others_to_worst", {3, 1}}};
    CHECK(to_json(parse_fpcs(doc))["best_to_others"] == nlohmann::json({"1", "3"}));
}

TEST_CASE("degenerate and over-strong judgments produce warnings") {
    CHECK(fixtures::all_ones().degenerate());
    CHECK(fixtures::all_ones().warnings().size() == 1);
    const Fpcs strong = fixtures::make(0, 2, {1, 5, 3}, {3, 2, 1});
    CHECK(strong.warnings().size() == 1);
}

TEST_CASE("hierarchy documents") {
    const auto doc = fixtures::load_json("supply-chain.json");
    CHECK(is_hierarchy_document(doc));
    const Hierarchy h = parse_hierarchy(doc);
    CHECK(h.root.size() == 5);
    CHECK(h.children.size() == 5);
    CHECK(h.children[1].criteria() == std::vector<std::string>{"c21", "c22", "c23"});
    CHECK(to_json(h) == doc);

    auto missing = doc;
    missing["children"].erase("c3");
    try {
        parse_hierarchy(missing);
        FAIL("accepted a hierarchy without a child block");
    } catch (const ValidationError& e) {
        CHECK(e.field_path() == "children.c3");
    }

    auto bad = doc;
    bad["children"]["c2"]["best"] = "c99";
    try {
        parse_hierarchy(bad);
        FAIL("accepted an unknown best criterion");
    } catch (const ValidationError& e) {
        CHECK(e.field_path() == "children.c2.best");
    }

    auto extra = doc;
    extra["children"]["c9"] = doc["children"]["c1"];
    CHECK_THROWS_AS(parse_hierarchy(extra), ValidationError);
}
