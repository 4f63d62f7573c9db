#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "iffcat/builtin.hpp"
#include "iffcat/io.hpp"

using namespace iffcat;

namespace {

std::string fixture_path(const std::string& name) {
    if (const char* dir = std::getenv("IFFCAT_FIXTURES"))
        return std::string(dir) + "/" + name;
    return "fixtures/" + name;
}

} // namespace

TEST_CASE("category JSON round-trip") {
    for (const auto& [name, c] : builtin::all_fixtures()) {
        INFO(name);
        io::json j = io::category_tables_to_json(c.tables());
        RawCategoryTables back = io::category_tables_from_json(j);
        REQUIRE(back == c.tables());
    }
}

TEST_CASE("graph JSON rejects malformed input") {
    io::json good = {{"objects", {"x", "y"}},
                     {"morphisms", io::json::array({{{"id", "f"}, {"src", "x"}, {"tgt", "y"}}})}};
    REQUIRE_NOTHROW(io::graph_from_json(good));

    SECTION("duplicate morphism ids") {
        io::json j = good;
        j["morphisms"].push_back(j["morphisms"][0]);
        REQUIRE_THROWS_AS(io::graph_from_json(j), io::LoadError);
    }
    SECTION("duplicate object ids") {
        io::json j = good;
        j["objects"].push_back("x");
        REQUIRE_THROWS_AS(io::graph_from_json(j), io::LoadError);
    }
    SECTION("missing keys") {
        io::json j = good;
        j["morphisms"][0].erase("tgt");
        REQUIRE_THROWS_AS(io::graph_from_json(j), io::LoadError);
    }
    SECTION("wrong types") {
        io::json j = good;
        j["objects"] = "x";
        REQUIRE_THROWS_AS(io::graph_from_json(j), io::LoadError);
    }
}

TEST_CASE("on-disk category fixtures equal the built-in definitions") {
    const std::map<std::string, std::string> files = {
        {"ONE", "one.json"}, {"ARROW", "arrow.json"}, {"SPAN3", "span3.json"},
        {"PO", "po.json"},   {"POD", "pod.json"},     {"PAR", "par.json"},
        {"M2", "m2.json"},   {"Z2", "z2.json"},       {"G2", "g2.json"}};
    for (const auto& [name, c] : builtin::all_fixtures()) {
        INFO(name);
        FiniteCategory loaded = io::load_category(fixture_path(files.at(name)));
        REQUIRE(loaded == c);
    }
}

TEST_CASE("invalid category tables fail at load time with a witness") {
    FiniteCategory z2 = builtin::z2_group();
    io::json j = io::category_tables_to_json(z2.tables());
    for (auto& entry : j["composition"])
        if (entry[0] == "1" && entry[1] == "s") entry[2] = "1"; // breaks the left unit law
    RawCategoryTables raw = io::category_tables_from_json(j);
    REQUIRE_FALSE(category_violations(raw).empty());
    REQUIRE_THROWS_AS(validate_category(raw), CategoryInvalid);
}

TEST_CASE("diagram fixture loads against its referenced target category") {
    Diagram d = io::load_diagram(fixture_path("diagram_po_span.json"));
    REQUIRE(d.functor.target == builtin::po_square());
    REQUIRE(functor_violations(d.functor).empty());
    REQUIRE(span_of_diagram(d) == Span{"a", "ab", "ac"});
}

TEST_CASE("classification and infomorphism fixtures load and validate") {
    Classification a = io::classification_from_json(io::load_json(fixture_path("cls_a.json")));
    REQUIRE(classification_violations(a).empty());
    REQUIRE(a.instances == std::set<Id>{"a1", "a2"});

    Infomorphism f = io::load_infomorphism(fixture_path("info_f.json"));
    Infomorphism g = io::load_infomorphism(fixture_path("info_g.json"));
    REQUIRE(is_valid(f));
    REQUIRE(is_valid(g));
    REQUIRE(f.source == a);
    REQUIRE(g.source == a);

    io::json round = io::classification_to_json(a);
    REQUIRE(io::classification_from_json(round) == a);
}

TEST_CASE("loading a missing file is a load error") {
    REQUIRE_THROWS_AS(io::load_category("no/such/file.json"), io::LoadError);
    REQUIRE_THROWS_AS(io::load_infomorphism("no/such/file.json"), io::LoadError);
}
