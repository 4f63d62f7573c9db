#include <catch2/catch_amalgamated.hpp>

#include "iffcat/builtin.hpp"
#include "iffcat/graph.hpp"

using namespace iffcat;

namespace {

FiniteGraph two_arrows() {
    FiniteGraph g;
    g.objects = {"x", "y", "z"};
    g.morphisms = {"f", "g"};
    g.src = {{"f", "x"}, {"g", "y"}};
    g.tgt = {{"f", "y"}, {"g", "z"}};
    return g;
}

} // namespace

TEST_CASE("graph validation catches dangling boundaries") {
    FiniteGraph g = two_arrows();
    REQUIRE(graph_violations(g).empty());

    SECTION("missing source entry") {
        g.src.erase("f");
        REQUIRE_FALSE(graph_violations(g).empty());
    }
    SECTION("boundary points at a non-object") {
        g.tgt["g"] = "nowhere";
        REQUIRE_FALSE(graph_violations(g).empty());
    }
    SECTION("stray boundary entry for a non-morphism") {
        g.src["h"] = "x";
        REQUIRE_FALSE(graph_violations(g).empty());
    }
}

TEST_CASE("tensor square holds exactly the composable pairs") {
    FiniteGraph g = two_arrows();
    FiniteGraph t = tensor(g, g);
    REQUIRE(t.objects == g.objects);
    // only tgt(f) = src(g) matches
    REQUIRE(t.morphisms == std::set<Id>{tensor_id("f", "g")});
    REQUIRE(t.source_of(tensor_id("f", "g")) == "x");
    REQUIRE(t.target_of(tensor_id("f", "g")) == "z");

    FiniteGraph h = g;
    h.objects.insert("w");
    REQUIRE_THROWS_AS(tensor(g, h), Error);
}

TEST_CASE("unit graph is one loop per object, named by the object") {
    FiniteGraph u = unit_graph({"x", "y"});
    REQUIRE(u.morphisms == std::set<Id>{"x", "y"});
    REQUIRE(u.source_of("x") == "x");
    REQUIRE(u.target_of("x") == "x");
}

TEST_CASE("opposite graph swaps boundaries and is an involution") {
    FiniteGraph g = two_arrows();
    FiniteGraph op = opposite_graph(g);
    REQUIRE(op.source_of("f") == "y");
    REQUIRE(op.target_of("f") == "x");
    REQUIRE(opposite_graph(op) == g);
}

TEST_CASE("graph morphism validation") {
    FiniteGraph g = two_arrows();
    GraphMorphism id = identity_graph_morphism(g);
    REQUIRE(is_valid(id));

    SECTION("boundary preservation is enforced") {
        GraphMorphism bad = id;
        bad.morphism_map["f"] = "g"; // src(g)=y but f maps x to x
        REQUIRE_FALSE(is_valid(bad));
    }
    SECTION("totality is enforced") {
        GraphMorphism bad = id;
        bad.morphism_map.erase("g");
        REQUIRE_FALSE(is_valid(bad));
    }
}

TEST_CASE("composition and tensor of graph morphisms") {
    FiniteGraph g = two_arrows();
    GraphMorphism id = identity_graph_morphism(g);
    REQUIRE(compose_graph_morphisms(id, id) == id);

    GraphMorphism t = tensor_graph_morphisms(id, id);
    REQUIRE(t.source == tensor(g, g));
    REQUIRE(t.target == tensor(g, g));
    REQUIRE(t.morphism_map.at(tensor_id("f", "g")) == tensor_id("f", "g"));

    FiniteGraph h = g;
    GraphMorphism swapped = id;
    swapped.object_map["x"] = "x"; // same map; mismatch via object sets instead
    h.objects.insert("extra");
    GraphMorphism other = identity_graph_morphism(h);
    REQUIRE_THROWS_AS(tensor_graph_morphisms(id, other), Error);
}

TEST_CASE("coherence morphisms are valid graph morphisms") {
    FiniteGraph g = builtin::po_square().graph;
    CoherenceMorphisms c = coherence_morphisms(g);
    REQUIRE(is_valid(c.alpha));
    REQUIRE(is_valid(c.left_unitor));
    REQUIRE(is_valid(c.right_unitor));
    REQUIRE(is_valid(c.tau));

    // alpha reassociates triples; both sides have one morphism per
    // composable triple
    REQUIRE(c.alpha.source.morphisms.size() == c.alpha.target.morphisms.size());
    REQUIRE(c.alpha.morphism_map.size() == c.alpha.source.morphisms.size());

    // unitors are bijections onto the underlying morphisms
    REQUIRE(c.left_unitor.morphism_map.size() == g.morphisms.size());
    REQUIRE(c.right_unitor.morphism_map.size() == g.morphisms.size());
}
