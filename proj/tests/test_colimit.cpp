#include <catch2/catch_amalgamated.hpp>

#include "iffcat/builtin.hpp"
#include "iffcat/colimit.hpp"

using namespace iffcat;

TEST_CASE("initial objects") {
    REQUIRE(initial_objects(builtin::po_square()) == std::set<Id>{"a"});
    REQUIRE(initial_objects(builtin::par_pair()).empty());
    REQUIRE(initial_objects(builtin::z2_group()).empty()); // two loops at z
    REQUIRE(initial_objects(builtin::one()) == std::set<Id>{"t0"});

    FiniteCategory po = builtin::po_square();
    REQUIRE(counique(po, "a", "d") == "ad");
    REQUIRE(counique(po, "a", "a") == "ida");
    REQUIRE_THROWS_AS(counique(po, "b", "d"), Error);
}

TEST_CASE("pushouts in the square poset") {
    FiniteCategory po = builtin::po_square();
    Span s{"a", "ab", "ac"};
    std::vector<Cocone2> pushouts;
    for (const Cocone2& cc : enumerate_cocones2(po, s))
        if (is_pushout_cocone2(po, cc)) pushouts.push_back(cc);
    REQUIRE(pushouts.size() == 1);
    REQUIRE(pushouts[0].opvertex == "d");
    REQUIRE(pushouts[0].opfirst == "bd");
    REQUIRE(pushouts[0].opsecond == "cd");
    REQUIRE(pushout_objects(po, s) == std::set<Id>{"d"});
}

TEST_CASE("mediators are unique from a pushout to every cocone") {
    for (FiniteCategory c : {builtin::po_square(), builtin::arrow()}) {
        for (const Span& sp : enumerate_spans(c)) {
            auto cocones = enumerate_cocones2(c, sp);
            for (const Cocone2& p : cocones) {
                if (!is_pushout_cocone2(c, p)) continue;
                for (const Cocone2& s : cocones) {
                    REQUIRE(mediators2(c, p, s).size() == 1);
                    REQUIRE(mediators2(c, p, s)[0] == mediator2(c, p, s));
                }
            }
        }
    }
}

TEST_CASE("coequalizers and coproducts") {
    FiniteCategory par = builtin::par_pair();
    auto pps = parallel_pairs(par);
    bool has_fg = false;
    for (const auto& pp : pps)
        if (pp == MorphismPair{"f", "g"}) {
            has_fg = true;
            REQUIRE_FALSE(has_coequalizer(par, pp));
        }
    REQUIRE(has_fg);

    FiniteCategory po = builtin::po_square();
    for (const auto& pp : parallel_pairs(po)) REQUIRE(has_coequalizer(po, pp));
    REQUIRE(binary_coproduct_objects(po, "b", "c") == std::set<Id>{"d"});
    REQUIRE(is_binary_coproduct(po, "b", "c", "d", "bd", "cd"));
    REQUIRE_FALSE(is_binary_coproduct(po, "b", "c", "b", "idb", "idb"));
}

TEST_CASE("finite cocompleteness report") {
    auto r = finite_cocompleteness_report(builtin::po_square());
    REQUIRE(r.cocomplete());

    auto rp = finite_cocompleteness_report(builtin::par_pair());
    REQUIRE_FALSE(rp.has_initial);
    REQUIRE_FALSE(rp.all_coequalizers);
    REQUIRE_FALSE(rp.cocomplete());
    REQUIRE_FALSE(rp.failing_witness.empty());

    REQUIRE(is_finitely_cocomplete(builtin::one()));
    REQUIRE(is_finitely_cocomplete(builtin::arrow())); // the poset 0 <= 1 has all joins
    REQUIRE_FALSE(is_finitely_cocomplete(builtin::z2_group())); // no initial object
}

TEST_CASE("empty-diagram colimits are exactly the initial objects") {
    for (const auto& [name, c] : builtin::all_fixtures()) {
        INFO(name);
        REQUIRE(colimit_objects(c, empty_diagram(c)) == initial_objects(c));
    }
}

TEST_CASE("span-diagram colimits are exactly the pushout opvertices") {
    for (FiniteCategory c : {builtin::po_square(), builtin::arrow(), builtin::po_double_top()}) {
        for (const Span& sp : enumerate_spans(c)) {
            Diagram d = diagram_of_span(c, sp);
            REQUIRE(span_of_diagram(d) == sp);
            REQUIRE(colimit_objects(c, d) == pushout_objects(c, sp));
        }
        // and conversely over all span-shaped diagrams
        for (const Diagram& d : enumerate_diagrams(span_shape_category(), c))
            REQUIRE(colimit_objects(c, d) == pushout_objects(c, span_of_diagram(d)));
    }
}

TEST_CASE("comediators from universal cocones are unique") {
    FiniteCategory po = builtin::po_square();
    Diagram d = diagram_of_span(po, {"a", "ab", "ac"});
    auto universals = universal_cocones(po, d);
    REQUIRE_FALSE(universals.empty());
    for (const Cocone& g : universals)
        for (const Cocone& t : all_cocones(po, d)) {
            auto ms = comediators(po, d, g, t);
            REQUIRE(ms.size() == 1);
            REQUIRE(ms[0] == comediator(po, d, g, t));
        }
}

TEST_CASE("two distinct colimits are connected by a unique mediating iso") {
    FiniteCategory pod = builtin::po_double_top();
    Diagram d = diagram_of_span(pod, {"a", "ab", "ac"});
    auto apexes = colimit_objects(pod, d);
    REQUIRE(apexes == std::set<Id>{"d", "e"});
    auto rep = check_colimits_isomorphic(pod, d);
    REQUIRE(rep.all_ok);
    bool cross = false;
    for (const auto& e : rep.entries)
        if (e.first_colimit != e.second_colimit) {
            cross = true;
            REQUIRE(e.forward != e.backward);
            REQUIRE(pod.compose(e.forward, e.backward) ==
                    pod.identity_of(pod.source_of(e.forward)));
        }
    REQUIRE(cross);
}

TEST_CASE("nontrivial automorphisms do not break colimit uniqueness with mediation") {
    // Z2 has two isomorphisms z -> z but only one commutes with the
    // universal cocone components, so the mediated uniqueness check passes.
    FiniteCategory z2 = builtin::z2_group();
    for (const FiniteCategory& shape : default_shape_family())
        for (const Diagram& d : enumerate_diagrams(shape, z2))
            REQUIRE(check_colimits_isomorphic(z2, d).all_ok);
}

TEST_CASE("cocompleteness over the default shape family matches the report") {
    for (const auto& [name, c] : builtin::all_fixtures()) {
        INFO(name);
        REQUIRE(is_cocomplete_over_shapes(c, default_shape_family()) ==
                finite_cocompleteness_report(c).cocomplete());
    }
}
