// Acceptance gate for the finite-category engine: one pass/fail line per
// criterion, nonzero exit if any fails. Each criterion re-derives its
// expected answers independently where feasible (brute-force enumeration)
// instead of trusting the code path under test.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "iffcat/builtin.hpp"
#include "iffcat/colimit.hpp"
#include "iffcat/classification.hpp"
#include "iffcat/kif/check.hpp"
#include "iffcat/kif/standard_model.hpp"
#include "iffcat/mutate.hpp"

using namespace iffcat;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixture_path(const std::string& name) {
    if (const char* dir = std::getenv("IFFCAT_FIXTURES"))
        return std::string(dir) + "/" + name;
    return "fixtures/" + name;
}

/// Re-check a reported violation directly against the tables.
bool witness_verifies(const RawCategoryTables& raw, const LawViolation& v) {
    const FiniteGraph& g = raw.graph;
    auto comp = [&](const Id& a, const Id& b) -> const Id* {
        auto it = raw.composition.find({a, b});
        return it == raw.composition.end() ? nullptr : &it->second;
    };
    auto is_identity = [&](const Id& m) {
        for (const auto& [o, i] : raw.identities)
            if (i == m) return true;
        return false;
    };
    switch (v.tag) {
        case LawTag::Partiality:
            return true; // structural failure; the detail string is the witness
        case LawTag::Typing: {
            if (v.witness.size() == 3) { // composite typing
                const Id* r = comp(v.witness[0], v.witness[1]);
                if (!r || *r != v.witness[2]) return false;
                return g.source_of(*r) != g.source_of(v.witness[0]) ||
                       g.target_of(*r) != g.target_of(v.witness[1]);
            }
            if (v.witness.size() == 2) { // identity not a loop
                const Id& o = v.witness[0];
                const Id& m = v.witness[1];
                return g.source_of(m) != o || g.target_of(m) != o;
            }
            return false;
        }
        case LawTag::Associativity: {
            if (v.witness.size() != 3) return false;
            const Id* ab = comp(v.witness[0], v.witness[1]);
            const Id* bc = comp(v.witness[1], v.witness[2]);
            if (!ab || !bc) return false;
            const Id* left = comp(*ab, v.witness[2]);
            const Id* right = comp(v.witness[0], *bc);
            return left && right && *left != *right;
        }
        case LawTag::UnitLaw: {
            if (v.witness.size() != 2) return false;
            const Id* r = comp(v.witness[0], v.witness[1]);
            if (!r) return false;
            if (is_identity(v.witness[0]) && *r != v.witness[1]) return true;
            if (is_identity(v.witness[1]) && *r != v.witness[0]) return true;
            return false;
        }
    }
    return false;
}

// Criterion 1: all bundled fixtures validate; 200 seeded single-entry
// mutations are nearly always rejected, and every rejection carries a
// witness that re-checks against the mutated tables.
void criterion_validation_and_fuzzing() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    for (const auto& [name, c] : builtin::all_fixtures())
        if (!category_violations(c.tables()).empty()) {
            ok = false;
            detail = "fixture " + name + " failed validation";
        }

    std::mt19937 rng(1);
    auto fixtures = builtin::all_fixtures();
    int total = 0, rejected = 0;
    while (total < 200) {
        for (const auto& [name, c] : fixtures) {
            if (c.morphisms().size() < 2 || total >= 200) continue;
            Mutation m = mutate_one_entry(c, rng);
            ++total;
            auto vs = category_violations(m.tables);
            if (vs.empty()) continue;
            ++rejected;
            for (const auto& v : vs)
                if (!witness_verifies(m.tables, v)) {
                    ok = false;
                    detail = name + ": unverifiable witness for " +
                             std::string(law_tag_name(v.tag)) + " (" + m.description + ")";
                }
        }
    }
    if (rejected * 100 < total * 95) {
        ok = false;
        detail = "only " + std::to_string(rejected) + "/" + std::to_string(total) + " rejected";
    }
    double dt = seconds_since(t0);
    if (dt >= 5.0) {
        ok = false;
        detail = "took " + std::to_string(dt) + "s (budget 5s)";
    }
    report("fixture validation + 200-case mutation fuzzing with verified witnesses", ok, detail);
}

// Criterion 2: the monoid-law check phrased with graph morphisms agrees
// exactly with the element-level law check, on valid and broken tables.
void criterion_graph_morphism_agreement() {
    bool ok = true;
    std::string detail;
    for (const auto& [name, c] : builtin::all_fixtures()) {
        bool elem = category_violations(c.tables()).empty();
        bool gm = check_monoid_laws_as_graph_morphisms(c).all_passed();
        if (elem != gm) {
            ok = false;
            detail = "disagreement on fixture " + name;
        }
    }
    std::mt19937 rng(2);
    for (const auto& [name, c] : builtin::all_fixtures()) {
        if (c.morphisms().size() < 2) continue;
        for (int k = 0; k < 10; ++k) {
            Mutation m = mutate_one_entry(c, rng);
            bool elem = category_violations(m.tables).empty();
            bool gm =
                check_monoid_laws_as_graph_morphisms(FiniteCategory::unchecked(m.tables))
                    .all_passed();
            if (elem != gm) {
                ok = false;
                detail = name + ": disagreement on " + m.description;
            }
        }
    }
    report("graph-morphism monoid laws agree exactly with element-level laws", ok, detail);
}

// Criterion 3: opposite is an involution on every fixture, and epimorphism
// computed through the opposite agrees with direct left-cancellation.
void criterion_opposite_and_epi() {
    bool ok = true;
    std::string detail;
    for (const auto& [name, c] : builtin::all_fixtures()) {
        FiniteCategory op = opposite_category(c);
        if (!category_violations(op.tables()).empty() || opposite_category(op) != c) {
            ok = false;
            detail = "involution failed on " + name;
        }
        for (const Id& m : c.morphisms()) {
            bool direct = true;
            for (const Id& m0 : c.morphisms())
                for (const Id& m1 : c.morphisms())
                    if (c.composable(m, m0) && c.composable(m, m1) && m0 != m1 &&
                        c.compose(m, m0) == c.compose(m, m1))
                        direct = false;
            if (is_epimorphism(c, m) != direct) {
                ok = false;
                detail = name + ": epi disagreement at " + m;
            }
        }
    }
    report("opposite involution + epimorphism agrees with direct left cancellation", ok, detail);
}

// Criterion 4: the arrow category separates bimorphism from isomorphism,
// and in the groupoid fixtures the two notions coincide.
void criterion_bimorphism_vs_iso() {
    bool ok = true;
    std::string detail;
    FiniteCategory a = builtin::arrow();
    if (!is_bimorphism(a, "a") || is_isomorphism(a, "a")) {
        ok = false;
        detail = "'a' should be a non-invertible bimorphism";
    }
    for (const auto& [name, c] :
         {std::pair<std::string, FiniteCategory>{"Z2", builtin::z2_group()},
          {"G2", builtin::iso_pair_groupoid()}})
        for (const Id& m : c.morphisms())
            if (!is_isomorphism(c, m) || is_bimorphism(c, m) != is_isomorphism(c, m)) {
                ok = false;
                detail = name + ": groupoid disagreement at " + m;
            }
    report("bimorphism/isomorphism split on ARROW, coincidence on groupoids", ok, detail);
}

// Criterion 5: general colimits specialize correctly: the empty diagram's
// colimits are the initial objects, and span-diagram colimits are the
// pushout opvertices, in both directions, exhaustively over PO and ARROW.
void criterion_colimit_specialization() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& [name, c] : builtin::all_fixtures())
        if (colimit_objects(c, empty_diagram(c)) != initial_objects(c)) {
            ok = false;
            detail = name + ": empty-diagram colimits != initial objects";
        }
    for (const auto& [name, c] :
         {std::pair<std::string, FiniteCategory>{"PO", builtin::po_square()},
          {"ARROW", builtin::arrow()}}) {
        for (const Span& sp : enumerate_spans(c))
            if (colimit_objects(c, diagram_of_span(c, sp)) != pushout_objects(c, sp)) {
                ok = false;
                detail = name + ": span (" + sp.vertex + ";" + sp.first + "," + sp.second + ")";
            }
        for (const Diagram& d : enumerate_diagrams(span_shape_category(), c))
            if (colimit_objects(c, d) != pushout_objects(c, span_of_diagram(d))) {
                ok = false;
                detail = name + ": diagram->span direction failed";
            }
    }
    double dt = seconds_since(t0);
    if (dt >= 30.0) {
        ok = false;
        detail = "took " + std::to_string(dt) + "s (budget 30s)";
    }
    report("empty/span diagram colimits match initial objects and pushouts exhaustively",
           ok, detail);
}

// Criterion 6: from every pushout cocone and every universal cocone there
// is exactly one mediator to each competing cocone, and the two colimits
// in POD are connected by mutually inverse mediators.
void criterion_mediator_uniqueness() {
    bool ok = true;
    std::string detail;
    for (const auto& [name, c] :
         {std::pair<std::string, FiniteCategory>{"PO", builtin::po_square()},
          {"ARROW", builtin::arrow()}}) {
        for (const Span& sp : enumerate_spans(c)) {
            auto cocones = enumerate_cocones2(c, sp);
            for (const Cocone2& p : cocones) {
                if (!is_pushout_cocone2(c, p)) continue;
                for (const Cocone2& s : cocones)
                    if (mediators2(c, p, s).size() != 1) {
                        ok = false;
                        detail = name + ": mediator count != 1";
                    }
            }
        }
        for (const Diagram& d : enumerate_diagrams(span_shape_category(), c))
            for (const Cocone& gamma : universal_cocones(c, d))
                for (const Cocone& t : all_cocones(c, d))
                    if (comediators(c, d, gamma, t).size() != 1) {
                        ok = false;
                        detail = name + ": comediator count != 1";
                    }
    }

    FiniteCategory pod = builtin::po_double_top();
    Diagram d = diagram_of_span(pod, {"a", "ab", "ac"});
    if (colimit_objects(pod, d) != std::set<Id>{"d", "e"}) {
        ok = false;
        detail = "POD should have colimit apexes d and e";
    }
    auto rep = check_colimits_isomorphic(pod, d);
    bool cross = false;
    for (const auto& e : rep.entries)
        if (e.first_colimit != e.second_colimit) cross = true;
    if (!rep.all_ok || !cross) {
        ok = false;
        detail = "POD colimits not connected by unique isomorphisms";
    }
    report("mediators and comediators are unique; POD colimits uniquely isomorphic", ok, detail);
}

// Criterion 7: the bundled corpus parses and round-trips, holds on the
// standard model over all fixtures, and 20 seeded law-breaking mutations
// each falsify at least one sentence with a witness and no eval errors.
void criterion_corpus() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    std::ifstream in(fixture_path("corpus.kif"));
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (text.empty()) {
        report("conformance corpus holds and is falsified by seeded mutations", false,
               "cannot read corpus.kif");
        return;
    }
    try {
        auto forms = kif::parse(text);
        std::string printed;
        for (const auto& f : forms) printed += kif::print(f) + "\n";
        if (kif::parse(printed).size() != forms.size()) {
            ok = false;
            detail = "round-trip changed form count";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("parse failure: ") + e.what();
    }

    auto fixtures = builtin::all_fixtures();
    auto model = kif::build_standard_model(fixtures, {});
    auto rep = kif::check_text(model, text);
    if (rep.count(kif::Verdict::False) != 0 || rep.count(kif::Verdict::Error) != 0 ||
        rep.count(kif::Verdict::True) == 0) {
        ok = false;
        detail = "corpus does not hold on the standard model";
    }

    std::mt19937 rng(3);
    std::vector<size_t> mutable_idx;
    for (size_t i = 0; i < fixtures.size(); ++i)
        if (fixtures[i].second.morphisms().size() >= 2) mutable_idx.push_back(i);
    std::uniform_int_distribution<size_t> pick(0, mutable_idx.size() - 1);
    for (int k = 0; k < 20 && ok; ++k) {
        size_t idx = mutable_idx[pick(rng)];
        Mutation m = law_breaking_mutation(fixtures[idx].second, rng);
        auto mutated = fixtures;
        mutated[idx].second = FiniteCategory::unchecked(m.tables);
        auto mrep = kif::check_text(kif::build_standard_model(mutated, {}), text);
        if (mrep.count(kif::Verdict::Error) != 0) {
            ok = false;
            detail = fixtures[idx].first + ": eval error under " + m.description;
        }
        bool witnessed = false;
        for (const auto& s : mrep.sentences)
            if (s.verdict == kif::Verdict::False && !s.detail.empty()) witnessed = true;
        if (!witnessed) {
            ok = false;
            detail = fixtures[idx].first + ": not falsified with witness under " + m.description;
        }
    }

    double dt = seconds_since(t0);
    if (dt >= 60.0) {
        ok = false;
        detail = "took " + std::to_string(dt) + "s (budget 60s)";
    }
    report("conformance corpus holds and is falsified by seeded mutations", ok, detail);
}

// Criterion 8: a small closed family of classifications forms a category,
// and the classification pushout has exactly one mediator to every cocone
// in a bounded enumeration of candidate cocones.
void criterion_classification_pushout() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    Classification A{{"a1", "a2"}, {"s", "t"}, {{"a1", "s"}, {"a2", "t"}}};
    Classification B{{"b1", "b2"}, {"u", "v", "w"}, {{"b1", "u"}, {"b2", "v"}, {"b1", "w"}}};
    Classification C{{"c1", "c2", "c3"}, {"p", "q"}, {{"c1", "p"}, {"c2", "q"}, {"c3", "p"}}};
    Infomorphism f{A, B, {{"s", "u"}, {"t", "v"}}, {{"b1", "a1"}, {"b2", "a2"}}};
    Infomorphism g{A, C, {{"s", "p"}, {"t", "q"}}, {{"c1", "a1"}, {"c2", "a2"}, {"c3", "a1"}}};
    if (!is_valid(f) || !is_valid(g)) {
        report("classification category + pushout universality over bounded cocones", false,
               "span legs invalid");
        return;
    }
    ClassificationPushout p = pushout_classification(f, g);

    // closed family: A, B, C, apex with identities, the legs, and their
    // composites into the apex
    try {
        std::vector<std::pair<std::string, Classification>> objs = {
            {"A", A}, {"B", B}, {"C", C}, {"P", p.apex}};
        std::vector<std::pair<std::string, Infomorphism>> mors = {
            {"idA", identity_infomorphism(A)},
            {"idB", identity_infomorphism(B)},
            {"idC", identity_infomorphism(C)},
            {"idP", identity_infomorphism(p.apex)},
            {"f", f},
            {"g", g},
            {"j1", p.inj1},
            {"j2", p.inj2},
            {"fj1", compose_infomorphisms(f, p.inj1)}};
        FiniteCategory cat = as_abstract_category(objs, mors);
        if (!category_violations(cat.tables()).empty()) {
            ok = false;
            detail = "abstract classification category invalid";
        }
        if (compose_infomorphisms(g, p.inj2) != compose_infomorphisms(f, p.inj1)) {
            ok = false;
            detail = "pushout square does not commute";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("family not closed: ") + e.what();
    }

    auto universe = enumerate_cocones_bounded(f, g, 4, 4);
    auto urep = verify_pushout_universality(p, f, g, universe);
    if (universe.empty() || !urep.all_unique()) {
        ok = false;
        detail = "mediator uniqueness failed: " + urep.first_failure;
    }

    double dt = seconds_since(t0);
    if (dt >= 120.0) {
        ok = false;
        detail = "took " + std::to_string(dt) + "s (budget 120s)";
    }
    report("classification category + pushout universality over bounded cocones", ok, detail);
}

} // namespace

int main() {
    try {
        criterion_validation_and_fuzzing();
        criterion_graph_morphism_agreement();
        criterion_opposite_and_epi();
        criterion_bimorphism_vs_iso();
        criterion_colimit_specialization();
        criterion_mediator_uniqueness();
        criterion_corpus();
        criterion_classification_pushout();
    } catch (const std::exception& e) {
        std::cout << "FAIL  unexpected exception: " << e.what() << "\n";
        return 1;
    }
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
