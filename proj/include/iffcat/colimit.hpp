#pragma once

#include <functional>

#include "iffcat/functor.hpp"

namespace iffcat {

// ---------------------------------------------------------------------------
// Spans and binary cocones
// ---------------------------------------------------------------------------

/// Two morphisms with a common source object (the vertex).
struct Span {
    Id vertex;
    Id first;
    Id second;

    bool operator==(const Span&) const = default;
    auto operator<=>(const Span&) const = default;
};

/// A commuting square completing a span to a common target (the opvertex).
struct Cocone2 {
    Span span;
    Id opvertex;
    Id opfirst;
    Id opsecond;

    bool operator==(const Cocone2&) const = default;
    auto operator<=>(const Cocone2&) const = default;
};

inline bool span_well_formed(const FiniteCategory& c, const Span& s) {
    return c.morphisms().count(s.first) && c.morphisms().count(s.second) &&
           c.source_of(s.first) == s.vertex && c.source_of(s.second) == s.vertex;
}

inline bool cocone2_well_formed(const FiniteCategory& c, const Cocone2& s) {
    if (!span_well_formed(c, s.span)) return false;
    if (!c.morphisms().count(s.opfirst) || !c.morphisms().count(s.opsecond)) return false;
    if (c.target_of(s.opfirst) != s.opvertex || c.target_of(s.opsecond) != s.opvertex)
        return false;
    if (c.source_of(s.opfirst) != c.target_of(s.span.first)) return false;
    if (c.source_of(s.opsecond) != c.target_of(s.span.second)) return false;
    return c.compose(s.span.first, s.opfirst) == c.compose(s.span.second, s.opsecond);
}

inline std::vector<Span> enumerate_spans(const FiniteCategory& c) {
    std::vector<Span> out;
    for (const Id& v : c.objects())
        for (const Id& f : c.morphisms()) {
            if (c.source_of(f) != v) continue;
            for (const Id& s : c.morphisms())
                if (c.source_of(s) == v) out.push_back({v, f, s});
        }
    return out;
}

inline std::vector<Cocone2> enumerate_cocones2(const FiniteCategory& c, const Span& span) {
    std::vector<Cocone2> out;
    if (!span_well_formed(c, span)) throw Error("ill-formed span");
    for (const Id& x : c.objects())
        for (const Id& f : c.morphisms()) {
            if (c.source_of(f) != c.target_of(span.first) || c.target_of(f) != x) continue;
            for (const Id& s : c.morphisms()) {
                if (c.source_of(s) != c.target_of(span.second) || c.target_of(s) != x) continue;
                Cocone2 cand{span, x, f, s};
                if (c.compose(span.first, f) == c.compose(span.second, s)) out.push_back(cand);
            }
        }
    return out;
}

/// Morphisms mediating from pushout candidate p to cocone s over the same span.
inline std::vector<Id> mediators2(const FiniteCategory& c, const Cocone2& p, const Cocone2& s) {
    std::vector<Id> out;
    for (const Id& m : c.morphisms()) {
        if (c.source_of(m) != p.opvertex || c.target_of(m) != s.opvertex) continue;
        if (c.compose(p.opfirst, m) == s.opfirst && c.compose(p.opsecond, m) == s.opsecond)
            out.push_back(m);
    }
    return out;
}

/// Universality by exhaustive check: every cocone over the same span admits
/// exactly one mediating morphism.
inline bool is_pushout_cocone2(const FiniteCategory& c, const Cocone2& p) {
    if (!cocone2_well_formed(c, p)) throw Error("ill-formed cocone2");
    for (const Cocone2& s : enumerate_cocones2(c, p.span))
        if (mediators2(c, p, s).size() != 1) return false;
    return true;
}

/// Opvertices of the pushout cocones of one span.
inline std::set<Id> pushout_objects(const FiniteCategory& c, const Span& sp) {
    std::set<Id> out;
    for (const Cocone2& s : enumerate_cocones2(c, sp))
        if (!out.count(s.opvertex) && is_pushout_cocone2(c, s)) out.insert(s.opvertex);
    return out;
}

inline std::set<Id> pushout_objects(const FiniteCategory& c) {
    std::set<Id> out;
    for (const Span& sp : enumerate_spans(c))
        for (const Cocone2& s : enumerate_cocones2(c, sp))
            if (!out.count(s.opvertex) && is_pushout_cocone2(c, s)) out.insert(s.opvertex);
    return out;
}

inline Id mediator2(const FiniteCategory& c, const Cocone2& p, const Cocone2& s) {
    if (s.span != p.span) throw Error("SpanMismatch");
    if (!is_pushout_cocone2(c, p)) throw Error("NotPushout");
    auto ms = mediators2(c, p, s);
    if (ms.size() != 1) throw Error("mediator not unique"); // unreachable for a pushout
    return ms.front();
}

// ---------------------------------------------------------------------------
// Initial objects
// ---------------------------------------------------------------------------

inline std::set<Id> initial_objects(const FiniteCategory& c) {
    std::set<Id> out;
    for (const Id& i : c.objects()) {
        bool initial = true;
        for (const Id& o : c.objects())
            if (hom_set(c, i, o).size() != 1) {
                initial = false;
                break;
            }
        if (initial) out.insert(i);
    }
    return out;
}

/// The unique morphism from an initial object to o.
inline Id counique(const FiniteCategory& c, const Id& i, const Id& o) {
    if (!initial_objects(c).count(i)) throw Error("NotInitial: '" + i + "'");
    auto hom = hom_set(c, i, o);
    return *hom.begin();
}

// ---------------------------------------------------------------------------
// Coequalizers and binary coproducts (the footnote-level finite colimits)
// ---------------------------------------------------------------------------

/// (f, g) with common source and common target.
inline std::vector<MorphismPair> parallel_pairs(const FiniteCategory& c) {
    std::vector<MorphismPair> out;
    for (const Id& f : c.morphisms())
        for (const Id& g : c.morphisms())
            if (c.source_of(f) == c.source_of(g) && c.target_of(f) == c.target_of(g))
                out.push_back({f, g});
    return out;
}

inline bool is_coequalizer(const FiniteCategory& c, const MorphismPair& pp, const Id& e) {
    const auto& [f, g] = pp;
    c.require_morphism(e);
    if (c.source_of(e) != c.target_of(f)) return false;
    if (c.compose(f, e) != c.compose(g, e)) return false;
    for (const Id& h : c.morphisms()) {
        if (c.source_of(h) != c.target_of(f)) continue;
        if (c.compose(f, h) != c.compose(g, h)) continue;
        int count = 0;
        for (const Id& u : c.morphisms()) {
            if (c.source_of(u) != c.target_of(e) || c.target_of(u) != c.target_of(h)) continue;
            if (c.compose(e, u) == h) ++count;
        }
        if (count != 1) return false;
    }
    return true;
}

inline bool has_coequalizer(const FiniteCategory& c, const MorphismPair& pp) {
    for (const Id& e : c.morphisms())
        if (c.source_of(e) == c.target_of(pp.first) && is_coequalizer(c, pp, e)) return true;
    return false;
}

/// Injection pair exhibiting s as a coproduct of (x, y), if universal.
inline bool is_binary_coproduct(const FiniteCategory& c, const Id& x, const Id& y, const Id& s,
                                const Id& i1, const Id& i2) {
    if (c.source_of(i1) != x || c.source_of(i2) != y) return false;
    if (c.target_of(i1) != s || c.target_of(i2) != s) return false;
    for (const Id& z : c.objects())
        for (const Id& f : c.morphisms()) {
            if (c.source_of(f) != x || c.target_of(f) != z) continue;
            for (const Id& g : c.morphisms()) {
                if (c.source_of(g) != y || c.target_of(g) != z) continue;
                int count = 0;
                for (const Id& u : c.morphisms()) {
                    if (c.source_of(u) != s || c.target_of(u) != z) continue;
                    if (c.compose(i1, u) == f && c.compose(i2, u) == g) ++count;
                }
                if (count != 1) return false;
            }
        }
    return true;
}

inline std::set<Id> binary_coproduct_objects(const FiniteCategory& c, const Id& x, const Id& y) {
    std::set<Id> out;
    for (const Id& s : c.objects())
        for (const Id& i1 : c.morphisms()) {
            if (c.source_of(i1) != x || c.target_of(i1) != s) continue;
            for (const Id& i2 : c.morphisms()) {
                if (c.source_of(i2) != y || c.target_of(i2) != s) continue;
                if (is_binary_coproduct(c, x, y, s, i1, i2)) out.insert(s);
            }
        }
    return out;
}

struct CocompletenessReport {
    bool has_initial = false;
    bool all_coequalizers = false;
    bool all_pushouts = false;
    bool all_coproducts = false;
    std::string failing_witness;

    bool cocomplete() const {
        return has_initial && all_coequalizers && all_pushouts && all_coproducts;
    }
};

/// All four clauses checked directly even though they are interdependent.
inline CocompletenessReport finite_cocompleteness_report(const FiniteCategory& c) {
    CocompletenessReport r;
    r.has_initial = !initial_objects(c).empty();
    if (!r.has_initial) r.failing_witness = "no initial object";

    r.all_coequalizers = true;
    for (const auto& pp : parallel_pairs(c))
        if (!has_coequalizer(c, pp)) {
            r.all_coequalizers = false;
            if (r.failing_witness.empty())
                r.failing_witness = "no coequalizer of (" + pp.first + ", " + pp.second + ")";
            break;
        }

    r.all_pushouts = true;
    for (const Span& sp : enumerate_spans(c)) {
        bool found = false;
        for (const Cocone2& s : enumerate_cocones2(c, sp))
            if (is_pushout_cocone2(c, s)) {
                found = true;
                break;
            }
        if (!found) {
            r.all_pushouts = false;
            if (r.failing_witness.empty())
                r.failing_witness =
                    "no pushout of span (" + sp.vertex + "; " + sp.first + ", " + sp.second + ")";
            break;
        }
    }

    r.all_coproducts = true;
    for (const Id& x : c.objects())
        for (const Id& y : c.objects())
            if (binary_coproduct_objects(c, x, y).empty()) {
                r.all_coproducts = false;
                if (r.failing_witness.empty())
                    r.failing_witness = "no coproduct of (" + x + ", " + y + ")";
            }
    return r;
}

inline bool is_finitely_cocomplete(const FiniteCategory& c) {
    return finite_cocompleteness_report(c).cocomplete();
}

// ---------------------------------------------------------------------------
// Shape categories and standard functors
// ---------------------------------------------------------------------------

inline FiniteCategory empty_category() { return {}; }

inline FiniteCategory terminal_category() {
    RawCategoryTables raw;
    raw.graph.objects = {"terminal#0"};
    raw.graph.morphisms = {"terminal#00"};
    raw.graph.src["terminal#00"] = "terminal#0";
    raw.graph.tgt["terminal#00"] = "terminal#0";
    raw.composition[{"terminal#00", "terminal#00"}] = "terminal#00";
    raw.identities["terminal#0"] = "terminal#00";
    return validate_category(raw);
}

/// The span shape . <- . -> . with objects span#0, span#1, span#2.
inline FiniteCategory span_shape_category() {
    RawCategoryTables raw;
    raw.graph.objects = {"span#0", "span#1", "span#2"};
    raw.graph.morphisms = {"span#00", "span#11", "span#22", "span#a1", "span#a2"};
    auto arrow = [&](const Id& m, const Id& s, const Id& t) {
        raw.graph.src[m] = s;
        raw.graph.tgt[m] = t;
    };
    arrow("span#00", "span#0", "span#0");
    arrow("span#11", "span#1", "span#1");
    arrow("span#22", "span#2", "span#2");
    arrow("span#a1", "span#0", "span#1");
    arrow("span#a2", "span#0", "span#2");
    raw.identities = {{"span#0", "span#00"}, {"span#1", "span#11"}, {"span#2", "span#22"}};
    // composition forced by the unit laws
    raw.composition[{"span#00", "span#00"}] = "span#00";
    raw.composition[{"span#11", "span#11"}] = "span#11";
    raw.composition[{"span#22", "span#22"}] = "span#22";
    raw.composition[{"span#00", "span#a1"}] = "span#a1";
    raw.composition[{"span#a1", "span#11"}] = "span#a1";
    raw.composition[{"span#00", "span#a2"}] = "span#a2";
    raw.composition[{"span#a2", "span#22"}] = "span#a2";
    return validate_category(raw);
}

inline Functor unique_functor(const FiniteCategory& c) {
    Functor f;
    f.source = c;
    f.target = terminal_category();
    for (const Id& o : c.objects()) f.object_map[o] = "terminal#0";
    for (const Id& m : c.morphisms()) f.morphism_map[m] = "terminal#00";
    return f;
}

inline Functor object_functor(const FiniteCategory& c, const Id& o) {
    c.require_object(o);
    Functor f;
    f.source = terminal_category();
    f.target = c;
    f.object_map["terminal#0"] = o;
    f.morphism_map["terminal#00"] = c.identity_of(o);
    return f;
}

inline Functor constant_functor(const FiniteCategory& shape, const FiniteCategory& c, const Id& o) {
    return compose_functors(unique_functor(shape), object_functor(c, o));
}

// ---------------------------------------------------------------------------
// Diagrams, cocones, general colimits
// ---------------------------------------------------------------------------

/// A functor from a shape category into the ambient category.
struct Diagram {
    FiniteCategory shape;
    Functor functor; // functor.source == shape, functor.target == ambient

    bool operator==(const Diagram&) const = default;
};

inline Diagram make_diagram(Functor f) {
    Diagram d{f.source, std::move(f)};
    auto vs = functor_violations(d.functor);
    if (!vs.empty()) throw Error("invalid diagram functor: " + vs.front());
    return d;
}

inline Diagram empty_diagram(const FiniteCategory& ambient) {
    Functor f;
    f.source = empty_category();
    f.target = ambient;
    return {f.source, f};
}

/// The diagram of shape span selecting the given ambient span.
inline Diagram diagram_of_span(const FiniteCategory& ambient, const Span& s) {
    if (!span_well_formed(ambient, s)) throw Error("ill-formed span");
    Functor f;
    f.source = span_shape_category();
    f.target = ambient;
    f.object_map = {{"span#0", s.vertex},
                    {"span#1", ambient.target_of(s.first)},
                    {"span#2", ambient.target_of(s.second)}};
    f.morphism_map = {{"span#00", ambient.identity_of(s.vertex)},
                      {"span#11", ambient.identity_of(ambient.target_of(s.first))},
                      {"span#22", ambient.identity_of(ambient.target_of(s.second))},
                      {"span#a1", s.first},
                      {"span#a2", s.second}};
    return make_diagram(std::move(f));
}

/// The ambient span selected by a span-shaped diagram.
inline Span span_of_diagram(const Diagram& d) {
    return {d.functor.on_object("span#0"), d.functor.on_morphism("span#a1"),
            d.functor.on_morphism("span#a2")};
}

/// A cocone: one component per shape object, commuting with the diagram.
struct Cocone {
    Id apex;
    std::map<Id, Id> components; // obj(shape) -> mor(ambient)

    bool operator==(const Cocone&) const = default;
    auto operator<=>(const Cocone&) const = default;
};

inline bool cocone_well_formed(const FiniteCategory& c, const Diagram& d, const Cocone& t) {
    for (const Id& j : d.shape.objects()) {
        auto it = t.components.find(j);
        if (it == t.components.end()) return false;
        const Id& comp = it->second;
        if (!c.morphisms().count(comp)) return false;
        if (c.source_of(comp) != d.functor.on_object(j) || c.target_of(comp) != t.apex)
            return false;
    }
    if (t.components.size() != d.shape.objects().size()) return false;
    for (const Id& n : d.shape.morphisms()) {
        const Id& j = d.shape.source_of(n);
        const Id& jp = d.shape.target_of(n);
        if (c.compose(d.functor.on_morphism(n), t.components.at(jp)) != t.components.at(j))
            return false;
    }
    return true;
}

inline std::vector<Cocone> enumerate_cocones(const FiniteCategory& c, const Diagram& d,
                                             const Id& apex) {
    c.require_object(apex);
    std::vector<Id> shape_objs(d.shape.objects().begin(), d.shape.objects().end());
    std::vector<Cocone> out;
    Cocone cur{apex, {}};
    // backtracking over component choices, pruning on naturality
    auto consistent = [&](size_t upto) {
        for (const Id& n : d.shape.morphisms()) {
            const Id& j = d.shape.source_of(n);
            const Id& jp = d.shape.target_of(n);
            auto itj = cur.components.find(j);
            auto itjp = cur.components.find(jp);
            if (itj == cur.components.end() || itjp == cur.components.end()) continue;
            if (c.compose(d.functor.on_morphism(n), itjp->second) != itj->second) return false;
        }
        (void)upto;
        return true;
    };
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == shape_objs.size()) {
            out.push_back(cur);
            return;
        }
        const Id& j = shape_objs[k];
        for (const Id& m : hom_set(c, d.functor.on_object(j), apex)) {
            cur.components[j] = m;
            if (consistent(k)) rec(k + 1);
            cur.components.erase(j);
        }
    };
    rec(0);
    return out;
}

inline std::vector<Cocone> all_cocones(const FiniteCategory& c, const Diagram& d) {
    std::vector<Cocone> out;
    for (const Id& apex : c.objects())
        for (Cocone& t : enumerate_cocones(c, d, apex)) out.push_back(std::move(t));
    return out;
}

/// Morphisms mediating from a candidate universal cocone to tau.
inline std::vector<Id> comediators(const FiniteCategory& c, const Diagram& d, const Cocone& gamma,
                                   const Cocone& tau) {
    std::vector<Id> out;
    for (const Id& m : c.morphisms()) {
        if (c.source_of(m) != gamma.apex || c.target_of(m) != tau.apex) continue;
        bool ok = true;
        for (const Id& j : d.shape.objects())
            if (c.compose(gamma.components.at(j), m) != tau.components.at(j)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(m);
    }
    return out;
}

inline bool is_universal_cocone(const FiniteCategory& c, const Diagram& d, const Cocone& gamma) {
    if (!cocone_well_formed(c, d, gamma)) throw Error("ill-formed cocone");
    for (const Cocone& tau : all_cocones(c, d))
        if (comediators(c, d, gamma, tau).size() != 1) return false;
    return true;
}

inline std::vector<Cocone> universal_cocones(const FiniteCategory& c, const Diagram& d) {
    std::vector<Cocone> out;
    for (const Cocone& t : all_cocones(c, d))
        if (is_universal_cocone(c, d, t)) out.push_back(t);
    return out;
}

inline std::set<Id> colimit_objects(const FiniteCategory& c, const Diagram& d) {
    std::set<Id> out;
    for (const Cocone& t : universal_cocones(c, d)) out.insert(t.apex);
    return out;
}

inline Id comediator(const FiniteCategory& c, const Diagram& d, const Cocone& gamma,
                     const Cocone& tau) {
    if (!cocone_well_formed(c, d, tau)) throw Error("DiagramMismatch: tau is not a cocone of d");
    if (!is_universal_cocone(c, d, gamma)) throw Error("NotColimit");
    auto ms = comediators(c, d, gamma, tau);
    if (ms.size() != 1) throw Error("comediator not unique"); // unreachable for a colimit
    return ms.front();
}

/// Enumerate all functors shape -> ambient by backtracking over object maps
/// then morphism maps, pruning on preservation failures.
inline std::vector<Diagram> enumerate_diagrams(const FiniteCategory& shape,
                                               const FiniteCategory& ambient) {
    std::vector<Id> objs(shape.objects().begin(), shape.objects().end());
    std::vector<Id> mors(shape.morphisms().begin(), shape.morphisms().end());
    std::vector<Diagram> out;
    Functor f;
    f.source = shape;
    f.target = ambient;

    std::function<void(size_t)> rec_mor = [&](size_t k) {
        if (k == mors.size()) {
            if (functor_violations(f).empty()) out.push_back({shape, f});
            return;
        }
        const Id& n = mors[k];
        for (const Id& m :
             hom_set(ambient, f.on_object(shape.source_of(n)), f.on_object(shape.target_of(n)))) {
            f.morphism_map[n] = m;
            // prune: identities must map to identities
            if (shape.identity_of(shape.source_of(n)) == n &&
                m != ambient.identity_of(f.on_object(shape.source_of(n)))) {
                f.morphism_map.erase(n);
                continue;
            }
            rec_mor(k + 1);
            f.morphism_map.erase(n);
        }
    };
    std::function<void(size_t)> rec_obj = [&](size_t k) {
        if (k == objs.size()) {
            rec_mor(0);
            return;
        }
        for (const Id& o : ambient.objects()) {
            f.object_map[objs[k]] = o;
            rec_obj(k + 1);
            f.object_map.erase(objs[k]);
        }
    };
    rec_obj(0);
    return out;
}

/// Cocompleteness restricted to an explicit finite shape family.
inline bool is_cocomplete_over_shapes(const FiniteCategory& c,
                                      const std::vector<FiniteCategory>& shapes) {
    for (const FiniteCategory& shape : shapes)
        for (const Diagram& d : enumerate_diagrams(shape, c))
            if (colimit_objects(c, d).empty()) return false;
    return true;
}

/// The free parallel-pair shape: two objects with two arrows between them.
inline FiniteCategory parallel_pair_shape_category() {
    RawCategoryTables raw;
    raw.graph.objects = {"pair#0", "pair#1"};
    raw.graph.morphisms = {"pair#00", "pair#11", "pair#f", "pair#g"};
    raw.graph.src = {{"pair#00", "pair#0"}, {"pair#11", "pair#1"}, {"pair#f", "pair#0"}, {"pair#g", "pair#0"}};
    raw.graph.tgt = {{"pair#00", "pair#0"}, {"pair#11", "pair#1"}, {"pair#f", "pair#1"}, {"pair#g", "pair#1"}};
    raw.identities = {{"pair#0", "pair#00"}, {"pair#1", "pair#11"}};
    raw.composition = {{{"pair#00", "pair#00"}, "pair#00"}, {{"pair#11", "pair#11"}, "pair#11"},
                       {{"pair#00", "pair#f"}, "pair#f"},   {{"pair#f", "pair#11"}, "pair#f"},
                       {{"pair#00", "pair#g"}, "pair#g"},   {{"pair#g", "pair#11"}, "pair#g"}};
    return validate_category(raw);
}

/// Default shape family: empty, terminal, parallel pair, span.
inline std::vector<FiniteCategory> default_shape_family() {
    return {empty_category(), terminal_category(), parallel_pair_shape_category(),
            span_shape_category()};
}

struct ColimitIsomorphismReport {
    struct Entry {
        Id first_colimit;
        Id second_colimit;
        Id forward;  // unique mediating morphism, verified to be an isomorphism
        Id backward;
        bool ok = false;
    };
    std::vector<Entry> entries;
    bool all_ok = true;
};

/// For every pair of colimits of d, exhibit the unique mediating morphisms in
/// both directions and check they are mutually inverse isomorphisms.
inline ColimitIsomorphismReport check_colimits_isomorphic(const FiniteCategory& c,
                                                          const Diagram& d) {
    ColimitIsomorphismReport report;
    auto universals = universal_cocones(c, d);
    // one representative universal cocone per apex
    std::map<Id, Cocone> by_apex;
    for (const Cocone& g : universals)
        if (!by_apex.count(g.apex)) by_apex.emplace(g.apex, g);
    for (const auto& [o1, g1] : by_apex)
        for (const auto& [o2, g2] : by_apex) {
            if (o1 >= o2) continue;
            ColimitIsomorphismReport::Entry e;
            e.first_colimit = o1;
            e.second_colimit = o2;
            auto fwd = comediators(c, d, g1, g2);
            auto bwd = comediators(c, d, g2, g1);
            if (fwd.size() == 1 && bwd.size() == 1) {
                e.forward = fwd.front();
                e.backward = bwd.front();
                e.ok = c.compose(e.forward, e.backward) == c.identity_of(o1) &&
                       c.compose(e.backward, e.forward) == c.identity_of(o2) &&
                       is_isomorphism(c, e.forward);
            }
            report.all_ok = report.all_ok && e.ok;
            report.entries.push_back(std::move(e));
        }
    return report;
}

} // namespace iffcat
