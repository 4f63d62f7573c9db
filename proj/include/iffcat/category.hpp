#pragma once

#include <optional>
#include <sstream>

#include "iffcat/graph.hpp"

namespace iffcat {

using MorphismPair = std::pair<Id, Id>;

/// Raw composition/identity tables before any law checking.
struct RawCategoryTables {
    FiniteGraph graph;
    std::map<MorphismPair, Id> composition;
    std::map<Id, Id> identities;

    bool operator==(const RawCategoryTables&) const = default;
};

enum class LawTag { Typing, Associativity, UnitLaw, Partiality };

inline const char* law_tag_name(LawTag t) {
    switch (t) {
        case LawTag::Typing: return "TypingViolation";
        case LawTag::Associativity: return "AssociativityViolation";
        case LawTag::UnitLaw: return "UnitLawViolation";
        case LawTag::Partiality: return "PartialityViolation";
    }
    return "?";
}

struct LawViolation {
    LawTag tag;
    std::vector<Id> witness;
    std::string detail;
};

/// A category presented by tables that satisfy the monoid laws.
/// Composition order is diagrammatic: compose(m1, m2) is "first m1, then m2"
/// and is defined exactly when tgt(m1) = src(m2).
struct FiniteCategory {
    FiniteGraph graph;
    std::map<MorphismPair, Id> composition;
    std::map<Id, Id> identities;

    bool operator==(const FiniteCategory&) const = default;

    /// Wrap tables without validating. Used by validate_category and by
    /// tests that need deliberately broken tables.
    static FiniteCategory unchecked(RawCategoryTables raw) {
        return {std::move(raw.graph), std::move(raw.composition), std::move(raw.identities)};
    }

    RawCategoryTables tables() const { return {graph, composition, identities}; }

    const std::set<Id>& objects() const { return graph.objects; }
    const std::set<Id>& morphisms() const { return graph.morphisms; }
    const Id& source_of(const Id& m) const { return graph.source_of(m); }
    const Id& target_of(const Id& m) const { return graph.target_of(m); }

    bool composable(const Id& m1, const Id& m2) const {
        return graph.morphisms.count(m1) && graph.morphisms.count(m2) &&
               graph.target_of(m1) == graph.source_of(m2);
    }

    const Id& compose(const Id& m1, const Id& m2) const {
        auto it = composition.find({m1, m2});
        if (it == composition.end())
            throw Error("composition undefined at (" + m1 + ", " + m2 + ")");
        return it->second;
    }

    const Id& identity_of(const Id& o) const {
        auto it = identities.find(o);
        if (it == identities.end()) throw Error("identity undefined at object '" + o + "'");
        return it->second;
    }

    void require_morphism(const Id& m) const {
        if (!graph.morphisms.count(m)) throw Error("UnknownMorphism: '" + m + "'");
    }
    void require_object(const Id& o) const {
        if (!graph.objects.count(o)) throw Error("UnknownObject: '" + o + "'");
    }
};

/// Exhaustive law check: typing, partiality, associativity, unit laws.
/// Every violation is reported with its witnessing morphisms.
inline std::vector<LawViolation> category_violations(const RawCategoryTables& raw) {
    std::vector<LawViolation> out;
    const FiniteGraph& g = raw.graph;

    for (const auto& v : graph_violations(g))
        out.push_back({LawTag::Partiality, {}, "ill-formed graph: " + v});
    if (!out.empty()) return out;

    // composition is defined for exactly the composable pairs
    for (const Id& m1 : g.morphisms)
        for (const Id& m2 : g.morphisms) {
            bool comp = g.target_of(m1) == g.source_of(m2);
            bool present = raw.composition.count({m1, m2}) != 0;
            if (comp && !present)
                out.push_back({LawTag::Partiality, {m1, m2}, "composable pair without a composite"});
            if (!comp && present)
                out.push_back({LawTag::Partiality, {m1, m2}, "composite defined for a non-composable pair"});
        }
    for (const auto& [pair, r] : raw.composition)
        if (!g.morphisms.count(r))
            out.push_back({LawTag::Partiality, {pair.first, pair.second},
                           "composite '" + r + "' is not a morphism"});
    for (const Id& o : g.objects)
        if (!raw.identities.count(o))
            out.push_back({LawTag::Partiality, {o}, "object without an identity"});
    for (const auto& [o, m] : raw.identities) {
        if (!g.objects.count(o))
            out.push_back({LawTag::Partiality, {o}, "identity table mentions unknown object"});
        else if (!g.morphisms.count(m))
            out.push_back({LawTag::Partiality, {o}, "identity '" + m + "' is not a morphism"});
    }
    if (!out.empty()) return out;

    auto comp_at = [&](const Id& a, const Id& b) -> const Id& {
        return raw.composition.at({a, b});
    };

    // typing: src(m1 o m2) = src(m1), tgt(m1 o m2) = tgt(m2); id_o : o -> o
    for (const auto& [pair, r] : raw.composition) {
        if (g.source_of(r) != g.source_of(pair.first))
            out.push_back({LawTag::Typing, {pair.first, pair.second, r}, "src of composite differs from src of first"});
        if (g.target_of(r) != g.target_of(pair.second))
            out.push_back({LawTag::Typing, {pair.first, pair.second, r}, "tgt of composite differs from tgt of second"});
    }
    for (const auto& [o, m] : raw.identities)
        if (g.source_of(m) != o || g.target_of(m) != o)
            out.push_back({LawTag::Typing, {o, m}, "identity is not a loop at its object"});
    if (!out.empty()) return out;

    // associativity over all composable triples
    for (const Id& m1 : g.morphisms)
        for (const Id& m2 : g.morphisms) {
            if (g.target_of(m1) != g.source_of(m2)) continue;
            for (const Id& m3 : g.morphisms) {
                if (g.target_of(m2) != g.source_of(m3)) continue;
                const Id& left = comp_at(comp_at(m1, m2), m3);
                const Id& right = comp_at(m1, comp_at(m2, m3));
                if (left != right)
                    out.push_back({LawTag::Associativity, {m1, m2, m3},
                                   "(" + m1 + " o " + m2 + ") o " + m3 + " = " + left +
                                       " but " + m1 + " o (" + m2 + " o " + m3 + ") = " + right});
            }
        }

    // unit laws
    for (const Id& m : g.morphisms) {
        const Id& ls = raw.identities.at(g.source_of(m));
        const Id& rt = raw.identities.at(g.target_of(m));
        if (comp_at(ls, m) != m)
            out.push_back({LawTag::UnitLaw, {ls, m}, "id_src(m) o m != m"});
        if (comp_at(m, rt) != m)
            out.push_back({LawTag::UnitLaw, {m, rt}, "m o id_tgt(m) != m"});
    }
    return out;
}

struct CategoryInvalid : Error {
    std::vector<LawViolation> violations;
    explicit CategoryInvalid(std::vector<LawViolation> vs)
        : Error(format(vs)), violations(std::move(vs)) {}

    static std::string format(const std::vector<LawViolation>& vs) {
        std::ostringstream os;
        os << "category tables violate " << vs.size() << " law(s)";
        for (const auto& v : vs) {
            os << "\n  " << law_tag_name(v.tag) << " [";
            for (size_t i = 0; i < v.witness.size(); ++i) os << (i ? " " : "") << v.witness[i];
            os << "] " << v.detail;
        }
        return os.str();
    }
};

inline FiniteCategory validate_category(const RawCategoryTables& raw) {
    auto vs = category_violations(raw);
    if (!vs.empty()) throw CategoryInvalid(std::move(vs));
    return FiniteCategory::unchecked(raw);
}

/// mu and eta exhibit the category as a monoid in graphs: the composition
/// table as a graph morphism C(x)C -> C and the identity table as I -> C,
/// both with identity object maps.
struct MuEta {
    GraphMorphism mu;
    GraphMorphism eta;
};

inline MuEta mu_eta(const FiniteCategory& c) {
    MuEta r;
    r.mu.source = tensor(c.graph, c.graph);
    r.mu.target = c.graph;
    r.mu.object_map = identity_map(c.graph.objects);
    for (const auto& [pair, m] : c.composition)
        r.mu.morphism_map[tensor_id(pair.first, pair.second)] = m;

    r.eta.source = unit_graph(c.graph.objects);
    r.eta.target = c.graph;
    r.eta.object_map = identity_map(c.graph.objects);
    for (const auto& [o, m] : c.identities) r.eta.morphism_map[unit_loop_id(o)] = m;
    return r;
}

struct MonoidLawReport {
    struct Law {
        std::string name;
        bool passed = false;
        std::string witness; // first disagreeing pair id, empty when passed
    };
    std::vector<Law> laws;

    bool all_passed() const {
        return std::all_of(laws.begin(), laws.end(), [](const Law& l) { return l.passed; });
    }
};

namespace detail {
inline MonoidLawReport::Law compare_morphisms(const std::string& name, const GraphMorphism& a,
                                              const GraphMorphism& b) {
    MonoidLawReport::Law law{name, true, ""};
    if (a.source != b.source || a.target != b.target || a.object_map != b.object_map) {
        law.passed = false;
        law.witness = "boundary mismatch";
        return law;
    }
    for (const auto& [m, am] : a.morphism_map) {
        auto it = b.morphism_map.find(m);
        if (it == b.morphism_map.end() || it->second != am) {
            law.passed = false;
            law.witness = m;
            return law;
        }
    }
    if (a.morphism_map.size() != b.morphism_map.size()) {
        law.passed = false;
        law.witness = "domain mismatch";
    }
    return law;
}
} // namespace detail

/// The monoid laws checked as equalities of graph morphisms built from the
/// coherence data: (id(x)mu);mu = alpha;(mu(x)id);mu and the two unit
/// triangles against the unitors.
inline MonoidLawReport check_monoid_laws_as_graph_morphisms(const FiniteCategory& c) {
    MonoidLawReport report;
    const auto [mu, eta] = mu_eta(c);

    // When typing is broken mu/eta are not graph morphisms at all and the
    // equations below cannot even be formed, so well-formedness is the
    // first pair of laws.
    for (const auto& [name, gm] :
         {std::pair<const char*, const GraphMorphism&>{"mu-graph-morphism", mu},
          {"eta-graph-morphism", eta}}) {
        auto vs = graph_morphism_violations(gm);
        report.laws.push_back({name, vs.empty(), vs.empty() ? "" : vs.front()});
    }
    if (!report.all_passed()) return report;

    const GraphMorphism idc = identity_graph_morphism(c.graph);
    const CoherenceMorphisms coh = coherence_morphisms(c.graph);

    const GraphMorphism lhs_assoc =
        compose_graph_morphisms(tensor_graph_morphisms(idc, mu), mu);
    const GraphMorphism rhs_assoc = compose_graph_morphisms(
        compose_graph_morphisms(coh.alpha, tensor_graph_morphisms(mu, idc)), mu);
    report.laws.push_back(detail::compare_morphisms("associativity", lhs_assoc, rhs_assoc));

    const GraphMorphism left = compose_graph_morphisms(tensor_graph_morphisms(eta, idc), mu);
    report.laws.push_back(detail::compare_morphisms("left-unit", left, coh.left_unitor));

    const GraphMorphism right = compose_graph_morphisms(tensor_graph_morphisms(idc, eta), mu);
    report.laws.push_back(detail::compare_morphisms("right-unit", right, coh.right_unitor));
    return report;
}

/// Same carriers, src/tgt swapped, composition reversed (mu^op after tau),
/// identities unchanged.
inline FiniteCategory opposite_category(const FiniteCategory& c) {
    FiniteCategory out;
    out.graph = opposite_graph(c.graph);
    for (const auto& [pair, m] : c.composition) out.composition[{pair.second, pair.first}] = m;
    out.identities = c.identities;
    return out;
}

inline std::set<Id> hom_set(const FiniteCategory& c, const Id& a, const Id& b) {
    c.require_object(a);
    c.require_object(b);
    std::set<Id> out;
    for (const Id& m : c.morphisms())
        if (c.source_of(m) == a && c.target_of(m) == b) out.insert(m);
    return out;
}

/// Right-cancellability, decided by exhaustive enumeration.
inline bool is_monomorphism(const FiniteCategory& c, const Id& m) {
    c.require_morphism(m);
    for (const Id& m0 : c.morphisms()) {
        if (!c.composable(m0, m)) continue;
        for (const Id& m1 : c.morphisms()) {
            if (!c.composable(m1, m)) continue;
            if (c.source_of(m0) != c.source_of(m1)) continue;
            if (c.compose(m0, m) == c.compose(m1, m) && m0 != m1) return false;
        }
    }
    return true;
}

/// Left-cancellability, expressed as a monomorphism of the opposite category.
inline bool is_epimorphism(const FiniteCategory& c, const Id& m) {
    return is_monomorphism(opposite_category(c), m);
}

/// Mono and epi together. This need not imply invertibility.
inline bool is_bimorphism(const FiniteCategory& c, const Id& m) {
    return is_monomorphism(c, m) && is_epimorphism(c, m);
}

/// Standard two-sided-inverse isomorphism.
inline bool is_isomorphism(const FiniteCategory& c, const Id& m) {
    c.require_morphism(m);
    for (const Id& n : c.morphisms()) {
        if (!c.composable(m, n) || !c.composable(n, m)) continue;
        if (c.compose(m, n) == c.identity_of(c.source_of(m)) &&
            c.compose(n, m) == c.identity_of(c.target_of(m)))
            return true;
    }
    return false;
}

} // namespace iffcat
