#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace iffcat {

using Id = std::string;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite graph: object and morphism identifiers with total src/tgt maps.
/// Identifiers are opaque strings; `#`-qualified names are kept verbatim.
struct FiniteGraph {
    std::set<Id> objects;
    std::set<Id> morphisms;
    std::map<Id, Id> src;
    std::map<Id, Id> tgt;

    bool operator==(const FiniteGraph&) const = default;

    const Id& source_of(const Id& m) const { return at(src, m, "src"); }
    const Id& target_of(const Id& m) const { return at(tgt, m, "tgt"); }

  private:
    static const Id& at(const std::map<Id, Id>& table, const Id& m, const char* what) {
        auto it = table.find(m);
        if (it == table.end())
            throw Error(std::string(what) + " undefined for morphism '" + m + "'");
        return it->second;
    }
};

inline std::vector<std::string> graph_violations(const FiniteGraph& g) {
    std::vector<std::string> out;
    for (const Id& m : g.morphisms) {
        auto s = g.src.find(m);
        auto t = g.tgt.find(m);
        if (s == g.src.end())
            out.push_back("src undefined for '" + m + "'");
        else if (!g.objects.count(s->second))
            out.push_back("src of '" + m + "' is not an object: '" + s->second + "'");
        if (t == g.tgt.end())
            out.push_back("tgt undefined for '" + m + "'");
        else if (!g.objects.count(t->second))
            out.push_back("tgt of '" + m + "' is not an object: '" + t->second + "'");
    }
    for (const auto& [m, o] : g.src)
        if (!g.morphisms.count(m)) out.push_back("src table mentions unknown morphism '" + m + "'");
    for (const auto& [m, o] : g.tgt)
        if (!g.morphisms.count(m)) out.push_back("tgt table mentions unknown morphism '" + m + "'");
    return out;
}

/// A morphism of graphs: object and morphism maps whose structure squares
/// with src and tgt commute.
struct GraphMorphism {
    FiniteGraph source;
    FiniteGraph target;
    std::map<Id, Id> object_map;
    std::map<Id, Id> morphism_map;

    bool operator==(const GraphMorphism&) const = default;

    const Id& on_object(const Id& o) const {
        auto it = object_map.find(o);
        if (it == object_map.end()) throw Error("object map undefined at '" + o + "'");
        return it->second;
    }
    const Id& on_morphism(const Id& m) const {
        auto it = morphism_map.find(m);
        if (it == morphism_map.end()) throw Error("morphism map undefined at '" + m + "'");
        return it->second;
    }
};

inline std::vector<std::string> graph_morphism_violations(const GraphMorphism& f) {
    std::vector<std::string> out;
    for (const Id& o : f.source.objects) {
        auto it = f.object_map.find(o);
        if (it == f.object_map.end())
            out.push_back("object map undefined at '" + o + "'");
        else if (!f.target.objects.count(it->second))
            out.push_back("object map sends '" + o + "' outside the target graph");
    }
    for (const Id& m : f.source.morphisms) {
        auto it = f.morphism_map.find(m);
        if (it == f.morphism_map.end()) {
            out.push_back("morphism map undefined at '" + m + "'");
            continue;
        }
        const Id& fm = it->second;
        if (!f.target.morphisms.count(fm)) {
            out.push_back("morphism map sends '" + m + "' outside the target graph");
            continue;
        }
        if (f.target.source_of(fm) != f.on_object(f.source.source_of(m)))
            out.push_back("src square does not commute at '" + m + "'");
        if (f.target.target_of(fm) != f.on_object(f.source.target_of(m)))
            out.push_back("tgt square does not commute at '" + m + "'");
    }
    return out;
}

inline bool is_valid(const GraphMorphism& f) { return graph_morphism_violations(f).empty(); }

/// Canonical identifier for a tensor pair (m, n).
inline Id tensor_id(const Id& first, const Id& second) {
    return "(" + first + "," + second + ")";
}

/// Tensor C (x) C over a shared object class: morphisms are composable
/// pairs (m, n) with tgt(m) = src(n); this is the pullback
/// mor x_obj mor used for composition.
inline FiniteGraph tensor(const FiniteGraph& g, const FiniteGraph& h) {
    if (g.objects != h.objects)
        throw Error("ObjectSetMismatch: tensor requires identical object sets");
    FiniteGraph out;
    out.objects = g.objects;
    for (const Id& m : g.morphisms)
        for (const Id& n : h.morphisms)
            if (g.target_of(m) == h.source_of(n)) {
                Id id = tensor_id(m, n);
                out.morphisms.insert(id);
                out.src[id] = g.source_of(m);
                out.tgt[id] = h.target_of(n);
            }
    return out;
}

/// The loop on an object in the unit graph is named by the object itself.
inline Id unit_loop_id(const Id& o) { return o; }

/// The discrete loop graph I_X: one loop per object.
inline FiniteGraph unit_graph(const std::set<Id>& objects) {
    FiniteGraph out;
    out.objects = objects;
    for (const Id& o : objects) {
        Id m = unit_loop_id(o);
        out.morphisms.insert(m);
        out.src[m] = o;
        out.tgt[m] = o;
    }
    return out;
}

inline FiniteGraph opposite_graph(const FiniteGraph& g) {
    FiniteGraph out = g;
    std::swap(out.src, out.tgt);
    return out;
}

inline std::map<Id, Id> identity_map(const std::set<Id>& xs) {
    std::map<Id, Id> out;
    for (const Id& x : xs) out[x] = x;
    return out;
}

inline GraphMorphism identity_graph_morphism(const FiniteGraph& g) {
    return {g, g, identity_map(g.objects), identity_map(g.morphisms)};
}

inline GraphMorphism compose_graph_morphisms(const GraphMorphism& f, const GraphMorphism& g) {
    if (f.target != g.source)
        throw Error("GraphMismatch: compose requires matching boundary graphs");
    GraphMorphism out;
    out.source = f.source;
    out.target = g.target;
    for (const auto& [o, fo] : f.object_map) out.object_map[o] = g.on_object(fo);
    for (const auto& [m, fm] : f.morphism_map) out.morphism_map[m] = g.on_morphism(fm);
    return out;
}

/// Componentwise tensor of graph morphisms. Requires shared object sets and
/// agreeing object maps, which makes pair preservation automatic.
inline GraphMorphism tensor_graph_morphisms(const GraphMorphism& f, const GraphMorphism& g) {
    if (f.source.objects != g.source.objects || f.target.objects != g.target.objects ||
        f.object_map != g.object_map)
        throw Error("GraphMismatch: tensor of morphisms needs a shared object map");
    GraphMorphism out;
    out.source = tensor(f.source, g.source);
    out.target = tensor(f.target, g.target);
    out.object_map = f.object_map;
    for (const Id& m : f.source.morphisms)
        for (const Id& n : g.source.morphisms)
            if (f.source.target_of(m) == g.source.source_of(n))
                out.morphism_map[tensor_id(m, n)] = tensor_id(f.on_morphism(m), g.on_morphism(n));
    return out;
}

/// The coherence morphisms of the monoidal structure on graphs:
/// associator, unitors and the twist used by the opposite category.
struct CoherenceMorphisms {
    GraphMorphism alpha;        // g(x)(g(x)g) -> (g(x)g)(x)g
    GraphMorphism left_unitor;  // I(x)g -> g
    GraphMorphism right_unitor; // g(x)I -> g
    GraphMorphism tau;          // op(g)(x)op(g) -> op(g(x)g)
};

inline CoherenceMorphisms coherence_morphisms(const FiniteGraph& g) {
    CoherenceMorphisms c;
    const FiniteGraph gg = tensor(g, g);
    const FiniteGraph unit = unit_graph(g.objects);
    const std::map<Id, Id> id_obj = identity_map(g.objects);

    c.alpha.source = tensor(g, gg);
    c.alpha.target = tensor(gg, g);
    c.alpha.object_map = id_obj;
    for (const Id& m : g.morphisms)
        for (const Id& n : g.morphisms) {
            if (g.target_of(m) != g.source_of(n)) continue;
            for (const Id& p : g.morphisms) {
                if (g.target_of(n) != g.source_of(p)) continue;
                c.alpha.morphism_map[tensor_id(m, tensor_id(n, p))] =
                    tensor_id(tensor_id(m, n), p);
            }
        }

    c.left_unitor.source = tensor(unit, g);
    c.left_unitor.target = g;
    c.left_unitor.object_map = id_obj;
    for (const Id& m : g.morphisms)
        c.left_unitor.morphism_map[tensor_id(unit_loop_id(g.source_of(m)), m)] = m;

    c.right_unitor.source = tensor(g, unit);
    c.right_unitor.target = g;
    c.right_unitor.object_map = id_obj;
    for (const Id& m : g.morphisms)
        c.right_unitor.morphism_map[tensor_id(m, unit_loop_id(g.target_of(m)))] = m;

    const FiniteGraph og = opposite_graph(g);
    c.tau.source = tensor(og, og);
    c.tau.target = opposite_graph(gg);
    c.tau.object_map = id_obj;
    for (const Id& m : og.morphisms)
        for (const Id& n : og.morphisms)
            if (og.target_of(m) == og.source_of(n))
                c.tau.morphism_map[tensor_id(m, n)] = tensor_id(n, m);
    return c;
}

} // namespace iffcat
