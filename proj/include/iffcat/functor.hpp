#pragma once

#include "iffcat/category.hpp"

namespace iffcat {

/// A functor between finite categories, given by total object/morphism maps.
struct Functor {
    FiniteCategory source;
    FiniteCategory target;
    std::map<Id, Id> object_map;
    std::map<Id, Id> morphism_map;

    bool operator==(const Functor&) const = default;

    const Id& on_object(const Id& o) const {
        auto it = object_map.find(o);
        if (it == object_map.end()) throw Error("functor object map undefined at '" + o + "'");
        return it->second;
    }
    const Id& on_morphism(const Id& m) const {
        auto it = morphism_map.find(m);
        if (it == morphism_map.end()) throw Error("functor morphism map undefined at '" + m + "'");
        return it->second;
    }
};

inline std::vector<std::string> functor_violations(const Functor& f) {
    std::vector<std::string> out;
    for (const Id& o : f.source.objects()) {
        auto it = f.object_map.find(o);
        if (it == f.object_map.end())
            out.push_back("object map undefined at '" + o + "'");
        else if (!f.target.objects().count(it->second))
            out.push_back("object map sends '" + o + "' outside the target category");
    }
    for (const Id& m : f.source.morphisms()) {
        auto it = f.morphism_map.find(m);
        if (it == f.morphism_map.end()) {
            out.push_back("morphism map undefined at '" + m + "'");
            continue;
        }
        if (!f.target.morphisms().count(it->second)) {
            out.push_back("morphism map sends '" + m + "' outside the target category");
            continue;
        }
    }
    if (!out.empty()) return out;

    for (const Id& m : f.source.morphisms()) {
        const Id& fm = f.on_morphism(m);
        if (f.target.source_of(fm) != f.on_object(f.source.source_of(m)))
            out.push_back("src not preserved at '" + m + "'");
        if (f.target.target_of(fm) != f.on_object(f.source.target_of(m)))
            out.push_back("tgt not preserved at '" + m + "'");
    }
    if (!out.empty()) return out;

    for (const Id& m1 : f.source.morphisms())
        for (const Id& m2 : f.source.morphisms())
            if (f.source.composable(m1, m2)) {
                const Id& lhs = f.on_morphism(f.source.compose(m1, m2));
                const Id& rhs = f.target.compose(f.on_morphism(m1), f.on_morphism(m2));
                if (lhs != rhs)
                    out.push_back("composition not preserved at ('" + m1 + "', '" + m2 + "')");
            }
    for (const Id& o : f.source.objects())
        if (f.on_morphism(f.source.identity_of(o)) != f.target.identity_of(f.on_object(o)))
            out.push_back("identity not preserved at '" + o + "'");
    return out;
}

inline Functor validate_functor(const Functor& f) {
    auto vs = functor_violations(f);
    if (!vs.empty()) {
        std::string msg = "invalid functor:";
        for (const auto& v : vs) msg += "\n  " + v;
        throw Error(msg);
    }
    return f;
}

inline bool is_valid(const Functor& f) { return functor_violations(f).empty(); }

inline Functor identity_functor(const FiniteCategory& c) {
    return {c, c, identity_map(c.objects()), identity_map(c.morphisms())};
}

inline Functor compose_functors(const Functor& f, const Functor& g) {
    if (f.target != g.source) throw Error("CategoryMismatch: functor composition");
    Functor out;
    out.source = f.source;
    out.target = g.target;
    for (const auto& [o, fo] : f.object_map) out.object_map[o] = g.on_object(fo);
    for (const auto& [m, fm] : f.morphism_map) out.morphism_map[m] = g.on_morphism(fm);
    return out;
}

/// A natural transformation between parallel functors, given by one
/// component morphism per object of the shared source category.
struct NaturalTransformation {
    Functor source_functor;
    Functor target_functor;
    std::map<Id, Id> components; // obj(source of functors) -> mor(target category)

    bool operator==(const NaturalTransformation&) const = default;

    const Id& component(const Id& j) const {
        auto it = components.find(j);
        if (it == components.end()) throw Error("component undefined at '" + j + "'");
        return it->second;
    }
};

inline std::vector<std::string> natural_transformation_violations(const NaturalTransformation& t) {
    std::vector<std::string> out;
    const Functor& F = t.source_functor;
    const Functor& G = t.target_functor;
    if (F.source != G.source || F.target != G.target) {
        out.push_back("functors do not share source and target categories");
        return out;
    }
    const FiniteCategory& target = F.target;
    for (const Id& j : F.source.objects()) {
        auto it = t.components.find(j);
        if (it == t.components.end()) {
            out.push_back("component undefined at '" + j + "'");
            continue;
        }
        const Id& comp = it->second;
        if (!target.morphisms().count(comp)) {
            out.push_back("component at '" + j + "' is not a morphism of the target category");
            continue;
        }
        if (target.source_of(comp) != F.on_object(j) || target.target_of(comp) != G.on_object(j))
            out.push_back("component at '" + j + "' has the wrong boundary");
    }
    if (!out.empty()) return out;

    // naturality: F(n) o comp(j') = comp(j) o G(n) for each n : j -> j'
    for (const Id& n : F.source.morphisms()) {
        const Id& j = F.source.source_of(n);
        const Id& jp = F.source.target_of(n);
        if (target.compose(F.on_morphism(n), t.component(jp)) !=
            target.compose(t.component(j), G.on_morphism(n)))
            out.push_back("NaturalityViolation at shape morphism '" + n + "'");
    }
    return out;
}

inline NaturalTransformation validate_natural_transformation(const NaturalTransformation& t) {
    auto vs = natural_transformation_violations(t);
    if (!vs.empty()) {
        std::string msg = "invalid natural transformation:";
        for (const auto& v : vs) msg += "\n  " + v;
        throw Error(msg);
    }
    return t;
}

} // namespace iffcat
