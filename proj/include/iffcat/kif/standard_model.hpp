#pragma once

#include "iffcat/builtin.hpp"
#include "iffcat/colimit.hpp"
#include "iffcat/kif/eval.hpp"

namespace iffcat::kif {

/// Canonical serialization; equal categories get equal strings.
inline std::string canon_graph(const FiniteGraph& g) {
    std::string out = "g{o=";
    for (const Id& o : g.objects) out += o + ";";
    out += "|m=";
    for (const Id& m : g.morphisms) out += m + ":" + g.src.at(m) + ">" + g.tgt.at(m) + ";";
    return out + "}";
}

inline std::string canon_category(const FiniteCategory& c) {
    std::string out = "c{" + canon_graph(c.graph) + "|comp=";
    for (const auto& [p, r] : c.composition) out += p.first + "*" + p.second + "=" + r + ";";
    out += "|id=";
    for (const auto& [o, m] : c.identities) out += o + "=" + m + ";";
    return out + "}";
}

struct StandardModelOptions {
    bool graph_morphism_level = false; // adds the mu/eta/coherence vocabulary
};

namespace detail {

inline Value span_value(const Span& s) {
    return mk_tuple({mk_atom(s.vertex), mk_atom(s.first), mk_atom(s.second)});
}

inline Value cocone2_value(const Cocone2& c) {
    return mk_tuple({span_value(c.span), mk_atom(c.opvertex), mk_atom(c.opfirst),
                     mk_atom(c.opsecond)});
}

inline Value diagram_value(const Diagram& d) {
    if (d.shape.objects().empty()) return mk_tuple({mk_atom("diagram:empty")});
    // span-shaped
    return mk_tuple({mk_atom("diagram:span"), mk_atom(d.functor.on_object("span#0")),
                     mk_atom(d.functor.on_object("span#1")), mk_atom(d.functor.on_object("span#2")),
                     mk_atom(d.functor.on_morphism("span#a1")),
                     mk_atom(d.functor.on_morphism("span#a2"))});
}

inline Value cocone_value(const Cocone& t) {
    std::vector<std::pair<Value, Value>> comps;
    for (const auto& [j, m] : t.components) comps.emplace_back(mk_atom(j), mk_atom(m));
    return mk_tuple({mk_atom(t.apex), mk_func(std::move(comps))});
}

/// Decode a tensor-pair identifier "(a,b)" into a tuple value; plain
/// identifiers denote themselves.
inline Value id_to_value(const Id& id) {
    if (id.size() >= 2 && id.front() == '(' && id.back() == ')') {
        int depth = 0;
        for (size_t i = 1; i + 1 < id.size(); ++i) {
            char ch = id[i];
            if (ch == '(') ++depth;
            else if (ch == ')') --depth;
            else if (ch == ',' && depth == 0)
                return mk_tuple({id_to_value(id.substr(1, i - 1)),
                                 id_to_value(id.substr(i + 1, id.size() - i - 2))});
        }
    }
    return mk_atom(id);
}

using FuncEntries = std::vector<std::pair<Value, Value>>;

struct SymbolTable {
    std::map<std::string, FuncEntries> funcs;
    std::map<std::string, std::vector<Value>> classes;

    void fn(const std::string& name, Value key, Value val) {
        funcs[name].emplace_back(std::move(key), std::move(val));
    }
    void cls(const std::string& name, Value member) {
        classes[name].push_back(std::move(member));
    }
    void ensure(const std::string& name, bool is_class) {
        if (is_class)
            classes[name];
        else
            funcs[name];
    }
};

struct GraphRegistry {
    std::map<std::string, std::string> atom_of_canon;
    int next = 0;

    std::string atom(const FiniteGraph& g) {
        std::string canon = canon_graph(g);
        auto it = atom_of_canon.find(canon);
        if (it != atom_of_canon.end()) return it->second;
        std::string a = "gph#" + std::to_string(next++);
        atom_of_canon.emplace(std::move(canon), a);
        return a;
    }
};

inline Value map_to_func(const std::map<Id, Id>& m, bool decode_keys, bool decode_vals) {
    FuncEntries entries;
    for (const auto& [k, v] : m)
        entries.emplace_back(decode_keys ? id_to_value(k) : mk_atom(k),
                             decode_vals ? id_to_value(v) : mk_atom(v));
    return mk_func(std::move(entries));
}

inline Value graph_morphism_value(const GraphMorphism& f, GraphRegistry& graphs) {
    return mk_tuple({mk_atom(graphs.atom(f.source)), mk_atom(graphs.atom(f.target)),
                     map_to_func(f.object_map, false, false),
                     map_to_func(f.morphism_map, true, true)});
}

} // namespace detail

/// Build a finite model interpreting the CAT$/COL$ vocabulary by the native
/// engine operations, restricted to the supplied categories and their
/// opposites. The class CAT$category is the supplied set (closed under
/// opposite).
inline KifModel
build_standard_model(const std::vector<std::pair<std::string, FiniteCategory>>& fixtures,
                     const StandardModelOptions& opt = {}) {
    using namespace detail;

    // registry: canonical serialization -> display atom; closes under opposite
    std::map<std::string, std::string> registry;
    std::vector<std::pair<std::string, FiniteCategory>> cats;
    for (const auto& [name, c] : fixtures) {
        std::string canon = canon_category(c);
        if (registry.count(canon)) continue;
        registry.emplace(std::move(canon), name);
        cats.emplace_back(name, c);
    }
    for (size_t i = 0, n = cats.size(); i < n; ++i) {
        FiniteCategory op = opposite_category(cats[i].second);
        std::string canon = canon_category(op);
        if (registry.count(canon)) continue;
        std::string name = cats[i].first + "^op";
        registry.emplace(std::move(canon), name);
        cats.emplace_back(std::move(name), std::move(op));
    }
    SymbolTable sym;
    GraphRegistry graphs;
    KifModel model;
    const FiniteCategory span_shape = span_shape_category();
    const Value shape_objects_span = mk_class(
        {mk_atom("span#0"), mk_atom("span#1"), mk_atom("span#2")});

    for (const auto& [name, c] : cats) {
        const Value cat = mk_atom(name);
        model.add_to_universe(cat);
        sym.cls("CAT$category", cat);

        std::vector<Value> objs, mors;
        for (const Id& o : c.objects()) {
            objs.push_back(mk_atom(o));
            model.add_to_universe(mk_atom(o));
        }
        for (const Id& m : c.morphisms()) {
            mors.push_back(mk_atom(m));
            model.add_to_universe(mk_atom(m));
        }
        sym.fn("CAT$object", cat, mk_class(objs));
        sym.fn("CAT$morphism", cat, mk_class(mors));

        FuncEntries src, tgt, idf;
        for (const Id& m : c.morphisms()) {
            src.emplace_back(mk_atom(m), mk_atom(c.source_of(m)));
            tgt.emplace_back(mk_atom(m), mk_atom(c.target_of(m)));
        }
        for (const auto& [o, m] : c.identities) idf.emplace_back(mk_atom(o), mk_atom(m));
        sym.fn("CAT$source", cat, mk_func(std::move(src)));
        sym.fn("CAT$target", cat, mk_func(std::move(tgt)));
        sym.fn("CAT$identity", cat, mk_func(std::move(idf)));

        std::vector<Value> composable;
        FuncEntries comp, first, second;
        for (const auto& [p, r] : c.composition) {
            Value key = mk_tuple({mk_atom(p.first), mk_atom(p.second)});
            composable.push_back(key);
            comp.emplace_back(key, mk_atom(r));
            first.emplace_back(key, mk_atom(p.first));
            second.emplace_back(key, mk_atom(p.second));
        }
        sym.fn("CAT$composable", cat, mk_class(std::move(composable)));
        sym.fn("CAT$composition", cat, mk_func(std::move(comp)));
        sym.fn("CAT$first", cat, mk_func(std::move(first)));
        sym.fn("CAT$second", cat, mk_func(std::move(second)));

        sym.fn("CAT$opposite", cat, mk_atom(registry.at(canon_category(opposite_category(c)))));

        std::vector<Value> mono, epi, bi, iso;
        for (const Id& m : c.morphisms()) {
            bool mo = is_monomorphism(c, m);
            bool ep = is_epimorphism(c, m);
            if (mo) mono.push_back(mk_atom(m));
            if (ep) epi.push_back(mk_atom(m));
            if (mo && ep) bi.push_back(mk_atom(m));
            if (is_isomorphism(c, m)) iso.push_back(mk_atom(m));
        }
        sym.fn("CAT$monomorphism", cat, mk_class(std::move(mono)));
        sym.fn("CAT$epimorphism", cat, mk_class(std::move(epi)));
        sym.fn("CAT$bimorphism", cat, mk_class(std::move(bi)));
        sym.fn("CAT$isomorphism", cat, mk_class(std::move(iso)));

        // --- finite colimit vocabulary -----------------------------------
        std::set<Id> initials = initial_objects(c);
        std::vector<Value> initial_members;
        FuncEntries counique_entries;
        for (const Id& i : initials) {
            initial_members.push_back(mk_atom(i));
            for (const Id& o : c.objects())
                counique_entries.emplace_back(mk_tuple({mk_atom(i), mk_atom(o)}),
                                              mk_atom(counique(c, i, o)));
        }
        sym.fn("COL$initial", cat, mk_class(std::move(initial_members)));
        sym.fn("COL$counique", cat, mk_func(std::move(counique_entries)));

        std::vector<Value> spans, cocones2, pushout_cocones2, pushouts;
        FuncEntries vertex, sfirst, ssecond, cspan, opvertex, opfirst, opsecond;
        for (const Span& s : enumerate_spans(c)) {
            Value sv = span_value(s);
            spans.push_back(sv);
            vertex.emplace_back(sv, mk_atom(s.vertex));
            sfirst.emplace_back(sv, mk_atom(s.first));
            ssecond.emplace_back(sv, mk_atom(s.second));
            for (const Cocone2& cc : enumerate_cocones2(c, s)) {
                Value cv = cocone2_value(cc);
                cocones2.push_back(cv);
                cspan.emplace_back(cv, sv);
                opvertex.emplace_back(cv, mk_atom(cc.opvertex));
                opfirst.emplace_back(cv, mk_atom(cc.opfirst));
                opsecond.emplace_back(cv, mk_atom(cc.opsecond));
                if (is_pushout_cocone2(c, cc)) {
                    pushout_cocones2.push_back(cv);
                    pushouts.push_back(mk_atom(cc.opvertex));
                }
            }
        }
        sym.fn("COL$span", cat, mk_class(std::move(spans)));
        sym.fn("COL$vertex", cat, mk_func(std::move(vertex)));
        sym.fn("COL$first", cat, mk_func(std::move(sfirst)));
        sym.fn("COL$second", cat, mk_func(std::move(ssecond)));
        sym.fn("COL$cocone2", cat, mk_class(std::move(cocones2)));
        sym.fn("COL$cocone2-span", cat, mk_func(std::move(cspan)));
        sym.fn("COL$opvertex", cat, mk_func(std::move(opvertex)));
        sym.fn("COL$opfirst", cat, mk_func(std::move(opfirst)));
        sym.fn("COL$opsecond", cat, mk_func(std::move(opsecond)));
        sym.fn("COL$pushout-cocone2", cat, mk_class(std::move(pushout_cocones2)));
        sym.fn("COL$pushout", cat, mk_class(std::move(pushouts)));

        std::vector<Value> pps;
        FuncEntries coeq_entries, coprod_entries;
        for (const MorphismPair& pp : parallel_pairs(c)) {
            Value key = mk_tuple({mk_atom(pp.first), mk_atom(pp.second)});
            pps.push_back(key);
            std::vector<Value> coeqs;
            for (const Id& e : c.morphisms())
                if (c.source_of(e) == c.target_of(pp.first) && is_coequalizer(c, pp, e))
                    coeqs.push_back(mk_atom(e));
            coeq_entries.emplace_back(key, mk_class(std::move(coeqs)));
        }
        for (const Id& x : c.objects())
            for (const Id& y : c.objects()) {
                std::vector<Value> cps;
                for (const Id& s : binary_coproduct_objects(c, x, y)) cps.push_back(mk_atom(s));
                coprod_entries.emplace_back(mk_tuple({mk_atom(x), mk_atom(y)}),
                                            mk_class(std::move(cps)));
            }
        sym.fn("COL$parallel-pair", cat, mk_class(std::move(pps)));
        sym.fn("COL$coequalizer", cat, mk_func(std::move(coeq_entries)));
        sym.fn("COL$coproduct", cat, mk_func(std::move(coprod_entries)));
        sym.ensure("COL$finitely-cocomplete", true);
        if (is_finitely_cocomplete(c)) sym.cls("COL$finitely-cocomplete", cat);

        // --- general colimit vocabulary over the empty and span shapes ---
        std::vector<Diagram> diagrams;
        diagrams.push_back(empty_diagram(c));
        for (Diagram& d : enumerate_diagrams(span_shape, c)) diagrams.push_back(std::move(d));

        std::vector<Value> diagram_members;
        FuncEntries colims, colim_cocones, shape_objs;
        FuncEntries cocone_apex, cocone_comp;
        for (const Diagram& d : diagrams) {
            Value dv = diagram_value(d);
            diagram_members.push_back(dv);
            shape_objs.emplace_back(dv, d.shape.objects().empty() ? mk_class({})
                                                                  : shape_objects_span);
            std::vector<Value> colim_objs, universal;
            for (const Cocone& g : universal_cocones(c, d)) {
                colim_objs.push_back(mk_atom(g.apex));
                Value gv = cocone_value(g);
                universal.push_back(gv);
                cocone_apex.emplace_back(gv, mk_atom(g.apex));
                FuncEntries comps;
                for (const auto& [j, m] : g.components)
                    comps.emplace_back(mk_atom(j), mk_atom(m));
                cocone_comp.emplace_back(gv, mk_func(std::move(comps)));
            }
            colims.emplace_back(dv, mk_class(std::move(colim_objs)));
            colim_cocones.emplace_back(dv, mk_class(std::move(universal)));
        }
        sym.fn("COL$diagram", cat, mk_class(std::move(diagram_members)));
        sym.fn("COL$colimit", cat, mk_func(std::move(colims)));
        sym.fn("COL$colimit-cocone", cat, mk_func(std::move(colim_cocones)));
        sym.fn("COL$shape-object", cat, mk_func(std::move(shape_objs)));
        // deduplicate: the same cocone value may appear for several diagrams
        std::sort(cocone_apex.begin(), cocone_apex.end());
        cocone_apex.erase(std::unique(cocone_apex.begin(), cocone_apex.end()), cocone_apex.end());
        std::sort(cocone_comp.begin(), cocone_comp.end());
        cocone_comp.erase(std::unique(cocone_comp.begin(), cocone_comp.end()), cocone_comp.end());
        sym.fn("COL$cocone-apex", cat, mk_func(std::move(cocone_apex)));
        sym.fn("COL$cocone-component", cat, mk_func(std::move(cocone_comp)));

        // --- graph-morphism level (behind a flag: heavier values) --------
        if (opt.graph_morphism_level) {
            const FiniteGraph& G = c.graph;
            const auto [mu, eta] = mu_eta(c);
            const GraphMorphism idg = identity_graph_morphism(G);
            const CoherenceMorphisms coh = coherence_morphisms(G);

            Value g_atom = mk_atom(graphs.atom(G));
            sym.fn("CAT$underlying", cat, g_atom);
            Value mu_v = graph_morphism_value(mu, graphs);
            Value eta_v = graph_morphism_value(eta, graphs);
            sym.fn("CAT$mu", cat, mu_v);
            sym.fn("CAT$eta", cat, eta_v);

            sym.fn("GPH$opposite", g_atom, mk_atom(graphs.atom(opposite_graph(G))));
            std::vector<Value> gobjs;
            for (const Id& o : G.objects) gobjs.push_back(mk_atom(o));
            Value obj_class = mk_class(std::move(gobjs));
            sym.fn("GPH$object", g_atom, obj_class);
            sym.fn("GPH$unit", obj_class, mk_atom(graphs.atom(unit_graph(G.objects))));
            sym.fn("GPH$multiplication", mk_tuple({g_atom, g_atom}),
                   mk_atom(graphs.atom(tensor(G, G))));
            sym.fn("SET$identity", obj_class, map_to_func(identity_map(G.objects), false, false));

            auto gm = [&](const GraphMorphism& f) { return graph_morphism_value(f, graphs); };
            auto reg_parts = [&](const GraphMorphism& f) {
                Value v = gm(f);
                sym.fn("GPH.MOR$source", v, mk_atom(graphs.atom(f.source)));
                sym.fn("GPH.MOR$target", v, mk_atom(graphs.atom(f.target)));
                sym.fn("GPH.MOR$object", v, map_to_func(f.object_map, false, false));
                sym.fn("GPH.MOR$morphism", v, map_to_func(f.morphism_map, true, true));
                return v;
            };
            reg_parts(mu);
            reg_parts(eta);
            sym.fn("GPH.MOR$identity", g_atom, gm(idg));
            sym.fn("GPH.MOR$alpha", mk_tuple({g_atom, g_atom, g_atom}), gm(coh.alpha));
            sym.fn("GPH.MOR$left", g_atom, gm(coh.left_unitor));
            sym.fn("GPH.MOR$right", g_atom, gm(coh.right_unitor));
            sym.fn("GPH.MOR$tau", mk_tuple({g_atom, g_atom}), gm(coh.tau));
            sym.fn("GPH.MOR$opposite", mu_v, gm(GraphMorphism{
                                                  opposite_graph(mu.source), opposite_graph(mu.target),
                                                  mu.object_map, mu.morphism_map}));
            sym.fn("GPH.MOR$opposite", eta_v,
                   gm(GraphMorphism{opposite_graph(eta.source), opposite_graph(eta.target),
                                    eta.object_map, eta.morphism_map}));

            const GraphMorphism id_x_mu = tensor_graph_morphisms(idg, mu);
            const GraphMorphism mu_x_id = tensor_graph_morphisms(mu, idg);
            const GraphMorphism eta_x_id = tensor_graph_morphisms(eta, idg);
            const GraphMorphism id_x_eta = tensor_graph_morphisms(idg, eta);
            auto mult = [&](const GraphMorphism& a, const GraphMorphism& b,
                            const GraphMorphism& r) {
                sym.fn("GPH.MOR$multiplication", mk_tuple({gm(a), gm(b)}), gm(r));
            };
            mult(idg, mu, id_x_mu);
            mult(mu, idg, mu_x_id);
            mult(eta, idg, eta_x_id);
            mult(idg, eta, id_x_eta);

            auto compose_entry = [&](const GraphMorphism& a, const GraphMorphism& b) {
                GraphMorphism r = compose_graph_morphisms(a, b);
                sym.fn("GPH.MOR$composition", mk_tuple({gm(a), gm(b)}), gm(r));
                return r;
            };
            compose_entry(id_x_mu, mu);
            GraphMorphism alpha_then = compose_entry(coh.alpha, mu_x_id);
            compose_entry(alpha_then, mu);
            compose_entry(eta_x_id, mu);
            compose_entry(id_x_eta, mu);
            // opposite-category equation of the twist composite
            GraphMorphism op_mu{opposite_graph(mu.source), opposite_graph(mu.target),
                                mu.object_map, mu.morphism_map};
            compose_entry(coh.tau, op_mu);
        }
    }

    for (const auto& [name, entries] : sym.funcs) {
        FuncEntries dedup = entries;
        std::sort(dedup.begin(), dedup.end());
        dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
        model.symbols[name] = mk_func(std::move(dedup));
    }
    for (const auto& [name, members] : sym.classes) model.symbols[name] = mk_class(members);
    model.finalize_universe();
    return model;
}

} // namespace iffcat::kif
