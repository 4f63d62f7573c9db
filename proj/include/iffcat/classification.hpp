#pragma once

#include <functional>

#include "iffcat/category.hpp"

namespace iffcat {

/// Instances, types and an incidence relation between them.
struct Classification {
    std::set<Id> instances;
    std::set<Id> types;
    std::set<std::pair<Id, Id>> incidence; // (instance, type)

    bool operator==(const Classification&) const = default;
    auto operator<=>(const Classification&) const = default;

    bool classifies(const Id& instance, const Id& type) const {
        return incidence.count({instance, type}) != 0;
    }
};

inline std::vector<std::string> classification_violations(const Classification& c) {
    std::vector<std::string> out;
    for (const auto& [i, t] : c.incidence) {
        if (!c.instances.count(i)) out.push_back("incidence mentions unknown instance '" + i + "'");
        if (!c.types.count(t)) out.push_back("incidence mentions unknown type '" + t + "'");
    }
    return out;
}

/// Covariant type map, contravariant instance map, fundamental condition:
/// instance_map(b) |=_src t  iff  b |=_tgt type_map(t).
struct Infomorphism {
    Classification source;
    Classification target;
    std::map<Id, Id> type_map;     // types(source) -> types(target)
    std::map<Id, Id> instance_map; // instances(target) -> instances(source)

    bool operator==(const Infomorphism&) const = default;
    auto operator<=>(const Infomorphism&) const = default;

    const Id& on_type(const Id& t) const {
        auto it = type_map.find(t);
        if (it == type_map.end()) throw Error("type map undefined at '" + t + "'");
        return it->second;
    }
    const Id& on_instance(const Id& b) const {
        auto it = instance_map.find(b);
        if (it == instance_map.end()) throw Error("instance map undefined at '" + b + "'");
        return it->second;
    }
};

inline std::vector<std::string> infomorphism_violations(const Infomorphism& f) {
    std::vector<std::string> out;
    for (const Id& t : f.source.types) {
        auto it = f.type_map.find(t);
        if (it == f.type_map.end())
            out.push_back("type map undefined at '" + t + "'");
        else if (!f.target.types.count(it->second))
            out.push_back("type map sends '" + t + "' outside the target types");
    }
    for (const Id& b : f.target.instances) {
        auto it = f.instance_map.find(b);
        if (it == f.instance_map.end())
            out.push_back("instance map undefined at '" + b + "'");
        else if (!f.source.instances.count(it->second))
            out.push_back("instance map sends '" + b + "' outside the source instances");
    }
    if (!out.empty()) return out;

    for (const Id& b : f.target.instances)
        for (const Id& t : f.source.types)
            if (f.source.classifies(f.on_instance(b), t) !=
                f.target.classifies(b, f.on_type(t)))
                out.push_back("FundamentalConditionViolation at instance '" + b + "', type '" + t +
                              "'");
    return out;
}

inline bool is_valid(const Infomorphism& f) { return infomorphism_violations(f).empty(); }

inline Infomorphism validate_infomorphism(const Infomorphism& f) {
    auto vs = infomorphism_violations(f);
    if (!vs.empty()) {
        std::string msg = "invalid infomorphism:";
        for (const auto& v : vs) msg += "\n  " + v;
        throw Error(msg);
    }
    return f;
}

inline Infomorphism identity_infomorphism(const Classification& a) {
    return {a, a, identity_map(a.types), identity_map(a.instances)};
}

inline Infomorphism compose_infomorphisms(const Infomorphism& f, const Infomorphism& g) {
    if (f.target != g.source) throw Error("infomorphism composition: boundary mismatch");
    Infomorphism out;
    out.source = f.source;
    out.target = g.target;
    for (const auto& [t, ft] : f.type_map) out.type_map[t] = g.on_type(ft);
    for (const auto& [b, gb] : g.instance_map) out.instance_map[b] = f.on_instance(gb);
    return out;
}

/// Present a closed family of classifications and infomorphisms as a
/// FiniteCategory: objects name the classifications, morphisms the
/// infomorphisms. Closure failures are errors, not silently fixed.
inline FiniteCategory
as_abstract_category(const std::vector<std::pair<std::string, Classification>>& clss,
                     const std::vector<std::pair<std::string, Infomorphism>>& infos) {
    auto object_of = [&](const Classification& c) -> const std::string& {
        for (const auto& [name, cls] : clss)
            if (cls == c) return name;
        throw Error("infomorphism boundary classification is not in the family");
    };
    auto morphism_of = [&](const Infomorphism& f) -> const std::string* {
        for (const auto& [name, info] : infos)
            if (info == f) return &name;
        return nullptr;
    };

    RawCategoryTables raw;
    for (const auto& [name, cls] : clss) {
        raw.graph.objects.insert(name);
        const std::string* id_name = morphism_of(identity_infomorphism(cls));
        if (!id_name) throw Error("MissingIdentity: classification '" + name + "'");
        raw.identities[name] = *id_name;
    }
    for (const auto& [name, f] : infos) {
        validate_infomorphism(f);
        raw.graph.morphisms.insert(name);
        raw.graph.src[name] = object_of(f.source);
        raw.graph.tgt[name] = object_of(f.target);
    }
    for (const auto& [n1, f] : infos)
        for (const auto& [n2, g] : infos) {
            if (f.target != g.source) continue;
            const std::string* composite = morphism_of(compose_infomorphisms(f, g));
            if (!composite)
                throw Error("NotClosedUnderComposition: (" + n1 + ", " + n2 + ")");
            raw.composition[{n1, n2}] = *composite;
        }
    return validate_category(raw);
}

/// A classification pushout: apex plus the two injections.
struct ClassificationPushout {
    Classification apex;
    Infomorphism inj1; // B -> apex
    Infomorphism inj2; // C -> apex
};

namespace detail {
inline Id pair_instance_id(const Id& b, const Id& c) { return "(" + b + "|" + c + ")"; }
} // namespace detail

/// Pushout of B <-f- A -g-> C in Classification. Apex types are the quotient
/// of types(B) (+) types(C) by the equivalence generated by f(t) ~ g(t);
/// apex instances are the pairs (b, c) agreeing over A. Well-definedness of
/// incidence across each equivalence class is checked at construction time.
inline ClassificationPushout pushout_classification(const Infomorphism& f, const Infomorphism& g) {
    if (f.source != g.source) throw Error("SourceMismatch: pushout legs need a common source");
    validate_infomorphism(f);
    validate_infomorphism(g);
    const Classification& A = f.source;
    const Classification& B = f.target;
    const Classification& C = g.target;

    // union-find over tagged types L:u (from B) and R:v (from C)
    std::map<Id, Id> parent;
    std::function<Id(const Id&)> find = [&](const Id& x) -> Id {
        Id r = x;
        while (parent.at(r) != r) r = parent.at(r);
        // path compression
        Id cur = x;
        while (parent.at(cur) != r) {
            Id next = parent.at(cur);
            parent[cur] = r;
            cur = next;
        }
        return r;
    };
    auto unite = [&](const Id& x, const Id& y) {
        Id rx = find(x), ry = find(y);
        if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    };
    for (const Id& u : B.types) parent["L:" + u] = "L:" + u;
    for (const Id& v : C.types) parent["R:" + v] = "R:" + v;
    for (const Id& t : A.types) unite("L:" + f.on_type(t), "R:" + g.on_type(t));

    std::map<Id, std::vector<Id>> classes; // root -> tagged members
    for (const auto& [x, _] : parent) classes[find(x)].push_back(x);
    std::map<Id, Id> class_name; // tagged type -> apex type id
    ClassificationPushout out;
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        Id name = "[";
        for (size_t i = 0; i < members.size(); ++i) name += (i ? " " : "") + members[i];
        name += "]";
        out.apex.types.insert(name);
        for (const Id& m : members) class_name[m] = name;
    }

    for (const Id& b : B.instances)
        for (const Id& c : C.instances)
            if (f.on_instance(b) == g.on_instance(c))
                out.apex.instances.insert(detail::pair_instance_id(b, c));

    // incidence via representatives, with a built-in well-definedness check
    for (const Id& b : B.instances)
        for (const Id& c : C.instances) {
            if (f.on_instance(b) != g.on_instance(c)) continue;
            const Id inst = detail::pair_instance_id(b, c);
            for (const auto& [root, members] : classes) {
                bool first = true;
                bool holds = false;
                for (const Id& m : members) {
                    bool h = (m[0] == 'L') ? B.classifies(b, m.substr(2))
                                           : C.classifies(c, m.substr(2));
                    if (first) {
                        holds = h;
                        first = false;
                    } else if (h != holds) {
                        throw Error("IllFormedQuotient: incidence disagrees within class " +
                                    class_name.at(members.front()) + " at instance " + inst);
                    }
                }
                if (holds) out.apex.incidence.insert({inst, class_name.at(members.front())});
            }
        }

    out.inj1.source = B;
    out.inj1.target = out.apex;
    for (const Id& u : B.types) out.inj1.type_map[u] = class_name.at("L:" + u);
    out.inj2.source = C;
    out.inj2.target = out.apex;
    for (const Id& v : C.types) out.inj2.type_map[v] = class_name.at("R:" + v);
    for (const Id& b : B.instances)
        for (const Id& c : C.instances)
            if (f.on_instance(b) == g.on_instance(c)) {
                out.inj1.instance_map[detail::pair_instance_id(b, c)] = b;
                out.inj2.instance_map[detail::pair_instance_id(b, c)] = c;
            }
    validate_infomorphism(out.inj1);
    validate_infomorphism(out.inj2);
    if (compose_infomorphisms(f, out.inj1) != compose_infomorphisms(g, out.inj2))
        throw Error("IllFormedQuotient: injections do not form a commuting square");
    return out;
}

/// A candidate cocone over the span B <- A -> C: apex classification X with
/// legs j1 : B -> X, j2 : C -> X forming a commuting square with f, g.
struct ClassificationCocone {
    Classification apex;
    Infomorphism j1;
    Infomorphism j2;

    auto operator<=>(const ClassificationCocone&) const = default;
};

inline bool cocone_commutes(const Infomorphism& f, const Infomorphism& g,
                            const ClassificationCocone& s) {
    return is_valid(s.j1) && is_valid(s.j2) && s.j1.source == f.target &&
           s.j2.source == g.target && s.j1.target == s.apex && s.j2.target == s.apex &&
           compose_infomorphisms(f, s.j1) == compose_infomorphisms(g, s.j2);
}

/// All infomorphisms pushout.apex -> s.apex satisfying both triangle
/// equations and the fundamental condition, by backtracking enumeration of
/// type and instance maps with triangle pruning.
inline std::vector<Infomorphism> enumerate_mediators(const ClassificationPushout& p,
                                                     const ClassificationCocone& s) {
    const Classification& X = s.apex;
    std::vector<Id> apex_types(p.apex.types.begin(), p.apex.types.end());
    std::vector<Id> x_insts(X.instances.begin(), X.instances.end());
    std::vector<Infomorphism> out;

    Infomorphism cand;
    cand.source = p.apex;
    cand.target = X;

    auto type_ok = [&](const Id& T, const Id& image) {
        for (const auto& [u, TT] : p.inj1.type_map)
            if (TT == T && s.j1.on_type(u) != image) return false;
        for (const auto& [v, TT] : p.inj2.type_map)
            if (TT == T && s.j2.on_type(v) != image) return false;
        return true;
    };
    auto inst_ok = [&](const Id& x, const Id& preimage) {
        return p.inj1.on_instance(preimage) == s.j1.on_instance(x) &&
               p.inj2.on_instance(preimage) == s.j2.on_instance(x);
    };

    std::function<void(size_t)> rec_inst = [&](size_t k) {
        if (k == x_insts.size()) {
            if (is_valid(cand)) out.push_back(cand);
            return;
        }
        for (const Id& pre : p.apex.instances) {
            if (!inst_ok(x_insts[k], pre)) continue;
            cand.instance_map[x_insts[k]] = pre;
            rec_inst(k + 1);
            cand.instance_map.erase(x_insts[k]);
        }
    };
    std::function<void(size_t)> rec_type = [&](size_t k) {
        if (k == apex_types.size()) {
            rec_inst(0);
            return;
        }
        for (const Id& img : X.types) {
            if (!type_ok(apex_types[k], img)) continue;
            cand.type_map[apex_types[k]] = img;
            rec_type(k + 1);
            cand.type_map.erase(apex_types[k]);
        }
    };
    rec_type(0);
    return out;
}

struct UniversalityReport {
    size_t cocones_checked = 0;
    size_t with_unique_mediator = 0;
    std::string first_failure; // empty when all mediator counts are exactly 1

    bool all_unique() const { return cocones_checked == with_unique_mediator; }
};

/// Mediator counting over an explicitly supplied test universe of cocones.
inline UniversalityReport verify_pushout_universality(const ClassificationPushout& p,
                                                      const Infomorphism& f,
                                                      const Infomorphism& g,
                                                      const std::vector<ClassificationCocone>& universe) {
    UniversalityReport r;
    for (const ClassificationCocone& s : universe) {
        if (!cocone_commutes(f, g, s)) throw Error("test cocone does not commute over the span");
        ++r.cocones_checked;
        size_t n = enumerate_mediators(p, s).size();
        if (n == 1)
            ++r.with_unique_mediator;
        else if (r.first_failure.empty())
            r.first_failure = "mediator count " + std::to_string(n) + " for a cocone with " +
                              std::to_string(s.apex.instances.size()) + " instances, " +
                              std::to_string(s.apex.types.size()) + " types";
    }
    return r;
}

/// Exhaustively enumerate every commuting cocone over B <- A -> C whose apex
/// has canonical carriers of at most max_instances x max_types.
///
/// The enumeration is factorized instead of generate-and-filter: a leg into
/// the apex is an infomorphism exactly when every apex instance is mapped to
/// a source instance whose incidence row matches the apex row pulled back
/// along the type map, so valid source instances are looked up per incidence
/// profile, and the two legs commute exactly when the type maps agree over
/// the span vertex and each apex instance's two images pull back to the same
/// vertex instance. Requires source carriers of at most 32 elements.
inline std::vector<ClassificationCocone>
enumerate_cocones_bounded(const Infomorphism& f, const Infomorphism& g, size_t max_instances,
                          size_t max_types) {
    const Classification& A = f.source;
    const Classification& B = f.target;
    const Classification& C = g.target;
    std::vector<ClassificationCocone> out;

    const std::vector<Id> b_types(B.types.begin(), B.types.end());
    const std::vector<Id> c_types(C.types.begin(), C.types.end());
    const std::vector<Id> b_insts(B.instances.begin(), B.instances.end());
    const std::vector<Id> c_insts(C.instances.begin(), C.instances.end());
    if (b_types.size() > 16 || c_types.size() > 16 || b_insts.size() > 32 ||
        c_insts.size() > 32)
        throw Error("bounded cocone enumeration supports carriers up to 32 elements");

    // which (b, c) pairs agree over the span vertex A
    std::vector<std::vector<char>> agree(b_insts.size(),
                                         std::vector<char>(c_insts.size(), 0));
    for (size_t bi = 0; bi < b_insts.size(); ++bi)
        for (size_t ci = 0; ci < c_insts.size(); ++ci)
            agree[bi][ci] =
                f.instance_map.at(b_insts[bi]) == g.instance_map.at(c_insts[ci]);

    // valid[profile] = bitset of source instances whose incidence row over
    // the source types equals the given profile (bit i <-> source type i)
    auto profile_table = [](const Classification& S, const std::vector<Id>& s_types,
                            const std::vector<Id>& s_insts) {
        std::vector<uint32_t> tab(size_t(1) << s_types.size(), 0);
        for (size_t bi = 0; bi < s_insts.size(); ++bi) {
            size_t prof = 0;
            for (size_t ti = 0; ti < s_types.size(); ++ti)
                if (S.classifies(s_insts[bi], s_types[ti])) prof |= size_t(1) << ti;
            tab[prof] |= uint32_t(1) << bi;
        }
        return tab;
    };
    const std::vector<uint32_t> valid1 = profile_table(B, b_types, b_insts);
    const std::vector<uint32_t> valid2 = profile_table(C, c_types, c_insts);

    // indices of the images of the span-vertex types in each leg's source
    std::vector<std::pair<size_t, size_t>> vertex_idx; // (index in b_types, in c_types)
    for (const Id& s : A.types) {
        auto pos = [](const std::vector<Id>& v, const Id& x) {
            return size_t(std::find(v.begin(), v.end(), x) - v.begin());
        };
        vertex_idx.emplace_back(pos(b_types, f.on_type(s)), pos(c_types, g.on_type(s)));
    }

    for (size_t ni = 0; ni <= max_instances; ++ni)
        for (size_t nt = 0; nt <= max_types; ++nt) {
            std::vector<Id> insts, types;
            for (size_t i = 0; i < ni; ++i) insts.push_back("x" + std::to_string(i));
            for (size_t t = 0; t < nt; ++t) types.push_back("u" + std::to_string(t));

            // type maps source type index -> apex type index, as flat vectors
            auto type_maps = [&](size_t n_src) {
                std::vector<std::vector<size_t>> maps;
                if (n_src == 0) {
                    maps.push_back({});
                    return maps;
                }
                if (nt == 0) return maps;
                std::vector<size_t> cur(n_src, 0);
                while (true) {
                    maps.push_back(cur);
                    size_t k = 0;
                    while (k < n_src && ++cur[k] == nt) cur[k++] = 0;
                    if (k == n_src) break;
                }
                return maps;
            };
            const auto tms1 = type_maps(b_types.size());
            const auto tms2 = type_maps(c_types.size());

            // pairs of type maps agreeing over the span vertex
            std::vector<std::pair<size_t, size_t>> compatible;
            for (size_t m1 = 0; m1 < tms1.size(); ++m1)
                for (size_t m2 = 0; m2 < tms2.size(); ++m2) {
                    bool ok = true;
                    for (const auto& [bi, ci] : vertex_idx)
                        if (tms1[m1][bi] != tms2[m2][ci]) ok = false;
                    if (ok) compatible.emplace_back(m1, m2);
                }

            const size_t bits = ni * nt;
            std::vector<size_t> rows(ni);
            std::vector<std::vector<std::pair<size_t, size_t>>> choices(ni);
            for (size_t mask = 0; mask < (size_t(1) << bits); ++mask) {
                for (size_t x = 0; x < ni; ++x)
                    rows[x] = (mask >> (x * nt)) & ((size_t(1) << nt) - 1);

                Classification X;
                X.instances.insert(insts.begin(), insts.end());
                X.types.insert(types.begin(), types.end());
                for (size_t k = 0; k < bits; ++k)
                    if (mask >> k & 1) X.incidence.insert({insts[k / nt], types[k % nt]});

                for (const auto& [m1, m2] : compatible) {
                    const auto& tm1 = tms1[m1];
                    const auto& tm2 = tms2[m2];
                    // per apex instance: (b, c) choices consistent with the
                    // incidence rows and agreeing over the vertex
                    bool feasible = true;
                    for (size_t x = 0; x < ni && feasible; ++x) {
                        size_t p1 = 0, p2 = 0;
                        for (size_t ti = 0; ti < tm1.size(); ++ti)
                            if (rows[x] >> tm1[ti] & 1) p1 |= size_t(1) << ti;
                        for (size_t ti = 0; ti < tm2.size(); ++ti)
                            if (rows[x] >> tm2[ti] & 1) p2 |= size_t(1) << ti;
                        choices[x].clear();
                        uint32_t v1 = valid1[p1], v2 = valid2[p2];
                        for (size_t bi = 0; bi < b_insts.size(); ++bi) {
                            if (!(v1 >> bi & 1)) continue;
                            for (size_t ci = 0; ci < c_insts.size(); ++ci)
                                if ((v2 >> ci & 1) && agree[bi][ci])
                                    choices[x].emplace_back(bi, ci);
                        }
                        feasible = !choices[x].empty();
                    }
                    if (!feasible) continue;

                    Infomorphism j1, j2;
                    j1.source = B;
                    j2.source = C;
                    j1.target = X;
                    j2.target = X;
                    for (size_t ti = 0; ti < tm1.size(); ++ti)
                        j1.type_map[b_types[ti]] = types[tm1[ti]];
                    for (size_t ti = 0; ti < tm2.size(); ++ti)
                        j2.type_map[c_types[ti]] = types[tm2[ti]];

                    std::function<void(size_t)> emit = [&](size_t x) {
                        if (x == ni) {
                            out.push_back({X, j1, j2});
                            return;
                        }
                        for (const auto& [bi, ci] : choices[x]) {
                            j1.instance_map[insts[x]] = b_insts[bi];
                            j2.instance_map[insts[x]] = c_insts[ci];
                            emit(x + 1);
                        }
                        j1.instance_map.erase(insts[x]);
                        j2.instance_map.erase(insts[x]);
                    };
                    emit(0);
                }
            }
        }
    return out;
}

} // namespace iffcat
