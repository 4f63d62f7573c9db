#pragma once

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "iffcat/classification.hpp"
#include "iffcat/colimit.hpp"

namespace iffcat::io {

using json = nlohmann::json;

struct LoadError : Error {
    using Error::Error;
};

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open fixture file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw LoadError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

// ---------------------------------------------------------------------------
// Graph: {"objects": [...], "morphisms": [{"id","src","tgt"}, ...]}
// ---------------------------------------------------------------------------

/// Run a JSON-reading body, converting library exceptions (missing keys,
/// wrong element types) into LoadError so callers see one failure type.
template <class F>
auto guarded(const char* what, F&& body) {
    try {
        return body();
    } catch (const json::exception& e) {
        throw LoadError(std::string("malformed ") + what + ": " + e.what());
    }
}

inline FiniteGraph graph_from_json(const json& j) {
    return guarded("graph", [&] {
        FiniteGraph g;
        if (!j.at("objects").is_array()) throw LoadError("'objects' must be an array");
        if (!j.at("morphisms").is_array()) throw LoadError("'morphisms' must be an array");
        for (const auto& o : j.at("objects")) {
            Id id = o.get<Id>();
            if (!g.objects.insert(id).second) throw LoadError("duplicate object id '" + id + "'");
        }
        for (const auto& m : j.at("morphisms")) {
            Id id = m.at("id").get<Id>();
            if (!g.morphisms.insert(id).second)
                throw LoadError("duplicate morphism id '" + id + "'");
            g.src[id] = m.at("src").get<Id>();
            g.tgt[id] = m.at("tgt").get<Id>();
        }
        return g;
    });
}

inline json graph_to_json(const FiniteGraph& g) {
    json j;
    j["objects"] = json::array();
    for (const Id& o : g.objects) j["objects"].push_back(o);
    j["morphisms"] = json::array();
    for (const Id& m : g.morphisms)
        j["morphisms"].push_back({{"id", m}, {"src", g.source_of(m)}, {"tgt", g.target_of(m)}});
    return j;
}

// ---------------------------------------------------------------------------
// Category: {"graph": ..., "composition": [[m1,m2,r], ...], "identities": {o: m}}
// ---------------------------------------------------------------------------

inline RawCategoryTables category_tables_from_json(const json& j) {
    return guarded("category tables", [&] {
        RawCategoryTables raw;
        raw.graph = graph_from_json(j.at("graph"));
        for (const auto& t : j.at("composition")) {
            if (!t.is_array() || t.size() != 3)
                throw LoadError("composition entries must be [m1, m2, result] triples");
            MorphismPair key{t[0].get<Id>(), t[1].get<Id>()};
            if (raw.composition.count(key))
                throw LoadError("duplicate composition entry (" + key.first + ", " +
                                key.second + ")");
            raw.composition[key] = t[2].get<Id>();
        }
        for (const auto& [o, m] : j.at("identities").items()) raw.identities[o] = m.get<Id>();
        return raw;
    });
}

inline json category_tables_to_json(const RawCategoryTables& raw) {
    json j;
    j["graph"] = graph_to_json(raw.graph);
    j["composition"] = json::array();
    for (const auto& [p, r] : raw.composition)
        j["composition"].push_back({p.first, p.second, r});
    j["identities"] = json::object();
    for (const auto& [o, m] : raw.identities) j["identities"][o] = m;
    return j;
}

inline RawCategoryTables load_category_tables(const std::string& path) {
    return category_tables_from_json(load_json(path));
}

inline FiniteCategory load_category(const std::string& path) {
    return validate_category(load_category_tables(path));
}

// ---------------------------------------------------------------------------
// Functor/diagram: {"source"/"shape": <path or inline>, "target": <path or
// inline>, "objectMap": {...}, "morphismMap": {...}}
// ---------------------------------------------------------------------------

/// A category reference is either an inline category object or a string path
/// resolved relative to the referring file's directory.
inline FiniteCategory resolve_category_ref(const json& j, const std::string& base_dir) {
    if (j.is_string()) {
        std::filesystem::path p = j.get<std::string>();
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        return load_category(p.string());
    }
    return validate_category(category_tables_from_json(j));
}

inline std::map<Id, Id> string_map_from_json(const json& j) {
    std::map<Id, Id> out;
    for (const auto& [k, v] : j.items()) out[k] = v.get<Id>();
    return out;
}

inline Functor functor_from_json(const json& j, const std::string& base_dir) {
    return guarded("functor", [&] {
        Functor f;
        const char* source_key = j.contains("shape") ? "shape" : "source";
        f.source = resolve_category_ref(j.at(source_key), base_dir);
        f.target = resolve_category_ref(j.at("target"), base_dir);
        f.object_map = string_map_from_json(j.at("objectMap"));
        f.morphism_map = string_map_from_json(j.at("morphismMap"));
        return f;
    });
}

inline Functor load_functor(const std::string& path) {
    return functor_from_json(load_json(path),
                             std::filesystem::path(path).parent_path().string());
}

inline Diagram load_diagram(const std::string& path) { return make_diagram(load_functor(path)); }

// ---------------------------------------------------------------------------
// Classification: {"instances": [...], "types": [...], "incidence": [[i,t],...]}
// Infomorphism: {"source": <ref>, "target": <ref>, "typeMap": {...},
//                "instanceMap": {...}}
// ---------------------------------------------------------------------------

inline Classification classification_from_json(const json& j) {
    return guarded("classification", [&] {
        Classification c;
        for (const auto& i : j.at("instances")) {
            Id id = i.get<Id>();
            if (!c.instances.insert(id).second)
                throw LoadError("duplicate instance '" + id + "'");
        }
        for (const auto& t : j.at("types")) {
            Id id = t.get<Id>();
            if (!c.types.insert(id).second) throw LoadError("duplicate type '" + id + "'");
        }
        for (const auto& p : j.at("incidence")) {
            if (!p.is_array() || p.size() != 2)
                throw LoadError("incidence entries must be [instance, type] pairs");
            c.incidence.insert({p[0].get<Id>(), p[1].get<Id>()});
        }
        auto vs = classification_violations(c);
        if (!vs.empty()) throw LoadError("invalid classification: " + vs.front());
        return c;
    });
}

inline json classification_to_json(const Classification& c) {
    json j;
    j["instances"] = json::array();
    for (const Id& i : c.instances) j["instances"].push_back(i);
    j["types"] = json::array();
    for (const Id& t : c.types) j["types"].push_back(t);
    j["incidence"] = json::array();
    for (const auto& [i, t] : c.incidence) j["incidence"].push_back({i, t});
    return j;
}

inline Classification load_classification(const std::string& path) {
    return classification_from_json(load_json(path));
}

inline Classification resolve_classification_ref(const json& j, const std::string& base_dir) {
    if (j.is_string()) {
        std::filesystem::path p = j.get<std::string>();
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        return load_classification(p.string());
    }
    return classification_from_json(j);
}

inline Infomorphism infomorphism_from_json(const json& j, const std::string& base_dir) {
    return guarded("infomorphism", [&] {
        Infomorphism f;
        f.source = resolve_classification_ref(j.at("source"), base_dir);
        f.target = resolve_classification_ref(j.at("target"), base_dir);
        f.type_map = string_map_from_json(j.at("typeMap"));
        f.instance_map = string_map_from_json(j.at("instanceMap"));
        auto vs = infomorphism_violations(f);
        if (!vs.empty()) throw LoadError("invalid infomorphism: " + vs.front());
        return f;
    });
}

inline Infomorphism load_infomorphism(const std::string& path) {
    return infomorphism_from_json(load_json(path),
                                  std::filesystem::path(path).parent_path().string());
}

inline json infomorphism_to_json(const Infomorphism& f) {
    json j;
    j["source"] = classification_to_json(f.source);
    j["target"] = classification_to_json(f.target);
    j["typeMap"] = json::object();
    for (const auto& [k, v] : f.type_map) j["typeMap"][k] = v;
    j["instanceMap"] = json::object();
    for (const auto& [k, v] : f.instance_map) j["instanceMap"][k] = v;
    return j;
}

} // namespace iffcat::io
