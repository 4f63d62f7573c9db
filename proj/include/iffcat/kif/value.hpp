#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iffcat/graph.hpp"

namespace iffcat::kif {

/// A semantic value of the finite model: boolean, ground atom, tuple,
/// finite class, or finite function. Classes and functions are extensional
/// and kept sorted, so equality and ordering are structural.
struct Value {
    enum class Kind { Bool, Atom, Tuple, Class, Func };
    Kind kind = Kind::Atom;
    bool boolean = false;
    std::string atom;
    std::vector<Value> items;                     // Tuple children or Class members
    std::vector<std::pair<Value, Value>> table;   // Func entries, sorted by key

    bool is_bool() const { return kind == Kind::Bool; }
    bool is_atom() const { return kind == Kind::Atom; }
    bool is_tuple() const { return kind == Kind::Tuple; }
    bool is_class() const { return kind == Kind::Class; }
    bool is_func() const { return kind == Kind::Func; }
};

inline int compare(const Value& a, const Value& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
    switch (a.kind) {
        case Value::Kind::Bool:
            return a.boolean == b.boolean ? 0 : (a.boolean < b.boolean ? -1 : 1);
        case Value::Kind::Atom:
            return a.atom.compare(b.atom) < 0 ? -1 : (a.atom == b.atom ? 0 : 1);
        case Value::Kind::Tuple:
        case Value::Kind::Class: {
            size_t n = std::min(a.items.size(), b.items.size());
            for (size_t i = 0; i < n; ++i)
                if (int c = compare(a.items[i], b.items[i])) return c;
            return a.items.size() == b.items.size() ? 0
                                                    : (a.items.size() < b.items.size() ? -1 : 1);
        }
        case Value::Kind::Func: {
            size_t n = std::min(a.table.size(), b.table.size());
            for (size_t i = 0; i < n; ++i) {
                if (int c = compare(a.table[i].first, b.table[i].first)) return c;
                if (int c = compare(a.table[i].second, b.table[i].second)) return c;
            }
            return a.table.size() == b.table.size() ? 0
                                                    : (a.table.size() < b.table.size() ? -1 : 1);
        }
    }
    return 0;
}

inline bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
inline bool operator!=(const Value& a, const Value& b) { return compare(a, b) != 0; }
inline bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }

inline Value mk_bool(bool b) {
    Value v;
    v.kind = Value::Kind::Bool;
    v.boolean = b;
    return v;
}

inline Value mk_atom(std::string a) {
    Value v;
    v.kind = Value::Kind::Atom;
    v.atom = std::move(a);
    return v;
}

inline Value mk_tuple(std::vector<Value> items) {
    Value v;
    v.kind = Value::Kind::Tuple;
    v.items = std::move(items);
    return v;
}

inline Value mk_class(std::vector<Value> members) {
    Value v;
    v.kind = Value::Kind::Class;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end(),
                              [](const Value& a, const Value& b) { return a == b; }),
                  members.end());
    v.items = std::move(members);
    return v;
}

inline Value mk_func(std::vector<std::pair<Value, Value>> entries) {
    Value v;
    v.kind = Value::Kind::Func;
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    v.table = std::move(entries);
    return v;
}

inline bool class_contains(const Value& cls, const Value& x) {
    return std::binary_search(cls.items.begin(), cls.items.end(), x);
}

inline const Value* func_lookup(const Value& fn, const Value& key) {
    auto it = std::lower_bound(fn.table.begin(), fn.table.end(), key,
                               [](const auto& e, const Value& k) { return e.first < k; });
    if (it == fn.table.end() || !(it->first == key)) return nullptr;
    return &it->second;
}

inline std::string to_string(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Bool:
            return v.boolean ? "true" : "false";
        case Value::Kind::Atom:
            return v.atom;
        case Value::Kind::Tuple: {
            std::string out = "[";
            for (size_t i = 0; i < v.items.size(); ++i)
                out += (i ? " " : "") + to_string(v.items[i]);
            return out + "]";
        }
        case Value::Kind::Class: {
            std::string out = "{";
            for (size_t i = 0; i < v.items.size(); ++i)
                out += (i ? " " : "") + to_string(v.items[i]);
            return out + "}";
        }
        case Value::Kind::Func: {
            std::string out = "<fn";
            for (const auto& [k, val] : v.table) out += " " + to_string(k) + ":" + to_string(val);
            return out + ">";
        }
    }
    return "?";
}

} // namespace iffcat::kif
