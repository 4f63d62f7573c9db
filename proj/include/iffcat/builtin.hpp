#pragma once

#include "iffcat/colimit.hpp"

namespace iffcat::builtin {

namespace detail {
inline void arrow_entry(RawCategoryTables& raw, const Id& m, const Id& s, const Id& t) {
    raw.graph.morphisms.insert(m);
    raw.graph.src[m] = s;
    raw.graph.tgt[m] = t;
}

/// Fill in all composites forced in a thin category (at most one morphism
/// between any ordered pair of objects).
inline void close_thin(RawCategoryTables& raw) {
    const FiniteGraph& g = raw.graph;
    for (const Id& m1 : g.morphisms)
        for (const Id& m2 : g.morphisms) {
            if (g.tgt.at(m1) != g.src.at(m2)) continue;
            for (const Id& r : g.morphisms)
                if (g.src.at(r) == g.src.at(m1) && g.tgt.at(r) == g.tgt.at(m2))
                    raw.composition[{m1, m2}] = r;
        }
}
} // namespace detail

/// The one-object one-morphism category.
inline FiniteCategory one() {
    RawCategoryTables raw;
    raw.graph.objects = {"t0"};
    detail::arrow_entry(raw, "t00", "t0", "t0");
    raw.identities = {{"t0", "t00"}};
    raw.composition = {{{"t00", "t00"}, "t00"}};
    return validate_category(raw);
}

/// 0 --a--> 1 with identities.
inline FiniteCategory arrow() {
    RawCategoryTables raw;
    raw.graph.objects = {"0", "1"};
    detail::arrow_entry(raw, "id0", "0", "0");
    detail::arrow_entry(raw, "id1", "1", "1");
    detail::arrow_entry(raw, "a", "0", "1");
    raw.identities = {{"0", "id0"}, {"1", "id1"}};
    raw.composition = {{{"id0", "id0"}, "id0"},
                       {{"id1", "id1"}, "id1"},
                       {{"id0", "a"}, "a"},
                       {{"a", "id1"}, "a"}};
    return validate_category(raw);
}

/// The span shape category as a fixture.
inline FiniteCategory span3() { return span_shape_category(); }

/// Commutative square poset a <= b, a <= c, b <= d, c <= d.
inline FiniteCategory po_square() {
    RawCategoryTables raw;
    raw.graph.objects = {"a", "b", "c", "d"};
    detail::arrow_entry(raw, "ida", "a", "a");
    detail::arrow_entry(raw, "idb", "b", "b");
    detail::arrow_entry(raw, "idc", "c", "c");
    detail::arrow_entry(raw, "idd", "d", "d");
    detail::arrow_entry(raw, "ab", "a", "b");
    detail::arrow_entry(raw, "ac", "a", "c");
    detail::arrow_entry(raw, "bd", "b", "d");
    detail::arrow_entry(raw, "cd", "c", "d");
    detail::arrow_entry(raw, "ad", "a", "d");
    raw.identities = {{"a", "ida"}, {"b", "idb"}, {"c", "idc"}, {"d", "idd"}};
    detail::close_thin(raw);
    return validate_category(raw);
}

/// po_square with a second top object d' isomorphic to d; the span
/// (a; ab, ac) then has two colimits.
inline FiniteCategory po_double_top() {
    RawCategoryTables raw;
    raw.graph.objects = {"a", "b", "c", "d", "e"};
    for (const Id& o : raw.graph.objects) detail::arrow_entry(raw, "id" + o, o, o);
    detail::arrow_entry(raw, "ab", "a", "b");
    detail::arrow_entry(raw, "ac", "a", "c");
    detail::arrow_entry(raw, "ad", "a", "d");
    detail::arrow_entry(raw, "ae", "a", "e");
    detail::arrow_entry(raw, "bd", "b", "d");
    detail::arrow_entry(raw, "be", "b", "e");
    detail::arrow_entry(raw, "cd", "c", "d");
    detail::arrow_entry(raw, "ce", "c", "e");
    detail::arrow_entry(raw, "de", "d", "e");
    detail::arrow_entry(raw, "ed", "e", "d");
    for (const Id& o : raw.graph.objects) raw.identities[o] = "id" + o;
    detail::close_thin(raw);
    return validate_category(raw);
}

/// Two objects with a free parallel pair between them: no initial object,
/// no coequalizer of (f, g).
inline FiniteCategory par_pair() {
    RawCategoryTables raw;
    raw.graph.objects = {"p0", "p1"};
    detail::arrow_entry(raw, "idp0", "p0", "p0");
    detail::arrow_entry(raw, "idp1", "p1", "p1");
    detail::arrow_entry(raw, "f", "p0", "p1");
    detail::arrow_entry(raw, "g", "p0", "p1");
    raw.identities = {{"p0", "idp0"}, {"p1", "idp1"}};
    raw.composition = {{{"idp0", "idp0"}, "idp0"}, {{"idp1", "idp1"}, "idp1"},
                       {{"idp0", "f"}, "f"},       {{"f", "idp1"}, "f"},
                       {{"idp0", "g"}, "g"},       {{"g", "idp1"}, "g"}};
    return validate_category(raw);
}

/// The two-element monoid {1, e} with absorbing e, as a one-object category.
/// e is neither mono nor epi.
inline FiniteCategory absorbing_monoid() {
    RawCategoryTables raw;
    raw.graph.objects = {"m"};
    detail::arrow_entry(raw, "1", "m", "m");
    detail::arrow_entry(raw, "e", "m", "m");
    raw.identities = {{"m", "1"}};
    raw.composition = {{{"1", "1"}, "1"}, {{"1", "e"}, "e"}, {{"e", "1"}, "e"}, {{"e", "e"}, "e"}};
    return validate_category(raw);
}

/// The group Z/2 as a one-object groupoid.
inline FiniteCategory z2_group() {
    RawCategoryTables raw;
    raw.graph.objects = {"z"};
    detail::arrow_entry(raw, "1", "z", "z");
    detail::arrow_entry(raw, "s", "z", "z");
    raw.identities = {{"z", "1"}};
    raw.composition = {{{"1", "1"}, "1"}, {{"1", "s"}, "s"}, {{"s", "1"}, "s"}, {{"s", "s"}, "1"}};
    return validate_category(raw);
}

/// Two isomorphic objects: a connected groupoid that is not discrete.
inline FiniteCategory iso_pair_groupoid() {
    RawCategoryTables raw;
    raw.graph.objects = {"x", "y"};
    detail::arrow_entry(raw, "idx", "x", "x");
    detail::arrow_entry(raw, "idy", "y", "y");
    detail::arrow_entry(raw, "u", "x", "y");
    detail::arrow_entry(raw, "v", "y", "x");
    raw.identities = {{"x", "idx"}, {"y", "idy"}};
    raw.composition = {{{"idx", "idx"}, "idx"}, {{"idy", "idy"}, "idy"}, {{"idx", "u"}, "u"},
                       {{"u", "idy"}, "u"},     {{"idy", "v"}, "v"},     {{"v", "idx"}, "v"},
                       {{"u", "v"}, "idx"},     {{"v", "u"}, "idy"}};
    return validate_category(raw);
}

/// Every named fixture, in a stable order.
inline std::vector<std::pair<std::string, FiniteCategory>> all_fixtures() {
    return {{"ONE", one()},
            {"ARROW", arrow()},
            {"SPAN3", span3()},
            {"PO", po_square()},
            {"POD", po_double_top()},
            {"PAR", par_pair()},
            {"M2", absorbing_monoid()},
            {"Z2", z2_group()},
            {"G2", iso_pair_groupoid()}};
}

} // namespace iffcat::builtin
