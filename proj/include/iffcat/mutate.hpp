#pragma once

#include <random>

#include "iffcat/category.hpp"

namespace iffcat {

/// One perturbed composition or identity entry, for law-checker fuzzing.
struct Mutation {
    RawCategoryTables tables;
    std::string description;
};

/// Replace a single table entry by a different morphism of the same category.
/// The result stays a well-formed table (total on composable pairs) but will
/// usually break a law.
inline Mutation mutate_one_entry(const FiniteCategory& c, std::mt19937& rng) {
    RawCategoryTables raw = c.tables();
    std::vector<Id> mors(c.morphisms().begin(), c.morphisms().end());
    if (mors.size() < 2) throw Error("category too small to mutate");

    const size_t comp_entries = raw.composition.size();
    const size_t id_entries = raw.identities.size();
    std::uniform_int_distribution<size_t> pick(0, comp_entries + id_entries - 1);
    std::uniform_int_distribution<size_t> pick_mor(0, mors.size() - 1);

    size_t k = pick(rng);
    Mutation out;
    if (k < comp_entries) {
        auto it = raw.composition.begin();
        std::advance(it, k);
        Id replacement = it->second;
        while (replacement == it->second) replacement = mors[pick_mor(rng)];
        out.description = "composition (" + it->first.first + ", " + it->first.second + "): " +
                          it->second + " -> " + replacement;
        it->second = replacement;
    } else {
        auto it = raw.identities.begin();
        std::advance(it, k - comp_entries);
        Id replacement = it->second;
        while (replacement == it->second) replacement = mors[pick_mor(rng)];
        out.description =
            "identity " + it->first + ": " + it->second + " -> " + replacement;
        it->second = replacement;
    }
    out.tables = std::move(raw);
    return out;
}

/// A mutation that provably breaks at least one law (checked against the
/// exhaustive law validator). Draws until it finds one; law-preserving draws
/// are possible but rare.
inline Mutation law_breaking_mutation(const FiniteCategory& c, std::mt19937& rng) {
    for (int attempts = 0; attempts < 1000; ++attempts) {
        Mutation m = mutate_one_entry(c, rng);
        if (!category_violations(m.tables).empty()) return m;
    }
    throw Error("no law-breaking mutation found");
}

} // namespace iffcat
