#pragma once

#include "genus2/ratfunc.hpp"

#include <string>
#include <vector>

namespace genus2 {

// value = numerator monomial / delta^delta_power over frame_table();
// weighted degree of the numerator is 4 * delta_power.
struct CatalogEntry {
    std::string name;
    std::string family;  // T, Q2, Q4, P, U3, U5, V3, V5
    std::vector<int> exponents;  // numerator exponents in frame_table() order
    int delta_power = 0;
    RatFunc value;
    MPoly numerator;
};

struct GeneratorCatalog {
    std::vector<CatalogEntry> entries;
    std::vector<std::string> removed;
    const CatalogEntry& at(const std::string& name) const;
    std::size_t size() const { return entries.size(); }
};

// All 155 functions before removing the two redundant ones.
std::vector<CatalogEntry> enumerate_all_generators();
// The 153 coordinates: T4 and Q12 removed.
GeneratorCatalog enumerate_generators();
// Entry lookup in the full list, including removed names.
CatalogEntry generator(const std::string& name);

}  // namespace genus2
