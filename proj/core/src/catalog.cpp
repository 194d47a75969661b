#include "genus2/catalog.hpp"

#include "genus2/moduli.hpp"

#include <algorithm>

namespace genus2 {

namespace {

CatalogEntry make(std::string name, std::string family, const MPoly& num, int dpow) {
    CatalogEntry e;
    e.name = std::move(name);
    e.family = std::move(family);
    e.numerator = num;
    e.delta_power = dpow;
    const auto& m = num.leading().mono;
    for (std::size_t i = 0; i < frame_table()->size(); ++i) e.exponents.push_back(m.exp[i]);
    e.value = RatFunc(num, delta_poly().pow(unsigned(dpow)));
    auto w = num.homogeneous_weight();
    if (!w || *w != 4 * dpow) throw std::logic_error("catalog entry " + e.name + " violates the degree equation");
    return e;
}

// Weak compositions of 4 into 4 parts, lexicographic with i1 descending.
std::vector<std::array<int, 4>> compositions4() {
    std::vector<std::array<int, 4>> out;
    for (int a = 4; a >= 0; --a)
        for (int b = 4 - a; b >= 0; --b)
            for (int c = 4 - a - b; c >= 0; --c) out.push_back({a, b, c, 4 - a - b - c});
    return out;
}

MPoly s(int i, int j) { return frame_var("s" + std::to_string(i) + std::to_string(j)); }

}  // namespace

std::vector<CatalogEntry> enumerate_all_generators() {
    std::vector<CatalogEntry> out;
    auto t = [](int k) { return frame_var("t" + std::to_string(k)); };
    out.push_back(make("T4", "T", t(2), 1));
    out.push_back(make("T8", "T", t(4), 2));
    out.push_back(make("T12", "T", t(3) * t(3), 3));
    out.push_back(make("T16", "T", t(3) * t(5), 4));
    out.push_back(make("T20", "T", t(5) * t(5), 5));
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            out.push_back(make("Q" + std::to_string(a) + std::to_string(b), "Q2", s(a, 1) * s(b, 2), 1));
    auto comps = compositions4();
    auto idx = [](const std::array<int, 4>& c) {
        std::string r;
        for (int x : c) r += std::to_string(x);
        return r;
    };
    for (const auto& c : comps) {
        MPoly m = s(1, 2).pow(unsigned(c[0])) * s(2, 2).pow(unsigned(c[1])) * s(3, 2).pow(unsigned(c[2])) *
                  s(4, 2).pow(unsigned(c[3]));
        out.push_back(make("Q" + idx(c), "Q4", m, 1));
    }
    for (const auto& c : comps) {
        MPoly m = s(1, 1).pow(unsigned(c[0])) * s(2, 1).pow(unsigned(c[1])) * s(3, 1).pow(unsigned(c[2])) *
                  s(4, 1).pow(unsigned(c[3]));
        out.push_back(make("P" + idx(c), "P", m, 3));
    }
    for (int k : {3, 5})
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                out.push_back(make("U" + std::to_string(k) + "_" + std::to_string(a) + std::to_string(b),
                                   "U" + std::to_string(k), t(k) * s(a, 2) * s(b, 2), k == 3 ? 2 : 3));
    for (int k : {3, 5})
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                out.push_back(make("V" + std::to_string(k) + "_" + std::to_string(a) + std::to_string(b),
                                   "V" + std::to_string(k), t(k) * s(a, 1) * s(b, 1), k == 3 ? 3 : 4));
    return out;
}

GeneratorCatalog enumerate_generators() {
    GeneratorCatalog c;
    c.removed = {"T4", "Q12"};
    for (auto& e : enumerate_all_generators())
        if (std::find(c.removed.begin(), c.removed.end(), e.name) == c.removed.end()) c.entries.push_back(std::move(e));
    return c;
}

const CatalogEntry& GeneratorCatalog::at(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return e;
    throw std::out_of_range("no catalog entry " + name);
}

CatalogEntry generator(const std::string& name) {
    for (auto& e : enumerate_all_generators())
        if (e.name == name) return e;
    throw std::out_of_range("no generator " + name);
}

}  // namespace genus2
