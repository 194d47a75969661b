// One line per acceptance criterion, with its runtime budget.
// Exit status is 0 only when every criterion passes inside its budget.

#include "genus2/checks.hpp"

#include <cstdio>
#include <map>

using namespace genus2;

namespace {

struct Criterion {
    int n;
    const char* what;
    double budget_ms;
};

const Criterion kCriteria[] = {
    {1, "discriminant of the quintic family", 1e3},
    {2, "Gauss-Manin inverses and Omega compatibility", 30e3},
    {3, "cup product, correction polynomials, sextic residues", 5e3},
    {4, "modular vector fields and connection matrices", 120e3},
    {5, "moduli coordinates and period relations", 60e3},
    {6, "Igusa invariants and Resnikoff identities", 300e3},
    {7, "monodromy generators, relations and index", 5e3},
    {8, "property suites", 60e3},
};

}  // namespace

int main() {
    CheckConfig cfg;
    CheckContext ctx(cfg);
    std::map<int, std::vector<VerificationReport>> by;
    for (const auto& c : check_registry()) by[c.criterion].push_back(run_check(c, ctx));

    int failed = 0;
    for (const auto& cr : kCriteria) {
        double ms = 0;
        std::vector<const VerificationReport*> bad;
        for (const auto& r : by[cr.n]) {
            ms += r.elapsed_ms;
            if (r.status != Status::pass) bad.push_back(&r);
        }
        bool in_time = ms < cr.budget_ms;
        bool ok = bad.empty() && in_time && !by[cr.n].empty();
        failed += !ok;
        std::printf("criterion %d: %s  %s  (%zu checks, %.0f ms of %.0f ms)\n", cr.n, ok ? "PASS" : "FAIL", cr.what,
                    by[cr.n].size(), ms, cr.budget_ms);
        if (!in_time) std::printf("    over budget\n");
        for (const auto* r : bad)
            std::printf("    %s %s: %s\n", to_string(r->status).c_str(), r->id.c_str(), r->detail.c_str());
    }
    std::printf("%d of 8 criteria pass\n", 8 - failed);
    return failed ? 1 : 0;
}
