#pragma once

#include "genus2/igusa.hpp"
#include "genus2/vector_fields.hpp"

#include <map>
#include <string>
#include <vector>

namespace genus2 {

// f with value.num / delta^(2w), numerator in t only.
struct HattedForm {
    std::string name;
    Rational weight;
    LocalizedPoly value;  // over frame_ring()
};

// E2^, E4^, E6^, chi10^, chi12^ built from an invariant set.
std::vector<HattedForm> hatted_forms(const InvariantSet& inv);
const HattedForm& hatted(const std::vector<HattedForm>& forms, const std::string& name);

// d = R1 o R2 - 1/4 R3 o R3 (R1 applied last). Second order, not reduced.
LocalizedPoly resnikoff_partial(const ModularFields& mf, const LocalizedPoly& f);
RatFunc resnikoff_partial(const ModularFields& mf, const RatFunc& f);

// ((8w-2) f df - (2w-1) d(f^2)) / (8 w^2), reduced modulo F.
LocalizedPoly resnikoff_D(const ModularFields& mf, const HattedForm& f);

struct ResnikoffIdentity {
    std::string name;  // e.g. "DRes E4"
    std::vector<Rational> constants;  // coefficients of the right-hand side terms
    bool precheck = false;  // numeric residual at a point of F = 0
    bool holds = false;
    LocalizedPoly residual;  // lhs - rhs modulo F
    // Constants solved from sample points, empty when not determined,
    // and whether they verify symbolically.
    std::vector<Rational> fitted;
    bool fitted_holds = false;
};

// Right-hand side monomials in the hatted forms, e.g. {"E6*chi10^2", "E4*chi10*chi12"}.
struct ResnikoffCase {
    std::string form;
    std::vector<std::string> terms;
    std::vector<Rational> printed;  // the published constants
};
const std::vector<ResnikoffCase>& resnikoff_cases();

// One identity per case, in the order above. `constants` overrides the
// printed ones per form name.
std::vector<ResnikoffIdentity> verify_resnikoff_suite(const ModularFields& mf, unsigned seed = 1,
                                                      const std::map<std::string, std::vector<Rational>>& constants = {});

// Is R1 o R2 = R2 o R1 on f modulo F.
bool r1_r2_commute_on(const ModularFields& mf, const LocalizedPoly& f);

}  // namespace genus2
