#pragma once

#include "genus2/family.hpp"
#include "genus2/laurent.hpp"

namespace genus2 {

// t = x^a / y with a = (d-1)/2 (d odd) or (d-2)/2 (d even).
struct LocalParameter {
    int x_exponent = 0;
    int y_exponent = 1;
    std::string to_string() const;
};

LocalParameter local_parameter(const HyperellipticFamily& fam);

// x(t) = t^-p u(t), y = x^a / t with u(0) = branch (always 1 for odd d).
struct InfinityExpansion {
    LocalParameter param;
    int branch = 1;
    LaurentSeries x, y;
};

// u is determined modulo t^order by undetermined coefficients.
InfinityExpansion expand_at_infinity(const HyperellipticFamily& fam, int order, int branch = 1);

// Pull-back of P(x) dx / y^k as h(t) dt.
LaurentSeries pullback(const UPoly& p, int y_power, const InfinityExpansion& e);
RatFunc residue_at_infinity(const UPoly& p, int y_power, const InfinityExpansion& e);

struct DifferentialForm {
    UPoly numerator;
    int y_power = 1;
    std::string to_string() const;
};

// Sextic: forms of the second kind with zero residue at both points at
// infinity spanning H^1_dR; holomorphic forms first.
std::vector<DifferentialForm> corrected_basis_even(const HyperellipticFamily& fam, int order = -1);

// Odd d: Laurent polynomials P_i in negative powers of t with
// omega_i + dP_i holomorphic at infinity.
std::vector<LaurentSeries> correction_polys(const HyperellipticFamily& fam, int order = -1);

// <omega_i, omega_j> = Res(P_j omega_i - P_i omega_j + P_i dP_j).
RFMatrix cup_matrix(const HyperellipticFamily& fam, int order = -1);

}  // namespace genus2
