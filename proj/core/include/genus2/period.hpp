#pragma once

#include "genus2/rfmatrix.hpp"

#include <optional>
#include <vector>

namespace genus2 {

// Symbols x11..x44 (x_ij = integral of omega_j over e_i) followed by t2..t5.
VarTablePtr period_table();
RFMatrix period_symbols();

struct PeriodRelation {
    int i = 0, j = 0;  // 1-based entry
    MPoly lhs;
    RatFunc rhs;
};

// Entries (1,2),(1,3),(1,4),(2,3),(2,4),(3,4) of X^tr Phi^-1 X = Omega.
std::vector<PeriodRelation> period_relations();

RFMatrix period_S0();      // the base frame (t, S0)
RFMatrix period_g();       // the element of G attached to the period matrix
RFMatrix period_tau();     // the normalized period matrix tau

struct PeriodFrameReport {
    bool block_shape = false;          // lower-left zero, lower-right k^-tr
    bool symmetric_mod_relations = false;
    Rational certificate_ratio;        // sum c_ab r_ab = ratio * (skew part of k k'^tr)
    RFMatrix s;                        // g^-tr S0
    bool s_matches = false;            // only when a reference is supplied
    bool delta_identity = false;       // delta(S) = 1/(x31 x42 - x32 x41)
    bool t_identities = false;         // T_4i(t, S) = a_i (x31 x42 - x41 x32)^i
    bool ok() const { return block_shape && symmetric_mod_relations && delta_identity && t_identities; }
};

// expected_a: (a_1..a_5) of T_{4i}(t, S) = a_i (x31 x42 - x41 x32)^i, the
// printed (t2, t4, t3^2, t3 t5, t5^2) by default.
PeriodFrameReport period_frame_check(const std::optional<RFMatrix>& expected_s = std::nullopt,
                                     const std::optional<std::vector<RatFunc>>& expected_a = std::nullopt);

}  // namespace genus2
