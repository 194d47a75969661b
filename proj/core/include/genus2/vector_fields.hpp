#pragma once

#include "genus2/family.hpp"
#include "genus2/localized.hpp"
#include "genus2/moduli.hpp"

#include <array>
#include <memory>

namespace genus2 {

// Index j = 0, 1, 2 stands for weights -2, -4, -6.
inline constexpr std::array<int, 3> kAuxWeights = {-2, -4, -6};

struct AuxScalars {
    RatFunc s2, s4, s6;  // s_{k,-2}, s_{k,-4}, s_{k,-6}
    const RatFunc& operator[](std::size_t j) const { return j == 0 ? s2 : j == 1 ? s4 : s6; }
};

RFMatrix c_matrix(int k, const VarTablePtr& vars);
// Printed closed forms over frame_table().
AuxScalars rhs_scalars(int k);
// J_k = S1^-1 C_k S4 and H_k = S1^-1 C_k S3 on the symbolic frame.
RFMatrix j_matrix(int k);
RFMatrix h_matrix(int k);

// R_{k,m} = sum_j coeff(m-2, j) s_{k,j}; system M is the 4x4 matrix the
// t-components have to solve, its kernel the Euler vector.
struct TComponents {
    RFMatrix system;  // rows (1,3) (1,4) (2,3) (2,4) of B_m, columns m = 2..5
    RFMatrix coeff;   // 4 x 3 over t_table()
    std::vector<RatFunc> euler;
};

TComponents solve_t_components(const ConnectionMatrix& gm);

struct ReducedConnection {
    std::array<RFMatrix, 3> e;  // E_{-2}, E_{-4}, E_{-6}
};

ReducedConnection reduced_connection(const ConnectionMatrix& gm, const TComponents& tc);

// Ring over frame_table() localized at t5 and det S1.
LocalizedRingPtr frame_ring();

class VectorField {
public:
    VectorField() = default;
    explicit VectorField(std::vector<RatFunc> coeffs);

    // Coefficient of d/dv for v in frame_table() order.
    const std::vector<RatFunc>& coeffs() const { return c_; }
    const RatFunc& operator[](std::size_t i) const { return c_.at(i); }
    RatFunc apply(const RatFunc& f) const;
    LocalizedPoly apply(const LocalizedPoly& f) const;
    RFMatrix apply(const RFMatrix& m) const;

private:
    std::vector<RatFunc> c_;
    std::vector<LocalizedPoly> loc_;
};

// Everything derived from the quintic connection, built once.
class ModularFields {
public:
    static const ModularFields& instance();
    explicit ModularFields(const HyperellipticFamily& fam);

    const ConnectionMatrix& gm() const { return gm_; }
    const TComponents& tcomp() const { return tc_; }
    const ReducedConnection& reduced() const { return rc_; }
    // E(k) over frame_table().
    const RFMatrix& e(int k) const { return ek_.at(std::size_t(k - 1)); }
    const VectorField& field(int k) const { return r_.at(std::size_t(k - 1)); }
    // R_{k,m} as function of (t, s).
    RatFunc t_component(int k, int m) const;

private:
    ConnectionMatrix gm_;
    TComponents tc_;
    ReducedConnection rc_;
    std::array<RFMatrix, 3> ek_;
    std::array<VectorField, 3> r_;
};

// dS(R_k) + S A(R_k) - C^_k S, which must vanish.
RFMatrix defining_defect(const ModularFields& mf, int k);

struct Tangency {
    RatFunc dF_over_F;      // R_k(F) / F
    RatFunc dDelta_over_Delta;
    bool f_divides = false;      // F | 25 t5 delta^2 R_k(F) as polynomials
    bool delta_divides = false;  // Delta | 15 t5 R_k(Delta)
};

Tangency tangency_checks(const ModularFields& mf, int k);

// R_{kc}(J_k) and R_{kc}(H_k) modulo F. The *_ok flags use
//   R(J_k) = E1 J_k - H_kc J_k - H_k E2 - J_k E4,
//   R(H_k) = E1 H_k - H_kc H_k - H_k E1 - J_k E3   (E = E(kc)),
// the swapped_* flags the variant with the first two terms swapped in sign.
struct JHResult {
    bool j_ok = false;
    bool h_ok = false;
    bool swapped_j_ok = false;
    bool swapped_h_ok = false;
};
JHResult jh_identities(const ModularFields& mf, int k, int kc);

// Denominator of R_k(X) is a product of powers of t5 and delta, possibly after
// reduction modulo F.
bool pushforward_denominator_check(const ModularFields& mf, const RatFunc& x, int k);

}  // namespace genus2
