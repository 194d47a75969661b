#pragma once

#include "genus2/localized.hpp"
#include "genus2/rfmatrix.hpp"

#include <array>
#include <string>

namespace genus2 {

// Frame coordinates over frame_table(): S = [[S1, 0], [S3, S4]] with
// S1 = [[s11, s12], [s21, s22]], S3 = [[s31, s32], [s41, s42]].
MPoly frame_var(const std::string& name);
MPoly delta_poly();        // det S1 = s11 s22 - s12 s21
MPoly frame_relation_F();  // s42 s21 - s41 s22 + s32 s11 - s31 s12 - t2/4
// t2 := 4(s42 s21 - s41 s22 + s32 s11 - s31 s12)
MPoly f_substitute_t2();
MPoly reduce_mod_F(const MPoly& p);
RatFunc reduce_mod_F(const RatFunc& f);
LocalizedPoly reduce_mod_F(const LocalizedPoly& f);

RFMatrix phi_matrix(const VarTablePtr& vars);
RFMatrix omega2_matrix(const VarTablePtr& vars);  // [[0, 4/3], [4, 0]]
// Cup matrix of the quintic expressed over `vars` (must contain t2).
RFMatrix omega_matrix(const VarTablePtr& vars);

struct FramePoint {
    std::array<RatFunc, 4> t;  // t2..t5
    RFMatrix s;                // 4x4

    RFMatrix s1() const { return s.block(0, 0, 2, 2); }
    RFMatrix s3() const { return s.block(2, 0, 2, 2); }
    RFMatrix s4() const { return s.block(2, 2, 2, 2); }
    RatFunc delta() const;
};

// S4 = S1^-tr Omega2^-tr.
RFMatrix s4_from_s1(const RFMatrix& s1);
FramePoint symbolic_frame();
FramePoint make_frame(const std::array<RatFunc, 4>& t, const RFMatrix& s1, const RFMatrix& s3);

struct FrameCheck {
    bool ok = false;
    std::string diagnostic;
};

// Phi = S Omega S^tr, blockwise. With modulo_F the lower-right block is
// compared after the t2 substitution.
FrameCheck check_frame(const FramePoint& p, bool modulo_F = false);

std::array<RatFunc, 4> gm_action(const std::array<RatFunc, 4>& t, const RatFunc& a);
FramePoint gm_action(const FramePoint& p, const RatFunc& a);

// [[k, k'], [0, k^-tr]] with k k'^tr symmetric.
class GroupElement {
public:
    static GroupElement from_blocks(const RFMatrix& k, const RFMatrix& kprime);
    static GroupElement from_matrix(const RFMatrix& g);
    const RFMatrix& matrix() const { return g_; }
    RFMatrix k() const { return g_.block(0, 0, 2, 2); }
    RFMatrix kprime() const { return g_.block(0, 2, 2, 2); }

private:
    explicit GroupElement(RFMatrix g) : g_(std::move(g)) {}
    RFMatrix g_;
};

struct NotInGroup : AlgebraError {
    using AlgebraError::AlgebraError;
};

// Reason the matrix fails the membership test, empty when it lies in G.
std::string group_membership_defect(const RFMatrix& g);

// S -> g^tr S.
FramePoint g_action(const FramePoint& p, const GroupElement& g);

}  // namespace genus2
