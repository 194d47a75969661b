#include "genus2/moduli.hpp"

#include "genus2/cup.hpp"

namespace genus2 {

MPoly frame_var(const std::string& name) { return MPoly::variable(frame_table(), name); }

MPoly delta_poly() { return frame_var("s11") * frame_var("s22") - frame_var("s12") * frame_var("s21"); }

static MPoly q_form() {
    return frame_var("s42") * frame_var("s21") - frame_var("s41") * frame_var("s22") +
           frame_var("s32") * frame_var("s11") - frame_var("s31") * frame_var("s12");
}

MPoly frame_relation_F() { return q_form() - frame_var("t2").scaled(frac(1, 4)); }

MPoly f_substitute_t2() { return q_form().scaled(4); }

MPoly reduce_mod_F(const MPoly& p) {
    MPoly q = p.rebase(frame_table());
    return q.substitute(0, f_substitute_t2());
}

RatFunc reduce_mod_F(const RatFunc& f) {
    return RatFunc(reduce_mod_F(f.num()), reduce_mod_F(f.den()));
}

LocalizedPoly reduce_mod_F(const LocalizedPoly& f) {
    return f.substitute(f.ring()->vars()->require("t2"), f_substitute_t2());
}

RFMatrix phi_matrix(const VarTablePtr& vars) {
    return RFMatrix::from_rationals({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}, vars);
}

RFMatrix omega2_matrix(const VarTablePtr& vars) {
    return RFMatrix::from_rationals({{0, frac(4, 3)}, {4, 0}}, vars);
}

RFMatrix omega_matrix(const VarTablePtr& vars) {
    static const RFMatrix om = cup_matrix(HyperellipticFamily::quintic());
    RFMatrix r(4, 4, vars);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            r(i, j) = RatFunc(om(i, j).num().rebase(vars), om(i, j).den().rebase(vars));
    return r;
}

RatFunc FramePoint::delta() const { return det(s1()); }

RFMatrix s4_from_s1(const RFMatrix& s1) {
    return inverse(s1.transpose()) * inverse(omega2_matrix(s1.vars()).transpose());
}

FramePoint make_frame(const std::array<RatFunc, 4>& t, const RFMatrix& s1, const RFMatrix& s3) {
    auto vt = s1.vars();
    FramePoint p{t, RFMatrix(4, 4, vt)};
    p.s.set_block(0, 0, s1);
    p.s.set_block(2, 0, s3);
    p.s.set_block(2, 2, s4_from_s1(s1));
    return p;
}

FramePoint symbolic_frame() {
    auto vt = frame_table();
    auto v = [&](const char* n) { return RatFunc(MPoly::variable(vt, n)); };
    RFMatrix s1 = RFMatrix::from_rows({{v("s11"), v("s12")}, {v("s21"), v("s22")}});
    RFMatrix s3 = RFMatrix::from_rows({{v("s31"), v("s32")}, {v("s41"), v("s42")}});
    return make_frame({v("t2"), v("t3"), v("t4"), v("t5")}, s1, s3);
}

FrameCheck check_frame(const FramePoint& p, bool modulo_F) {
    auto vt = p.s.vars();
    RFMatrix om = omega_matrix(vt);
    if (auto i = vt->index_of("t2")) om = om.map([&](const RatFunc& f) { return f.substitute(*i, p.t[0]); });
    RFMatrix m = p.s * om * p.s.transpose() - phi_matrix(vt);
    if (modulo_F) m = m.map([](const RatFunc& f) { return reduce_mod_F(f); });
    struct Block {
        std::size_t r, c;
        const char* what;
    };
    const Block blocks[] = {{0, 0, "upper-left block S1 Omega1 S1^tr"},
                            {0, 2, "upper-right block S1 Omega2 S4^tr = I"},
                            {2, 0, "lower-left block (transpose of S1 Omega2 S4^tr = I)"},
                            {2, 2, "lower-right block (the relation F = 0)"}};
    for (const auto& b : blocks)
        if (!m.block(b.r, b.c, 2, 2).is_zero()) return {false, std::string("violated: ") + b.what};
    return {true, ""};
}

std::array<RatFunc, 4> gm_action(const std::array<RatFunc, 4>& t, const RatFunc& a) {
    if (a.is_zero()) throw std::invalid_argument("G_m action needs a != 0");
    std::array<RatFunc, 4> r;
    for (int m = 2; m <= 5; ++m) r[std::size_t(m - 2)] = t[std::size_t(m - 2)] * a.pow(-2 * m);
    return r;
}

FramePoint gm_action(const FramePoint& p, const RatFunc& a) {
    auto vt = p.s.vars();
    RFMatrix d(4, 4, vt);
    const int e[4] = {-3, -1, 1, 3};
    for (std::size_t i = 0; i < 4; ++i) d(i, i) = a.pow(e[i]);
    return {gm_action(p.t, a), p.s * d};
}

std::string group_membership_defect(const RFMatrix& g) {
    if (g.rows() != 4 || g.cols() != 4) return "not a 4x4 matrix";
    if (!g.block(2, 0, 2, 2).is_zero()) return "lower-left block is not zero";
    RFMatrix k = g.block(0, 0, 2, 2);
    if (det(k).is_zero()) return "k is singular";
    if (!(g.block(2, 2, 2, 2) == inverse(k.transpose()))) return "lower-right block is not k^-tr";
    RFMatrix sym = k * g.block(0, 2, 2, 2).transpose();
    if (!(sym == sym.transpose())) return "k k'^tr is not symmetric";
    return "";
}

GroupElement GroupElement::from_matrix(const RFMatrix& g) {
    auto why = group_membership_defect(g);
    if (!why.empty()) throw NotInGroup(why);
    return GroupElement(g);
}

GroupElement GroupElement::from_blocks(const RFMatrix& k, const RFMatrix& kprime) {
    RFMatrix g(4, 4, common_table(k.vars(), kprime.vars()));
    g.set_block(0, 0, k);
    g.set_block(0, 2, kprime);
    g.set_block(2, 2, inverse(k.transpose()));
    return from_matrix(g);
}

FramePoint g_action(const FramePoint& p, const GroupElement& g) {
    return {p.t, g.matrix().transpose() * p.s};
}

}  // namespace genus2
