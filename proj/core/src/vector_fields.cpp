#include "genus2/vector_fields.hpp"

namespace genus2 {

namespace {

RatFunc fv(const char* n) { return RatFunc(frame_var(n)); }

RatFunc lift(const RatFunc& f) { return f.rebase(frame_table()); }

RFMatrix lift(const RFMatrix& m) { return m.rebase(frame_table()); }

bool divides(const MPoly& a, const MPoly& b) { return b.is_zero() || divide_exact(b, a).has_value(); }

}  // namespace

RFMatrix c_matrix(int k, const VarTablePtr& vars) {
    switch (k) {
        case 1: return RFMatrix::from_rationals({{1, 0}, {0, 0}}, vars);
        case 2: return RFMatrix::from_rationals({{0, 0}, {0, 1}}, vars);
        case 3: return RFMatrix::from_rationals({{0, 1}, {1, 0}}, vars);
    }
    throw AlgebraError("k must be 1, 2 or 3");
}

AuxScalars rhs_scalars(int k) {
    RatFunc d2 = RatFunc(delta_poly()).pow(2).inverse();
    auto s11 = fv("s11"), s12 = fv("s12"), s21 = fv("s21"), s22 = fv("s22");
    switch (k) {
        case 1:
            return {frac(1, 4) * s21 * s21 * d2, frac(-1, 4) * s21 * s22 * d2, frac(3, 4) * s22 * s22 * d2};
        case 2:
            return {frac(1, 4) * s11 * s11 * d2, frac(-1, 4) * s11 * s12 * d2, frac(3, 4) * s12 * s12 * d2};
        case 3:
            return {frac(-1, 2) * s11 * s21 * d2, frac(1, 4) * (s12 * s21 + s11 * s22) * d2,
                    frac(-3, 2) * s12 * s22 * d2};
    }
    throw AlgebraError("k must be 1, 2 or 3");
}

RFMatrix j_matrix(int k) {
    FramePoint p = symbolic_frame();
    return inverse(p.s1()) * c_matrix(k, frame_table()) * p.s4();
}

RFMatrix h_matrix(int k) {
    FramePoint p = symbolic_frame();
    return inverse(p.s1()) * c_matrix(k, frame_table()) * p.s3();
}

TComponents solve_t_components(const ConnectionMatrix& gm) {
    auto vt = gm[2].vars();
    const std::array<std::pair<int, int>, 4> entries = {{{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
    TComponents tc{RFMatrix(4, 4, vt), RFMatrix(4, 3, vt), {}};
    for (std::size_t r = 0; r < 4; ++r)
        for (int m = 2; m <= 5; ++m) tc.system(r, std::size_t(m - 2)) = gm[m](entries[r].first, entries[r].second);
    // J_k = [[s4, s6], [s2, 3 s4]] read off in the same entry order.
    RFMatrix rhs = RFMatrix::from_rationals({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 3, 0}}, vt);
    LinearSolution sol = solve_linear(tc.system, rhs);
    if (sol.kernel.size() != 1) throw AlgebraError("t-component system: kernel is not one-dimensional");
    for (int m = 2; m <= 5; ++m) tc.euler.push_back(Rational(m) * RatFunc(MPoly::variable(vt, std::size_t(m - 2))));
    // normalise so the t5 component vanishes
    for (std::size_t j = 0; j < 3; ++j) {
        RatFunc lam = sol.particular(3, j) / tc.euler[3];
        for (std::size_t m = 0; m < 4; ++m) tc.coeff(m, j) = sol.particular(m, j) - lam * tc.euler[m];
    }
    return tc;
}

ReducedConnection reduced_connection(const ConnectionMatrix& gm, const TComponents& tc) {
    ReducedConnection rc;
    for (std::size_t j = 0; j < 3; ++j) {
        RFMatrix e(4, 4, gm[2].vars());
        for (int m = 2; m <= 5; ++m) e = e + tc.coeff(std::size_t(m - 2), j) * gm[m];
        rc.e[j] = e;
    }
    return rc;
}

LocalizedRingPtr frame_ring() {
    static const LocalizedRingPtr ring =
        std::make_shared<LocalizedRing>(frame_table(), std::vector<MPoly>{frame_var("t5"), delta_poly()});
    return ring;
}

VectorField::VectorField(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) {
    if (c_.size() != frame_table()->size()) throw AlgebraError("vector field needs one coefficient per frame variable");
    for (auto& c : c_) {
        c = lift(c);
        loc_.push_back(LocalizedPoly::from_ratfunc(frame_ring(), c));
    }
}

RatFunc VectorField::apply(const RatFunc& f) const {
    RatFunc g = lift(f);
    RatFunc r(frame_table());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        RatFunc d = g.derivative(i);
        if (!d.is_zero()) r += c_[i] * d;
    }
    return r;
}

LocalizedPoly VectorField::apply(const LocalizedPoly& f) const {
    LocalizedPoly r(f.ring());
    for (std::size_t i = 0; i < loc_.size(); ++i) {
        if (loc_[i].is_zero()) continue;
        LocalizedPoly d = f.derivative(i);
        if (!d.is_zero()) r += loc_[i] * d;
    }
    return r;
}

RFMatrix VectorField::apply(const RFMatrix& m) const {
    return lift(m).map([&](const RatFunc& f) { return apply(f); });
}

const ModularFields& ModularFields::instance() {
    static const ModularFields mf(HyperellipticFamily::quintic());
    return mf;
}

ModularFields::ModularFields(const HyperellipticFamily& fam)
    : gm_(gauss_manin(fam)), tc_(solve_t_components(gm_)), rc_(reduced_connection(gm_, tc_)) {
    if (fam.degree() != 5) throw AlgebraError("modular vector fields are built for the quintic family");
    FramePoint p = symbolic_frame();
    for (int k = 1; k <= 3; ++k) {
        AuxScalars s = rhs_scalars(k);
        RFMatrix ek(4, 4, frame_table());
        for (std::size_t j = 0; j < 3; ++j) ek = ek + s[j] * lift(rc_.e[j]);
        ek_[std::size_t(k - 1)] = ek;
        RFMatrix e1 = ek.block(0, 0, 2, 2), e3 = ek.block(2, 0, 2, 2);
        RFMatrix ds1 = c_matrix(k, frame_table()) * p.s3() - p.s1() * e1;
        RFMatrix ds3 = -(p.s3() * e1) - p.s4() * e3;
        std::vector<RatFunc> c;
        for (int m = 2; m <= 5; ++m) c.push_back(t_component(k, m));
        for (const RFMatrix* b : {&ds1, &ds3})
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) c.push_back((*b)(i, j));
        r_[std::size_t(k - 1)] = VectorField(std::move(c));
    }
}

RatFunc ModularFields::t_component(int k, int m) const {
    AuxScalars s = rhs_scalars(k);
    RatFunc r(frame_table());
    for (std::size_t j = 0; j < 3; ++j) r += lift(tc_.coeff(std::size_t(m - 2), j)) * s[j];
    return r;
}

RFMatrix defining_defect(const ModularFields& mf, int k) {
    FramePoint p = symbolic_frame();
    auto vt = frame_table();
    RFMatrix chk(4, 4, vt);
    chk.set_block(0, 2, c_matrix(k, vt));
    return mf.field(k).apply(p.s) + p.s * mf.e(k) - chk * p.s;
}

Tangency tangency_checks(const ModularFields& mf, int k) {
    const VectorField& r = mf.field(k);
    Tangency t;
    MPoly f = frame_relation_F();
    RatFunc df = r.apply(RatFunc(f));
    t.dF_over_F = df / RatFunc(f);
    MPoly clear = frame_var("t5").scaled(25) * delta_poly().pow(2);
    RatFunc cleared = df * RatFunc(clear);
    t.f_divides = cleared.is_polynomial() && divides(f, cleared.as_polynomial());

    MPoly disc = discriminant(HyperellipticFamily::quintic()).rebase(frame_table());
    RatFunc dd = r.apply(RatFunc(disc));
    t.dDelta_over_Delta = dd / RatFunc(disc);
    RatFunc cleared2 = dd * RatFunc(frame_var("t5").scaled(15));
    // R_k(Delta) carries s-denominators delta^2 from the s_{k,j}
    cleared2 *= RatFunc(delta_poly().pow(2));
    t.delta_divides = cleared2.is_polynomial() && divides(disc, cleared2.as_polynomial());
    return t;
}

JHResult jh_identities(const ModularFields& mf, int k, int kc) {
    const VectorField& r = mf.field(kc);
    RFMatrix jk = j_matrix(k), hk = h_matrix(k), hc = h_matrix(kc);
    const RFMatrix& e = mf.e(kc);
    RFMatrix e1 = e.block(0, 0, 2, 2), e2 = e.block(0, 2, 2, 2), e3 = e.block(2, 0, 2, 2), e4 = e.block(2, 2, 2, 2);
    RFMatrix rj = r.apply(jk), rh = r.apply(hk);
    auto vanishes = [](const RFMatrix& m) { return m.map([](const RatFunc& f) { return reduce_mod_F(f); }).is_zero(); };
    JHResult res;
    // R(S1^-1) = -S1^-1 R(S1) S1^-1 flips the first two terms
    res.j_ok = vanishes(rj - (e1 * jk - hc * jk - hk * e2 - jk * e4));
    res.h_ok = vanishes(rh - (e1 * hk - hc * hk - hk * e1 - jk * e3));
    res.swapped_j_ok = vanishes(rj - (hc * jk - e1 * jk - hk * e2 - jk * e4));
    res.swapped_h_ok = vanishes(rh - (hc * hk - e1 * hk - hk * e1 - jk * e3));
    return res;
}

bool pushforward_denominator_check(const ModularFields& mf, const RatFunc& x, int k) {
    RatFunc y = reduce_mod_F(mf.field(k).apply(x));
    MPoly den = y.den();
    MPoly dl = delta_poly();
    while (!den.is_constant()) {
        auto q = divide_exact(den, dl);
        if (!q) break;
        den = *q;
    }
    if (den.is_constant()) return true;
    if (!den.is_monomial()) return false;
    std::size_t t5 = frame_table()->require("t5");
    const Monomial& m = den.leading().mono;
    return m.degree == m.exp[t5];
}

}  // namespace genus2
