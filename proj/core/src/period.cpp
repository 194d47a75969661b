#include "genus2/period.hpp"

#include "genus2/catalog.hpp"
#include "genus2/moduli.hpp"
#include "genus2/poly_gcd.hpp"

namespace genus2 {

VarTablePtr period_table() {
    static const VarTablePtr t = [] {
        std::vector<std::string> n;
        std::vector<int> w;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                n.push_back("x" + std::to_string(i) + std::to_string(j));
                w.push_back(1);
            }
        for (int k = 2; k <= 5; ++k) {
            n.push_back("t" + std::to_string(k));
            w.push_back(2 * k);
        }
        return make_table(n, w);
    }();
    return t;
}

static RatFunc x(int i, int j) {
    return RatFunc(MPoly::variable(period_table(), "x" + std::to_string(i) + std::to_string(j)));
}

static RatFunc pt(const char* name) { return RatFunc(MPoly::variable(period_table(), name)); }

RFMatrix period_symbols() {
    std::vector<std::vector<RatFunc>> rows(4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) rows[std::size_t(i - 1)].push_back(x(i, j));
    return RFMatrix::from_rows(rows);
}

std::vector<PeriodRelation> period_relations() {
    auto vt = period_table();
    RFMatrix X = period_symbols();
    RFMatrix q = X.transpose() * inverse(phi_matrix(vt)) * X;
    RFMatrix om = omega_matrix(vt);
    std::vector<PeriodRelation> out;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            out.push_back({i, j, q(std::size_t(i - 1), std::size_t(j - 1)).as_polynomial(),
                           om(std::size_t(i - 1), std::size_t(j - 1))});
    return out;
}

RFMatrix period_S0() {
    auto vt = period_table();
    RatFunc z(vt), one(vt, Rational(1));
    return RFMatrix::from_rows({{one, z, z, z},
                                {z, one, z, z},
                                {z, frac(1, 4) * pt("t2"), z, RatFunc(vt, frac(3, 4))},
                                {z, z, RatFunc(vt, frac(1, 4)), z}});
}

RFMatrix period_g() {
    auto vt = period_table();
    RatFunc z(vt);
    RatFunc d = x(3, 1) * x(4, 2) - x(3, 2) * x(4, 1);
    RatFunc q(vt, frac(1, 4)), tq(vt, frac(3, 4));
    return RFMatrix::from_rows({{x(3, 1), x(3, 2), q * pt("t2") * x(3, 2) + tq * x(3, 4), q * x(3, 3)},
                                {x(4, 1), x(4, 2), q * pt("t2") * x(4, 2) + tq * x(4, 4), q * x(4, 3)},
                                {z, z, x(4, 2) / d, -x(4, 1) / d},
                                {z, z, -x(3, 2) / d, x(3, 1) / d}});
}

RFMatrix period_tau() {
    RatFunc d = x(3, 1) * x(4, 2) - x(4, 1) * x(3, 2);
    return RFMatrix::from_rows({{(x(1, 1) * x(4, 2) - x(4, 1) * x(1, 2)) / d, -(x(1, 1) * x(3, 2) - x(3, 1) * x(1, 2)) / d},
                                {(x(2, 1) * x(4, 2) - x(4, 1) * x(2, 2)) / d, -(x(2, 1) * x(3, 2) - x(3, 1) * x(2, 2)) / d}});
}

PeriodFrameReport period_frame_check(const std::optional<RFMatrix>& expected_s,
                                     const std::optional<std::vector<RatFunc>>& expected_a) {
    auto vt = period_table();
    PeriodFrameReport rep;
    RFMatrix g = period_g();
    RFMatrix k = g.block(0, 0, 2, 2);
    rep.block_shape = g.block(2, 0, 2, 2).is_zero() && g.block(2, 2, 2, 2) == inverse(k.transpose());

    // The relations are linear in the symbols of rows 1 and 2. A left kernel
    // vector c of their coefficient matrix eliminates those symbols, so
    // sum c_ab r_ab lies in the ideal and involves rows 3, 4 and t2 only.
    auto rels = period_relations();
    RFMatrix m(rels.size(), 8, vt);
    std::vector<MPoly> r;
    for (std::size_t a = 0; a < rels.size(); ++a) {
        MPoly rel = rels[a].lhs - rels[a].rhs.as_polynomial();
        r.push_back(rel);
        for (std::size_t u = 0; u < 8; ++u) {
            MPoly c = rel.derivative(u);
            m(a, u) = RatFunc(c);
        }
    }
    auto sol = solve_linear(m.transpose(), std::vector<RatFunc>(8, RatFunc(vt)));
    RFMatrix sym = k * g.block(0, 2, 2, 2).transpose();
    MPoly skew = (sym(0, 1) - sym(1, 0)).as_polynomial();
    if (sol.kernel.size() == 1) {
        MPoly den(vt, Rational(1));
        for (const auto& c : sol.kernel[0]) den = *divide_exact(den * c.den(), gcd(den, c.den()));
        MPoly combo(vt);
        for (std::size_t a = 0; a < r.size(); ++a) {
            const auto& c = sol.kernel[0][a];
            combo += c.num() * *divide_exact(den, c.den()) * r[a];
        }
        if (skew.is_zero()) {
            rep.symmetric_mod_relations = true;
        } else if (auto ratio = divide_exact(combo, skew); ratio && ratio->is_constant() && !ratio->is_zero()) {
            rep.symmetric_mod_relations = true;
            rep.certificate_ratio = ratio->constant_value();
        }
    }

    rep.s = inverse(g.transpose()) * period_S0();
    if (expected_s) rep.s_matches = rep.s == *expected_s;
    RatFunc dS = det(rep.s.block(0, 0, 2, 2));
    RatFunc per = x(3, 1) * x(4, 2) - x(3, 2) * x(4, 1);
    rep.delta_identity = dS == per.inverse();
    std::vector<RatFunc> a = {pt("t2"), pt("t4"), pt("t3").pow(2), pt("t3") * pt("t5"), pt("t5").pow(2)};
    if (expected_a) a = *expected_a;
    rep.t_identities = a.size() == 5;
    for (int i = 1; i <= 5 && rep.t_identities; ++i) {
        // T_{4i} = numerator(t) / delta^i from the catalog, evaluated at (t, S)
        CatalogEntry e = generator("T" + std::to_string(4 * i));
        if (e.delta_power != i) rep.t_identities = false;
        RatFunc ti = RatFunc(e.numerator.rebase(vt)) / dS.pow(i);
        if (!(ti == a[std::size_t(i - 1)].rebase(vt) * per.pow(i))) rep.t_identities = false;
    }
    return rep;
}

}  // namespace genus2
