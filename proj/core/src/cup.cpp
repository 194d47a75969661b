#include "genus2/cup.hpp"

namespace genus2 {

std::string LocalParameter::to_string() const {
    std::string s = x_exponent == 1 ? "x" : "x^" + std::to_string(x_exponent);
    return s + "/y" + (y_exponent == 1 ? "" : "^" + std::to_string(y_exponent));
}

LocalParameter local_parameter(const HyperellipticFamily& fam) {
    int d = fam.degree();
    return {d % 2 ? (d - 1) / 2 : (d - 2) / 2, 1};
}

static int default_order(const HyperellipticFamily& fam, int order) { return order < 0 ? fam.degree() + 4 : order; }

// With x = t^-p u the curve becomes G(u) = u^(2a) - sum_j f_j t^(p(d-j)) u^j = 0
// and G'(u0) = (2a - d)/u0.
InfinityExpansion expand_at_infinity(const HyperellipticFamily& fam, int order, int branch) {
    const int d = fam.degree();
    if (order < d + 2) throw InsufficientPrecision("expansion order must be at least d + 2");
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
    if (d % 2 && branch != 1) throw std::invalid_argument("odd degree has a single point at infinity");
    const auto& vt = fam.vars();
    LocalParameter lp = local_parameter(fam);
    const int a = lp.x_exponent;
    const int p = d % 2 ? 2 : 1;
    const UPoly& f = fam.f();
    Rational u0(branch);
    Rational gprime = Rational(2 * a - d) / u0;

    std::vector<RatFunc> u{RatFunc(vt, u0)};
    for (int k = 1; k < order; ++k) {
        LaurentSeries us(vt, 0, u, k + 1);
        LaurentSeries g = us.pow(2 * a);
        LaurentSeries upow = LaurentSeries(vt, 0, {RatFunc(vt, Rational(1))}, k + 1);
        for (int j = 0; j <= d; ++j) {
            RatFunc fj = f.coeff(std::size_t(j));
            if (!fj.is_zero()) g = g - LaurentSeries::monomial(vt, p * (d - j), fj) * upow;
            upow = upow * us;
        }
        u.push_back(RatFunc(vt, -1 / gprime) * g.coeff(k));
    }
    LaurentSeries us(vt, 0, u, order);
    InfinityExpansion e;
    e.param = lp;
    e.branch = branch;
    e.x = LaurentSeries::monomial(vt, -p, RatFunc(vt, Rational(1))) * us;
    e.y = e.x.pow(a) * LaurentSeries::monomial(vt, -1, RatFunc(vt, Rational(1))).pow(1);
    return e;
}

LaurentSeries pullback(const UPoly& p, int y_power, const InfinityExpansion& e) {
    const auto& vt = e.x.vars();
    LaurentSeries px = LaurentSeries::constant(RatFunc(vt));
    for (std::size_t k = p.coeffs().size(); k-- > 0;)
        px = px * e.x + LaurentSeries::constant(p.coeff(k));
    return px * e.x.derivative() * e.y.pow(y_power).inverse();
}

RatFunc residue_at_infinity(const UPoly& p, int y_power, const InfinityExpansion& e) {
    return pullback(p, y_power, e).residue();
}

std::string DifferentialForm::to_string() const {
    return "(" + numerator.to_string() + ") dx/y" + (y_power == 1 ? "" : "^" + std::to_string(y_power));
}

std::vector<DifferentialForm> corrected_basis_even(const HyperellipticFamily& fam, int order) {
    const int d = fam.degree();
    if (d % 2) throw std::invalid_argument("corrected basis is for even degree");
    order = default_order(fam, order);
    const auto& vt = fam.vars();
    const int g = fam.genus();
    auto e = expand_at_infinity(fam, order, 1);
    std::vector<RatFunc> res;
    for (int i = 0; i <= d - 2; ++i)
        res.push_back(residue_at_infinity(UPoly::monomial(vt, std::size_t(i), RatFunc(vt, Rational(1))), 1, e));
    int pivot = -1;
    for (int i = g; i <= d - 2 && pivot < 0; ++i)
        if (!res[std::size_t(i)].is_zero()) pivot = i;
    std::vector<DifferentialForm> out;
    for (int i = 0; i <= d - 2; ++i) {
        if (i == pivot) continue;
        UPoly num = UPoly::monomial(vt, std::size_t(i), RatFunc(vt, Rational(1)));
        if (!res[std::size_t(i)].is_zero()) {
            if (pivot < 0) throw AlgebraError("no form with nonzero residue to correct against");
            num = num - (res[std::size_t(i)] / res[std::size_t(pivot)]) *
                            UPoly::monomial(vt, std::size_t(pivot), RatFunc(vt, Rational(1)));
        }
        out.push_back({num, 1});
    }
    return out;
}

std::vector<LaurentSeries> correction_polys(const HyperellipticFamily& fam, int order) {
    const int d = fam.degree();
    if (d % 2 == 0) throw std::invalid_argument("correction polynomials are for odd degree");
    order = default_order(fam, order);
    const auto& vt = fam.vars();
    auto e = expand_at_infinity(fam, order, 1);
    std::vector<LaurentSeries> out;
    for (std::size_t i = 0; i < fam.affine_rank(); ++i) {
        LaurentSeries h = pullback(UPoly::monomial(vt, i, RatFunc(vt, Rational(1))), 1, e);
        if (!h.residue().is_zero()) throw AlgebraError("form has a residue at infinity");
        std::vector<RatFunc> c;
        int lo = h.low();
        for (int k = lo; k <= -2; ++k) c.push_back(frac(-1, k + 1) * h.coeff(k));
        out.push_back(c.empty() ? LaurentSeries(vt, 0, {}, std::nullopt) : LaurentSeries(vt, lo + 1, std::move(c), std::nullopt));
    }
    return out;
}

RFMatrix cup_matrix(const HyperellipticFamily& fam, int order) {
    const int d = fam.degree();
    if (d % 2 == 0) throw std::invalid_argument("cup matrix implemented for odd degree");
    order = default_order(fam, order);
    const auto& vt = fam.vars();
    auto e = expand_at_infinity(fam, order, 1);
    auto P = correction_polys(fam, order);
    std::size_t n = fam.affine_rank();
    std::vector<LaurentSeries> h, dP;
    for (std::size_t i = 0; i < n; ++i) {
        h.push_back(pullback(UPoly::monomial(vt, i, RatFunc(vt, Rational(1))), 1, e));
        dP.push_back(P[i].derivative());
    }
    RFMatrix m(n, n, vt);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (P[j] * h[i] - P[i] * h[j] + P[i] * dP[j]).residue();
    return m;
}

}  // namespace genus2
