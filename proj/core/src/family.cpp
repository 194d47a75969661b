#include "genus2/family.hpp"

namespace genus2 {

HyperellipticFamily::HyperellipticFamily(int degree) : d_(degree) {
    if (degree < 3 || degree > 30) throw std::invalid_argument("unsupported degree");
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int k = 2; k <= degree; ++k) {
        names.push_back("t" + std::to_string(k));
        weights.push_back(2 * k);
    }
    vars_ = make_table(names, weights);
    std::vector<RatFunc> c(std::size_t(degree + 1), RatFunc(vars_));
    c[std::size_t(degree)] = RatFunc(vars_, Rational(1));
    for (int k = 2; k <= degree; ++k) c[std::size_t(degree - k)] = RatFunc(MPoly::variable(vars_, param_index(k)));
    f_ = UPoly(vars_, std::move(c));
}

std::size_t HyperellipticFamily::param_index(int k) const {
    if (k < 2 || k > d_) throw std::out_of_range("parameter index");
    return std::size_t(k - 2);
}

std::string HyperellipticFamily::name() const {
    if (d_ == 5) return "quintic";
    if (d_ == 6) return "sextic";
    return "degree-" + std::to_string(d_);
}

std::string HyperellipticFamily::hash() const { return "hyperelliptic-d" + std::to_string(d_) + "-v1"; }

MPoly discriminant(const HyperellipticFamily& fam) {
    RatFunc r = resultant(fam.f(), fam.f().derivative());
    Rational dd = pow(Rational(fam.degree()), fam.degree());
    return r.as_polynomial().scaled(1 / dd);
}

FormReducer::FormReducer(const HyperellipticFamily& fam) : fam_(&fam), df_(fam.f().derivative()) {
    eg_ = ext_gcd(fam.f(), df_);
    if (eg_.g.degree() != 0) throw AlgebraError("f and f' are not coprime");
}

// d(x^m y) = (m x^(m-1) f + f'/2 x^m) dx/y has leading term (m + d/2) x^(m+d-1).
std::vector<RatFunc> FormReducer::reduce1(UPoly p) const {
    const auto& vt = fam_->vars();
    const int d = fam_->degree();
    const UPoly& f = fam_->f();
    RatFunc half(vt, frac(1, 2));
    while (p.degree() >= d - 1) {
        int n = p.degree();
        int m = n - (d - 1);
        UPoly exact = UPoly::monomial(vt, std::size_t(m), half) * df_;
        if (m > 0) exact = exact + UPoly::monomial(vt, std::size_t(m - 1), RatFunc(vt, Rational(m))) * f;
        RatFunc c = p.lc() * RatFunc(vt, 1 / (Rational(m) + frac(d, 2)));
        p = p - c * exact;
    }
    std::vector<RatFunc> out(fam_->affine_rank(), RatFunc(vt));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(k);
    return out;
}

// P = A f + B f'; P dx/y^3 ~ (A + 2 B') dx/y once deg B < d, since
// d(B/y) = B' dx/y - (1/2) B f' dx/y^3.
std::vector<RatFunc> FormReducer::reduce(const UPoly& p, int y_power) const {
    if (y_power == 1) return reduce1(p);
    if (y_power != 3) throw std::invalid_argument("y power must be 1 or 3");
    UPoly a = p * eg_.u, b = p * eg_.v;
    auto [q, r] = divmod(b, fam_->f());
    a = a + q * df_;
    RatFunc two(fam_->vars(), Rational(2));
    return reduce1(a + two * r.derivative());
}

std::vector<RatFunc> reduce_form(const UPoly& p, int y_power, const HyperellipticFamily& fam) {
    return FormReducer(fam).reduce(p, y_power);
}

RFMatrix ConnectionMatrix::block(int m, int which) const {
    const RFMatrix& bm = b.at(m);
    std::size_t h = bm.rows() / 2;
    std::size_t r = (which == 1 || which == 2) ? 0 : h;
    std::size_t c = (which == 1 || which == 3) ? 0 : h;
    if (which < 1 || which > 4) throw std::out_of_range("block index");
    return bm.block(r, c, h, h);
}

ConnectionMatrix gauss_manin(const HyperellipticFamily& fam) {
    if (fam.degree() % 2 == 0) throw std::invalid_argument("Gauss-Manin connection implemented for odd degree only");
    FormReducer red(fam);
    const auto& vt = fam.vars();
    const int d = fam.degree();
    const std::size_t n = fam.affine_rank();
    ConnectionMatrix c;
    c.degree = d;
    RatFunc mhalf(vt, frac(-1, 2));
    for (int m = 2; m <= d; ++m) {
        RFMatrix bm(n, n, vt);
        // d/dt_m (x^i dx/y) = -1/2 x^i x^(d-m) dx/y^3
        for (std::size_t i = 0; i < n; ++i) {
            auto row = red.reduce(UPoly::monomial(vt, i + std::size_t(d - m), mhalf), 3);
            for (std::size_t j = 0; j < n; ++j) bm(i, j) = row[j];
        }
        c.b.emplace(m, std::move(bm));
    }
    return c;
}

std::vector<std::pair<int, int>> flatness_failures(const ConnectionMatrix& c, const HyperellipticFamily& fam) {
    auto ring = std::make_shared<const LocalizedRing>(fam.vars(), std::vector<MPoly>{discriminant(fam)});
    using LMat = std::vector<std::vector<LocalizedPoly>>;
    std::map<int, LMat> lb;
    for (const auto& [m, bm] : c.b) {
        LMat x(bm.rows());
        for (std::size_t i = 0; i < bm.rows(); ++i)
            for (std::size_t j = 0; j < bm.cols(); ++j) x[i].push_back(LocalizedPoly::from_ratfunc(ring, bm(i, j)));
        lb.emplace(m, std::move(x));
    }
    std::vector<std::pair<int, int>> bad;
    for (const auto& [m, bmm] : lb)
        for (const auto& [n, bnn] : lb) {
            if (n <= m) continue;
            std::size_t dim = bmm.size();
            std::size_t im = fam.param_index(m), in = fam.param_index(n);
            bool ok = true;
            for (std::size_t i = 0; i < dim && ok; ++i)
                for (std::size_t j = 0; j < dim && ok; ++j) {
                    LocalizedPoly s = bnn[i][j].derivative(im) - bmm[i][j].derivative(in);
                    for (std::size_t k = 0; k < dim; ++k) s += bnn[i][k] * bmm[k][j] - bmm[i][k] * bnn[k][j];
                    ok = s.is_zero();
                }
            if (!ok) bad.emplace_back(m, n);
        }
    return bad;
}

RFMatrix basis_reversal(std::size_t n, const VarTablePtr& vars) {
    RFMatrix s(n, n, vars);
    for (std::size_t i = 0; i < n; ++i) s(i, n - 1 - i) = RatFunc(vars, Rational(1));
    return s;
}

RFMatrix conjugate(const RFMatrix& b, const RFMatrix& s) { return s * b * inverse(s); }

}  // namespace genus2
