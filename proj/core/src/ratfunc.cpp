#include "genus2/ratfunc.hpp"

#include "genus2/poly_gcd.hpp"

#include <sstream>

namespace genus2 {

RatFunc::RatFunc(const MPoly& p) : num_(p), den_(p.vars(), Rational(1)) {}

RatFunc::RatFunc(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero();
    auto vt = common_table(num_.vars(), den_.vars());
    num_ = num_.rebase(vt);
    den_ = den_.rebase(vt);
    canonicalize();
}

RatFunc RatFunc::from_canonical(MPoly num, MPoly den) {
    RatFunc r;
    auto vt = common_table(num.vars(), den.vars());
    r.num_ = num.rebase(vt);
    r.den_ = den.rebase(vt);
    return r;
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = MPoly(den_.vars(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    Rational c = den_.content();
    if (c != 1) {
        den_ *= 1 / c;
        num_ *= 1 / c;
    }
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw std::logic_error("rational function is not constant");
    return num_.constant_value() / den_.constant_value();
}

MPoly RatFunc::as_polynomial() const {
    if (!den_.is_constant()) throw AlgebraError("rational function is not a polynomial");
    return num_.scaled(1 / den_.constant_value());
}

RatFunc RatFunc::derivative(std::size_t i) const {
    if (den_.is_constant()) return from_canonical(num_.derivative(i), den_);
    MPoly dn = den_.derivative(i);
    if (dn.is_zero()) return RatFunc(num_.derivative(i), den_);
    // (n/d)' = (n' d - n d') / d^2, with the d-factor cancelled early.
    MPoly g = gcd(den_, dn);
    MPoly d1 = *divide_exact(den_, g);
    MPoly dn1 = *divide_exact(dn, g);
    return RatFunc(num_.derivative(i) * d1 - num_ * dn1, den_ * d1);
}

Rational RatFunc::evaluate(std::span<const Rational> point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw DivisionByZero();
    return num_.evaluate(point) / d;
}

RatFunc RatFunc::substitute(std::size_t i, const RatFunc& v) const {
    auto sub = [&](const MPoly& p) {
        auto c = p.coefficients_in(i);
        RatFunc r(common_table(p.vars(), v.vars()));
        for (std::size_t k = c.size(); k-- > 0;) r = r * v + RatFunc(c[k]);
        return r;
    };
    return sub(num_) / sub(den_);
}

RatFunc RatFunc::rebase(const VarTablePtr& target) const {
    return from_canonical(num_.rebase(target), den_.rebase(target));
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return from_canonical(num_.pow(unsigned(e)), den_.pow(unsigned(e)));
}

std::string RatFunc::to_string() const {
    if (den_.is_constant()) return num_.scaled(1 / den_.constant_value()).to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
    return os.str();
}

RatFunc RatFunc::operator-() const { return from_canonical(-num_, den_); }

// Denominators are primitive with positive leading coefficient, and so are
// products and exact quotients of them (Gauss), which the Henrici forms
// below rely on.
RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc::from_canonical(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant()) return RatFunc::from_canonical(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_constant()) return RatFunc::from_canonical(a.num_ + b.num_ * a.den_, a.den_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    MPoly g = gcd(a.den_, b.den_);
    if (g.is_constant()) return RatFunc::from_canonical(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    MPoly ad = *divide_exact(a.den_, g), bd = *divide_exact(b.den_, g);
    MPoly n = a.num_ * bd + b.num_ * ad;
    if (n.is_zero()) return RatFunc(a.vars());
    MPoly h = gcd(n, g);
    if (!h.is_constant()) {
        n = *divide_exact(n, h);
        g = *divide_exact(g, h);
    }
    return RatFunc::from_canonical(n, ad * bd * g);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(common_table(a.vars(), b.vars()));
    if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc::from_canonical(a.num_ * b.num_, a.den_);
    MPoly an = a.num_, bn = b.num_, ad = a.den_, bd = b.den_;
    if (!bd.is_constant()) {
        MPoly g = gcd(an, bd);
        if (!g.is_constant()) {
            an = *divide_exact(an, g);
            bd = *divide_exact(bd, g);
        }
    }
    if (!ad.is_constant()) {
        MPoly g = gcd(bn, ad);
        if (!g.is_constant()) {
            bn = *divide_exact(bn, g);
            ad = *divide_exact(ad, g);
        }
    }
    return RatFunc::from_canonical(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc operator*(const Rational& c, const RatFunc& a) {
    if (c == 0) return RatFunc(a.vars());
    return RatFunc::from_canonical(a.num_.scaled(c), a.den_);
}

}  // namespace genus2
