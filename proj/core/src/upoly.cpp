#include "genus2/upoly.hpp"

#include "genus2/rfmatrix.hpp"

#include <sstream>

namespace genus2 {

UPoly::UPoly(VarTablePtr vars, std::vector<RatFunc> coeffs) : vars_(std::move(vars)), c_(std::move(coeffs)) {
    trim();
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::x(VarTablePtr vars) { return monomial(vars, 1, RatFunc(vars, Rational(1))); }

UPoly UPoly::monomial(VarTablePtr vars, std::size_t k, const RatFunc& c) {
    std::vector<RatFunc> v(k + 1, RatFunc(vars));
    v[k] = c;
    return UPoly(vars, std::move(v));
}

UPoly UPoly::constant(const RatFunc& c) { return UPoly(c.vars(), {c}); }

RatFunc UPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : RatFunc(vars_); }

UPoly UPoly::derivative() const {
    std::vector<RatFunc> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Rational(long(k)) * c_[k]);
    return UPoly(vars_, std::move(d));
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    return lc().inverse() * *this;
}

UPoly UPoly::coefficient_derivative(std::size_t var) const {
    std::vector<RatFunc> d;
    for (const auto& c : c_) d.push_back(c.derivative(var));
    return UPoly(vars_, std::move(d));
}

RatFunc UPoly::evaluate(const RatFunc& x) const {
    RatFunc r(vars_);
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

std::string UPoly::to_string(const std::string& x) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].to_string() << ")";
        if (k) os << "*" << x;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    auto vt = common_table(a.vars_, b.vars_);
    std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()), RatFunc(vt));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return UPoly(vt, std::move(c));
}

UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    auto vt = common_table(a.vars_, b.vars_);
    if (a.is_zero() || b.is_zero()) return UPoly(vt);
    std::vector<RatFunc> c(a.c_.size() + b.c_.size() - 1, RatFunc(vt));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(vt, std::move(c));
}

UPoly operator*(const RatFunc& s, const UPoly& a) {
    std::vector<RatFunc> c;
    for (const auto& x : a.c_) c.push_back(s * x);
    return UPoly(common_table(a.vars_, s.vars()), std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    auto vt = common_table(a.vars(), b.vars());
    UPoly q(vt), r = a;
    RatFunc inv = b.lc().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t k = std::size_t(r.degree() - b.degree());
        UPoly t = UPoly::monomial(vt, k, r.lc() * inv);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

ExtGcd ext_gcd(const UPoly& a, const UPoly& b) {
    auto vt = common_table(a.vars(), b.vars());
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(RatFunc(vt, Rational(1))), s1(vt);
    UPoly t0(vt), t1 = UPoly::constant(RatFunc(vt, Rational(1)));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    RatFunc inv = r0.lc().inverse();
    return {inv * r0, inv * s0, inv * t0};
}

RFMatrix sylvester_matrix(const UPoly& a, const UPoly& b) {
    auto vt = common_table(a.vars(), b.vars());
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) throw std::invalid_argument("resultant of zero polynomial");
    std::size_t size = std::size_t(m + n);
    RFMatrix s(size, size, vt);
    // Rows hold coefficients from the leading one down.
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s(std::size_t(i), std::size_t(i + k)) = a.coeff(std::size_t(m - k));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s(std::size_t(n + i), std::size_t(i + k)) = b.coeff(std::size_t(n - k));
    return s;
}

RatFunc resultant(const UPoly& a, const UPoly& b) {
    if (a.degree() == 0 && b.degree() == 0) return RatFunc(common_table(a.vars(), b.vars()), Rational(1));
    return det(sylvester_matrix(a, b));
}

}  // namespace genus2
