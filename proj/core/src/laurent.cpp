#include "genus2/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace genus2 {

namespace {

std::optional<int> min_prec(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

std::optional<int> shift(std::optional<int> p, int s) {
    if (!p) return p;
    return *p + s;
}

}  // namespace

LaurentSeries::LaurentSeries(VarTablePtr vars, int low, std::vector<RatFunc> coeffs, std::optional<int> prec)
    : vars_(std::move(vars)), low_(low), c_(std::move(coeffs)), prec_(prec) {
    trim();
}

LaurentSeries LaurentSeries::monomial(VarTablePtr vars, int k, const RatFunc& c) {
    return LaurentSeries(std::move(vars), k, {c}, std::nullopt);
}

void LaurentSeries::trim() {
    if (prec_ && high() >= *prec_) c_.resize(std::size_t(std::max(0, *prec_ - low_)));
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + long(lead));
        low_ += int(lead);
    }
    if (c_.empty()) low_ = 0;
}

std::optional<int> LaurentSeries::valuation() const {
    if (!c_.empty()) return low_;
    return prec_;
}

RatFunc LaurentSeries::coeff(int k) const {
    if (prec_ && k >= *prec_)
        throw InsufficientPrecision("coefficient t^" + std::to_string(k) + " beyond O(t^" + std::to_string(*prec_) + ")");
    if (c_.empty() || k < low_ || k > high()) return RatFunc(vars_);
    return c_[std::size_t(k - low_)];
}

LaurentSeries LaurentSeries::truncated_above(int k) const {
    if (prec_ && k >= *prec_) throw InsufficientPrecision("truncation beyond known precision");
    std::vector<RatFunc> c;
    for (int i = low_; i <= std::min(k, high()); ++i) c.push_back(coeff(i));
    return LaurentSeries(vars_, low_, std::move(c), std::nullopt);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    auto vt = common_table(a.vars_, b.vars_);
    auto p = min_prec(a.prec_, b.prec_);
    if (a.c_.empty() && b.c_.empty()) return LaurentSeries(vt, 0, {}, p);
    int lo = a.c_.empty() ? b.low_ : b.c_.empty() ? a.low_ : std::min(a.low_, b.low_);
    int hi = std::max(a.c_.empty() ? lo : a.high(), b.c_.empty() ? lo : b.high());
    if (p) hi = std::min(hi, *p - 1);
    std::vector<RatFunc> c;
    for (int k = lo; k <= hi; ++k) {
        RatFunc x(vt);
        if (!a.c_.empty() && k >= a.low_ && k <= a.high()) x += a.c_[std::size_t(k - a.low_)];
        if (!b.c_.empty() && k >= b.low_ && k <= b.high()) x += b.c_[std::size_t(k - b.low_)];
        c.push_back(std::move(x));
    }
    return LaurentSeries(vt, lo, std::move(c), p);
}

LaurentSeries operator-(const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    auto vt = common_table(a.vars_, b.vars_);
    auto va = a.valuation(), vb = b.valuation();
    std::optional<int> p;
    if (a.prec_) p = *a.prec_ + (vb ? *vb : 0);
    if (b.prec_) p = min_prec(p, *b.prec_ + (va ? *va : 0));
    if (a.c_.empty() || b.c_.empty()) return LaurentSeries(vt, 0, {}, p);
    int lo = a.low_ + b.low_;
    int hi = a.high() + b.high();
    if (p) hi = std::min(hi, *p - 1);
    std::vector<RatFunc> c(std::size_t(std::max(0, hi - lo + 1)), RatFunc(vt));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            int k = a.low_ + int(i) + b.low_ + int(j);
            if (k > hi) break;
            if (!b.c_[j].is_zero()) c[std::size_t(k - lo)] += a.c_[i] * b.c_[j];
        }
    }
    return LaurentSeries(vt, lo, std::move(c), p);
}

LaurentSeries operator*(const RatFunc& s, const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
}

LaurentSeries LaurentSeries::derivative() const {
    std::vector<RatFunc> c;
    for (std::size_t i = 0; i < c_.size(); ++i) c.push_back(Rational(low_ + int(i)) * c_[i]);
    return LaurentSeries(vars_, low_ - 1, std::move(c), shift(prec_, -1));
}

// a = c t^v (1 + w) with w = O(t); 1/a = c^-1 t^-v sum (-w)^n.
LaurentSeries LaurentSeries::inverse() const {
    if (c_.empty()) throw DivisionByZero();
    int v = low_;
    RatFunc lead_inv = c_[0].inverse();
    if (!prec_ && c_.size() == 1) return monomial(vars_, -v, lead_inv);
    if (!prec_) throw InsufficientPrecision("inverse of an exact Laurent polynomial needs a precision");
    int rel = *prec_ - v;
    std::vector<RatFunc> wc;
    for (std::size_t i = 1; i < c_.size(); ++i) wc.push_back(lead_inv * c_[i]);
    LaurentSeries w(vars_, 1, std::move(wc), rel);
    LaurentSeries one = LaurentSeries(vars_, 0, {RatFunc(vars_, Rational(1))}, rel);
    LaurentSeries sum = one, term = one;
    for (int n = 1; n < rel; ++n) {
        term = -(term * w);
        sum = sum + term;
    }
    LaurentSeries r = LaurentSeries::monomial(vars_, -v, lead_inv) * sum;
    return r;
}

LaurentSeries LaurentSeries::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    LaurentSeries r = LaurentSeries::monomial(vars_, 0, RatFunc(vars_, Rational(1)));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::string LaurentSeries::to_string(const std::string& t) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].to_string() << ")*" << t << "^" << (low_ + int(i));
    }
    if (first) os << "0";
    if (prec_) os << " + O(" << t << "^" << *prec_ << ")";
    return os.str();
}

}  // namespace genus2
