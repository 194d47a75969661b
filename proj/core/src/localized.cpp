#include "genus2/localized.hpp"

namespace genus2 {

LocalizedRing::LocalizedRing(VarTablePtr vars, std::vector<MPoly> atoms) : vars_(std::move(vars)) {
    for (auto& a : atoms) {
        if (a.is_zero()) throw DivisionByZero();
        atoms_.push_back(a.rebase(vars_));
    }
    datoms_.resize(vars_->size());
    for (std::size_t v = 0; v < vars_->size(); ++v)
        for (const auto& a : atoms_) datoms_[v].push_back(a.derivative(v));
}

LocalizedPoly::LocalizedPoly(LocalizedRingPtr ring)
    : ring_(std::move(ring)), num_(ring_->vars()), exps_(ring_->atoms().size(), 0) {}

LocalizedPoly::LocalizedPoly(LocalizedRingPtr ring, MPoly num, std::vector<int> exps)
    : ring_(std::move(ring)), num_(num.rebase(ring_->vars())), exps_(std::move(exps)) {
    if (exps_.empty()) exps_.assign(ring_->atoms().size(), 0);
    if (exps_.size() != ring_->atoms().size()) throw std::invalid_argument("exponent vector length");
}

LocalizedPoly LocalizedPoly::from_ratfunc(LocalizedRingPtr ring, const RatFunc& f) {
    MPoly den = f.den().rebase(ring->vars());
    std::vector<int> e(ring->atoms().size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        const MPoly& a = ring->atoms()[i];
        while (!den.is_constant()) {
            auto q = divide_exact(den, a);
            if (!q) break;
            den = std::move(*q);
            ++e[i];
        }
    }
    if (!den.is_constant()) throw AlgebraError("denominator is not a product of atoms: " + f.den().to_string());
    return LocalizedPoly(ring, f.num().rebase(ring->vars()).scaled(1 / den.constant_value()), e);
}

MPoly LocalizedPoly::denominator() const {
    MPoly d(ring_->vars(), Rational(1));
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) d = d * ring_->atoms()[i].pow(unsigned(exps_[i]));
    return d;
}

RatFunc LocalizedPoly::to_ratfunc() const {
    MPoly n = num_, d(ring_->vars(), Rational(1));
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > 0) d = d * ring_->atoms()[i].pow(unsigned(exps_[i]));
        if (exps_[i] < 0) n = n * ring_->atoms()[i].pow(unsigned(-exps_[i]));
    }
    return RatFunc(n, d);
}

LocalizedPoly LocalizedPoly::reduced() const {
    if (num_.is_zero()) return LocalizedPoly(ring_);
    LocalizedPoly r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        while (r.exps_[i] > 0) {
            auto q = divide_exact(r.num_, ring_->atoms()[i]);
            if (!q) break;
            r.num_ = std::move(*q);
            --r.exps_[i];
        }
    }
    return r;
}

// Brings two values to the common exponent vector max(ea, eb).
static void align(const LocalizedPoly& a, const LocalizedPoly& b, MPoly& na, MPoly& nb, std::vector<int>& e) {
    const auto& atoms = a.ring()->atoms();
    na = a.num();
    nb = b.num();
    e.resize(atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        int ea = a.exps()[i], eb = b.exps()[i];
        e[i] = std::max(ea, eb);
        if (ea < e[i]) na = na * atoms[i].pow(unsigned(e[i] - ea));
        if (eb < e[i]) nb = nb * atoms[i].pow(unsigned(e[i] - eb));
    }
}

static const LocalizedRingPtr& common_ring(const LocalizedPoly& a, const LocalizedPoly& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("localized values over different rings");
    return a.ring();
}

LocalizedPoly operator+(const LocalizedPoly& a, const LocalizedPoly& b) {
    if (!a.ring()) return b;
    if (!b.ring()) return a;
    const auto& ring = common_ring(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    MPoly na, nb;
    std::vector<int> e;
    align(a, b, na, nb, e);
    return LocalizedPoly(ring, na + nb, e);
}

LocalizedPoly operator-(const LocalizedPoly& a, const LocalizedPoly& b) { return a + (-b); }

LocalizedPoly LocalizedPoly::operator-() const {
    LocalizedPoly r = *this;
    r.num_ = -r.num_;
    return r;
}

LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b) {
    const auto& ring = common_ring(a, b);
    std::vector<int> e(a.exps().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps()[i] + b.exps()[i];
    return LocalizedPoly(ring, a.num() * b.num(), e);
}

LocalizedPoly operator*(const Rational& c, const LocalizedPoly& a) {
    LocalizedPoly r = a;
    r.num_ *= c;
    return r;
}

LocalizedPoly LocalizedPoly::pow(unsigned e) const {
    LocalizedPoly r(ring_, num_.pow(e), exps_);
    for (auto& x : r.exps_) x *= int(e);
    return r;
}

// d(N / prod a^e) = (N' prod a - N sum e_i a_i' prod_{j != i} a_j) / prod a^(e+1)
// over the atoms with e_i != 0.
LocalizedPoly LocalizedPoly::derivative(std::size_t v) const {
    const auto& atoms = ring_->atoms();
    const auto& da = ring_->atom_derivatives(v);
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (exps_[i] != 0 && !da[i].is_zero()) active.push_back(i);
    MPoly dn = num_.derivative(v);
    if (active.empty()) return LocalizedPoly(ring_, dn, exps_);
    MPoly prod(ring_->vars(), Rational(1));
    for (auto i : active) prod = prod * atoms[i];
    MPoly out = dn * prod;
    for (auto i : active) {
        MPoly others(ring_->vars(), Rational(1));
        for (auto j : active)
            if (j != i) others = others * atoms[j];
        out -= (num_ * da[i] * others).scaled(Rational(exps_[i]));
    }
    auto e = exps_;
    for (auto i : active) e[i] += 1;
    return LocalizedPoly(ring_, out, e);
}

Rational LocalizedPoly::evaluate(std::span<const Rational> point) const {
    Rational v = num_.evaluate(point);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        Rational a = ring_->atoms()[i].evaluate(point);
        if (a == 0) throw DivisionByZero();
        v *= genus2::pow(a, -exps_[i]);
    }
    return v;
}

LocalizedPoly LocalizedPoly::substitute(std::size_t i, const MPoly& v) const {
    for (std::size_t k = 0; k < exps_.size(); ++k)
        if (exps_[k] != 0 && ring_->atoms()[k].involves(i))
            throw std::invalid_argument("substituted variable occurs in a denominator atom");
    return LocalizedPoly(ring_, num_.substitute(i, v.rebase(ring_->vars())), exps_);
}

}  // namespace genus2
