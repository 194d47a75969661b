#include "genus2/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace genus2 {

void Monomial::set(std::size_t i, unsigned e) {
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    degree = static_cast<std::uint16_t>(degree - exp[i] + e);
    exp[i] = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& m) const {
    if (degree > m.degree) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exp[i] > m.exp[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned e = unsigned(a.exp[i]) + b.exp[i];
        if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
        r.exp[i] = static_cast<std::uint8_t>(e);
    }
    r.degree = static_cast<std::uint16_t>(a.degree + b.degree);
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
    r.degree = static_cast<std::uint16_t>(a.degree - b.degree);
    return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::uint64_t w[4];
    std::memcpy(w, m.exp.data(), sizeof(w));
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ m.degree;
    for (auto x : w) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

VarTablePtr common_table(const VarTablePtr& a, const VarTablePtr& b) {
    if (a == b || !b) return a;
    if (!a) return b;
    if (*a == *b) return a;
    throw std::invalid_argument("polynomials over different variable tables");
}

MPoly::MPoly(VarTablePtr vars, const Rational& c) : vars_(std::move(vars)) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

MPoly::MPoly(VarTablePtr vars, std::vector<Term> terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
    normalize();
}

MPoly MPoly::variable(VarTablePtr vars, std::size_t i) {
    if (!vars || i >= vars->size()) throw std::out_of_range("variable index");
    Monomial m;
    m.set(i, 1);
    MPoly p(std::move(vars));
    p.terms_.push_back({m, 1});
    return p;
}

MPoly MPoly::variable(VarTablePtr vars, const std::string& name) {
    auto i = vars->require(name);
    return variable(std::move(vars), i);
}

MPoly MPoly::monomial(VarTablePtr vars, const Monomial& m, const Rational& c) {
    MPoly p(std::move(vars));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

void MPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i + 1;
        Rational c = terms_[i].coeff;
        while (j < terms_.size() && terms_[j].mono == terms_[i].mono) c += terms_[j++].coeff;
        if (c != 0) {
            terms_[out].mono = terms_[i].mono;
            terms_[out].coeff = c;
            ++out;
        }
        i = j;
    }
    terms_.resize(out);
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_[0].coeff;
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : terms_[0].mono.degree; }

int MPoly::degree_in(std::size_t i) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[i]);
    return d;
}

int MPoly::min_degree_in(std::size_t i) const {
    if (terms_.empty()) return 0;
    int d = 255;
    for (const auto& t : terms_) d = std::min<int>(d, t.mono.exp[i]);
    return d;
}

static long weight_of(const Monomial& m, const VarTable* vt) {
    long w = 0;
    for (std::size_t i = 0; i < vt->size(); ++i) w += long(m.exp[i]) * vt->weight(i);
    return w;
}

long MPoly::weighted_degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, weight_of(t.mono, vars_.get()));
    return d;
}

std::optional<long> MPoly::homogeneous_weight() const {
    if (terms_.empty()) return 0;
    long w = weight_of(terms_[0].mono, vars_.get());
    for (const auto& t : terms_)
        if (weight_of(t.mono, vars_.get()) != w) return std::nullopt;
    return w;
}

MPoly MPoly::derivative(std::size_t i) const {
    MPoly r(vars_);
    for (const auto& t : terms_) {
        unsigned e = t.mono.exp[i];
        if (e == 0) continue;
        Term nt{t.mono, t.coeff * e};
        nt.mono.set(i, e - 1);
        r.terms_.push_back(std::move(nt));
    }
    return r;
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() < vars_->size()) throw std::invalid_argument("evaluation point too short");
    std::vector<std::vector<Rational>> powers(vars_->size());
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            unsigned e = t.mono.exp[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(1);
            while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
            v *= pw[e];
        }
        sum += v;
    }
    return sum;
}

MPoly MPoly::evaluate_at(std::size_t i, const Rational& v) const {
    std::vector<Rational> pw{1};
    MPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        unsigned e = t.mono.exp[i];
        while (pw.size() <= e) pw.push_back(pw.back() * v);
        Term nt{t.mono, t.coeff * pw[e]};
        nt.mono.set(i, 0);
        r.terms_.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t i) const {
    int d = degree_in(i);
    std::vector<MPoly> c(std::max(d + 1, 0), MPoly(vars_));
    for (const auto& t : terms_) {
        Term nt = t;
        unsigned e = nt.mono.exp[i];
        nt.mono.set(i, 0);
        c[e].terms_.push_back(std::move(nt));
    }
    return c;
}

MPoly MPoly::substitute(std::size_t i, const MPoly& v) const {
    auto c = coefficients_in(i);
    auto vt = common_table(vars_, v.vars_);
    MPoly r(vt);
    for (std::size_t k = c.size(); k-- > 0;) {
        r = r * v;
        r += c[k];
    }
    r.vars_ = vt;
    return r;
}

MPoly MPoly::rebase(const VarTablePtr& target) const {
    if (same_table(vars_, target)) {
        MPoly r = *this;
        r.vars_ = target;
        return r;
    }
    std::vector<int> map(vars_ ? vars_->size() : 0, -1);
    for (std::size_t i = 0; i < map.size(); ++i) {
        auto j = target->index_of(vars_->name(i));
        if (j) map[i] = int(*j);
    }
    MPoly r(target);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt{Monomial{}, t.coeff};
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (t.mono.exp[i] == 0) continue;
            if (map[i] < 0) throw std::invalid_argument("variable " + vars_->name(i) + " missing in target table");
            nt.mono.set(std::size_t(map[i]), t.mono.exp[i]);
        }
        r.terms_.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result(vars_, Rational(1));
    MPoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Rational MPoly::content() const {
    if (terms_.empty()) return 0;
    Integer g = 0, l = 1;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rational c(g, l);
    c.canonicalize();
    if (terms_[0].coeff < 0) c = -c;
    return c;
}

MPoly MPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(1 / content());
}

MPoly MPoly::scaled(const Rational& c) const {
    MPoly r = *this;
    r *= c;
    return r;
}

MPoly MPoly::times_monomial(const Monomial& m, const Rational& c) const {
    MPoly r(vars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    // Multiplying by a monomial preserves grlex order.
    return r;
}

Monomial MPoly::monomial_gcd() const {
    Monomial g;
    if (terms_.empty()) return g;
    g = terms_[0].mono;
    for (const auto& t : terms_) {
        g.degree = 0;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            g.exp[i] = std::min(g.exp[i], t.mono.exp[i]);
            g.degree = static_cast<std::uint16_t>(g.degree + g.exp[i]);
        }
    }
    return g;
}

MPoly MPoly::divide_monomial(const Monomial& m) const {
    MPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!m.divides(t.mono)) throw AlgebraError("monomial does not divide polynomial");
        r.terms_.push_back({t.mono / m, t.coeff});
    }
    return r;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (c != 1 || t.mono.degree == 0) {
            os << c.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            unsigned e = t.mono.exp[i];
            if (!e) continue;
            if (wrote) os << "*";
            os << vars_->name(i);
            if (e > 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

static void merge_into(std::vector<Term>& out, const std::vector<Term>& a, const std::vector<Term>& b, bool negate) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_less(b[j].mono, a[i].mono))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_less(a[i].mono, b[j].mono)) {
            out.push_back({b[j].mono, negate ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = negate ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    vars_ = common_table(vars_, o.vars_);
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    merge_into(out, terms_, o.terms_, false);
    terms_ = std::move(out);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    vars_ = common_table(vars_, o.vars_);
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    merge_into(out, terms_, o.terms_, true);
    terms_ = std::move(out);
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

static bool integral(const std::vector<Term>& ts) {
    for (const auto& t : ts)
        if (t.coeff.get_den() != 1) return false;
    return true;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    auto vt = common_table(a.vars_, b.vars_);
    MPoly r(vt);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1) {
        r = b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
        r.vars_ = vt;
        return r;
    }
    if (b.terms_.size() == 1) {
        r = a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
        r.vars_ = vt;
        return r;
    }
    const auto& small = a.terms_.size() <= b.terms_.size() ? a.terms_ : b.terms_;
    const auto& large = a.terms_.size() <= b.terms_.size() ? b.terms_ : a.terms_;
    if (integral(small) && integral(large)) {
        std::unordered_map<Monomial, Integer, MonomialHash> acc;
        acc.reserve(small.size() * large.size());
        for (const auto& x : small)
            for (const auto& y : large) {
                auto [it, fresh] = acc.try_emplace(x.mono * y.mono);
                mpz_addmul(it->second.get_mpz_t(), x.coeff.get_num_mpz_t(), y.coeff.get_num_mpz_t());
            }
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.terms_.push_back({m, Rational(c)});
    } else {
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(small.size() * large.size());
        Rational tmp;
        for (const auto& x : small)
            for (const auto& y : large) {
                mpq_mul(tmp.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
                auto [it, fresh] = acc.try_emplace(x.mono * y.mono);
                if (fresh)
                    it->second = tmp;
                else
                    it->second += tmp;
            }
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.terms_.push_back({m, std::move(c)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& p, const Term& q) { return grlex_less(q.mono, p.mono); });
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && !same_table(a.vars_, b.vars_)) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    auto vt = common_table(a.vars(), b.vars());
    if (a.is_zero()) return MPoly(vt);
    if (b.is_constant()) return a.scaled(1 / b.constant_value());
    if (b.is_monomial()) {
        const auto& bt = b.leading();
        std::vector<Term> q;
        q.reserve(a.size());
        for (const auto& t : a.terms()) {
            if (!bt.mono.divides(t.mono)) return std::nullopt;
            q.push_back({t.mono / bt.mono, t.coeff / bt.coeff});
        }
        return MPoly(vt, std::move(q));
    }
    // Cheap rejections on degrees in each variable.
    std::size_t n = vt->size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a.degree_in(i) < b.degree_in(i)) return std::nullopt;
        if (a.min_degree_in(i) < b.min_degree_in(i)) return std::nullopt;
    }
    if (a.total_degree() < b.total_degree()) return std::nullopt;

    std::map<Monomial, Rational, MonomialGreater> rem;
    for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
    const Term& lb = b.leading();
    Rational inv_lc = 1 / lb.coeff;
    std::vector<Term> q;
    Rational c, prod;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lb.mono.divides(it->first)) return std::nullopt;
        Monomial qm = it->first / lb.mono;
        c = it->second * inv_lc;
        rem.erase(it);
        for (std::size_t k = 1; k < b.terms().size(); ++k) {
            const auto& bt = b.terms()[k];
            Monomial m = qm * bt.mono;
            mpq_mul(prod.get_mpq_t(), c.get_mpq_t(), bt.coeff.get_mpq_t());
            auto [jt, fresh] = rem.try_emplace(m);
            if (fresh) {
                jt->second = -prod;
            } else {
                jt->second -= prod;
                if (jt->second == 0) rem.erase(jt);
            }
        }
        q.push_back({qm, c});
    }
    return MPoly(vt, std::move(q));
}

}  // namespace genus2
