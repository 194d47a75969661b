#include "genus2/poly_gcd.hpp"

#include <map>

namespace genus2 {

namespace {

struct HeuristicFailed {};

Integer int_gcd_of_coeffs(const MPoly& p) {
    Integer g = 0;
    for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    return g;
}

Integer max_norm(const MPoly& p) {
    Integer m = 0;
    for (const auto& t : p.terms())
        if (abs(t.coeff.get_num()) > m) m = abs(t.coeff.get_num());
    return m;
}

std::vector<bool> support(const MPoly& p) {
    std::vector<bool> s(p.vars() ? p.vars()->size() : 0, false);
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < s.size(); ++i)
            if (t.mono.exp[i]) s[i] = true;
    return s;
}

// Coefficients of p viewed as a polynomial in the variables flagged in x.
std::vector<MPoly> coefficients_wrt(const MPoly& p, const std::vector<bool>& x) {
    std::map<Monomial, std::vector<Term>, MonomialGreater> groups;
    for (const auto& t : p.terms()) {
        Monomial key, rest = t.mono;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] && t.mono.exp[i]) {
                key.set(i, t.mono.exp[i]);
                rest.set(i, 0);
            }
        groups[key].push_back({rest, t.coeff});
    }
    std::vector<MPoly> out;
    for (auto& [k, ts] : groups) out.emplace_back(p.vars(), std::move(ts));
    return out;
}

MPoly positive_lc(MPoly p) {
    if (!p.is_zero() && p.leading_coeff() < 0) p = -p;
    return p;
}

// Full gcd of integer polynomials, integer content included.
MPoly heu(const MPoly& f, const MPoly& g, int depth);

MPoly interpolate(const MPoly& h, const Integer& xi, std::size_t v) {
    std::vector<Term> out;
    Integer half = xi / 2;
    for (const auto& t : h.terms()) {
        Integer c = t.coeff.get_num();
        unsigned k = 0;
        while (c != 0) {
            Integer d;
            mpz_fdiv_r(d.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
            if (d > half) d -= xi;
            if (d != 0) {
                Term nt{t.mono, Rational(d)};
                nt.mono.set(v, k);
                out.push_back(std::move(nt));
            }
            c = (c - d) / xi;
            ++k;
        }
    }
    return MPoly(h.vars(), std::move(out));
}

MPoly heu(const MPoly& f, const MPoly& g, int depth) {
    auto vt = common_table(f.vars(), g.vars());
    if (f.is_zero()) return positive_lc(g);
    if (g.is_zero()) return positive_lc(f);
    Integer cf = int_gcd_of_coeffs(f), cg = int_gcd_of_coeffs(g);
    Integer cgcd;
    mpz_gcd(cgcd.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    if (f.is_constant() || g.is_constant()) return MPoly(vt, Rational(cgcd));
    MPoly pf = f.scaled(Rational(1) / Rational(cf)), pg = g.scaled(Rational(1) / Rational(cg));

    auto sf = support(pf), sg = support(pg);
    std::size_t v = sf.size();
    for (std::size_t i = sf.size(); i-- > 0;)
        if (sf[i] || sg[i]) {
            v = i;
            break;
        }
    Integer nf = max_norm(pf), ng = max_norm(pg);
    Integer xi = 2 * std::min(nf, ng) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        MPoly ff = pf.evaluate_at(v, Rational(xi));
        MPoly gg = pg.evaluate_at(v, Rational(xi));
        if (!ff.is_zero() && !gg.is_zero()) {
            MPoly h = interpolate(heu(ff, gg, depth + 1), xi, v);
            h = normalize_primitive(h);
            if (!h.is_zero() && divide_exact(pf, h) && divide_exact(pg, h)) return h.scaled(Rational(cgcd));
        }
        Integer r;
        mpz_sqrt(r.get_mpz_t(), xi.get_mpz_t());
        mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
        xi = xi * 73794 * r / 27011;
    }
    throw HeuristicFailed{};
}

MPoly lc_in(const std::vector<MPoly>& c) { return c.back(); }

MPoly prs(const MPoly& a, const MPoly& b);

MPoly content_in(const MPoly& p, std::size_t v) {
    MPoly g(p.vars());
    for (const auto& c : p.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = prs(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

MPoly prem(const MPoly& a, const MPoly& b, std::size_t v) {
    int db = b.degree_in(v);
    MPoly lb = lc_in(b.coefficients_in(v));
    MPoly r = a;
    int steps = 0, need = a.degree_in(v) - db + 1;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        MPoly lr = lc_in(r.coefficients_in(v));
        Monomial shift;
        shift.set(v, unsigned(dr - db));
        r = lb * r - (lr * b).times_monomial(shift, 1);
        ++steps;
    }
    for (; steps < need; ++steps) r = lb * r;
    return r;
}

MPoly prs(const MPoly& a, const MPoly& b) {
    auto vt = common_table(a.vars(), b.vars());
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (a.is_constant() || b.is_constant()) return MPoly(vt, Rational(1));
    auto sa = support(a), sb = support(b);
    std::size_t v = sa.size();
    for (std::size_t i = sa.size(); i-- > 0;)
        if (sa[i] || sb[i]) {
            v = i;
            break;
        }
    if (a.degree_in(v) == 0) return prs(a, content_in(b, v));
    if (b.degree_in(v) == 0) return prs(content_in(a, v), b);
    MPoly ca = content_in(a, v), cb = content_in(b, v);
    MPoly c = prs(ca, cb);
    MPoly p = *divide_exact(a, ca), q = *divide_exact(b, cb);
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    while (!q.is_zero() && q.degree_in(v) > 0) {
        MPoly r = prem(p, q, v);
        p = q;
        if (r.is_zero()) {
            q = r;
            break;
        }
        q = *divide_exact(r, content_in(r, v));
    }
    MPoly h = q.is_zero() ? p : MPoly(vt, Rational(1));
    if (!h.is_constant()) h = *divide_exact(h, content_in(h, v));
    return normalize_primitive(c * h);
}

}  // namespace

MPoly normalize_primitive(const MPoly& p) {
    if (p.is_zero()) return p;
    return p.primitive_part();
}

MPoly gcd_prs(const MPoly& a, const MPoly& b) {
    return prs(normalize_primitive(a), normalize_primitive(b));
}

MPoly gcd(const MPoly& a, const MPoly& b) {
    auto vt = common_table(a.vars(), b.vars());
    if (a.is_zero() && b.is_zero()) return MPoly(vt);
    if (a.is_zero()) return normalize_primitive(b).rebase(vt);
    if (b.is_zero()) return normalize_primitive(a).rebase(vt);
    if (a.is_constant() || b.is_constant()) return MPoly(vt, Rational(1));

    Monomial ma = a.monomial_gcd(), mb = b.monomial_gcd(), m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.set(i, std::min(ma.exp[i], mb.exp[i]));
    MPoly mono = MPoly::monomial(vt, m, 1);
    if (a.is_monomial() || b.is_monomial()) return mono;

    MPoly f = normalize_primitive(a.divide_monomial(ma));
    MPoly g = normalize_primitive(b.divide_monomial(mb));
    if (f.is_constant() || g.is_constant()) return mono;
    if (f == g) return mono * f;

    // Variables present on one side only split the other side into coefficients.
    auto sf = support(f), sg = support(g);
    std::vector<bool> only_f(sf.size()), only_g(sf.size());
    bool split_f = false, split_g = false;
    for (std::size_t i = 0; i < sf.size(); ++i) {
        only_f[i] = sf[i] && !sg[i];
        only_g[i] = sg[i] && !sf[i];
        split_f = split_f || only_f[i];
        split_g = split_g || only_g[i];
    }
    if (split_f || split_g) {
        MPoly h = split_f ? g : f;
        const MPoly& other = split_f ? f : g;
        const auto& mask = split_f ? only_f : only_g;
        auto cs = coefficients_wrt(other, mask);
        std::sort(cs.begin(), cs.end(), [](const MPoly& x, const MPoly& y) { return x.size() < y.size(); });
        for (const auto& c : cs) {
            h = gcd(h, c);
            if (h.is_constant()) break;
        }
        return mono * h;
    }

    if (f.size() <= g.size()) {
        if (divide_exact(g, f)) return mono * f;
    } else if (divide_exact(f, g)) {
        return mono * g;
    }
    try {
        return mono * normalize_primitive(heu(f, g, 0));
    } catch (const HeuristicFailed&) {
        return mono * prs(f, g);
    }
}

}  // namespace genus2
