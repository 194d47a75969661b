#include "genus2/resnikoff.hpp"

#include <random>

namespace genus2 {

namespace {

LocalizedPoly hat(const MPoly& num, int delta_power) {
    return LocalizedPoly(frame_ring(), num.rebase(frame_table()), {0, delta_power});
}

// Rational point with t2 = 4(s42 s21 - s41 s22 + s32 s11 - s31 s12), t5 and delta nonzero.
std::vector<Rational> point_on_F(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    auto vt = frame_table();
    std::vector<Rational> p(vt->size());
    for (;;) {
        for (auto& x : p) x = Rational(d(rng));
        p[0] = f_substitute_t2().evaluate(p);
        if (p[3] != 0 && delta_poly().evaluate(p) != 0) return p;
    }
}

}  // namespace

std::vector<HattedForm> hatted_forms(const InvariantSet& inv) {
    return {
        {"E2", Rational(2), hat(inv.a, 2)},
        {"E4", Rational(4), hat(inv.b, 4)},
        {"E6", Rational(6), hat(inv.a * inv.b * Rational(4) - inv.c * Rational(3), 6)},
        {"chi10", Rational(10), hat(inv.d, 10)},
        {"chi12", Rational(12), hat(inv.a * inv.d, 12)},
    };
}

const HattedForm& hatted(const std::vector<HattedForm>& forms, const std::string& name) {
    for (auto& f : forms)
        if (f.name == name) return f;
    throw AlgebraError("no hatted form named " + name);
}

LocalizedPoly resnikoff_partial(const ModularFields& mf, const LocalizedPoly& f) {
    const VectorField &r1 = mf.field(1), &r2 = mf.field(2), &r3 = mf.field(3);
    return r1.apply(r2.apply(f)) - frac(1, 4) * r3.apply(r3.apply(f));
}

RatFunc resnikoff_partial(const ModularFields& mf, const RatFunc& f) {
    return resnikoff_partial(mf, LocalizedPoly::from_ratfunc(frame_ring(), f.rebase(frame_table()))).to_ratfunc();
}

static LocalizedPoly resnikoff_D_unreduced(const ModularFields& mf, const HattedForm& f) {
    const Rational& w = f.weight;
    LocalizedPoly a = (8 * w - 2) * (f.value * resnikoff_partial(mf, f.value));
    LocalizedPoly b = (2 * w - 1) * resnikoff_partial(mf, f.value.pow(2));
    return (1 / (8 * w * w)) * (a - b);
}

LocalizedPoly resnikoff_D(const ModularFields& mf, const HattedForm& f) {
    return reduce_mod_F(resnikoff_D_unreduced(mf, f)).reduced();
}

const std::vector<ResnikoffCase>& resnikoff_cases() {
    static const std::vector<ResnikoffCase> cases = {
        {"E4", {"chi10"}, {frac(984375, 1024)}},
        {"E6", {"E4*chi10"}, {frac(2165625, 64)}},
        {"chi10", {"chi10*chi12"}, {frac(-3, 6400)}},
        {"chi12", {"E6*chi10^2", "E4*chi10*chi12"}, {frac(-49, 2304), frac(37, 2304)}},
        {"E2", {"E2^3", "E2*E4", "E6"}, {frac(3, 256), frac(-1, 16), frac(-1, 8)}},
    };
    return cases;
}

namespace {

LocalizedPoly term_value(const std::vector<HattedForm>& forms, const std::string& term) {
    LocalizedPoly r;
    bool first = true;
    std::size_t pos = 0;
    while (pos <= term.size()) {
        auto end = term.find('*', pos);
        if (end == std::string::npos) end = term.size();
        std::string f = term.substr(pos, end - pos);
        unsigned e = 1;
        if (auto c = f.find('^'); c != std::string::npos) {
            e = unsigned(std::stoul(f.substr(c + 1)));
            f = f.substr(0, c);
        }
        LocalizedPoly v = hatted(forms, f).value.pow(e);
        r = first ? v : r * v;
        first = false;
        pos = end + 1;
    }
    return r;
}

}  // namespace

std::vector<ResnikoffIdentity> verify_resnikoff_suite(const ModularFields& mf, unsigned seed,
                                                      const std::map<std::string, std::vector<Rational>>& constants) {
    auto forms = hatted_forms(igusa_explicit());
    struct Case {
        std::string form;
        std::vector<Rational> consts;
        std::vector<LocalizedPoly> terms;
    };
    std::vector<Case> cases;
    for (const auto& rc : resnikoff_cases()) {
        Case c{rc.form, rc.printed, {}};
        if (auto it = constants.find(rc.form); it != constants.end()) c.consts = it->second;
        if (c.consts.size() != rc.terms.size()) throw AlgebraError("wrong number of constants for DRes " + rc.form);
        for (const auto& t : rc.terms) c.terms.push_back(term_value(forms, t));
        cases.push_back(std::move(c));
    }
    std::mt19937 rng(seed);
    auto vt = t_table();
    std::vector<ResnikoffIdentity> out;
    for (auto& c : cases) {
        LocalizedPoly lhs = resnikoff_D_unreduced(mf, hatted(forms, c.form));
        auto combo = [&](const std::vector<Rational>& k) {
            LocalizedPoly r = lhs;
            for (std::size_t i = 0; i < k.size(); ++i) r -= k[i] * c.terms[i];
            return r;
        };
        ResnikoffIdentity id;
        id.name = "DRes " + c.form;
        id.constants = c.consts;
        LocalizedPoly diff = combo(c.consts);
        id.precheck = diff.evaluate(point_on_F(rng)) == 0;
        id.residual = reduce_mod_F(diff).reduced();
        id.holds = id.residual.is_zero();

        // least constants making the identity hold at sample points of F = 0
        std::size_t n = c.terms.size();
        RFMatrix a(n + 2, n, vt);
        std::vector<RatFunc> b;
        for (std::size_t i = 0; i < n + 2; ++i) {
            auto p = point_on_F(rng);
            for (std::size_t j = 0; j < n; ++j) a(i, j) = RatFunc(vt, c.terms[j].evaluate(p));
            b.emplace_back(vt, lhs.evaluate(p));
        }
        try {
            LinearSolution sol = solve_linear(a, b);
            if (sol.kernel.empty()) {
                for (std::size_t j = 0; j < n; ++j) id.fitted.push_back(sol.particular(j, 0).constant_value());
                id.fitted_holds = reduce_mod_F(combo(id.fitted)).is_zero();
            }
        } catch (const InconsistentSystem&) {
        }
        out.push_back(std::move(id));
    }
    return out;
}

bool r1_r2_commute_on(const ModularFields& mf, const LocalizedPoly& f) {
    LocalizedPoly c = mf.field(1).apply(mf.field(2).apply(f)) - mf.field(2).apply(mf.field(1).apply(f));
    return reduce_mod_F(c).is_zero();
}

}  // namespace genus2
