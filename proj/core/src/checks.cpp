#include "genus2/checks.hpp"

#include "genus2/catalog.hpp"
#include "genus2/cup.hpp"
#include "genus2/expr.hpp"
#include "genus2/igusa.hpp"
#include "genus2/monodromy.hpp"
#include "genus2/period.hpp"
#include "genus2/resnikoff.hpp"
#include "genus2/vector_fields.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace genus2 {

namespace fs = std::filesystem;

// ---------------------------------------------------------------- config

CheckConfig CheckConfig::from_json(const Json& j, const fs::path& base) {
    CheckConfig c;
    auto path_of = [&](const char* key) {
        fs::path p = j.at(key).get<std::string>();
        return p.is_relative() && !base.empty() ? base / p : p;
    };
    try {
        for (const auto& [k, v] : j.items())
            if (k != "only" && k != "seed" && k != "golden_dir" && k != "cache_dir" && k != "order")
                throw ConfigError("unknown config key '" + k + "'");
        if (j.contains("only")) c.only = j["only"].get<std::vector<std::string>>();
        if (j.contains("seed")) c.seed = j["seed"].get<unsigned>();
        if (j.contains("golden_dir")) c.golden_dir = path_of("golden_dir");
        if (j.contains("cache_dir")) c.cache_dir = path_of("cache_dir");
        if (j.contains("order")) c.order = j["order"].get<int>();
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
    if (const char* env = std::getenv("GENUS2_CACHE_DIR"); env && *env) c.cache_dir = env;
    validate_selection(c.only);
    return c;
}

CheckConfig CheckConfig::from_file(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw ConfigError("cannot open config " + p.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError(p.string() + ": " + e.what());
    }
    return from_json(j, p.parent_path());
}

const GoldenEntry& CheckContext::golden(const std::string& id) const {
    for (const auto& e : loaded_)
        if (e.id == id) return e;
    loaded_.push_back(store_.load(id));
    return loaded_.back();
}

// ---------------------------------------------------------------- helpers

namespace {

RatFunc on(const RatFunc& f, const VarTablePtr& vt) { return f.rebase(vt); }

Outcome pass(std::string detail = {}) { return {true, std::move(detail), std::nullopt}; }

Outcome fail(std::string detail, Json residual) { return {false, std::move(detail), std::move(residual)}; }

Outcome match(const RatFunc& got, const RatFunc& want, const std::string& what) {
    RatFunc d = got - on(want, got.vars());
    if (d.is_zero()) return pass();
    return fail(what + " differs", {{"item", what}, {"difference", to_json(d)}});
}

Outcome match(const RFMatrix& got, const RFMatrix& want, const std::string& what) {
    if (got.rows() != want.rows() || got.cols() != want.cols())
        return fail(what + ": shape mismatch", {{"item", what}, {"rows", got.rows()}, {"cols", got.cols()}});
    std::size_t bad = 0;
    Json first;
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j) {
            RatFunc d = got(i, j) - on(want(i, j), got(i, j).vars());
            if (d.is_zero()) continue;
            if (!bad++) first = {{"item", what}, {"entry", {i + 1, j + 1}}, {"difference", to_json(d)}};
        }
    if (!bad) return pass();
    first["mismatches"] = bad;
    return fail(what + ": " + std::to_string(bad) + " entries differ", first);
}

Outcome expect(bool ok, const std::string& what, Json residual = {}) {
    if (ok) return pass();
    if (residual.is_null()) residual = {{"item", what}};
    return fail(what + " fails", residual);
}

// All must pass; details of passing parts are kept, the first failure's residual reported.
Outcome all_of(const std::vector<Outcome>& parts, std::string summary = {}) {
    Outcome r{true, std::move(summary), std::nullopt};
    for (const auto& p : parts) {
        if (!p.detail.empty()) r.detail += (r.detail.empty() ? "" : "; ") + p.detail;
        if (!p.ok) {
            if (r.ok) r.residual = p.residual;
            r.ok = false;
        }
    }
    return r;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ", ") {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
    return s.str();
}

const ModularFields& mf() { return ModularFields::instance(); }

ConnectionMatrix connection(const CheckContext& ctx) {
    if (ctx.config().cache_dir.empty()) return mf().gm();
    return cached_connection(HyperellipticFamily::quintic(), ctx.config().cache_dir);
}

// c_j with g = sum_j c_j sm_j over the aux table, c_j free of sm.
std::optional<std::array<RatFunc, 3>> aux_coefficients(const RatFunc& g) {
    static const char* sm[3] = {"sm2", "sm4", "sm6"};
    std::array<RatFunc, 3> c;
    RatFunc rest = g;
    for (int j = 0; j < 3; ++j) {
        c[std::size_t(j)] = g.derivative(sm[j]);
        for (const char* v : sm)
            if (!c[std::size_t(j)].derivative(v).is_zero()) return std::nullopt;
        rest -= c[std::size_t(j)] * RatFunc(MPoly::variable(g.vars(), sm[j]));
    }
    if (!rest.is_zero()) return std::nullopt;
    return c;
}

RatFunc random_poly(std::mt19937& rng, const VarTablePtr& vt, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5), var(0, int(vt->size()) - 1), deg(0, 2);
    MPoly p(vt);
    for (int i = 0; i < terms; ++i) {
        MPoly m(vt, Rational(coef(rng)));
        for (int k = 0; k < 2; ++k) m = m * MPoly::variable(vt, std::size_t(var(rng))).pow(unsigned(deg(rng)));
        p += m;
    }
    if (p.is_zero()) p = MPoly(vt, Rational(1));
    return RatFunc(p);
}

std::vector<Rational> random_point(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<Rational> p(n);
    for (auto& x : p) x = Rational(d(rng));
    return p;
}

SpMatrix to_sp(const RFMatrix& m) {
    SpMatrix::Rows r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Rational v = m(i, j).constant_value();
            if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw AlgebraError("non-integral generator entry");
            r[i][j] = v.get_num().get_si();
        }
    return SpMatrix(r);
}

RatFunc laurent_as_ratfunc(const LaurentSeries& s, const VarTablePtr& local) {
    RatFunc r(local);
    RatFunc t(MPoly::variable(local, "t"));
    for (int k = s.low(); k <= s.high(); ++k) {
        RatFunc c = s.coeff(k);
        if (c.is_zero()) continue;
        if (!c.is_constant()) throw AlgebraError("correction polynomial has a non-constant coefficient");
        r += c.constant_value() * t.pow(k);
    }
    return r;
}

// ---------------------------------------------------------------- algebra

Outcome algebra_canonical(const CheckContext& ctx) {
    std::mt19937 rng(ctx.config().seed);
    auto vt = t_table();
    int n = 0;
    for (; n < 40; ++n) {
        RatFunc p = random_poly(rng, vt, 4), q = random_poly(rng, vt, 3), h = random_poly(rng, vt, 2);
        if (q.is_zero() || h.is_zero()) continue;
        RatFunc f = p / q;
        if (!(RatFunc(f.num(), f.den()) == f)) return fail("re-canonicalising changed a value", {{"value", to_json(f)}});
        if (!((f * h) / h == f)) return fail("(f h) / h != f", {{"value", to_json(f)}, {"h", to_json(h)}});
        RatFunc scaled(f.num().scaled(frac(-7, 3)), f.den().scaled(frac(-7, 3)));
        if (!(scaled == f)) return fail("scaling numerator and denominator changed the form", {{"value", to_json(f)}});
    }
    return pass(std::to_string(n) + " random quotients");
}

Outcome algebra_serialization(const CheckContext& ctx) {
    std::mt19937 rng(ctx.config().seed + 1);
    auto vt = frame_table();
    for (int n = 0; n < 20; ++n) {
        RatFunc f = random_poly(rng, vt, 5) / random_poly(rng, vt, 3);
        Json j = to_json(f);
        if (!(ratfunc_from_json(j) == f) || canonical_dump(to_json(ratfunc_from_json(j))) != canonical_dump(j))
            return fail("RatFunc json round trip", {{"value", j}});
    }
    RFMatrix m(3, 2, vt);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = random_poly(rng, vt, 3) / random_poly(rng, vt, 2);
    if (!(rfmatrix_from_json(to_json(m)) == m)) return fail("RFMatrix json round trip", {{"value", to_json(m)}});
    std::vector<std::string> bad;
    auto ids = ctx.store().ids();
    for (const auto& id : ids)
        if (!ctx.store().roundtrip(id)) bad.push_back(id);
    if (!bad.empty()) return fail("golden files not canonical: " + join(bad), {{"files", bad}});
    return pass(std::to_string(ids.size()) + " golden files reproduce byte for byte");
}

Outcome algebra_symplectic(const CheckContext& ctx) {
    const auto& g = monodromy_generators();
    std::vector<SpMatrix> gens, pool;
    for (const auto& [c, m] : g) gens.push_back(m);
    pool = gens;
    std::mt19937 rng(ctx.config().seed);
    std::size_t n = 0;
    // words of length <= 12 in the generators keep the entries far from overflow
    for (int w = 0; w < 200; ++w) {
        SpMatrix p;
        int len = 1 + int(rng() % 12);
        for (int i = 0; i < len; ++i) {
            const SpMatrix& x = gens[rng() % gens.size()];
            p = p * (rng() % 2 ? x : x.inverse());
        }
        pool.push_back(p);
    }
    for (const auto& m : pool) {
        ++n;
        if (!SpMatrix::is_symplectic(m.rows()) || m.det() != 1 || !(m * m.inverse() == SpMatrix::identity()))
            return fail("matrix leaves the symplectic group", {{"matrix", m.to_string()}});
    }
    return pass(std::to_string(n) + " matrices");
}

// ---------------------------------------------------------------- gm

Outcome gm_discriminant(const CheckContext& ctx) {
    MPoly d = discriminant(HyperellipticFamily::quintic()).scaled(Rational(3125));
    const RatFunc& want = ctx.golden("discriminant").ratfunc("five_pow5_delta");
    Outcome o = match(RatFunc(d), want, "5^5 Delta");
    o.detail = std::to_string(d.size()) + " terms" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome gm_inverses(const CheckContext& ctx) {
    auto c = connection(ctx);
    const auto& g = ctx.golden("gm_inverse");
    std::vector<Outcome> parts;
    for (int m = 2; m <= 5; ++m)
        parts.push_back(match(inverse(c[m]), g.matrix("B" + std::to_string(m) + "_inv"), "B" + std::to_string(m) + "^-1"));
    return all_of(parts);
}

Outcome gm_omega(const CheckContext& ctx) {
    auto fam = HyperellipticFamily::quintic();
    auto c = connection(ctx);
    RFMatrix om = cup_matrix(fam, ctx.config().order);
    std::vector<Outcome> parts;
    for (int m = 2; m <= 5; ++m) {
        const RFMatrix& b = c[m];
        parts.push_back(match(om.derivative(fam.param_index(m)), b * om + om * b.transpose(),
                              "dOmega/dt" + std::to_string(m)));
    }
    return all_of(parts);
}

Outcome gm_flatness(const CheckContext& ctx) {
    auto bad = flatness_failures(connection(ctx), HyperellipticFamily::quintic());
    if (bad.empty()) return pass("all 6 curvature pairs vanish");
    Json r = Json::array();
    for (auto [m, n] : bad) r.push_back({m, n});
    return fail(std::to_string(bad.size()) + " curvature pairs nonzero", {{"pairs", r}});
}

// ---------------------------------------------------------------- cup

Outcome cup_omega(const CheckContext& ctx) {
    return match(cup_matrix(HyperellipticFamily::quintic(), ctx.config().order), ctx.golden("cup").matrix("Omega"),
                 "Omega");
}

Outcome cup_corrections(const CheckContext& ctx) {
    auto p = correction_polys(HyperellipticFamily::quintic(), ctx.config().order);
    const auto& g = ctx.golden("cup");
    auto local = golden_table("local");
    std::vector<Outcome> parts;
    if (p.size() != 4) return fail("expected four correction polynomials", {{"count", p.size()}});
    parts.push_back(expect(p[0].truncated_above(-1).is_exact() && laurent_as_ratfunc(p[0], local).is_zero() &&
                               laurent_as_ratfunc(p[1], local).is_zero(),
                           "P0 = P1 = 0"));
    parts.push_back(match(laurent_as_ratfunc(p[2], local), g.ratfunc("P2"), "P2"));
    parts.push_back(match(laurent_as_ratfunc(p[3], local), g.ratfunc("P3"), "P3"));
    return all_of(parts);
}

Outcome cup_sextic(const CheckContext& ctx) {
    auto fam = HyperellipticFamily::sextic();
    auto vt = fam.vars();
    auto e = expand_at_infinity(fam, ctx.config().order > 0 ? ctx.config().order : 12);
    const auto& g = ctx.golden("cup");
    std::vector<Outcome> parts;
    for (int k = 2; k <= 4; ++k) {
        RatFunc r = residue_at_infinity(UPoly::monomial(vt, std::size_t(k), RatFunc(vt, Rational(1))), 1, e);
        parts.push_back(match(r, g.ratfunc("res_x" + std::to_string(k)), "Res x^" + std::to_string(k) + " dx/y"));
    }
    return all_of(parts);
}

// ---------------------------------------------------------------- vector fields

Outcome vf_kernel(const CheckContext&) {
    const auto& tc = mf().tcomp();
    auto vt = t_table();
    RFMatrix v(4, 1, vt);
    for (int m = 2; m <= 5; ++m) v(std::size_t(m - 2), 0) = RatFunc(MPoly::variable(vt, std::size_t(m - 2)).scaled(Rational(m)));
    RFMatrix r = tc.system * v;
    return all_of({expect(r.is_zero(), "system * [2t2, 3t3, 4t4, 5t5] = 0", {{"product", to_json(r)}}),
                   expect(rank(tc.system) == 3, "system has rank 3", {{"rank", rank(tc.system)}})});
}

Outcome vf_connection(const CheckContext& ctx) {
    const auto& g = ctx.golden("vf_connection");
    const auto& e = mf().reduced().e;
    return all_of({match(e[0], g.matrix("E_m2"), "E_-2"), match(e[1], g.matrix("E_m4"), "E_-4"),
                   match(e[2], g.matrix("E_m6"), "E_-6")});
}

Outcome vf_tcomponents(const CheckContext& ctx) {
    const auto& g = ctx.golden("vf_connection");
    const auto& tc = mf().tcomp();
    auto vt = t_table();
    std::vector<Outcome> parts;
    for (int m = 2; m <= 5; ++m) {
        std::string name = "R_k" + std::to_string(m);
        auto c = aux_coefficients(g.ratfunc(name));
        if (!c) {
            parts.push_back(fail(name + " is not linear in s_{k,j}", {{"item", name}}));
            continue;
        }
        for (std::size_t j = 0; j < 3; ++j)
            parts.push_back(match(tc.coeff(std::size_t(m - 2), j), on((*c)[j], vt),
                                  name + " coefficient of s_{k," + std::to_string(kAuxWeights[j]) + "}"));
    }
    return all_of(parts);
}

Outcome vf_fields_check(const CheckContext& ctx) {
    const auto& g = ctx.golden("vf_fields");
    std::vector<Outcome> parts;
    for (int k = 1; k <= 3; ++k) {
        const auto& want = g.matrix("R" + std::to_string(k));
        const auto& f = mf().field(k);
        RFMatrix got(1, f.coeffs().size(), frame_table());
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) got(0, i) = on(f[i], frame_table());
        parts.push_back(match(got, want, "R" + std::to_string(k)));
    }
    return all_of(parts, "36 coefficients");
}

Outcome vf_defining(const CheckContext&) {
    std::vector<Outcome> parts;
    for (int k = 1; k <= 3; ++k) {
        RFMatrix d = defining_defect(mf(), k).map([](const RatFunc& x) { return reduce_mod_F(x); });
        parts.push_back(expect(d.is_zero(), "dS(R" + std::to_string(k) + ") + S E(" + std::to_string(k) + ") = C S mod F",
                               {{"defect", to_json(d)}}));
    }
    return all_of(parts);
}

Outcome vf_tangency(const CheckContext& ctx) {
    const auto& tg = ctx.golden("vf_tangency");
    const auto& cg = ctx.golden("vf_connection");
    auto c = aux_coefficients(cg.ratfunc("dDelta_over_Delta"));
    if (!c) return fail("printed dDelta/Delta is not linear in s_{k,j}", {{"item", "dDelta_over_Delta"}});
    std::vector<Outcome> parts;
    for (int k = 1; k <= 3; ++k) {
        std::string ks = std::to_string(k);
        Tangency t = tangency_checks(mf(), k);
        parts.push_back(match(t.dF_over_F, tg.ratfunc("dF_R" + ks), "dF(R" + ks + ")/F"));
        AuxScalars s = rhs_scalars(k);
        RatFunc want(frame_table());
        for (std::size_t j = 0; j < 3; ++j) want += on((*c)[j], frame_table()) * s[j];
        parts.push_back(match(on(t.dDelta_over_Delta, frame_table()), want, "dDelta(R" + ks + ")/Delta"));
        parts.push_back(expect(t.f_divides && t.delta_divides, "F and Delta divide their derivatives along R" + ks));
    }
    return all_of(parts);
}

Outcome vf_jh(const CheckContext&) {
    int ok = 0, printed_j = 0, printed_h = 0;
    Json bad = Json::array();
    for (int k = 1; k <= 3; ++k)
        for (int kc = 1; kc <= 3; ++kc) {
            JHResult r = jh_identities(mf(), k, kc);
            if (r.j_ok && r.h_ok) ++ok;
            else bad.push_back({k, kc});
            printed_j += r.swapped_j_ok;
            printed_h += r.swapped_h_ok;
        }
    std::string detail = std::to_string(ok) + "/9 pairs; with E1 J - H J and E1 H - H H sign-swapped: " +
                         std::to_string(printed_j) + "/9 (J), " + std::to_string(printed_h) + "/9 (H)";
    if (ok == 9) return pass(detail);
    return fail(detail, {{"pairs", bad}});
}

Outcome vf_leibniz(const CheckContext& ctx) {
    std::mt19937 rng(ctx.config().seed + 2);
    auto vt = frame_table();
    for (int n = 0; n < 6; ++n) {
        RatFunc f = random_poly(rng, vt, 3), g = random_poly(rng, vt, 3);
        for (int k = 1; k <= 3; ++k) {
            const auto& r = mf().field(k);
            RatFunc d = r.apply(f * g) - (f * r.apply(g) + g * r.apply(f));
            if (!d.is_zero())
                return fail("Leibniz rule fails for R" + std::to_string(k),
                            {{"f", to_json(f)}, {"g", to_json(g)}, {"difference", to_json(d)}});
        }
    }
    return pass("6 random pairs, 3 fields");
}

// ---------------------------------------------------------------- moduli

Outcome moduli_generators(const CheckContext&) {
    auto all = enumerate_all_generators();
    auto cat = enumerate_generators();
    std::map<std::string, int> fam;
    for (const auto& e : all) ++fam[e.family.substr(0, 1) == "U" || e.family.substr(0, 1) == "V" ? e.family.substr(0, 1) : e.family];
    auto g = [](const char* n) { return generator(n).value; };
    RatFunc t4 = g("T4") - Rational(4) * (g("Q24") - g("Q42") + g("Q13") - g("Q31"));
    RatFunc q = g("Q12") - g("Q21");
    std::ostringstream d;
    d << all.size() << " functions, " << cat.size() << " after removing " << join(cat.removed);
    return all_of({expect(all.size() == 155, "155 functions before removal", {{"count", all.size()}}),
                   expect(fam["T"] == 5 && fam["Q2"] == 16 && fam["Q4"] == 35 && fam["P"] == 35 && fam["U"] == 32 &&
                              fam["V"] == 32,
                          "family sizes 5, 16, 35, 35, 32, 32", Json(fam)),
                   expect(cat.size() == 153, "153 coordinates", {{"count", cat.size()}}),
                   expect(reduce_mod_F(t4).is_zero(), "T4 = 4(Q24 - Q42 + Q13 - Q31) mod F",
                          {{"difference", to_json(reduce_mod_F(t4))}}),
                   expect(q == RatFunc(q.vars(), Rational(1)), "Q12 - Q21 = 1", {{"difference", to_json(q)}})},
                  d.str());
}

Outcome moduli_t16(const CheckContext& ctx) {
    auto g = [](const char* n) { return generator(n).value; };
    RatFunc d = g("T16").pow(2) - g("T12") * g("T20");
    std::mt19937 rng(ctx.config().seed + 3);
    const char* names[5] = {"T4", "T8", "T12", "T16", "T20"};
    std::vector<std::vector<Rational>> rows;
    while (rows.size() < 6) {
        auto p = random_point(rng, frame_table()->size());
        if (delta_poly().evaluate(p) == 0) continue;
        std::vector<Rational> r;
        for (const char* n : names) r.push_back(g(n).evaluate(p));
        rows.push_back(r);
    }
    std::size_t rk = rank(RFMatrix::from_rationals(rows, t_table()));
    return all_of({expect(d.is_zero(), "T16^2 = T12 T20", {{"difference", to_json(d)}}),
                   expect(rk == 5, "no linear relation among the T's at 6 points", {{"rank", rk}})});
}

Outcome moduli_equivariance(const CheckContext& ctx) {
    std::mt19937 rng(ctx.config().seed + 4);
    std::uniform_int_distribution<int> d(-4, 4);
    auto vt = frame_table();
    FramePoint p = symbolic_frame();
    std::vector<Outcome> parts;
    for (int n = 0; n < 3; ++n) {
        RFMatrix k(2, 2, vt), sym(2, 2, vt);
        do {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) k(i, j) = RatFunc(vt, Rational(d(rng)));
        } while (det(k).is_zero());
        sym(0, 0) = RatFunc(vt, Rational(d(rng)));
        sym(1, 1) = RatFunc(vt, Rational(d(rng)));
        sym(0, 1) = sym(1, 0) = RatFunc(vt, Rational(d(rng)));
        RFMatrix kp = sym * inverse(k.transpose());  // k kp^tr = sym
        GroupElement g = GroupElement::from_blocks(k, kp);
        FramePoint q = g_action(p, g);
        RatFunc dk = det(k);
        std::string tag = "g" + std::to_string(n + 1);
        parts.push_back(match(q.delta(), dk * p.delta(), tag + ": delta(t.g) = det(k) delta(t)"));
        for (int i = 1; i <= 5; ++i) {
            CatalogEntry e = generator("T" + std::to_string(4 * i));
            RatFunc at_q = RatFunc(e.numerator) / q.delta().pow(i);
            parts.push_back(match(at_q, dk.pow(-i) * e.value, tag + ": T" + std::to_string(4 * i) + " equivariance"));
        }
        parts.push_back(expect(check_frame(q, true).ok, tag + ": t.g stays on F = 0"));
    }
    // t -> a.t rescales Delta by a^-40
    auto tv = t_table();
    RatFunc delta(discriminant(HyperellipticFamily::quintic()));
    Rational a = frac(3, 2);
    auto ta = gm_action(std::array<RatFunc, 4>{RatFunc(MPoly::variable(tv, "t2")), RatFunc(MPoly::variable(tv, "t3")),
                         RatFunc(MPoly::variable(tv, "t4")), RatFunc(MPoly::variable(tv, "t5"))},
                        RatFunc(tv, a));
    RatFunc moved = delta;
    for (std::size_t i = 0; i < 4; ++i) moved = moved.substitute(i, ta[i]);
    parts.push_back(match(moved, RatFunc(tv, a).pow(-40) * delta, "Delta(t.a) = a^-40 Delta(t)"));
    return all_of(parts);
}

Outcome moduli_period_relations(const CheckContext& ctx) {
    const auto& g = ctx.golden("period");
    auto rels = period_relations();
    std::vector<Outcome> parts;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        std::string n = "rel" + std::to_string(i + 1);
        std::string where = "(" + std::to_string(rels[i].i) + "," + std::to_string(rels[i].j) + ")";
        parts.push_back(match(RatFunc(rels[i].lhs), g.ratfunc(n + "_lhs"), "left side of entry " + where));
        parts.push_back(match(rels[i].rhs.rebase(period_table()), g.ratfunc(n + "_rhs"), "right side of entry " + where));
    }
    return all_of(parts, std::to_string(rels.size()) + " relations");
}

Outcome moduli_period_frame(const CheckContext& ctx) {
    const auto& g = ctx.golden("period");
    std::vector<RatFunc> a;
    const auto& row = g.matrix("T4i_a");
    for (std::size_t j = 0; j < row.cols(); ++j) a.push_back(row(0, j));
    PeriodFrameReport rep = period_frame_check(g.matrix("S"), a);
    return all_of({match(period_S0(), g.matrix("S0"), "S0"), match(period_g(), g.matrix("g"), "g"),
                   expect(rep.block_shape, "g block shape"),
                   expect(rep.symmetric_mod_relations, "k k'^tr symmetric modulo the period relations"),
                   expect(rep.s_matches, "S = g^-tr S0", {{"computed", to_json(rep.s)}}),
                   expect(rep.delta_identity, "delta(S) = 1/(x31 x42 - x32 x41)"),
                   expect(rep.t_identities, "T_4i(t, S) = a_i (x31 x42 - x41 x32)^i")});
}

// ---------------------------------------------------------------- igusa

Outcome igusa_explicit_check(const CheckContext& ctx) {
    const auto& g = ctx.golden("igusa");
    InvariantSet x = igusa_explicit();
    return all_of({match(RatFunc(x.a), g.ratfunc("A"), "A"), match(RatFunc(x.b), g.ratfunc("B"), "B"),
                   match(RatFunc(x.c), g.ratfunc("C"), "C"), match(RatFunc(x.e), g.ratfunc("E"), "E")});
}

Outcome igusa_discriminant(const CheckContext&) {
    MPoly delta = discriminant(HyperellipticFamily::quintic());
    InvariantSet tr = igusa_transvectant();
    return all_of({match(RatFunc(igusa_explicit().d), RatFunc(delta), "D (explicit) = Delta"),
                   match(RatFunc(tr.d), RatFunc(delta), "I10/3125 = Delta")});
}

Outcome igusa_transvectant_check(const CheckContext&) {
    ClassicalInvariants ci = classical_invariants(quintic_sextic());
    InvariantSet x = igusa_explicit();
    auto c = igusa_constants(x, ci);
    const std::array<Rational, 5> stored = {frac(-1, 2), frac(1, 4), frac(-1, 2), frac(1, 3125),
                                            Rational(384433593750)};
    std::vector<std::string> shown;
    for (std::size_t i = 0; i < 5; ++i) shown.push_back(std::string(kInvariantNames[i]) + " = " + c[i].get_str());
    std::vector<Outcome> parts;
    for (std::size_t i = 0; i < 5; ++i)
        parts.push_back(expect(c[i] != 0 && c[i] == stored[i], std::string(kInvariantNames[i]) + " proportional",
                               {{"constant", c[i].get_str()}}));
    InvariantSet tr = igusa_transvectant();
    for (std::size_t i = 0; i < 5; ++i)
        parts.push_back(match(RatFunc(tr[i]), RatFunc(x[i]), std::string(kInvariantNames[i]) + " via transvectants"));
    return all_of(parts, "constants " + join(shown) + " (times I2, I4, I6, I10, R)");
}

// ---------------------------------------------------------------- resnikoff

std::vector<Rational> golden_constants(const RatFunc& rhs, const std::vector<std::string>& terms) {
    auto vt = golden_table("hatted");
    RatFunc f = on(rhs, vt);
    if (!f.is_polynomial()) throw AlgebraError("right-hand side is not a polynomial in the hatted forms");
    MPoly p = f.as_polynomial();
    std::vector<Rational> out;
    MPoly rebuilt(vt);
    for (const auto& t : terms) {
        MPoly m = parse_poly(t, vt);
        Rational c = 0;
        for (const auto& term : p.terms())
            if (term.mono == m.leading().mono) c = term.coeff;
        out.push_back(c);
        rebuilt += m.scaled(c);
    }
    if (!(rebuilt == p)) throw AlgebraError("right-hand side has terms outside " + join(terms));
    return out;
}

struct ResnikoffRun {
    unsigned seed = 0;
    std::vector<ResnikoffIdentity> ids;
};

const ResnikoffIdentity& resnikoff_result(const CheckContext& ctx, const std::string& form) {
    static std::optional<ResnikoffRun> run;
    if (!run || run->seed != ctx.config().seed) {
        const auto& g = ctx.golden("resnikoff");
        std::map<std::string, std::vector<Rational>> consts;
        for (const auto& c : resnikoff_cases()) consts[c.form] = golden_constants(g.ratfunc("DRes_" + c.form), c.terms);
        run = ResnikoffRun{ctx.config().seed, verify_resnikoff_suite(mf(), ctx.config().seed, consts)};
    }
    for (const auto& id : run->ids)
        if (id.name == "DRes " + form) return id;
    throw AlgebraError("no Resnikoff identity for " + form);
}

std::function<Outcome(const CheckContext&)> resnikoff_check(std::string form) {
    return [form](const CheckContext& ctx) {
        const ResnikoffIdentity& id = resnikoff_result(ctx, form);
        std::vector<std::string> c, f;
        for (const auto& x : id.constants) c.push_back(x.get_str());
        for (const auto& x : id.fitted) f.push_back(x.get_str());
        std::string detail = "constants (" + join(c) + ")";
        if (!id.holds) {
            detail += "; sample point on F = 0 " + std::string(id.precheck ? "agrees" : "disagrees");
            if (!f.empty())
                detail += "; constants fitted at points of F = 0: (" + join(f) + ")" +
                          (id.fitted_holds ? ", these hold symbolically" : ", not an identity either");
        }
        if (id.holds) return pass(detail);
        RatFunc r = id.residual.to_ratfunc();
        Json res = {{"item", id.name}, {"residual_terms", r.num().size()}, {"fitted", f},
                    {"fitted_holds", id.fitted_holds}};
        if (r.num().size() <= 400) res["residual"] = to_json(r);
        return fail(detail, res);
    };
}

// ---------------------------------------------------------------- monodromy

Outcome mono_generators(const CheckContext& ctx) {
    const auto& g = ctx.golden("monodromy");
    const auto& gens = monodromy_generators();
    auto pl = picard_lefschetz_generators(IntersectionData::quintic());
    std::vector<Outcome> parts;
    const std::string abcd = "ABCD";
    for (std::size_t i = 0; i < 4; ++i) {
        std::string n(1, abcd[i]);
        SpMatrix want = to_sp(g.matrix(n));
        parts.push_back(expect(i < pl.size() && pl[i] == want, n + " from Picard-Lefschetz",
                               {{"computed", i < pl.size() ? pl[i].to_string() : ""}, {"printed", want.to_string()}}));
        parts.push_back(expect(gens.at(abcd[i]) == want, n + " in the generator table"));
    }
    SpMatrix e = to_sp(g.matrix("E"));
    parts.push_back(expect(gens.at('E') == e, "E", {{"computed", gens.at('E').to_string()}, {"printed", e.to_string()}}));
    return all_of(parts);
}

Outcome mono_abcd5(const CheckContext&) {
    SpMatrix m = evaluate_word("(ABCD)^5");
    return expect(m == -SpMatrix::identity(), "(ABCD)^5 = -I", {{"computed", m.to_string()}});
}

Outcome mono_relations(const CheckContext& ctx) {
    const auto& rels = ctx.golden("monodromy").text("relations");
    std::vector<Outcome> parts;
    for (const auto& line : rels) {
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            parts.push_back(fail("malformed relation " + line, {{"item", line}}));
            continue;
        }
        std::string l = line.substr(0, eq), r = line.substr(eq + 1);
        SpMatrix a = evaluate_word(l), b = evaluate_word(r);
        parts.push_back(expect(a == b, line, {{"lhs", a.to_string()}, {"rhs", b.to_string()}}));
    }
    return all_of(parts, std::to_string(rels.size()) + " identities");
}

Outcome mono_mod2(const CheckContext&) {
    Mod2Report r = mod2_analysis();
    std::vector<std::string> tr;
    for (auto [a, b] : r.transpositions) tr.push_back("(" + std::to_string(a) + std::to_string(b) + ")");
    std::string detail = "orders " + std::to_string(r.gamma_order) + " and " + std::to_string(r.full_order) + ", index " +
                         std::to_string(r.index) + ", A..E act as " + join(tr, " ");
    Json res = {{"gamma_order", r.gamma_order}, {"full_order", r.full_order}, {"index", r.index}};
    return all_of({expect(r.gamma_order == 120, "mod 2 image of <A,B,C,D> has order 120", res),
                   expect(r.full_order == 720, "mod 2 image of <A,..,E> has order 720", res),
                   expect(r.index == 6, "index 6", res),
                   expect(r.transpositions_ok, "generators act as adjacent transpositions", res)},
                  detail);
}

Outcome mono_cosets(const CheckContext& ctx) {
    const auto& txt = ctx.golden("monodromy").text("coset_representatives");
    std::vector<std::string> reps;
    for (const auto& line : txt) {
        std::string cur;
        for (char c : line + ",") {
            if (c == ',') {
                if (!cur.empty()) reps.push_back(cur);
                cur.clear();
            } else if (c != ' ') {
                cur += c;
            }
        }
    }
    CosetReport r = coset_representatives_check(ctx.config().seed, reps);
    Json res = {{"representatives", reps}, {"distinct", r.distinct}};
    return all_of({expect(reps.size() == 6, "six representatives", res),
                   expect(r.distinct, "pairwise distinct cosets", res),
                   expect(r.identity_trivial, "one representative lies in Gamma", res),
                   expect(r.random_products_ok, "random products stay in their coset", res)},
                  join(reps));
}

std::vector<CheckSpec> build_registry() {
    using V = std::vector<std::string>;
    std::vector<CheckSpec> r = {
        {"algebra.canonical-form", "algebra", 8, "canonical form of rational functions", {}, algebra_canonical},
        {"algebra.serialization", "algebra", 8, "json round trips and golden files", {}, algebra_serialization},
        {"algebra.symplectic", "algebra", 8, "monodromy words stay in Sp(4, Z)", {}, algebra_symplectic},
        {"gm.discriminant", "gm", 1, "5^5 Delta of the quintic family", V{"discriminant"}, gm_discriminant},
        {"gm.inverses", "gm", 2, "printed inverses of the Gauss-Manin matrices", V{"gm_inverse"}, gm_inverses},
        {"gm.omega-compat", "gm", 2, "dOmega = B Omega + Omega B^tr", {}, gm_omega},
        {"gm.flatness", "gm", 8, "integrability of the connection", {}, gm_flatness},
        {"cup.omega", "cup", 3, "cup product matrix Omega", V{"cup"}, cup_omega},
        {"cup.correction-polys", "cup", 3, "polynomials P2, P3 at infinity", V{"cup"}, cup_corrections},
        {"cup.sextic-residues", "cup", 3, "residues of x^k dx/y at infinity on the sextic", V{"cup"}, cup_sextic},
        {"vf.system-kernel", "vf", 4, "Euler vector in the kernel of the t-system", {}, vf_kernel},
        {"vf.connection", "vf", 4, "matrices E_-2, E_-4, E_-6", V{"vf_connection"}, vf_connection},
        {"vf.t-components", "vf", 4, "t-components R_{k,m}", V{"vf_connection"}, vf_tcomponents},
        {"vf.fields", "vf", 4, "modular vector fields R_1, R_2, R_3", V{"vf_fields"}, vf_fields_check},
        {"vf.defining-equation", "vf", 4, "dS + S E(k) = C_k S modulo F", {}, vf_defining},
        {"vf.tangency", "vf", 4, "dF(R_k)/F and dDelta(R_k)/Delta", V{"vf_tangency", "vf_connection"}, vf_tangency},
        {"vf.jh-identities", "vf", 4, "derivatives of J_k and H_k along R_kc", {}, vf_jh},
        {"vf.leibniz", "vf", 8, "Leibniz rule for R_k", {}, vf_leibniz},
        {"moduli.generators", "moduli", 5, "153 coordinate functions and two redundancies", {}, moduli_generators},
        {"moduli.t16-relation", "moduli", 5, "T16^2 = T12 T20", {}, moduli_t16},
        {"moduli.equivariance", "moduli", 5, "action of the parabolic group and of G_m", {}, moduli_equivariance},
        {"moduli.period-relations", "moduli", 5, "six relations between the periods x_ij", V{"period"},
         moduli_period_relations},
        {"moduli.period-frame", "moduli", 5, "S = g^-tr S0 and T_4i at the period point", V{"period"},
         moduli_period_frame},
        {"igusa.explicit", "igusa", 6, "Igusa invariants A, B, C, E", V{"igusa"}, igusa_explicit_check},
        {"igusa.discriminant", "igusa", 6, "D is the discriminant", {}, igusa_discriminant},
        {"igusa.transvectant", "igusa", 6, "A..E from transvectants", {}, igusa_transvectant_check},
    };
    for (const auto& c : resnikoff_cases())
        r.push_back({"resnikoff." + c.form, "resnikoff", 6, "D^Res applied to " + c.form, V{"resnikoff"},
                     resnikoff_check(c.form)});
    std::vector<CheckSpec> mono = {
        {"monodromy.generators", "monodromy", 7, "Picard-Lefschetz generators A, B, C, D and E", V{"monodromy"},
         mono_generators},
        {"monodromy.abcd5", "monodromy", 7, "(ABCD)^5 = -I", {}, mono_abcd5},
        {"monodromy.relations", "monodromy", 7, "word identities in Gamma", V{"monodromy"}, mono_relations},
        {"monodromy.mod2", "monodromy", 7, "mod 2 image and index", {}, mono_mod2},
        {"monodromy.cosets", "monodromy", 7, "coset representatives of Gamma", V{"monodromy"}, mono_cosets},
    };
    r.insert(r.end(), mono.begin(), mono.end());
    return r;
}

}  // namespace

// ---------------------------------------------------------------- runner

const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> r = build_registry();
    return r;
}

const std::vector<std::string>& check_groups() {
    static const std::vector<std::string> g = {"algebra", "gm", "cup", "vf", "moduli", "igusa", "resnikoff", "monodromy"};
    return g;
}

bool selected(const CheckSpec& c, const std::vector<std::string>& only) {
    if (only.empty()) return true;
    return std::any_of(only.begin(), only.end(), [&](const std::string& s) { return s == c.group || s == c.id; });
}

void validate_selection(const std::vector<std::string>& only) {
    for (const auto& s : only) {
        bool known = std::any_of(check_registry().begin(), check_registry().end(),
                                 [&](const CheckSpec& c) { return s == c.group || s == c.id; });
        if (!known) throw ConfigError("no check or group named '" + s + "'");
    }
}

VerificationReport run_check(const CheckSpec& c, const CheckContext& ctx) {
    VerificationReport rep;
    rep.id = c.id;
    rep.anchor = c.anchor;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& g : c.golden)
        if (!ctx.store().has(g)) {
            rep.status = Status::skipped;
            rep.detail = "missing golden file " + ctx.store().path(g).string();
            return rep;
        }
    try {
        Outcome o = c.run(ctx);
        rep.status = o.ok ? Status::pass : Status::fail;
        rep.detail = o.detail;
        rep.residual = o.residual;
        if (!o.ok && !rep.residual) rep.residual = Json{{"item", c.id}};
    } catch (const GoldenMissing& e) {
        rep.status = Status::skipped;
        rep.detail = e.what();
    } catch (const std::exception& e) {
        rep.status = Status::fail;
        rep.detail = std::string("error: ") + e.what();
        rep.residual = Json{{"error", e.what()}};
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<VerificationReport> run_all(const CheckConfig& cfg,
                                        const std::function<void(const VerificationReport&)>& on_done) {
    validate_selection(cfg.only);
    CheckContext ctx(cfg);
    std::vector<VerificationReport> out;
    for (const auto& c : check_registry()) {
        if (!selected(c, cfg.only)) continue;
        out.push_back(run_check(c, ctx));
        if (on_done) on_done(out.back());
    }
    return out;
}

int exit_code(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.status != Status::pass) return 1;
    return 0;
}

ConnectionMatrix cached_connection(const HyperellipticFamily& fam, const fs::path& cache_dir) {
    fs::path file = cache_dir / (fam.hash() + ".json");
    if (fs::exists(file)) {
        try {
            std::ifstream in(file);
            Json j = Json::parse(in);
            ConnectionMatrix c;
            c.degree = j.at("degree").get<int>();
            for (const auto& [m, b] : j.at("b").items()) c.b.emplace(std::stoi(m), rfmatrix_from_json(b));
            if (c.degree == fam.degree()) return c;
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring unreadable cache " << file.string() << ": " << e.what() << "\n";
        }
    }
    ConnectionMatrix c = fam.degree() == 5 ? ModularFields::instance().gm() : gauss_manin(fam);
    Json j = {{"degree", c.degree}, {"family", fam.hash()}, {"b", Json::object()}};
    for (const auto& [m, b] : c.b) j["b"][std::to_string(m)] = to_json(b);
    fs::create_directories(cache_dir);
    std::ofstream(file) << canonical_dump(j);
    return c;
}

}  // namespace genus2
