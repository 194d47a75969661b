#include "support.hpp"

#include "genus2/catalog.hpp"
#include "genus2/period.hpp"
#include "genus2/vector_fields.hpp"

#include <doctest.h>

#include <map>

using namespace genus2;
using namespace testing;

namespace {

const ModularFields& mf() { return ModularFields::instance(); }

}  // namespace

TEST_CASE("modular vector fields obey the Leibniz rule") {
    std::mt19937 rng(31);
    auto vt = frame_table();
    for (int n = 0; n < 4; ++n) {
        RatFunc f(random_mpoly(rng, vt, 3)), g(random_nonzero(rng, vt, 2), random_nonzero(rng, vt, 1, 1));
        for (int k = 1; k <= 3; ++k) {
            const auto& r = mf().field(k);
            CHECK(r.apply(f * g) == f * r.apply(g) + g * r.apply(f));
        }
    }
}

TEST_CASE("field components are the derivatives of the coordinates") {
    auto vt = frame_table();
    for (int k = 1; k <= 3; ++k)
        for (std::size_t i = 0; i < vt->size(); ++i)
            CHECK(mf().field(k).apply(RatFunc(MPoly::variable(vt, i))) == mf().field(k)[i]);
}

TEST_CASE("Euler vector spans the kernel of the t-system") {
    const auto& tc = mf().tcomp();
    CHECK(rank(tc.system) == 3);
    auto vt = t_table();
    for (std::size_t r = 0; r < 4; ++r) {
        RatFunc s(vt);
        for (std::size_t m = 0; m < 4; ++m)
            s += tc.system(r, m) * RatFunc(MPoly::variable(vt, m).scaled(Rational(long(m) + 2)));
        CHECK(s.is_zero());
    }
}

TEST_CASE("F is tangent to every field") {
    for (int k = 1; k <= 3; ++k) {
        Tangency t = tangency_checks(mf(), k);
        CHECK(t.f_divides);
        CHECK(t.delta_divides);
    }
}

TEST_CASE("reduction modulo F") {
    auto vt = frame_table();
    CHECK(reduce_mod_F(frame_relation_F()).is_zero());
    MPoly t2 = MPoly::variable(vt, "t2");
    CHECK(reduce_mod_F(t2) == f_substitute_t2());
    MPoly p = frame_var("s11") * frame_relation_F() + frame_var("s42");
    CHECK(reduce_mod_F(p) == frame_var("s42"));
}

TEST_CASE("coordinate catalog") {
    auto all = enumerate_all_generators();
    CHECK(all.size() == 155);
    std::map<std::string, int> count;
    for (const auto& e : all) {
        ++count[e.family];
        // weighted degree of the numerator is 4 times the delta power
        CHECK(e.numerator.homogeneous_weight() == std::optional<long>(4L * e.delta_power));
        CHECK(e.value == RatFunc(e.numerator) / RatFunc(delta_poly()).pow(e.delta_power));
    }
    CHECK(count["T"] == 5);
    auto cat = enumerate_generators();
    CHECK(cat.size() == 153);
    CHECK(cat.removed == std::vector<std::string>{"T4", "Q12"});
}

TEST_CASE("T16^2 = T12 T20 numerically") {
    std::mt19937 rng(32);
    RatFunc t12 = generator("T12").value, t16 = generator("T16").value, t20 = generator("T20").value;
    for (int n = 0; n < 10; ++n) {
        auto p = random_point(rng, frame_table()->size());
        if (delta_poly().evaluate(p) == 0) continue;
        Rational a = t16.evaluate(p);
        CHECK(a * a == t12.evaluate(p) * t20.evaluate(p));
    }
}

TEST_CASE("symbolic frame satisfies the frame equations") {
    FramePoint p = symbolic_frame();
    CHECK(check_frame(p, true).ok);
    CHECK(p.delta() == RatFunc(delta_poly()));
    // S1 Omega2 S4^tr = I
    CHECK(p.s1() * omega2_matrix(frame_table()) * p.s4().transpose() == RFMatrix::identity(2, frame_table()));
}

TEST_CASE("delta is multiplied by det k under the parabolic group") {
    auto vt = frame_table();
    RFMatrix k(2, 2, vt), sym(2, 2, vt);
    k(0, 0) = RatFunc(vt, Rational(2));
    k(0, 1) = RatFunc(vt, Rational(1));
    k(1, 0) = RatFunc(vt, Rational(-1));
    k(1, 1) = RatFunc(vt, Rational(3));
    sym(0, 1) = sym(1, 0) = RatFunc(vt, Rational(5));
    sym(0, 0) = RatFunc(vt, Rational(1));
    GroupElement g = GroupElement::from_blocks(k, sym * inverse(k.transpose()));
    FramePoint q = g_action(symbolic_frame(), g);
    std::mt19937 rng(33);
    for (int n = 0; n < 5; ++n) {
        auto p = random_point(rng, vt->size());
        CHECK(q.delta().evaluate(p) == Rational(7) * delta_poly().evaluate(p));
    }
    RFMatrix bad = RFMatrix::identity(4, vt);
    bad(2, 0) = RatFunc(vt, Rational(1));
    CHECK_THROWS(GroupElement::from_matrix(bad));
}

TEST_CASE("period relations are the entries of X^tr Phi^-1 X") {
    auto rels = period_relations();
    REQUIRE(rels.size() == 6);
    auto vt = period_table();
    RFMatrix x = period_symbols();
    RFMatrix m = x.transpose() * inverse(phi_matrix(vt)) * x;
    for (const auto& r : rels) {
        CHECK(RatFunc(r.lhs) == m(std::size_t(r.i - 1), std::size_t(r.j - 1)));
        CHECK(r.rhs.rebase(vt) == omega_matrix(vt)(std::size_t(r.i - 1), std::size_t(r.j - 1)));
    }
}

TEST_CASE("period frame identities") {
    PeriodFrameReport r = period_frame_check();
    CHECK(r.ok());
}
