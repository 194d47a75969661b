#include "support.hpp"

#include "genus2/cup.hpp"
#include "genus2/family.hpp"

#include <doctest.h>

using namespace genus2;
using namespace testing;

namespace {

// x^5 + t2 x^3 + t3 x^2 + t4 x + t5, highest coefficient first
std::vector<Rational> quintic_at(const std::vector<Rational>& t) { return {1, 0, t[0], t[1], t[2], t[3]}; }

std::vector<Rational> derivative(const std::vector<Rational>& f) {
    std::vector<Rational> d;
    std::size_t n = f.size() - 1;
    for (std::size_t i = 0; i < n; ++i) d.push_back(f[i] * Rational(long(n - i)));
    return d;
}

const ConnectionMatrix& quintic_gm() {
    static const ConnectionMatrix c = gauss_manin(HyperellipticFamily::quintic());
    return c;
}

}  // namespace

TEST_CASE("discriminant agrees with the Sylvester resultant") {
    MPoly delta = discriminant(HyperellipticFamily::quintic());
    CHECK(delta.homogeneous_weight() == std::optional<long>(40));
    std::mt19937 rng(21);
    for (int n = 0; n < 8; ++n) {
        auto t = random_point(rng, 4);
        auto f = quintic_at(t);
        // disc = (-1)^(n(n-1)/2) Res(f, f') for monic f of degree 5, and Delta = disc / 5^5
        Rational oracle = resultant(f, derivative(f)) / 3125;
        CHECK(delta.evaluate(t) == oracle);
    }
    // (x - 1)^2 (x^3 + 2x^2 + x + 1) has a double root and no x^4 term
    std::vector<Rational> t = {-2, 1, -1, 1};
    CHECK(delta.evaluate(t) == 0);
}

TEST_CASE("Gauss-Manin connection is flat") {
    CHECK(flatness_failures(quintic_gm(), HyperellipticFamily::quintic()).empty());
}

TEST_CASE("Euler field acts diagonally by the weights of x^(i-1) dx/y") {
    // x, y, t_m have weights 2, 5, 2m, so x^(i-1)dx/y has weight 2i - 5 and
    // sum_m m t_m B_m must be diag of -(2i-5)/2, up to the overall convention.
    const auto& c = quintic_gm();
    auto vt = HyperellipticFamily::quintic().vars();
    RFMatrix e(4, 4, vt);
    for (int m = 2; m <= 5; ++m)
        e = e + RatFunc(MPoly::variable(vt, HyperellipticFamily::quintic().param_index(m)).scaled(Rational(m))) * c[m];
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) CHECK(e(i, j).is_zero());
    REQUIRE(e(0, 0).is_constant());
    Rational s = e(0, 0).constant_value() / frac(-(2 * 1 - 5), 2);
    CHECK((s == 1 || s == -1));
    for (std::size_t i = 0; i < 4; ++i) CHECK(e(i, i) == RatFunc(vt, s * frac(-(2 * long(i) + 2 - 5), 2)));
}

TEST_CASE("Omega is horizontal for the connection") {
    auto fam = HyperellipticFamily::quintic();
    RFMatrix om = cup_matrix(fam);
    for (int m = 2; m <= 5; ++m) {
        const RFMatrix& b = quintic_gm()[m];
        CHECK(om.derivative(fam.param_index(m)) == b * om + om * b.transpose());
    }
}

TEST_CASE("basis reversal is an involution") {
    auto vt = t_table();
    RFMatrix s = basis_reversal(4, vt);
    CHECK(s * s == RFMatrix::identity(4, vt));
    const RFMatrix& b = quintic_gm()[3];
    CHECK(conjugate(conjugate(b, s), s) == b);
}

TEST_CASE("cup product matrix is antisymmetric with determinant 256/9") {
    RFMatrix om = cup_matrix(HyperellipticFamily::quintic());
    CHECK(om.transpose() == -om);
    std::vector<Rational> p = {1, 2, 3, 4};
    CHECK(leibniz_det(evaluate(om, p)) == frac(256, 9));
    CHECK(det(om) == RatFunc(om.vars(), frac(256, 9)));
}

TEST_CASE("correction polynomials at infinity") {
    auto p = correction_polys(HyperellipticFamily::quintic());
    REQUIRE(p.size() == 4);
    CHECK(p[2].coeff(-1) == RatFunc(p[2].coeff(-1).vars(), Rational(-2)));
    CHECK(p[3].coeff(-3) == RatFunc(p[3].coeff(-3).vars(), frac(-2, 3)));
}

TEST_CASE("sextic residues at infinity") {
    auto fam = HyperellipticFamily::sextic();
    auto vt = fam.vars();
    auto e = expand_at_infinity(fam, 12);
    auto res = [&](std::size_t k) {
        return residue_at_infinity(UPoly::monomial(vt, k, RatFunc(vt, Rational(1))), 1, e);
    };
    CHECK(res(2) == RatFunc(vt, Rational(-1)));
    CHECK(res(3).is_zero());
    CHECK(res(4) == RatFunc(MPoly::variable(vt, "t2")) * frac(1, 2));
}
