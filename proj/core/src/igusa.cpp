#include "genus2/igusa.hpp"

#include "genus2/expr.hpp"
#include "genus2/family.hpp"

namespace genus2 {

namespace {

Rational factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return Rational(r);
}

Rational binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

BinaryForm pow_d(BinaryForm f, int nx, int ny) {
    for (int i = 0; i < nx; ++i) f = f.dx();
    for (int i = 0; i < ny; ++i) f = f.dy();
    return f;
}

// c with a = c b, zero when b = 0 or a is not a multiple.
Rational ratio(const MPoly& a, const MPoly& b) {
    if (b.is_zero() || a.is_zero()) return Rational(0);
    Rational c = a.leading_coeff() / b.leading_coeff();
    return a == b.scaled(c) ? c : Rational(0);
}

const char* kA = "-3*t2^2 - 20*t4";
const char* kB = "-3*t2*t3^2 + 9*t2^2*t4 - 20*t4^2 + 75*t3*t5";
const char* kC =
    "12*t2^3*t3^2 + 18*t3^4 - 36*t2^4*t4 - 13*t2*t3^2*t4 - 88*t2^2*t4^2 + 160*t4^3 - 165*t2^2*t3*t5"
    " - 800*t3*t4*t5 - 1125*t2*t5^2";
const char* kE =
    "729*t2^10*t5^2 - 486*t2^9*t3*t4*t5 + 108*t2^8*t3^3*t5 + 81*t2^8*t3^2*t4^2 - 18225*t2^8*t4*t5^2"
    " - 36*t2^7*t3^4*t4 + 12150*t2^7*t3^2*t5^2 + 10800*t2^7*t3*t4^2*t5 + 4*t2^6*t3^6"
    " - 9720*t2^6*t3^3*t4*t5 - 1800*t2^6*t3^2*t4^3 + 135000*t2^6*t4^2*t5^2 + 1584*t2^5*t3^5*t5"
    " + 2015*t2^5*t3^4*t4^2 - 175500*t2^5*t3^2*t4*t5^2 - 60000*t2^5*t3*t4^3*t5 + 928125*t2^5*t5^4"
    " - 623*t2^4*t3^6*t4 + 60000*t2^4*t3^4*t5^2 + 92500*t2^4*t3^3*t4^2*t5 + 10000*t2^4*t3^2*t4^4"
    " - 1012500*t2^4*t3*t4*t5^3 - 250000*t2^4*t4^3*t5^2 + 59*t2^3*t3^8 - 45050*t2^3*t3^5*t4*t5"
    " - 17500*t2^3*t3^4*t4^3 + 225000*t2^3*t3^3*t5^3 + 850000*t2^3*t3^2*t4^2*t5^2"
    " - 2812500*t2^3*t4*t5^4 + 5700*t2^2*t3^7*t5 + 10825*t2^2*t3^6*t4^2 - 478125*t2^2*t3^4*t4*t5^2"
    " - 50000*t2^2*t3^3*t4^3*t5 + 1875000*t2^2*t3^2*t5^4 + 1250000*t2^2*t3*t4^2*t5^3"
    " - 2610*t2*t3^8*t4 + 93750*t2*t3^6*t5^2 + 32500*t2*t3^5*t4^2*t5 - 1187500*t2*t3^3*t4*t5^3"
    " + 216*t3^10 - 9000*t3^7*t4*t5 + 625*t3^6*t4^3 + 175000*t3^5*t5^3 + 15625*t3^4*t4^2*t5^2"
    " - 390625*t3^2*t4*t5^4 - 9765625*t5^6";

}  // namespace

BinaryForm::BinaryForm(std::vector<MPoly> coeffs) : a_(std::move(coeffs)) {
    if (a_.empty()) throw AlgebraError("binary form needs at least one coefficient");
}

BinaryForm BinaryForm::dx() const {
    int n = degree();
    if (n == 0) return BinaryForm({a_[0] * Rational(0)});
    std::vector<MPoly> r;
    for (int i = 0; i < n; ++i) r.push_back(a_[std::size_t(i)] * Rational(n - i));
    return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::dy() const {
    int n = degree();
    if (n == 0) return BinaryForm({a_[0] * Rational(0)});
    std::vector<MPoly> r;
    for (int i = 1; i <= n; ++i) r.push_back(a_[std::size_t(i)] * Rational(i));
    return BinaryForm(std::move(r));
}

bool BinaryForm::is_zero() const {
    for (auto& c : a_)
        if (!c.is_zero()) return false;
    return true;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) throw AlgebraError("adding binary forms of different degree");
    std::vector<MPoly> r;
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.push_back(a.a_[i] + b.a_[i]);
    return BinaryForm(std::move(r));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<MPoly> r(a.a_.size() + b.a_.size() - 1, MPoly(common_table(a.a_[0].vars(), b.a_[0].vars())));
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        for (std::size_t j = 0; j < b.a_.size(); ++j) r[i + j] += a.a_[i] * b.a_[j];
    return BinaryForm(std::move(r));
}

BinaryForm operator*(const Rational& c, const BinaryForm& a) {
    std::vector<MPoly> r;
    for (auto& x : a.a_) r.push_back(x * c);
    return BinaryForm(std::move(r));
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int k) {
    int m = f.degree(), n = g.degree();
    if (k > m || k > n) throw AlgebraError("transvectant order exceeds a form degree");
    Rational norm = factorial(m - k) * factorial(n - k) / (factorial(m) * factorial(n));
    BinaryForm r;
    for (int i = 0; i <= k; ++i) {
        BinaryForm term = pow_d(f, k - i, i) * pow_d(g, i, k - i);
        Rational c = binom(k, i) * norm;
        if (i % 2) c = -c;
        term = c * term;
        r = i == 0 ? term : r + term;
    }
    return r;
}

BinaryForm quintic_sextic() {
    auto vt = t_table();
    auto t = [&](const char* n) { return MPoly::variable(vt, n); };
    return BinaryForm({t("t5"), t("t4"), t("t3"), t("t2"), MPoly(vt), MPoly(vt, Rational(1)), MPoly(vt)});
}

const MPoly& InvariantSet::operator[](std::size_t i) const {
    switch (i) {
        case 0: return a;
        case 1: return b;
        case 2: return c;
        case 3: return d;
        case 4: return e;
    }
    throw AlgebraError("invariant index out of range");
}

ClassicalInvariants classical_invariants(const BinaryForm& f) {
    if (f.degree() != 6) throw AlgebraError("Igusa-Clebsch invariants need a sextic");
    BinaryForm i = transvectant(f, f, 4);
    BinaryForm dl = transvectant(i, i, 2);
    BinaryForm y1 = transvectant(f, i, 4);
    BinaryForm y2 = transvectant(i, y1, 2);
    BinaryForm y3 = transvectant(i, y2, 2);
    MPoly a = transvectant(f, f, 6)[0];
    MPoly b = transvectant(i, i, 4)[0];
    MPoly c = transvectant(i, dl, 4)[0];
    MPoly d = transvectant(y3, y1, 2)[0];
    if (a.is_zero() && b.is_zero()) throw AlgebraError("degenerate sextic in transvectant path");
    ClassicalInvariants ci;
    ci.i2 = a * Rational(-120);
    ci.i4 = a.pow(2) * Rational(-720) + b * Rational(6750);
    ci.i6 = a.pow(3) * Rational(8640) - a * b * Rational(108000) + c * Rational(202500);
    ci.i10 = a.pow(5) * Rational(-62208) + a.pow(3) * b * Rational(972000) + a.pow(2) * c * Rational(1620000) -
             a * b.pow(2) * Rational(3037500) - b * c * Rational(6075000) - d * Rational(4556250);
    // 3x3 determinant of the coefficient rows of y1, y2, y3
    const BinaryForm* y[3] = {&y1, &y2, &y3};
    auto e = [&](int r, int col) { return (*y[r])[std::size_t(col)]; };
    ci.r = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    return ci;
}

InvariantSet igusa_explicit() {
    auto vt = t_table();
    return {parse_poly(kA, vt), parse_poly(kB, vt), parse_poly(kC, vt),
            discriminant(HyperellipticFamily::quintic()), parse_poly(kE, vt)};
}

std::array<Rational, 5> igusa_constants(const InvariantSet& x, const ClassicalInvariants& ci) {
    return {ratio(x.a, ci.i2), ratio(x.b, ci.i4), ratio(x.c, ci.i6), ratio(x.d, ci.i10), ratio(x.e, ci.r)};
}

InvariantSet igusa_transvectant() {
    ClassicalInvariants ci = classical_invariants(quintic_sextic());
    // constants fixed once by igusa_constants(igusa_explicit(), ci)
    return {ci.i2 * frac(-1, 2), ci.i4 * frac(1, 4), ci.i6 * frac(-1, 2), ci.i10 * frac(1, 3125),
            ci.r * Rational(384433593750)};
}

}  // namespace genus2
