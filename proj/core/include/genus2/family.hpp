#pragma once

#include "genus2/localized.hpp"
#include "genus2/rfmatrix.hpp"
#include "genus2/upoly.hpp"

#include <map>
#include <string>

namespace genus2 {

// y^2 = x^d + t2 x^(d-2) + ... + td, the x^(d-1) coefficient fixed to zero.
// t_k has weight 2k.
class HyperellipticFamily {
public:
    explicit HyperellipticFamily(int degree);
    static HyperellipticFamily quintic() { return HyperellipticFamily(5); }
    static HyperellipticFamily sextic() { return HyperellipticFamily(6); }

    int degree() const { return d_; }
    int genus() const { return (d_ - 1) / 2; }
    const VarTablePtr& vars() const { return vars_; }
    std::size_t param_index(int k) const;
    // Dimension of H^1 of the affine curve: basis x^0 .. x^(d-2) dx/y.
    std::size_t affine_rank() const { return std::size_t(d_ - 1); }
    const UPoly& f() const { return f_; }
    std::string name() const;
    // Stable key for caches, e.g. "hyperelliptic-d5-v1".
    std::string hash() const;

private:
    int d_;
    VarTablePtr vars_;
    UPoly f_;
};

// res(f, f') / d^d; for the quintic 5^5 * Delta is the classical discriminant.
MPoly discriminant(const HyperellipticFamily& fam);

// Reduces the class of P(x) dx / y^k (k = 1 or 3) in H^1 of the affine curve
// to coordinates on x^0 .. x^(d-2) dx/y.
class FormReducer {
public:
    explicit FormReducer(const HyperellipticFamily& fam);
    std::vector<RatFunc> reduce(const UPoly& p, int y_power) const;
    const ExtGcd& bezout() const { return eg_; }

private:
    std::vector<RatFunc> reduce1(UPoly p) const;
    const HyperellipticFamily* fam_;
    UPoly df_;
    ExtGcd eg_;
};

std::vector<RatFunc> reduce_form(const UPoly& p, int y_power, const HyperellipticFamily& fam);

// Row convention: (B_m)_{ij} is the coefficient of omega_j in
// d/dt_m omega_i, basis omega_i = x^(i-1) dx/y.
struct ConnectionMatrix {
    int degree = 0;
    std::map<int, RFMatrix> b;  // keyed by m = 2..d

    const RFMatrix& operator[](int m) const { return b.at(m); }
    // 2x2 blocks numbered 1 2 / 3 4 as in [[b1, b2], [b3, b4]].
    RFMatrix block(int m, int which) const;
};

ConnectionMatrix gauss_manin(const HyperellipticFamily& fam);

// Integrability d B_n/dt_m - d B_m/dt_n + [B_n, B_m] for every pair m < n;
// returns the pairs whose curvature does not vanish.
std::vector<std::pair<int, int>> flatness_failures(const ConnectionMatrix& c, const HyperellipticFamily& fam);

// Reversal permutation omega_i <-> omega_(n+1-i) and conjugation by it.
RFMatrix basis_reversal(std::size_t n, const VarTablePtr& vars);
RFMatrix conjugate(const RFMatrix& b, const RFMatrix& s);

}  // namespace genus2
