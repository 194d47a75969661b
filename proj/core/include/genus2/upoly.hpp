#pragma once

#include "genus2/rfmatrix.hpp"

#include <utility>
#include <vector>

namespace genus2 {

// Univariate polynomial in x over Q(t). Coefficients ascending, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(VarTablePtr vars) : vars_(std::move(vars)) {}
    UPoly(VarTablePtr vars, std::vector<RatFunc> coeffs);
    static UPoly x(VarTablePtr vars);
    static UPoly monomial(VarTablePtr vars, std::size_t k, const RatFunc& c);
    static UPoly constant(const RatFunc& c);

    const VarTablePtr& vars() const { return vars_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    RatFunc coeff(std::size_t k) const;
    const RatFunc& lc() const { return c_.back(); }
    const std::vector<RatFunc>& coeffs() const { return c_; }

    UPoly derivative() const;
    UPoly monic() const;
    UPoly coefficient_derivative(std::size_t var) const;
    RatFunc evaluate(const RatFunc& x) const;
    std::string to_string(const std::string& x = "x") const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const RatFunc& c, const UPoly& a);
    friend UPoly operator-(const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    VarTablePtr vars_;
    std::vector<RatFunc> c_;
};

// a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

struct ExtGcd {
    UPoly g, u, v;  // u*a + v*b = g, g monic
};
ExtGcd ext_gcd(const UPoly& a, const UPoly& b);

RFMatrix sylvester_matrix(const UPoly& a, const UPoly& b);
RatFunc resultant(const UPoly& a, const UPoly& b);

}  // namespace genus2
