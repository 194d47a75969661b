#pragma once

#include "genus2/mpoly.hpp"

#include <string>

namespace genus2 {

// Quotient of polynomials in canonical form: gcd(num, den) = 1 and den is a
// primitive integer polynomial with positive leading coefficient.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(VarTablePtr vars) : num_(vars), den_(vars, Rational(1)) {}
    RatFunc(VarTablePtr vars, const Rational& c) : num_(vars, c), den_(vars, Rational(1)) {}
    RatFunc(const MPoly& p);  // NOLINT(google-explicit-constructor)
    RatFunc(const MPoly& num, const MPoly& den);

    // Trusted constructor: caller guarantees canonical form.
    static RatFunc from_canonical(MPoly num, MPoly den);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    VarTablePtr vars() const { return common_table(num_.vars(), den_.vars()); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;
    // Numerator as polynomial; throws when the denominator is not constant.
    MPoly as_polynomial() const;

    RatFunc derivative(std::size_t i) const;
    RatFunc derivative(const std::string& name) const { return derivative(vars()->require(name)); }
    Rational evaluate(std::span<const Rational> point) const;
    RatFunc substitute(std::size_t i, const RatFunc& v) const;
    RatFunc rebase(const VarTablePtr& target) const;
    RatFunc inverse() const;
    RatFunc pow(long e) const;
    std::string to_string() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const Rational& c, const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const Rational& c) { return c * a; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    void canonicalize();
    MPoly num_;
    MPoly den_;
};

}  // namespace genus2
