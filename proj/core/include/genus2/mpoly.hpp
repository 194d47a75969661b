#pragma once

#include "genus2/rational.hpp"
#include "genus2/var_table.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace genus2 {

struct Monomial {
    std::array<std::uint8_t, kMaxVars> exp{};
    std::uint16_t degree = 0;

    std::uint8_t operator[](std::size_t i) const { return exp[i]; }
    void set(std::size_t i, unsigned e);
    bool divides(const Monomial& m) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // Caller guarantees b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree == b.degree && a.exp == b.exp;
    }
};

// Graded lexicographic order, variable 0 most significant.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return std::memcmp(a.exp.data(), b.exp.data(), kMaxVars) < 0;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

struct Term {
    Monomial mono;
    Rational coeff;
};

// Sparse polynomial over Q. Terms are kept strictly decreasing in grlex with
// nonzero coefficients, so structural equality is mathematical equality.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(VarTablePtr vars) : vars_(std::move(vars)) {}
    MPoly(VarTablePtr vars, const Rational& c);
    // Terms in any order, duplicates and zeros allowed.
    MPoly(VarTablePtr vars, std::vector<Term> terms);

    static MPoly variable(VarTablePtr vars, std::size_t i);
    static MPoly variable(VarTablePtr vars, const std::string& name);
    static MPoly monomial(VarTablePtr vars, const Monomial& m, const Rational& c);

    const VarTablePtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0); }
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_value() const;
    const Term& leading() const { return terms_.front(); }
    const Rational& leading_coeff() const { return terms_.front().coeff; }

    int total_degree() const;
    int degree_in(std::size_t i) const;
    int min_degree_in(std::size_t i) const;
    long weighted_degree() const;
    // nullopt when not weighted homogeneous; zero polynomial reports 0.
    std::optional<long> homogeneous_weight() const;
    bool involves(std::size_t i) const { return degree_in(i) > 0; }

    MPoly derivative(std::size_t i) const;
    MPoly derivative(const std::string& name) const { return derivative(vars_->require(name)); }
    Rational evaluate(std::span<const Rational> point) const;
    MPoly evaluate_at(std::size_t i, const Rational& v) const;
    MPoly substitute(std::size_t i, const MPoly& v) const;
    std::vector<MPoly> coefficients_in(std::size_t i) const;
    MPoly rebase(const VarTablePtr& target) const;
    MPoly pow(unsigned e) const;

    // Positive rational c with this = c * (integer primitive poly), sign
    // absorbed so the primitive part has positive leading coefficient.
    Rational content() const;
    MPoly primitive_part() const;
    MPoly scaled(const Rational& c) const;
    MPoly times_monomial(const Monomial& m, const Rational& c) const;
    Monomial monomial_gcd() const;
    MPoly divide_monomial(const Monomial& m) const;

    std::string to_string() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rational& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    friend bool operator==(const MPoly& a, const MPoly& b);

private:
    void normalize();
    VarTablePtr vars_;
    std::vector<Term> terms_;
};

// Resolves the table of a binary operation; null tables adopt the other.
VarTablePtr common_table(const VarTablePtr& a, const VarTablePtr& b);

// q with a = q*b, or nullopt when b does not divide a.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

}  // namespace genus2
