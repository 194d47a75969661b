#pragma once

#include "genus2/ratfunc.hpp"

#include <memory>
#include <vector>

namespace genus2 {

// Polynomial ring localized at a fixed list of nonzero polynomials
// ("atoms"): values num / prod atom_i^e_i. Denominators never need a gcd, which
// keeps long derivation chains cheap.
class LocalizedRing {
public:
    LocalizedRing(VarTablePtr vars, std::vector<MPoly> atoms);
    const VarTablePtr& vars() const { return vars_; }
    const std::vector<MPoly>& atoms() const { return atoms_; }
    const std::vector<MPoly>& atom_derivatives(std::size_t var) const { return datoms_.at(var); }

private:
    VarTablePtr vars_;
    std::vector<MPoly> atoms_;
    std::vector<std::vector<MPoly>> datoms_;
};

using LocalizedRingPtr = std::shared_ptr<const LocalizedRing>;

class LocalizedPoly {
public:
    LocalizedPoly() = default;
    explicit LocalizedPoly(LocalizedRingPtr ring);
    LocalizedPoly(LocalizedRingPtr ring, MPoly num, std::vector<int> exps = {});
    // Fails unless the denominator is a constant times a product of atoms.
    static LocalizedPoly from_ratfunc(LocalizedRingPtr ring, const RatFunc& f);

    const LocalizedRingPtr& ring() const { return ring_; }
    const MPoly& num() const { return num_; }
    const std::vector<int>& exps() const { return exps_; }
    bool is_zero() const { return num_.is_zero(); }

    MPoly denominator() const;
    RatFunc to_ratfunc() const;
    // Cancels atoms dividing the numerator.
    LocalizedPoly reduced() const;
    LocalizedPoly derivative(std::size_t i) const;
    LocalizedPoly pow(unsigned e) const;
    Rational evaluate(std::span<const Rational> point) const;
    // Substitutes a polynomial for variable i in the numerator; the atoms
    // must not involve that variable.
    LocalizedPoly substitute(std::size_t i, const MPoly& v) const;

    LocalizedPoly operator-() const;
    LocalizedPoly& operator+=(const LocalizedPoly& o) { return *this = *this + o; }
    LocalizedPoly& operator-=(const LocalizedPoly& o) { return *this = *this - o; }
    friend LocalizedPoly operator+(const LocalizedPoly& a, const LocalizedPoly& b);
    friend LocalizedPoly operator-(const LocalizedPoly& a, const LocalizedPoly& b);
    friend LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b);
    friend LocalizedPoly operator*(const Rational& c, const LocalizedPoly& a);
    friend bool operator==(const LocalizedPoly& a, const LocalizedPoly& b) { return (a - b).is_zero(); }

private:
    LocalizedRingPtr ring_;
    MPoly num_;
    std::vector<int> exps_;
};

}  // namespace genus2
