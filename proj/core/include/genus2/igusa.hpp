#pragma once

#include "genus2/mpoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace genus2 {

// Homogeneous binary form sum a_i x^(n-i) y^i with polynomial coefficients.
class BinaryForm {
public:
    BinaryForm() = default;
    explicit BinaryForm(std::vector<MPoly> coeffs);

    int degree() const { return int(a_.size()) - 1; }
    const std::vector<MPoly>& coeffs() const { return a_; }
    const MPoly& operator[](std::size_t i) const { return a_.at(i); }
    BinaryForm dx() const;
    BinaryForm dy() const;
    bool is_zero() const;

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& c, const BinaryForm& a);

private:
    std::vector<MPoly> a_;
};

// (f, g)_k with the usual (m-k)!(n-k)!/(m! n!) normalisation.
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int k);

// t5 x^6 + t4 x^5 y + t3 x^4 y^2 + t2 x^3 y^3 + x y^5 over t_table().
BinaryForm quintic_sextic();

struct InvariantSet {
    MPoly a, b, c, d, e;
    const MPoly& operator[](std::size_t i) const;
};

inline constexpr std::array<const char*, 5> kInvariantNames = {"A", "B", "C", "D", "E"};
inline constexpr std::array<int, 5> kInvariantDegrees = {8, 16, 24, 40, 60};

// Igusa-Clebsch I2, I4, I6, I10 via transvectants, and the degree 15
// invariant R = det of the quadratics y1, y2, y3.
struct ClassicalInvariants {
    MPoly i2, i4, i6, i10, r;
};
ClassicalInvariants classical_invariants(const BinaryForm& f);

// Explicit normalised A..E for the quintic family (D is the discriminant).
InvariantSet igusa_explicit();
// A..E recovered from the transvectants with the constants below.
InvariantSet igusa_transvectant();

// A = c_A I2, B = c_B I4, C = c_C I6, D = c_D I10, E = c_E R; nullopt-like
// zero entries mean "not proportional".
std::array<Rational, 5> igusa_constants(const InvariantSet& explicit_set, const ClassicalInvariants& ci);

}  // namespace genus2
