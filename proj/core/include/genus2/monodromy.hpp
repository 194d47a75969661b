#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace genus2 {

// 4x4 integer matrix preserving J = [[0, I], [-I, 0]]: M^tr J M = J.
class SpMatrix {
public:
    using Rows = std::array<std::array<long long, 4>, 4>;

    SpMatrix();  // identity
    // Throws AlgebraError when the entries are not symplectic.
    explicit SpMatrix(const Rows& rows);

    static SpMatrix identity() { return SpMatrix(); }
    static const Rows& form();  // J
    static bool is_symplectic(const Rows& rows);

    const Rows& rows() const { return m_; }
    long long operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
    SpMatrix inverse() const;  // -J M^tr J
    SpMatrix pow(long e) const;
    long long det() const;
    bool congruent_identity_mod2() const;
    // Bitmask of the entries mod 2, bit 4 i + j.
    std::uint16_t mod2() const;
    std::string to_string() const;

    friend SpMatrix operator*(const SpMatrix& a, const SpMatrix& b);
    friend SpMatrix operator-(const SpMatrix& a);
    friend bool operator==(const SpMatrix& a, const SpMatrix& b) { return a.m_ == b.m_; }

private:
    struct Unchecked {};
    SpMatrix(const Rows& rows, Unchecked) : m_(rows) {}
    Rows m_;
};

// Vanishing cycles delta_1..delta_{d-1} with the Dynkin pairing and the
// symplectic basis e_i written in them.
struct IntersectionData {
    int degree = 5;
    std::vector<std::vector<int>> basis;  // basis[i][j]: coefficient of delta_j in e_i

    static IntersectionData quintic();
    int pairing(std::size_t i, std::size_t j) const;  // delta_i . delta_j (0-based)
    // delta_j in the e-basis.
    std::vector<long long> cycle_in_basis(std::size_t j) const;
};

// h_{c_i}(e) = e - <e, delta_i> delta_i; row j holds h(e_j) in the e-basis.
std::vector<SpMatrix> picard_lefschetz_generators(const IntersectionData& data);

// A, B, C, D from the construction and E for the full group.
const std::map<char, SpMatrix>& monodromy_generators();

struct GroupWord {
    std::vector<std::pair<char, long>> letters;
    static GroupWord parse(const std::string& text);  // "ED^2E^-1", "(ABCD)^5[A^2(CD)^3]"
    GroupWord inverse() const;
    std::string to_string() const;
};

SpMatrix evaluate_word(const GroupWord& w, const std::map<char, SpMatrix>& gens = monodromy_generators());
SpMatrix evaluate_word(const std::string& w);

struct RelationCheck {
    std::string lhs, rhs;
    bool holds = false;
    bool lhs_in_gamma2 = false;
};

// The four word identities and E^2 = (ABC)^4.
std::vector<RelationCheck> verify_relations();

struct Mod2Report {
    std::size_t gamma_order = 0;  // |<A,B,C,D> mod 2|
    std::size_t full_order = 0;   // |<A,..,E> mod 2|
    std::size_t index = 0;
    // Generators act on the six odd theta characteristics; transposition
    // (i, i+1) after relabelling, for A..E in order.
    std::vector<std::pair<int, int>> transpositions;
    bool transpositions_ok = false;
};

Mod2Report mod2_analysis();

struct CosetReport {
    std::vector<std::string> representatives;
    bool distinct = false;
    bool identity_trivial = false;  // some representative lies in Gamma
    bool random_products_ok = false;
};

// Empty representatives: ABCDE, BCDE, CDE, DE, E, I.
CosetReport coset_representatives_check(unsigned seed = 1, const std::vector<std::string>& representatives = {});

}  // namespace genus2
