#pragma once

#include "genus2/ratfunc.hpp"

#include <functional>
#include <vector>

namespace genus2 {

struct SingularMatrix : AlgebraError {
    SingularMatrix() : AlgebraError("matrix is singular") {}
};

struct InconsistentSystem : AlgebraError {
    InconsistentSystem() : AlgebraError("linear system is inconsistent") {}
};

// Dense matrix of rational functions, row-major.
class RFMatrix {
public:
    RFMatrix() = default;
    RFMatrix(std::size_t rows, std::size_t cols, VarTablePtr vars);
    static RFMatrix identity(std::size_t n, VarTablePtr vars);
    static RFMatrix from_rows(const std::vector<std::vector<RatFunc>>& rows);
    static RFMatrix from_rationals(const std::vector<std::vector<Rational>>& rows, VarTablePtr vars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const VarTablePtr& vars() const { return vars_; }
    RatFunc& operator()(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const RatFunc& operator()(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

    RFMatrix transpose() const;
    RFMatrix derivative(std::size_t var) const;
    RFMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const RFMatrix& b);
    RFMatrix map(const std::function<RatFunc(const RatFunc&)>& f) const;
    RFMatrix rebase(const VarTablePtr& target) const;
    bool is_zero() const;
    std::string to_string() const;

    friend RFMatrix operator+(const RFMatrix& a, const RFMatrix& b);
    friend RFMatrix operator-(const RFMatrix& a, const RFMatrix& b);
    friend RFMatrix operator*(const RFMatrix& a, const RFMatrix& b);
    friend RFMatrix operator*(const RatFunc& c, const RFMatrix& a);
    friend RFMatrix operator-(const RFMatrix& a);
    friend bool operator==(const RFMatrix& a, const RFMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    VarTablePtr vars_;
    std::vector<RatFunc> a_;
};

RatFunc det(const RFMatrix& m);
RFMatrix inverse(const RFMatrix& m);
std::size_t rank(const RFMatrix& m);

struct LinearSolution {
    RFMatrix particular;               // one column per right-hand side
    std::vector<std::vector<RatFunc>> kernel;  // basis of the null space
};

// Solves A X = B by fraction-free (Bareiss) elimination. Free variables are
// set to zero in the particular solution. Throws InconsistentSystem.
LinearSolution solve_linear(const RFMatrix& a, const RFMatrix& b);
LinearSolution solve_linear(const RFMatrix& a, const std::vector<RatFunc>& b);

}  // namespace genus2
