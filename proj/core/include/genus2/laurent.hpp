#pragma once

#include "genus2/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace genus2 {

struct InsufficientPrecision : AlgebraError {
    using AlgebraError::AlgebraError;
};

// sum c_k t^k + O(t^prec) over Q(params); prec == nullopt marks an exact
// (finite) Laurent polynomial.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(VarTablePtr vars, int low, std::vector<RatFunc> coeffs, std::optional<int> prec);
    static LaurentSeries monomial(VarTablePtr vars, int k, const RatFunc& c);
    static LaurentSeries constant(const RatFunc& c) { return monomial(c.vars(), 0, c); }

    const VarTablePtr& vars() const { return vars_; }
    std::optional<int> precision() const { return prec_; }
    bool is_exact() const { return !prec_; }
    // Lowest exponent with a nonzero coefficient; precision for O(t^p) alone.
    std::optional<int> valuation() const;
    int low() const { return low_; }
    int high() const { return low_ + int(c_.size()) - 1; }
    // Coefficient of t^k; throws InsufficientPrecision beyond the precision.
    RatFunc coeff(int k) const;
    RatFunc residue() const { return coeff(-1); }
    // Terms with exponent <= k, as an exact Laurent polynomial.
    LaurentSeries truncated_above(int k) const;

    LaurentSeries derivative() const;
    LaurentSeries inverse() const;
    LaurentSeries pow(int n) const;
    std::string to_string(const std::string& t = "t") const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const RatFunc& c, const LaurentSeries& a);

private:
    void trim();
    VarTablePtr vars_;
    int low_ = 0;
    std::vector<RatFunc> c_;
    std::optional<int> prec_;
};

}  // namespace genus2
