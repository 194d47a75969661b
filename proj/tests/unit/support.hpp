#pragma once

#include "genus2/ratfunc.hpp"
#include "genus2/rfmatrix.hpp"

#include <random>
#include <vector>

namespace testing {

using namespace genus2;

inline MPoly random_mpoly(std::mt19937& rng, const VarTablePtr& vt, int terms, int maxdeg = 2) {
    std::uniform_int_distribution<int> coef(-6, 6), var(0, int(vt->size()) - 1), deg(0, maxdeg);
    MPoly p(vt);
    for (int i = 0; i < terms; ++i) {
        MPoly m(vt, Rational(coef(rng)));
        for (int k = 0; k < 2; ++k) m = m * MPoly::variable(vt, std::size_t(var(rng))).pow(unsigned(deg(rng)));
        p += m;
    }
    return p;
}

inline MPoly random_nonzero(std::mt19937& rng, const VarTablePtr& vt, int terms, int maxdeg = 2) {
    for (;;) {
        MPoly p = random_mpoly(rng, vt, terms, maxdeg);
        if (!p.is_zero()) return p;
    }
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t n, int range = 7) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 4);
    std::vector<Rational> p(n);
    for (auto& x : p) x = frac(num(rng), den(rng));
    return p;
}

// Determinant by permutation expansion over Q; only for small n.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
    std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Rational total = 0;
    do {
        Rational term = 1;
        for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
        total += inv % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline std::vector<std::vector<Rational>> evaluate(const RFMatrix& m, const std::vector<Rational>& p) {
    std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).evaluate(p);
    return out;
}

}  // namespace testing

namespace testing {

// Determinant over Q by plain Gaussian elimination.
inline Rational gauss_det(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

// Sylvester resultant of two univariate polynomials given by coefficients, highest first.
inline Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
    std::size_t m = f.size() - 1, n = g.size() - 1, s = m + n;
    std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) a[i][i + j] = f[j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) a[n + i][i + j] = g[j];
    return gauss_det(a);
}

}  // namespace testing
