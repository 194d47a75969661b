#include "genus2/rfmatrix.hpp"

#include "genus2/poly_gcd.hpp"

#include <algorithm>
#include <sstream>

namespace genus2 {

RFMatrix::RFMatrix(std::size_t rows, std::size_t cols, VarTablePtr vars)
    : rows_(rows), cols_(cols), vars_(vars), a_(rows * cols, RatFunc(vars)) {}

RFMatrix RFMatrix::identity(std::size_t n, VarTablePtr vars) {
    RFMatrix m(n, n, vars);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(vars, Rational(1));
    return m;
}

RFMatrix RFMatrix::from_rows(const std::vector<std::vector<RatFunc>>& rows) {
    if (rows.empty()) return {};
    VarTablePtr vt;
    for (const auto& r : rows)
        for (const auto& x : r) vt = common_table(vt, x.vars());
    RFMatrix m(rows.size(), rows[0].size(), vt);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j].rebase(vt);
    }
    return m;
}

RFMatrix RFMatrix::from_rationals(const std::vector<std::vector<Rational>>& rows, VarTablePtr vars) {
    RFMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), vars);
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = RatFunc(vars, rows[i].at(j));
    return m;
}

RFMatrix RFMatrix::transpose() const {
    RFMatrix t(cols_, rows_, vars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RFMatrix RFMatrix::derivative(std::size_t var) const {
    return map([var](const RatFunc& f) { return f.derivative(var); });
}

RFMatrix RFMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    RFMatrix b(nr, nc, vars_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void RFMatrix::set_block(std::size_t r0, std::size_t c0, const RFMatrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

RFMatrix RFMatrix::map(const std::function<RatFunc(const RatFunc&)>& f) const {
    RFMatrix r = *this;
    for (auto& x : r.a_) x = f(x);
    return r;
}

RFMatrix RFMatrix::rebase(const VarTablePtr& target) const {
    RFMatrix r = map([&](const RatFunc& f) { return f.rebase(target); });
    r.vars_ = target;
    return r;
}

bool RFMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const RatFunc& x) { return x.is_zero(); });
}

std::string RFMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",\n [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

static void check_shape(const RFMatrix& a, const RFMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}

RFMatrix operator+(const RFMatrix& a, const RFMatrix& b) {
    check_shape(a, b);
    RFMatrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
}

RFMatrix operator-(const RFMatrix& a, const RFMatrix& b) {
    check_shape(a, b);
    RFMatrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
}

RFMatrix operator-(const RFMatrix& a) {
    return a.map([](const RatFunc& f) { return -f; });
}

RFMatrix operator*(const RFMatrix& a, const RFMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    auto vt = common_table(a.vars_, b.vars_);
    RFMatrix r(a.rows_, b.cols_, vt);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            RatFunc s(vt);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(i, k);
                const auto& y = b(k, j);
                if (x.is_zero() || y.is_zero()) continue;
                s += x * y;
            }
            r(i, j) = s;
        }
    return r;
}

RFMatrix operator*(const RatFunc& c, const RFMatrix& a) {
    return a.map([&](const RatFunc& f) { return c * f; });
}

bool operator==(const RFMatrix& a, const RFMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

MPoly lcm(const MPoly& a, const MPoly& b) {
    if (a.is_constant()) return b;
    if (b.is_constant()) return a;
    MPoly g = gcd(a, b);
    return *divide_exact(a, g) * b;
}

struct Echelon {
    std::vector<std::vector<MPoly>> m;  // fraction-free rows
    std::vector<std::size_t> pivots;     // pivot column per row
    int sign = 1;
};

// Fraction-free elimination of [A | B] on the first `ncols` columns.
Echelon bareiss(std::vector<std::vector<MPoly>> m, std::size_t ncols, const VarTablePtr& vt) {
    Echelon e;
    std::size_t rows = m.size();
    MPoly prev(vt, Rational(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero() && (p == rows || m[i][c].size() < m[p][c].size())) p = i;
        if (p == rows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            e.sign = -e.sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < m[i].size(); ++j) {
                MPoly v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                m[i][j] = prev.is_constant() ? v.scaled(1 / prev.constant_value()) : *divide_exact(v, prev);
            }
            m[i][c] = MPoly(vt);
        }
        prev = m[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

// Rows of [A | B] scaled to polynomials; returns the scaling factors.
std::vector<std::vector<MPoly>> clear_denominators(const RFMatrix& a, const RFMatrix* b,
                                                   std::vector<MPoly>* scale) {
    auto vt = a.vars();
    std::vector<std::vector<MPoly>> m(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        MPoly l(vt, Rational(1));
        for (std::size_t j = 0; j < a.cols(); ++j) l = lcm(l, a(i, j).den());
        if (b)
            for (std::size_t j = 0; j < b->cols(); ++j) l = lcm(l, (*b)(i, j).den());
        auto row_entry = [&](const RatFunc& f) {
            if (f.is_zero()) return MPoly(vt);
            return f.num() * *divide_exact(l, f.den());
        };
        for (std::size_t j = 0; j < a.cols(); ++j) m[i].push_back(row_entry(a(i, j)));
        if (b)
            for (std::size_t j = 0; j < b->cols(); ++j) m[i].push_back(row_entry((*b)(i, j)));
        if (scale) scale->push_back(l);
    }
    return m;
}

}  // namespace

RatFunc det(const RFMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    auto vt = m.vars();
    if (m.rows() == 0) return RatFunc(vt, Rational(1));
    std::vector<MPoly> scale;
    auto rows = clear_denominators(m, nullptr, &scale);
    Echelon e = bareiss(std::move(rows), m.cols(), vt);
    if (e.pivots.size() < m.rows()) return RatFunc(vt);
    MPoly d = e.m.back().back();
    MPoly s(vt, Rational(1));
    for (const auto& x : scale) s = s * x;
    return RatFunc(d.scaled(Rational(e.sign)), s);
}

std::size_t rank(const RFMatrix& m) {
    auto rows = clear_denominators(m, nullptr, nullptr);
    return bareiss(std::move(rows), m.cols(), m.vars()).pivots.size();
}

LinearSolution solve_linear(const RFMatrix& a, const RFMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("right-hand side height mismatch");
    auto vt = common_table(a.vars(), b.vars());
    auto rows = clear_denominators(a, &b, nullptr);
    Echelon e = bareiss(std::move(rows), a.cols(), vt);
    std::size_t n = a.cols(), rk = e.pivots.size();
    for (std::size_t i = rk; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!e.m[i][n + j].is_zero()) throw InconsistentSystem();

    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    // Back substitution with given values on free columns and right-hand side.
    auto back = [&](std::vector<RatFunc> x, const std::function<RatFunc(std::size_t)>& rhs) {
        for (std::size_t r = rk; r-- > 0;) {
            std::size_t c = e.pivots[r];
            RatFunc s = rhs(r);
            for (std::size_t j = c + 1; j < n; ++j)
                if (!e.m[r][j].is_zero() && !x[j].is_zero()) s -= RatFunc(e.m[r][j]) * x[j];
            x[c] = s / RatFunc(e.m[r][c]);
        }
        return x;
    };
    LinearSolution sol;
    sol.particular = RFMatrix(n, b.cols(), vt);
    for (std::size_t k = 0; k < b.cols(); ++k) {
        auto x = back(std::vector<RatFunc>(n, RatFunc(vt)), [&](std::size_t r) { return RatFunc(e.m[r][n + k]); });
        for (std::size_t i = 0; i < n; ++i) sol.particular(i, k) = x[i];
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<RatFunc> x(n, RatFunc(vt));
        x[f] = RatFunc(vt, Rational(1));
        sol.kernel.push_back(back(x, [&](std::size_t) { return RatFunc(vt); }));
    }
    return sol;
}

LinearSolution solve_linear(const RFMatrix& a, const std::vector<RatFunc>& b) {
    RFMatrix col(b.size(), 1, a.vars());
    for (std::size_t i = 0; i < b.size(); ++i) col(i, 0) = b[i];
    return solve_linear(a, col);
}

RFMatrix inverse(const RFMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    if (rank(m) < m.rows()) throw SingularMatrix();
    return solve_linear(m, RFMatrix::identity(m.rows(), m.vars())).particular;
}

}  // namespace genus2
