#include "genus2/monodromy.hpp"

#include "genus2/rational.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <unordered_set>

namespace genus2 {

namespace {

long long checked_mul_add(long long acc, long long a, long long b) {
    long long p;
    if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &acc))
        throw AlgebraError("integer overflow in symplectic product");
    return acc;
}

SpMatrix::Rows mul(const SpMatrix::Rows& a, const SpMatrix::Rows& b) {
    SpMatrix::Rows r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) r[i][j] = checked_mul_add(r[i][j], a[i][k], b[k][j]);
    return r;
}

SpMatrix::Rows transpose(const SpMatrix::Rows& a) {
    SpMatrix::Rows r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r[i][j] = a[j][i];
    return r;
}

// Mod 2 matrices: nibble i holds row i.
using Bits = std::uint16_t;

int bit(Bits m, int i, int j) { return (m >> (4 * i + j)) & 1; }

Bits mul2(Bits a, Bits b) {
    Bits r = 0;
    for (int i = 0; i < 4; ++i) {
        Bits row = 0;
        for (int k = 0; k < 4; ++k)
            if (bit(a, i, k)) row ^= Bits((b >> (4 * k)) & 0xF);
        r |= Bits(row << (4 * i));
    }
    return r;
}

// Row vector x (4 bits, bit j = coordinate j) times m.
unsigned apply2(unsigned x, Bits m) {
    unsigned r = 0;
    for (int k = 0; k < 4; ++k)
        if ((x >> k) & 1) r ^= (m >> (4 * k)) & 0xF;
    return r;
}

std::vector<Bits> closure(const std::vector<Bits>& gens) {
    std::unordered_set<Bits> seen{Bits(0x8421)};  // identity
    std::vector<Bits> order{Bits(0x8421)};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Bits g : gens) {
            Bits p = mul2(order[i], g);
            if (seen.insert(p).second) order.push_back(p);
        }
        if (order.size() > 720) throw AlgebraError("mod 2 closure exceeds |Sp(4, F2)|");
    }
    return order;
}

// Quadratic refinements of x J y^tr mod 2, as 16-bit value tables.
unsigned q_value(unsigned table, unsigned x) { return (table >> x) & 1; }

std::vector<unsigned> odd_thetas() {
    std::vector<unsigned> out;
    for (unsigned l = 0; l < 16; ++l) {
        unsigned table = 0;
        for (unsigned x = 0; x < 16; ++x) {
            unsigned v = ((x & 1) & ((x >> 2) & 1)) ^ (((x >> 1) & 1) & ((x >> 3) & 1));
            v ^= __builtin_parity(x & l);
            table |= v << x;
        }
        unsigned arf = (q_value(table, 1) & q_value(table, 4)) ^ (q_value(table, 2) & q_value(table, 8));
        if (arf) out.push_back(table);
    }
    return out;
}

// Permutation of the odd thetas induced by q -> q(x m).
std::vector<int> theta_permutation(Bits m, const std::vector<unsigned>& th) {
    std::vector<int> p;
    for (unsigned t : th) {
        unsigned img = 0;
        for (unsigned x = 0; x < 16; ++x) img |= q_value(t, apply2(x, m)) << x;
        auto it = std::find(th.begin(), th.end(), img);
        if (it == th.end()) throw AlgebraError("odd theta characteristic not preserved");
        p.push_back(int(it - th.begin()));
    }
    return p;
}

}  // namespace

SpMatrix::SpMatrix() : m_{} {
    for (std::size_t i = 0; i < 4; ++i) m_[i][i] = 1;
}

SpMatrix::SpMatrix(const Rows& rows) : m_(rows) {
    if (!is_symplectic(rows)) throw AlgebraError("matrix is not symplectic:\n" + to_string());
}

const SpMatrix::Rows& SpMatrix::form() {
    static const Rows j = {{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}};
    return j;
}

bool SpMatrix::is_symplectic(const Rows& rows) { return mul(mul(transpose(rows), form()), rows) == form(); }

SpMatrix SpMatrix::inverse() const {
    Rows r = mul(mul(form(), transpose(m_)), form());
    for (auto& row : r)
        for (auto& x : row) x = -x;
    return SpMatrix(r, Unchecked{});
}

SpMatrix SpMatrix::pow(long e) const {
    SpMatrix base = e < 0 ? inverse() : *this;
    SpMatrix r;
    for (long n = e < 0 ? -e : e; n > 0; n >>= 1) {
        if (n & 1) r = r * base;
        base = base * base;
    }
    return r;
}

long long SpMatrix::det() const {
    Rational d(0);
    std::array<std::array<Rational, 4>, 4> a;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) a[i][j] = Rational(static_cast<long>(m_[i][j]));
    d = 1;
    for (std::size_t c = 0; c < 4; ++c) {
        std::size_t p = c;
        while (p < 4 && a[p][c] == 0) ++p;
        if (p == 4) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < 4; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d.get_num().get_si();
}

bool SpMatrix::congruent_identity_mod2() const { return mod2() == 0x8421; }

std::uint16_t SpMatrix::mod2() const {
    std::uint16_t r = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (m_[i][j] % 2 != 0) r |= std::uint16_t(1u << (4 * i + j));
    return r;
}

std::string SpMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < 4; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < 4; ++j) os << (j ? ", " : "") << m_[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

SpMatrix operator*(const SpMatrix& a, const SpMatrix& b) { return SpMatrix(mul(a.m_, b.m_), SpMatrix::Unchecked{}); }

SpMatrix operator-(const SpMatrix& a) {
    SpMatrix::Rows r = a.m_;
    for (auto& row : r)
        for (auto& x : row) x = -x;
    return SpMatrix(r, SpMatrix::Unchecked{});
}

IntersectionData IntersectionData::quintic() {
    // e1 = d1, e2 = d3, e3 = d2 + d4, e4 = d4
    return {5, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 0, 1}}};
}

int IntersectionData::pairing(std::size_t i, std::size_t j) const {
    if (j == i + 1) return 1;
    if (i == j + 1) return -1;
    return 0;
}

std::vector<long long> IntersectionData::cycle_in_basis(std::size_t j) const {
    // solve sum_i c_i basis[i] = unit_j over Q
    std::size_t n = basis.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) a[r][i] = basis[i][r];
        a[r][n] = r == j ? 1 : 0;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw AlgebraError("basis of vanishing cycles is degenerate");
        std::swap(a[p], a[c]);
        Rational piv = a[c][c];
        for (auto& x : a[c]) x /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t k = 0; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<long long> out;
    for (std::size_t r = 0; r < n; ++r) {
        if (a[r][n].get_den() != 1) throw AlgebraError("vanishing cycle is not integral in the basis");
        out.push_back(a[r][n].get_num().get_si());
    }
    return out;
}

std::vector<SpMatrix> picard_lefschetz_generators(const IntersectionData& data) {
    if (data.degree != 5) throw AlgebraError("Picard-Lefschetz generators are built for d = 5");
    std::size_t n = data.basis.size();
    std::vector<SpMatrix> out;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<long long> dc = data.cycle_in_basis(c);
        SpMatrix::Rows m{};
        for (std::size_t j = 0; j < n; ++j) {
            long long pair = 0;
            for (std::size_t k = 0; k < n; ++k) pair += data.basis[j][k] * data.pairing(k, c);
            m[j][j] = 1;
            for (std::size_t k = 0; k < n; ++k) m[j][k] -= pair * dc[k];
        }
        out.emplace_back(m);
    }
    return out;
}

const std::map<char, SpMatrix>& monodromy_generators() {
    static const std::map<char, SpMatrix> gens = [] {
        auto pl = picard_lefschetz_generators(IntersectionData::quintic());
        std::map<char, SpMatrix> g{{'A', pl[0]}, {'B', pl[1]}, {'C', pl[2]}, {'D', pl[3]}};
        g.emplace('E', SpMatrix({{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1}}}));
        return g;
    }();
    return gens;
}

namespace {

struct WordParser {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    long exponent() {
        skip();
        if (i >= s.size() || s[i] != '^') return 1;
        ++i;
        skip();
        bool paren = i < s.size() && s[i] == '(';
        if (paren) ++i;
        bool neg = i < s.size() && s[i] == '-';
        if (neg) ++i;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw AlgebraError("exponent expected in word: " + s);
        long e = std::stol(s.substr(start, i - start));
        if (paren) {
            if (i >= s.size() || s[i] != ')') throw AlgebraError("unbalanced exponent in word: " + s);
            ++i;
        }
        return neg ? -e : e;
    }

    GroupWord word(char close) {
        GroupWord w;
        for (;;) {
            skip();
            if (i >= s.size()) {
                if (close) throw AlgebraError("unbalanced bracket in word: " + s);
                return w;
            }
            char c = s[i];
            if (c == close) {
                ++i;
                return w;
            }
            GroupWord item;
            if (c == '(' || c == '[') {
                ++i;
                item = word(c == '(' ? ')' : ']');
            } else if (c >= 'A' && c <= 'E') {
                ++i;
                item.letters.push_back({c, 1});
            } else if (c == 'I') {
                ++i;
            } else {
                throw AlgebraError(std::string("unexpected character '") + c + "' in word: " + s);
            }
            long e = exponent();
            GroupWord base = e < 0 ? item.inverse() : item;
            for (long k = 0; k < (e < 0 ? -e : e); ++k)
                w.letters.insert(w.letters.end(), base.letters.begin(), base.letters.end());
        }
    }
};

}  // namespace

GroupWord GroupWord::parse(const std::string& text) {
    WordParser p{text};
    GroupWord w = p.word(0);
    // merge adjacent equal letters
    GroupWord m;
    for (auto& [c, e] : w.letters) {
        if (!m.letters.empty() && m.letters.back().first == c) {
            m.letters.back().second += e;
            if (m.letters.back().second == 0) m.letters.pop_back();
        } else {
            m.letters.push_back({c, e});
        }
    }
    return m;
}

GroupWord GroupWord::inverse() const {
    GroupWord r;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back({it->first, -it->second});
    return r;
}

std::string GroupWord::to_string() const {
    if (letters.empty()) return "I";
    std::string s;
    for (auto& [c, e] : letters) {
        s += c;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

SpMatrix evaluate_word(const GroupWord& w, const std::map<char, SpMatrix>& gens) {
    SpMatrix r;
    for (auto& [c, e] : w.letters) r = r * gens.at(c).pow(e);
    return r;
}

SpMatrix evaluate_word(const std::string& w) { return evaluate_word(GroupWord::parse(w)); }

std::vector<RelationCheck> verify_relations() {
    const std::vector<std::pair<std::string, std::string>> rel = {
        {"ED^2E^-1", "(ABCD)^5(AB)^3D^-2(ABC)^-4"},
        {"EDC^2D^-1E^-1", "(CD)^3(ABCD)^-5(AB)^-3(DA)^2"},
        {"(EDCBA^2B^-1C^-1D^-1E^-1)^-1", "EDCB^2C^-1D^-1E^-1[A^2(CD)^3(ABCD)^5]"},
        {"EDCBA^2B^-1C^-1D^-1E^-1", "(DCB)^4"},
        {"E^2", "(ABC)^4"},
    };
    std::vector<RelationCheck> out;
    for (auto& [l, r] : rel) {
        SpMatrix a = evaluate_word(l);
        out.push_back({l, r, a == evaluate_word(r), a.congruent_identity_mod2()});
    }
    return out;
}

Mod2Report mod2_analysis() {
    const auto& g = monodromy_generators();
    std::vector<Bits> gamma, full;
    for (char c : std::string("ABCD")) gamma.push_back(g.at(c).mod2());
    full = gamma;
    full.push_back(g.at('E').mod2());
    Mod2Report rep;
    rep.gamma_order = closure(gamma).size();
    rep.full_order = closure(full).size();
    rep.index = rep.gamma_order ? rep.full_order / rep.gamma_order : 0;

    auto th = odd_thetas();
    std::vector<std::pair<int, int>> moved;
    bool ok = th.size() == 6;
    for (Bits m : full) {
        auto p = theta_permutation(m, th);
        std::vector<int> pts;
        for (int i = 0; i < int(p.size()); ++i)
            if (p[std::size_t(i)] != i) pts.push_back(i);
        if (pts.size() != 2 || p[std::size_t(pts[0])] != pts[1]) ok = false;
        moved.push_back(pts.size() == 2 ? std::make_pair(pts[0], pts[1]) : std::make_pair(-1, -1));
    }
    // relabel along the path A - B - C - D - E
    std::vector<int> label(th.size(), 0);
    if (ok) {
        auto in = [](std::pair<int, int> t, int v) { return t.first == v || t.second == v; };
        int cur = in(moved[1], moved[0].first) ? moved[0].second : moved[0].first;
        label[std::size_t(cur)] = 1;
        for (std::size_t k = 0; k < moved.size() && ok; ++k) {
            if (!in(moved[k], cur)) {
                ok = false;
                break;
            }
            cur = moved[k].first == cur ? moved[k].second : moved[k].first;
            label[std::size_t(cur)] = int(k) + 2;
        }
    }
    for (auto& t : moved)
        rep.transpositions.push_back(t.first < 0 ? t : std::make_pair(std::min(label[std::size_t(t.first)], label[std::size_t(t.second)]),
                                                                      std::max(label[std::size_t(t.first)], label[std::size_t(t.second)])));
    for (std::size_t k = 0; k < rep.transpositions.size() && ok; ++k)
        ok = rep.transpositions[k] == std::make_pair(int(k) + 1, int(k) + 2);
    rep.transpositions_ok = ok;
    return rep;
}

CosetReport coset_representatives_check(unsigned seed, const std::vector<std::string>& representatives) {
    const auto& g = monodromy_generators();
    std::vector<Bits> gamma;
    for (char c : std::string("ABCD")) gamma.push_back(g.at(c).mod2());
    auto h = closure(gamma);
    std::unordered_set<Bits> hs(h.begin(), h.end());
    CosetReport rep;
    rep.representatives = representatives;
    if (rep.representatives.empty()) rep.representatives = {"ABCDE", "BCDE", "CDE", "DE", "E", "I"};
    std::vector<SpMatrix> r;
    for (auto& w : rep.representatives) r.push_back(evaluate_word(w));
    rep.distinct = true;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
            if (hs.count((r[i].inverse() * r[j]).mod2())) rep.distinct = false;
    rep.identity_trivial = false;
    for (const auto& m : r)
        if (hs.count(m.mod2())) rep.identity_trivial = true;
    // r * gamma stays in the coset r H
    std::mt19937 rng(seed);
    rep.random_products_ok = true;
    const std::string letters = "ABCD";
    for (int n = 0; n < 10; ++n) {
        std::size_t i = rng() % r.size();
        SpMatrix p = r[i] * g.at(letters[rng() % 4]).pow(rng() % 2 ? 1 : -1);
        if (!hs.count((r[i].inverse() * p).mod2())) rep.random_products_ok = false;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (j != i && hs.count((r[j].inverse() * p).mod2())) rep.random_products_ok = false;
    }
    return rep;
}

}  // namespace genus2
