#include "genus2/report.hpp"

#include <cctype>
#include <stdexcept>

namespace genus2 {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

Json VerificationReport::to_json(bool with_timing) const {
    Json j = {{"id", id}, {"status", to_string(status)}, {"anchor", anchor}};
    if (!detail.empty()) j["detail"] = detail;
    if (residual) j["residual"] = *residual;
    if (with_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
}

VerificationReport VerificationReport::from_json(const Json& j) {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    auto s = j.at("status").get<std::string>();
    r.status = s == "pass" ? Status::pass : s == "fail" ? Status::fail : Status::skipped;
    r.anchor = j.at("anchor").get<std::string>();
    if (j.contains("detail")) r.detail = j["detail"].get<std::string>();
    if (j.contains("residual")) r.residual = j["residual"];
    if (j.contains("elapsed_ms")) r.elapsed_ms = j["elapsed_ms"].get<double>();
    return r;
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "latex") return Format::latex;
    throw std::invalid_argument("unknown output format '" + s + "'");
}

namespace {

// t2 -> t_{2}, s11 -> s_{11}, delta -> \delta, chi10 -> \chi_{10}
std::string latex_var(const std::string& name) {
    std::size_t k = 0;
    while (k < name.size() && std::isalpha(static_cast<unsigned char>(name[k]))) ++k;
    std::string head = name.substr(0, k), tail = name.substr(k);
    if (head == "delta" || head == "chi" || head == "tau") head = "\\" + head;
    return tail.empty() ? head : head + "_{" + tail + "}";
}

std::string latex_monomial(const MPoly& p, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < p.vars()->size(); ++i) {
        if (!m[i]) continue;
        s += latex_var(p.vars()->name(i));
        if (m[i] > 1) s += "^{" + std::to_string(m[i]) + "}";
    }
    return s;
}

std::string latex_coeff(const Rational& c, bool bare) {
    // c > 0 here
    if (c.get_den() == 1) return bare && c == 1 ? "" : c.get_num().get_str();
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

// Integer-coefficient rescaling of num/den with positive leading denominator.
std::pair<MPoly, MPoly> integral(const MPoly& num, const MPoly& den) {
    Integer l = 1, g = 0;
    for (const auto* p : {&num, &den})
        for (const auto& t : p->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    for (const auto* p : {&num, &den})
        for (const auto& t : p->terms()) {
            Integer v = Rational(t.coeff * l).get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    Rational s = Rational(l) / Rational(g == 0 ? Integer(1) : g);
    if (den.leading_coeff() < 0) s = -s;
    return {num.scaled(s), den.scaled(s)};
}

}  // namespace

std::string latex(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool neg = t.coeff < 0;
        Rational a = neg ? Rational(-t.coeff) : t.coeff;
        std::string mono = latex_monomial(p, t.mono);
        if (first) s += neg ? "-" : "";
        else s += neg ? "-" : "+";
        if (mono.empty()) s += latex_coeff(a, false);
        else s += latex_coeff(a, true) + mono;
        first = false;
    }
    return s;
}

std::string latex(const RatFunc& f) {
    if (f.is_zero()) return "0";
    auto [num, den] = integral(f.num(), f.den());
    if (den.is_constant() && den.constant_value() == 1) return latex(num);
    std::string sign;
    if (num.leading_coeff() < 0) {
        sign = "-";
        num = num.scaled(Rational(-1));
    }
    return sign + "\\frac{" + latex(num) + "}{" + latex(den) + "}";
}

std::string latex(const RFMatrix& m) {
    std::string s = "\\left(\\begin{matrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += " & ";
            s += latex(m(i, j));
        }
        s += i + 1 < m.rows() ? " \\\\\n" : "\n";
    }
    return s + "\\end{matrix}\\right)";
}

std::string emit(const RatFunc& f, Format fmt) {
    return fmt == Format::json ? canonical_dump(to_json(f)) : latex(f) + "\n";
}

std::string emit(const RFMatrix& m, Format fmt) {
    return fmt == Format::json ? canonical_dump(to_json(m)) : latex(m) + "\n";
}

std::string emit(const std::vector<VerificationReport>& reports, Format fmt, bool with_timing) {
    if (fmt == Format::json) {
        Json a = Json::array();
        for (const auto& r : reports) a.push_back(r.to_json(with_timing));
        return canonical_dump(a);
    }
    std::string s = "\\begin{tabular}{lll}\n\\hline\ncheck & status & anchor \\\\\n\\hline\n";
    for (const auto& r : reports) {
        std::string id;
        for (char c : r.id) id += c == '_' ? std::string("\\_") : std::string(1, c);
        s += "\\texttt{" + id + "} & " + to_string(r.status) + " & " + r.anchor + " \\\\\n";
    }
    return s + "\\hline\n\\end{tabular}\n";
}

}  // namespace genus2
