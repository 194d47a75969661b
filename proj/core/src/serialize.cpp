#include "genus2/serialize.hpp"

#include <algorithm>

namespace genus2 {

Json to_json(const VarTable& t) {
    Json j;
    j["vars"] = t.names();
    if (std::any_of(t.weights().begin(), t.weights().end(), [](int w) { return w != 1; })) j["weights"] = t.weights();
    return j;
}

Json to_json(const MPoly& p) {
    Json j = to_json(*p.vars());
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        std::vector<int> e(p.vars()->size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono.exp[i];
        terms.push_back({{"exp", e}, {"num", t.coeff.get_num().get_str()}, {"den", t.coeff.get_den().get_str()}});
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const RFMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
        rows.push_back(std::move(r));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

VarTablePtr table_from_json(const Json& j) {
    auto names = j.at("vars").get<std::vector<std::string>>();
    std::vector<int> w;
    if (j.contains("weights")) w = j.at("weights").get<std::vector<int>>();
    return make_table(std::move(names), std::move(w));
}

MPoly mpoly_from_json(const Json& j) {
    auto vt = table_from_json(j);
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        Term term;
        auto e = t.at("exp").get<std::vector<int>>();
        if (e.size() != vt->size()) throw std::invalid_argument("exponent vector length mismatch");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) throw std::invalid_argument("negative exponent");
            term.mono.set(i, unsigned(e[i]));
        }
        Integer num(t.at("num").get<std::string>()), den(t.at("den").get<std::string>());
        if (den == 0) throw DivisionByZero();
        term.coeff = Rational(num, den);
        term.coeff.canonicalize();
        terms.push_back(std::move(term));
    }
    return MPoly(vt, std::move(terms));
}

RatFunc ratfunc_from_json(const Json& j) {
    MPoly n = mpoly_from_json(j.at("num"));
    MPoly d = mpoly_from_json(j.at("den"));
    return RatFunc(n, d);
}

RFMatrix rfmatrix_from_json(const Json& j) {
    std::vector<std::vector<RatFunc>> rows;
    for (const auto& r : j.at("entries")) {
        rows.emplace_back();
        for (const auto& x : r) rows.back().push_back(ratfunc_from_json(x));
    }
    return RFMatrix::from_rows(rows);
}

std::string canonical_dump(const Json& j) { return j.dump(1) + "\n"; }

}  // namespace genus2
