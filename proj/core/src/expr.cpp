#include "genus2/expr.hpp"

#include <cctype>

namespace genus2 {

namespace {

class Parser {
public:
    Parser(std::string_view s, const VarTablePtr& vars, const std::map<std::string, RatFunc>& defs)
        : s_(s), vars_(vars), defs_(defs) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_.substr(0, 80)) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    RatFunc term() {
        RatFunc r = unary();
        for (;;) {
            if (eat('*'))
                r *= unary();
            else if (eat('/'))
                r /= unary();
            else
                return r;
        }
    }

    RatFunc unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (!eat('^')) return base;
        bool neg = false;
        if (eat('(')) {
            neg = eat('-');
            long e = integer();
            if (!eat(')')) fail("expected ')'");
            return base.pow(neg ? -e : e);
        }
        neg = eat('-');
        long e = integer();
        return base.pow(neg ? -e : e);
    }

    long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    RatFunc atom() {
        skip();
        if (eat('(')) {
            RatFunc r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Integer z(std::string(s_.substr(start, pos_ - start)));
            return RatFunc(vars_, Rational(z));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (auto it = defs_.find(name); it != defs_.end()) return it->second.rebase(vars_);
            if (auto i = vars_->index_of(name)) return RatFunc(MPoly::variable(vars_, *i));
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        fail("unexpected character");
    }

    std::string_view s_;
    const VarTablePtr& vars_;
    const std::map<std::string, RatFunc>& defs_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expr(std::string_view text, const VarTablePtr& vars, const std::map<std::string, RatFunc>& defs) {
    return Parser(text, vars, defs).parse();
}

MPoly parse_poly(std::string_view text, const VarTablePtr& vars) {
    return parse_expr(text, vars).as_polynomial();
}

}  // namespace genus2
