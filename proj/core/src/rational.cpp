#include "genus2/rational.hpp"

namespace genus2 {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + std::string(text));
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer numerator_of(const Rational& q) { return q.get_num(); }
Integer denominator_of(const Rational& q) { return q.get_den(); }

Rational pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw DivisionByZero();
        Rational inv = 1 / q;
        return pow(inv, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace genus2
