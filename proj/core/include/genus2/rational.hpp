#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace genus2 {

using Integer = mpz_class;
using Rational = mpq_class;

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : AlgebraError {
    DivisionByZero() : AlgebraError("division by zero") {}
};

// Parses "p", "-p" or "p/q" and canonicalizes.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

Rational pow(const Rational& q, long e);

// n/d in canonical form (mpq_class(n, d) alone is not canonicalized).
inline Rational frac(long n, long d) {
    if (d == 0) throw DivisionByZero();
    Rational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace genus2
