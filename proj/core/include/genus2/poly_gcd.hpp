#pragma once

#include "genus2/mpoly.hpp"

namespace genus2 {

// Greatest common divisor normalized to a primitive integer polynomial with
// positive leading coefficient. gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

// Iterated content / primitive pseudo-remainder gcd. Slower; used as the
// fallback of gcd() and as an independent cross-check in tests.
MPoly gcd_prs(const MPoly& a, const MPoly& b);

// Integer polynomial made primitive with positive leading coefficient.
MPoly normalize_primitive(const MPoly& p);

}  // namespace genus2
