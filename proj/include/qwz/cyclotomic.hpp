#pragma once

#include "qwz/qpoly.hpp"

#include <vector>

namespace qwz {

// Divisors of n > 0 in increasing order.
std::vector<long> divisors(long n);

// d-th cyclotomic polynomial (monic, integer coefficients, irreducible
// over Q); raises std::invalid_argument for d < 1.
QPoly cyclotomic(long d);

// q-integer [n] = 1 + q + ... + q^(n-1); [0] = 0.  Requires n >= 0.
QPoly qbracket(long n);

// Value of cyclotomic(d) at q = 1: 0 for d = 1, p for prime powers d = p^j,
// 1 otherwise.
Rational cyclotomic_at_one(long d);

} // namespace qwz
