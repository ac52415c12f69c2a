#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace qwz {

// Arbitrary-precision integers and rationals (GMP-backed, plain value
// semantics).  Rational is always stored canonically: gcd(num, den) = 1,
// den > 0 -- GMP canonicalizes on construction and after every operation.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

// Arbitrary-precision floating point (MPFR-backed, runtime precision).
// Precision is controlled per-run via set_real_precision().
using Real =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

// Sets the default working precision (decimal digits) for newly created
// Real values.  Returns the previous value.
unsigned set_real_precision(unsigned digits10);

// pi to the current default Real precision.
Real real_pi();

// x^e for integer e of either sign; x = 0 with e < 0 raises division_by_zero.
Rational rational_pow(const Rational& x, long e);
BigInt bigint_pow(const BigInt& x, unsigned long e);

// Parses "num/den" or "num" (optional leading '-').  Rejects den = 0 and
// malformed input with std::invalid_argument.
Rational parse_rational(const std::string& text);

// Canonical "num/den" rendering ("num" when den = 1).
std::string to_string(const Rational& x);

// |x| < 10^-digits, evaluated exactly.
bool abs_less_than_pow10(const Rational& x, int digits);

} // namespace qwz
