#pragma once

#include "qwz/qproduct.hpp"

#include <vector>

namespace qwz {

// Monomial substitution value s * q^e (used for the free parameter a).
struct Monom {
    int sign = 1;
    long e = 0;
    friend bool operator==(const Monom&, const Monom&) = default;
};
inline constexpr Monom kAOne{1, 0}; // a = 1

// Shape of one Pochhammer symbol (sign * q^offset * a^a_power ; q^base):
// a_power in {-1, 0, +1} selects 1/a, no a, or a in the argument monomial.
struct PochSpec {
    int sign = 1;
    long offset = 0;
    int a_power = 0;
    long base = 1;
};

// Argument monomial of spec after substituting a = a_val.
Monom poch_argument(const PochSpec& spec, const Monom& a_val);

// (arg ; q^base)_len over canonical rational functions, with the
// negative-length extension (A; q^b)_{-n} = 1 / prod_{j=1..n}(1 - A q^{-bj}).
// Literal zero factors move into the zero order of the result.
ExtTerm qpochhammer(const PochSpec& spec, const Monom& a_val, long len);

// Classical rising factorial (x)_len with the analogous extension
// (x)_{-n} = 1 / ((x-n)(x-n+1)...(x-1)).
ExtRational pochhammer(const Rational& x, long len);

// Infinite product (arg; q^base)_inf evaluated at rational q0, |q0| < 1,
// truncated so the dropped tail is below 10^-precision_digits (raises
// divergent_product when the argument does not tend to zero).
Real qpoch_infinite(const PochSpec& spec, const Monom& a_val,
                    const Rational& q0, unsigned precision_digits);

// Ratio of infinite products prod(numerator) / prod(denominator).
struct InfiniteProductSpec {
    std::vector<PochSpec> numerator;
    std::vector<PochSpec> denominator;
};

Real eval_infinite_product(const InfiniteProductSpec& spec, const Monom& a_val,
                           const Rational& q0, unsigned precision_digits);

} // namespace qwz
