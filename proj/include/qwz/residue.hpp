#pragma once

#include "qwz/numbers.hpp"

namespace qwz {

// Residue a mod M with 0 <= value < modulus, modulus >= 2.  Arithmetic
// between residues of different moduli raises modulus_mismatch.
class ResidueClass {
  public:
    ResidueClass(BigInt value, BigInt modulus);

    const BigInt& value() const { return value_; }
    const BigInt& modulus() const { return modulus_; }

    ResidueClass& operator+=(const ResidueClass& o);
    ResidueClass& operator-=(const ResidueClass& o);
    ResidueClass& operator*=(const ResidueClass& o);

    friend ResidueClass operator+(ResidueClass a, const ResidueClass& b) {
        return a += b;
    }
    friend ResidueClass operator-(ResidueClass a, const ResidueClass& b) {
        return a -= b;
    }
    friend ResidueClass operator*(ResidueClass a, const ResidueClass& b) {
        return a *= b;
    }
    friend bool operator==(const ResidueClass& a,
                           const ResidueClass& b) = default;

    // Multiplicative inverse; raises non_invertible_denominator when
    // gcd(value, modulus) != 1.
    ResidueClass inverse() const;

  private:
    void check_same_modulus(const ResidueClass& o) const;

    BigInt value_;
    BigInt modulus_;
};

// Reduces the exact rational a/b to a residue mod M (b inverted mod M).
// Raises non_invertible_denominator when gcd(b, M) != 1.
ResidueClass mod_reduce(const Rational& x, const BigInt& modulus);

// Jacobi symbol (a/m) for odd positive m; raises std::invalid_argument for
// even or non-positive m.  Returns 0 when gcd(a, m) != 1.
int jacobi(const BigInt& a, const BigInt& m);

// (m-1)(m-3)/8 for odd positive m; raises std::invalid_argument otherwise.
// For odd m, (-1)^((m-1)(m-3)/8) equals the Jacobi symbol (-2/m).
BigInt sign_power_exponent(const BigInt& m);

// Deterministic primality by trial division; intended for p < 10^6.
bool is_prime(const BigInt& n);

} // namespace qwz
