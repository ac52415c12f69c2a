#pragma once

#include "qwz/laurent.hpp"

namespace qwz {

// Rational function in q over Q, stored canonically:
//   value = q^shift * num_body / den
// with den monic with nonzero constant term, num_body with nonzero constant
// term (so the full q-power unit sits in the shift), gcd(num_body, den) = 1.
// Canonical form is unique, so structural equality is value equality.
class RatFuncQ {
  public:
    RatFuncQ() = default; // zero
    explicit RatFuncQ(Rational constant);
    explicit RatFuncQ(const QPoly& p);
    explicit RatFuncQ(const LaurentQ& p);
    RatFuncQ(const LaurentQ& num, const QPoly& den); // reduces

    static RatFuncQ monomial(const Rational& c, long e);
    // Trusted constructor: caller guarantees canonical invariants
    // (used by the factored-form expansion, which cancels exactly).
    static RatFuncQ from_canonical(LaurentQ num, QPoly den);

    bool is_zero() const { return num_.is_zero(); }
    const LaurentQ& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_polynomial() const {
        return den_.degree() == 0 && num_.shift() >= 0;
    }

    RatFuncQ& operator+=(const RatFuncQ& o);
    RatFuncQ& operator-=(const RatFuncQ& o);
    RatFuncQ& operator*=(const RatFuncQ& o);
    RatFuncQ& operator/=(const RatFuncQ& o);
    RatFuncQ operator-() const;

    friend RatFuncQ operator+(RatFuncQ a, const RatFuncQ& b) { return a += b; }
    friend RatFuncQ operator-(RatFuncQ a, const RatFuncQ& b) { return a -= b; }
    friend RatFuncQ operator*(RatFuncQ a, const RatFuncQ& b) { return a *= b; }
    friend RatFuncQ operator/(RatFuncQ a, const RatFuncQ& b) { return a /= b; }
    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) = default;

    RatFuncQ reciprocal() const;
    RatFuncQ pow(long e) const;

    // Exact evaluation; raises division_by_zero when q0 is a pole of the
    // reduced form (or q0 = 0 with negative shift).
    Rational eval(const Rational& q0) const;
    Real eval_real(const Real& q0) const;

    // lim_{q->1}; raises pole_at_one when the reduced denominator (or a
    // negative shift... the shift is a unit at q=1) vanishes at q = 1.
    Rational limit_q1() const;

    // Sparse display "c*q^e + ..."; max_degree < 0 means no truncation.
    // Truncated output appends "... (degree D)".
    std::string str(long max_degree = -1) const;

  private:
    void reduce();
    LaurentQ num_;
    QPoly den_ = QPoly::one();
};

// true iff modulus divides f in Q[q] modulo the q-power unit: requires
// gcd(den(f), modulus) = 1 (else non_invertible_denominator) and modulus
// with nonzero constant term (else std::invalid_argument); then tests
// modulus | num_body(f).
bool divides(const QPoly& modulus, const RatFuncQ& f);

} // namespace qwz
